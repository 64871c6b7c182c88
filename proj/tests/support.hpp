#pragma once

#include <random>

#include "pintswe/field.hpp"

namespace pintswe::testsupport {

/// Random band-limited field with unit-scale coefficients; r = 0 rows are
/// kept real so that the field represents a real function.
inline SpectralField random_field(int truncation, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    SpectralField x(truncation);
    for (int r = 0; r <= truncation; ++r)
        for (int s = r; s <= truncation; ++s)
            x.at(r, s) = {dist(rng), r == 0 ? 0.0 : dist(rng)};
    return x;
}

inline PrognosticState random_state(int truncation, unsigned seed, double scale_phi = 1.0,
                                    double scale_wind = 1.0) {
    PrognosticState s(truncation);
    s.phi = random_field(truncation, seed);
    s.phi *= scale_phi;
    s.vort = random_field(truncation, seed + 1000003);
    s.vort *= scale_wind;
    s.div = random_field(truncation, seed + 2000003);
    s.div *= scale_wind;
    return s;
}

inline double rel_diff(const SpectralField& a, const SpectralField& b) {
    SpectralField d = a;
    d -= b;
    const double scale = std::max(a.max_abs(), b.max_abs());
    return scale == 0.0 ? d.max_abs() : d.max_abs() / scale;
}

inline double rel_diff(const PrognosticState& a, const PrognosticState& b) {
    PrognosticState d = a;
    d -= b;
    const double scale = std::max(a.max_abs(), b.max_abs());
    return scale == 0.0 ? d.max_abs() : d.max_abs() / scale;
}

}  // namespace pintswe::testsupport
