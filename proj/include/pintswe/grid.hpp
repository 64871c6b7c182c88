#pragma once

#include <cassert>
#include <memory>
#include <vector>

#include "pintswe/gauss.hpp"

namespace pintswe {

/// Real scalar field on the Gaussian longitude-latitude grid. Rows are
/// latitudes (south to north at the Gauss-Legendre nodes), columns are
/// equidistant longitudes lambda_j = 2 pi j / nlon.
struct GridField {
    int nlat = 0;
    int nlon = 0;
    std::vector<double> values;  // nlat x nlon, row-major
    std::shared_ptr<const GaussLatitudes> latitudes;

    GridField() = default;
    GridField(int nlat_, int nlon_, std::shared_ptr<const GaussLatitudes> lats)
        : nlat(nlat_), nlon(nlon_),
          values(static_cast<std::size_t>(nlat_) * nlon_, 0.0),
          latitudes(std::move(lats)) {}

    double& at(int i, int j) { return values[static_cast<std::size_t>(i) * nlon + j]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * nlon + j]; }

    double* row(int i) { return values.data() + static_cast<std::size_t>(i) * nlon; }
    const double* row(int i) const { return values.data() + static_cast<std::size_t>(i) * nlon; }

    double max_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
};

}  // namespace pintswe
