#pragma once

#include <string>
#include <vector>

#include "pintswe/analysis.hpp"
#include "pintswe/field.hpp"
#include "pintswe/pfasst.hpp"

namespace pintswe::io {

/// Spectral dump format: { "R": int, "order": "r-major", "coeffs": [[re, im], ...] }.
/// binary64 components serialize losslessly (shortest round-trip decimal).
std::string field_to_json(const SpectralField& x);
SpectralField field_from_json_text(const std::string& text);

/// Checkpoint: { "time": t, "Phi": field, "zeta": field, "delta": field }.
void save_checkpoint(const std::string& path, const PrognosticState& state, double time);
PrognosticState load_checkpoint(const std::string& path, double* time = nullptr);

/// CSV error table row as written by the runner.
struct ErrorRow {
    std::string case_name;
    std::string scheme;
    double dt;
    int r_norm;
    double e_phi, e_vort, e_div;
    double wall_seconds;
    double theoretical_speedup;
};
void write_error_csv(const std::string& path, const std::vector<ErrorRow>& rows);

/// Max-spectrum CSV: one row per total wavenumber.
void write_spectrum_csv(const std::string& path, const SpectralField& phi,
                        const SpectralField& vort, const SpectralField& div);

/// Message log as JSON lines (one message per line).
void write_message_log(const std::string& path, const std::vector<pf::MessageRecord>& messages);
std::string message_log_text(const std::vector<pf::MessageRecord>& messages);

}  // namespace pintswe::io
