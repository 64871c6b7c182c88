#include "pintswe/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pintswe::io {

namespace {

using nlohmann::json;

json field_json(const SpectralField& x) {
    json coeffs = json::array();
    for (std::size_t i = 0; i < x.num_coeffs(); ++i)
        coeffs.push_back({x.data()[i].real(), x.data()[i].imag()});
    return json{{"R", x.truncation()}, {"order", "r-major"}, {"coeffs", std::move(coeffs)}};
}

SpectralField field_from(const json& j) {
    if (j.at("order").get<std::string>() != "r-major")
        throw std::invalid_argument("spectral dump: unsupported coefficient order");
    SpectralField x(j.at("R").get<int>());
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != x.num_coeffs())
        throw std::invalid_argument("spectral dump: coefficient count does not match R");
    for (std::size_t i = 0; i < x.num_coeffs(); ++i)
        x.data()[i] = {coeffs[i][0].get<double>(), coeffs[i][1].get<double>()};
    return x;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

}  // namespace

std::string field_to_json(const SpectralField& x) { return field_json(x).dump(); }

SpectralField field_from_json_text(const std::string& text) {
    return field_from(json::parse(text));
}

void save_checkpoint(const std::string& path, const PrognosticState& state, double time) {
    json j{{"time", time},
           {"Phi", field_json(state.phi)},
           {"zeta", field_json(state.vort)},
           {"delta", field_json(state.div)}};
    write_file(path, j.dump() + "\n");
}

PrognosticState load_checkpoint(const std::string& path, double* time) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open checkpoint: " + path);
    json j;
    in >> j;
    PrognosticState state;
    state.phi = field_from(j.at("Phi"));
    state.vort = field_from(j.at("zeta"));
    state.div = field_from(j.at("delta"));
    if (time) *time = j.at("time").get<double>();
    return state;
}

void write_error_csv(const std::string& path, const std::vector<ErrorRow>& rows) {
    std::ostringstream out;
    out << "case,scheme,dt,R_norm,E_Phi,E_zeta,E_delta,wall_seconds,theoretical_speedup\n";
    out.precision(17);
    for (const auto& r : rows) {
        out << r.case_name << ',' << r.scheme << ',' << r.dt << ',' << r.r_norm << ',' << r.e_phi
            << ',' << r.e_vort << ',' << r.e_div << ',' << r.wall_seconds << ','
            << r.theoretical_speedup << '\n';
    }
    write_file(path, out.str());
}

void write_spectrum_csv(const std::string& path, const SpectralField& phi,
                        const SpectralField& vort, const SpectralField& div) {
    const auto sp = analysis::max_spectrum(phi);
    const auto sz = analysis::max_spectrum(vort);
    const auto sd = analysis::max_spectrum(div);
    std::ostringstream out;
    out << "n0,Phi,zeta,delta\n";
    out.precision(17);
    for (std::size_t n = 0; n < sp.size(); ++n)
        out << n << ',' << sp[n] << ',' << sz[n] << ',' << sd[n] << '\n';
    write_file(path, out.str());
}

std::string message_log_text(const std::vector<pf::MessageRecord>& messages) {
    std::ostringstream out;
    for (const auto& m : messages) {
        json j{{"phase", m.phase == 0 ? "predict" : "iter"},
               {"iteration", m.iteration},
               {"step", std::string(1, m.step)},
               {"sender", m.sender},
               {"receiver", m.receiver},
               {"level", m.level == 0 ? "fine" : "coarse"},
               {"node", m.node}};
        out << j.dump() << '\n';
    }
    return out.str();
}

void write_message_log(const std::string& path, const std::vector<pf::MessageRecord>& messages) {
    write_file(path, message_log_text(messages));
}

}  // namespace pintswe::io
