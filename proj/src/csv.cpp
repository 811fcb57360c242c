#include "qst/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qst {

namespace {
constexpr const char* kConfigBegin = "# --- config ---";
constexpr const char* kConfigEnd = "# --- end config ---";
} // namespace

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string series_to_csv(const TimeSeries& series, const RunConfig& config) {
    std::ostringstream out;
    out << "# coupled-cavity state transfer run\n";
    out << kConfigBegin << "\n";
    {
        std::istringstream cfg(echo_config(config));
        std::string line;
        while (std::getline(cfg, line)) out << "# " << line << "\n";
    }
    out << kConfigEnd << "\n";

    const SystemParams p = config.system();
    out << "# rad/ns: omega_a=" << format_double(p.omega_a)
        << " omega_c=" << format_double(p.omega_c)
        << " lambda1=" << format_double(p.lambda1)
        << " lambda3=" << format_double(p.lambda3)
        << " j12=" << format_double(p.j12) << " j23=" << format_double(p.j23);
    if (p.kerr_enabled)
        out << " omega_k=" << format_double(p.omega_k)
            << " q=" << format_double(p.q_anh)
            << " p=" << format_double(p.p_coup);
    out << "\n";

    const bool kerr = series.has_kerr;
    out << "t_ns,sigma_z_1,sigma_z_3,n_1,n_2,n_3";
    if (kerr) out << ",n_b";
    out << ",p_q1,p_f1,p_f2,p_q3,p_f3";
    if (kerr) out << ",p_k";
    out << ",norm\n";

    for (std::size_t i = 0; i < series.samples(); ++i) {
        out << format_double(series.t[i]) << ',' << format_double(series.sigma_z1[i])
            << ',' << format_double(series.sigma_z3[i]) << ','
            << format_double(series.n1[i]) << ',' << format_double(series.n2[i])
            << ',' << format_double(series.n3[i]);
        if (kerr) out << ',' << format_double(series.nb[i]);
        const auto& pop = series.pops[i];
        for (int a = 0; a < (kerr ? 6 : 5); ++a)
            out << ',' << format_double(pop[static_cast<std::size_t>(a)]);
        out << ',' << format_double(series.norm_sq[i]) << '\n';
    }
    return out.str();
}

std::string extract_embedded_config(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    std::string cfg;
    bool inside = false;
    bool seen = false;
    while (std::getline(in, line)) {
        if (line == kConfigBegin) {
            inside = true;
            seen = true;
            continue;
        }
        if (line == kConfigEnd) {
            inside = false;
            continue;
        }
        if (inside) {
            if (line.rfind("# ", 0) == 0)
                cfg += line.substr(2) + "\n";
            else if (line == "#")
                cfg += "\n";
        }
    }
    if (!seen || inside)
        throw std::runtime_error("extract_embedded_config: no embedded config block");
    return cfg;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace qst
