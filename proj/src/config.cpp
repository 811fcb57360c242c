#include "qst/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace qst {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct RawDoc {
    // section -> key -> value, with duplicate detection
    std::map<std::string, std::map<std::string, std::string>> kv;
    std::vector<std::string> issues;
};

RawDoc parse_raw(const std::string& text,
                 const std::set<std::string>& allowed_sections) {
    RawDoc doc;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']') {
                doc.issues.push_back("line " + std::to_string(lineno) +
                                     ": malformed section header '" + t + "'");
                continue;
            }
            section = trim(t.substr(1, t.size() - 2));
            if (!allowed_sections.count(section))
                doc.issues.push_back("line " + std::to_string(lineno) +
                                     ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            doc.issues.push_back("line " + std::to_string(lineno) +
                                 ": expected 'key = value', got '" + t + "'");
            continue;
        }
        if (section.empty()) {
            doc.issues.push_back("line " + std::to_string(lineno) +
                                 ": key outside of any section");
            continue;
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (!allowed_sections.count(section)) continue; // already reported
        auto& sec = doc.kv[section];
        if (sec.count(key))
            doc.issues.push_back(section + "." + key + ": duplicate assignment");
        sec[key] = value;
    }
    return doc;
}

class Reader {
public:
    Reader(RawDoc& doc, std::vector<std::string>& issues)
        : doc_(doc), issues_(issues) {}

    std::optional<std::string> take(const std::string& section, const std::string& key) {
        auto sec = doc_.kv.find(section);
        if (sec == doc_.kv.end()) return std::nullopt;
        auto it = sec->second.find(key);
        if (it == sec->second.end()) return std::nullopt;
        std::string v = it->second;
        sec->second.erase(it);
        return v;
    }

    std::optional<double> take_double(const std::string& section, const std::string& key) {
        auto v = take(section, key);
        if (!v) return std::nullopt;
        try {
            std::size_t used = 0;
            const double d = std::stod(*v, &used);
            if (used != v->size()) throw std::invalid_argument("trailing characters");
            return d;
        } catch (const std::exception&) {
            issues_.push_back(section + "." + key + ": not a number ('" + *v + "')");
            return std::nullopt;
        }
    }

    std::optional<int> take_int(const std::string& section, const std::string& key) {
        auto v = take(section, key);
        if (!v) return std::nullopt;
        int out = 0;
        auto res = std::from_chars(v->data(), v->data() + v->size(), out);
        if (res.ec != std::errc{} || res.ptr != v->data() + v->size()) {
            issues_.push_back(section + "." + key + ": not an integer ('" + *v + "')");
            return std::nullopt;
        }
        return out;
    }

    std::optional<bool> take_bool(const std::string& section, const std::string& key) {
        auto v = take(section, key);
        if (!v) return std::nullopt;
        if (*v == "true") return true;
        if (*v == "false") return false;
        issues_.push_back(section + "." + key + ": expected true or false ('" + *v + "')");
        return std::nullopt;
    }

    // Whatever keys remain after all take() calls are unknown.
    void reject_leftovers() {
        for (const auto& [section, keys] : doc_.kv)
            for (const auto& [key, value] : keys)
                issues_.push_back(section + "." + key + ": unknown key");
    }

private:
    RawDoc& doc_;
    std::vector<std::string>& issues_;
};

// Scaled value with ghz fallback: scaled wins on conflict.
void read_rate(Reader& r, const std::string& section, const std::string& name,
               double f_ghz, double& slot) {
    const auto scaled = r.take_double(section, name);
    const auto ghz = r.take_double(section, name + "_ghz");
    if (scaled)
        slot = *scaled;
    else if (ghz)
        slot = *ghz / f_ghz; // canonicalize: scaled = value_ghz / f_ghz
}

RunConfig parse_run_config(Reader& r, std::vector<std::string>& issues) {
    RunConfig c;

    if (auto f = r.take_double("system", "f_ghz")) c.scaled.f_ghz = *f;
    if (!(c.scaled.f_ghz > 0.0)) issues.push_back("system.f_ghz: must be > 0");
    const double f = c.scaled.f_ghz;

    read_rate(r, "system", "omega_a", f, c.scaled.omega_a);
    read_rate(r, "system", "omega_c", f, c.scaled.omega_c);

    // Shorthands set both members; the specific key wins.
    double lam = c.scaled.lambda1;
    read_rate(r, "system", "lambda", f, lam);
    c.scaled.lambda1 = c.scaled.lambda3 = lam;
    read_rate(r, "system", "lambda1", f, c.scaled.lambda1);
    read_rate(r, "system", "lambda3", f, c.scaled.lambda3);

    double j = c.scaled.j12;
    read_rate(r, "system", "j", f, j);
    c.scaled.j12 = c.scaled.j23 = j;
    read_rate(r, "system", "j12", f, c.scaled.j12);
    read_rate(r, "system", "j23", f, c.scaled.j23);

    if (auto n = r.take_int("system", "n_max")) c.scaled.n_max = *n;
    if (auto n = r.take_int("system", "nb_max")) c.scaled.nb_max = *n;

    if (auto e = r.take_bool("kerr", "enabled")) c.scaled.kerr_enabled = *e;
    read_rate(r, "kerr", "omega_k", f, c.scaled.omega_k);
    read_rate(r, "kerr", "q", f, c.scaled.q_anh);
    read_rate(r, "kerr", "p", f, c.scaled.p_coup);

    if (auto m = r.take("solver", "method")) {
        if (*m == "reduced")
            c.solver = SolverKind::Reduced;
        else if (*m == "analytic")
            c.solver = SolverKind::Analytic;
        else if (*m == "full")
            c.solver = SolverKind::Full;
        else
            issues.push_back("solver.method: expected reduced, analytic or full ('" +
                             *m + "')");
    }
    if (auto m = r.take("solver", "kerr_mode")) {
        if (*m == "paper")
            c.kerr_mode = KerrDetuningMode::PaperFaithful;
        else if (*m == "first_principles")
            c.kerr_mode = KerrDetuningMode::FirstPrinciples;
        else
            issues.push_back(
                "solver.kerr_mode: expected paper or first_principles ('" + *m + "')");
    }
    if (auto t = r.take_double("solver", "t_max_ns")) c.t_max_ns = *t;
    if (auto s = r.take_int("solver", "samples")) c.samples = *s;
    if (auto i = r.take("solver", "initial")) c.initial = *i;
    if (auto p = r.take("output", "path")) c.output_path = *p;
    return c;
}

} // namespace

std::string ConfigError::join(const std::vector<std::string>& v) {
    std::string out = "invalid configuration:";
    for (const auto& s : v) out += "\n  " + s;
    return out;
}

SystemParams ScaledParams::to_system() const {
    const double w0 = omega0();
    SystemParams p;
    p.omega_a = omega_a * w0;
    p.omega_c = omega_c * w0;
    p.lambda1 = lambda1 * w0;
    p.lambda3 = lambda3 * w0;
    p.j12 = j12 * w0;
    p.j23 = j23 * w0;
    p.kerr_enabled = kerr_enabled;
    p.omega_k = omega_k * w0;
    p.q_anh = q_anh * w0;
    p.p_coup = p_coup * w0;
    p.n_max = n_max;
    p.nb_max = nb_max;
    return p;
}

std::vector<double> RunConfig::time_grid() const {
    std::vector<double> t(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k)
        t[static_cast<std::size_t>(k)] =
            t_max_ns * static_cast<double>(k) / static_cast<double>(samples - 1);
    return t;
}

int amplitude_slot(const std::string& label, bool kerr) {
    if (label == "q1") return 0;
    if (label == "f1") return 1;
    if (label == "f2") return 2;
    if (label == "q3") return 3;
    if (label == "f3") return 4;
    if (label == "k" && kerr) return 5;
    return -1;
}

void RunConfig::validate() const {
    std::vector<std::string> issues;
    const auto& s = scaled;
    if (!(s.f_ghz > 0.0)) issues.push_back("system.f_ghz: must be > 0");
    auto nonneg = [&](double v, const char* name) {
        if (!(v >= 0.0) || !std::isfinite(v))
            issues.push_back(std::string(name) + ": must be a finite number >= 0");
    };
    nonneg(s.lambda1, "system.lambda1");
    nonneg(s.lambda3, "system.lambda3");
    nonneg(s.j12, "system.j12");
    nonneg(s.j23, "system.j23");
    if (!std::isfinite(s.omega_a)) issues.push_back("system.omega_a: must be finite");
    if (!std::isfinite(s.omega_c)) issues.push_back("system.omega_c: must be finite");
    if (s.n_max < 2) issues.push_back("system.n_max: must be >= 2");
    if (s.kerr_enabled) {
        if (s.nb_max < 2) issues.push_back("system.nb_max: must be >= 2");
        nonneg(s.p_coup, "kerr.p");
        if (!std::isfinite(s.omega_k)) issues.push_back("kerr.omega_k: must be finite");
        if (!std::isfinite(s.q_anh)) issues.push_back("kerr.q: must be finite");
    }
    if (!(t_max_ns > 0.0)) issues.push_back("solver.t_max_ns: must be > 0");
    if (samples < 2) issues.push_back("solver.samples: must be >= 2");

    const bool detuned = s.omega_a != s.omega_c;
    if (solver == SolverKind::Analytic) {
        if (s.kerr_enabled)
            issues.push_back("solver.method: analytic requires kerr.enabled = false");
        if (s.lambda1 != s.lambda3 || s.j12 != s.j23)
            issues.push_back("solver.method: analytic requires symmetric couplings");
        if (detuned)
            issues.push_back("solver.method: analytic requires omega_a = omega_c");
        if (!(s.lambda1 > 0.0))
            issues.push_back("solver.method: analytic requires lambda > 0");
        if (initial != "q1")
            issues.push_back("solver.initial: analytic assumes the excitation on q1");
    }
    if (solver == SolverKind::Reduced) {
        if (detuned)
            issues.push_back(
                "solver.method: reduced assumes omega_a = omega_c; use method = full");
        if (amplitude_slot(initial, s.kerr_enabled) < 0)
            issues.push_back("solver.initial: '" + initial +
                             "' is not a single-excitation amplitude label");
    }
    if (solver == SolverKind::Full) {
        const int slot = amplitude_slot(initial, s.kerr_enabled);
        if (slot < 0) {
            const std::size_t want = s.kerr_enabled ? 6 : 5;
            if (initial.size() != want)
                issues.push_back("solver.initial: ket label must have " +
                                 std::to_string(want) + " digits");
            else {
                const int dims[6] = {2, s.n_max, s.n_max, 2, s.n_max, s.nb_max};
                for (std::size_t i = 0; i < initial.size(); ++i) {
                    if (!std::isdigit(static_cast<unsigned char>(initial[i])) ||
                        initial[i] - '0' >= dims[i]) {
                        issues.push_back(
                            "solver.initial: digit " + std::to_string(i) +
                            " of '" + initial + "' outside its truncation");
                        break;
                    }
                }
            }
        }
    }
    if (output_path.empty()) issues.push_back("output.path: must not be empty");
    if (!issues.empty()) throw ConfigError(issues);
}

RunConfig load_config(const std::string& text) {
    RawDoc doc = parse_raw(text, {"system", "kerr", "solver", "output"});
    std::vector<std::string> issues = doc.issues;
    Reader r(doc, issues);
    RunConfig c = parse_run_config(r, issues);
    r.reject_leftovers();
    if (!issues.empty()) throw ConfigError(issues);
    c.validate();
    return c;
}

SweepSpec load_sweep(const std::string& text) {
    RawDoc doc = parse_raw(text, {"system", "kerr", "solver", "output", "sweep"});
    std::vector<std::string> issues = doc.issues;
    Reader r(doc, issues);

    SweepSpec spec;
    spec.base = parse_run_config(r, issues);

    auto param = r.take("sweep", "parameter");
    if (!param)
        issues.push_back("sweep.parameter: required");
    else
        spec.parameter = *param;

    if (auto v = r.take("sweep", "values")) {
        std::string vals = *v;
        std::replace(vals.begin(), vals.end(), ',', ' ');
        std::istringstream in(vals);
        std::string tok;
        while (in >> tok) {
            try {
                std::size_t used = 0;
                const double d = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("trailing");
                if (!std::isfinite(d)) throw std::invalid_argument("not finite");
                spec.values.push_back(d);
            } catch (const std::exception&) {
                issues.push_back("sweep.values: bad entry '" + tok + "'");
            }
        }
    }
    if (spec.values.empty()) issues.push_back("sweep.values: at least one value required");
    if (auto th = r.take_double("sweep", "threshold")) spec.threshold = *th;

    r.reject_leftovers();
    if (!issues.empty()) throw ConfigError(issues);

    spec.base.validate();
    // Every swept value must itself produce a valid configuration.
    for (double v : spec.values) apply_swept_value(spec, v).validate();
    return spec;
}

RunConfig apply_swept_value(const SweepSpec& spec, double value) {
    RunConfig c = spec.base;
    auto& s = c.scaled;
    const std::string& p = spec.parameter;
    if (p == "lambda") {
        s.lambda1 = s.lambda3 = value;
    } else if (p == "lambda1") {
        s.lambda1 = value;
    } else if (p == "lambda3") {
        s.lambda3 = value;
    } else if (p == "j") {
        s.j12 = s.j23 = value;
    } else if (p == "j12") {
        s.j12 = value;
    } else if (p == "j23") {
        s.j23 = value;
    } else if (p == "omega_a") {
        s.omega_a = value;
    } else if (p == "omega_c") {
        s.omega_c = value;
    } else if (p == "omega_k") {
        s.omega_k = value;
    } else if (p == "q") {
        s.q_anh = value;
    } else if (p == "p") {
        s.p_coup = value;
    } else {
        throw ConfigError({"sweep.parameter: unknown parameter '" + p + "'"});
    }
    return c;
}

const char* solver_name(SolverKind s) {
    switch (s) {
    case SolverKind::Reduced: return "reduced";
    case SolverKind::Analytic: return "analytic";
    case SolverKind::Full: return "full";
    }
    return "?";
}

const char* kerr_mode_name(KerrDetuningMode m) {
    return m == KerrDetuningMode::PaperFaithful ? "paper" : "first_principles";
}

std::string echo_config(const RunConfig& c) {
    std::ostringstream out;
    const auto& s = c.scaled;
    out << "[system]\n";
    out << "f_ghz = " << format_double(s.f_ghz) << "\n";
    out << "omega_a = " << format_double(s.omega_a) << "\n";
    out << "omega_c = " << format_double(s.omega_c) << "\n";
    out << "lambda1 = " << format_double(s.lambda1) << "\n";
    out << "lambda3 = " << format_double(s.lambda3) << "\n";
    out << "j12 = " << format_double(s.j12) << "\n";
    out << "j23 = " << format_double(s.j23) << "\n";
    out << "n_max = " << s.n_max << "\n";
    out << "nb_max = " << s.nb_max << "\n";
    out << "[kerr]\n";
    out << "enabled = " << (s.kerr_enabled ? "true" : "false") << "\n";
    out << "omega_k = " << format_double(s.omega_k) << "\n";
    out << "q = " << format_double(s.q_anh) << "\n";
    out << "p = " << format_double(s.p_coup) << "\n";
    out << "[solver]\n";
    out << "method = " << solver_name(c.solver) << "\n";
    out << "kerr_mode = " << kerr_mode_name(c.kerr_mode) << "\n";
    out << "t_max_ns = " << format_double(c.t_max_ns) << "\n";
    out << "samples = " << c.samples << "\n";
    out << "initial = " << c.initial << "\n";
    out << "[output]\n";
    out << "path = " << c.output_path << "\n";
    return out.str();
}

std::string echo_sweep(const SweepSpec& s) {
    std::ostringstream out;
    out << echo_config(s.base);
    out << "[sweep]\n";
    out << "parameter = " << s.parameter << "\n";
    out << "values =";
    for (std::size_t i = 0; i < s.values.size(); ++i)
        out << (i ? ", " : " ") << format_double(s.values[i]);
    out << "\n";
    out << "threshold = " << format_double(s.threshold) << "\n";
    return out.str();
}

} // namespace qst
