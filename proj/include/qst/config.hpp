// config.hpp — run configuration: flat key/value documents with [system],
// [kerr], [solver], [output] (and, for sweeps, [sweep]) sections.
//
// Frequencies are accepted scaled (multiples of omega0 = 2*pi*f_ghz) or
// absolute through the *_ghz spellings; scaled wins when both appear.
// Unknown sections or keys are rejected, not ignored.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qst/params.hpp"
#include "qst/reduced.hpp"

namespace qst {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::vector<std::string>& issues)
        : std::runtime_error(join(issues)), issues_(issues) {}
    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& v);
    std::vector<std::string> issues_;
};

enum class SolverKind { Reduced, Analytic, Full };

// Everything the config file speaks, in the file's own units.
struct ScaledParams {
    double f_ghz = 1.0;   // base frequency; omega0 = 2*pi*f_ghz rad/ns
    double omega_a = 1.0; // units of omega0
    double omega_c = 1.0;
    double lambda1 = 0.1;
    double lambda3 = 0.1;
    double j12 = 0.01;
    double j23 = 0.01;
    bool kerr_enabled = false;
    double omega_k = 1.0;
    double q_anh = 0.2;
    double p_coup = 0.5;
    int n_max = 2;
    int nb_max = 2;

    double omega0() const { return angular(f_ghz); }
    SystemParams to_system() const;
};

struct RunConfig {
    ScaledParams scaled;
    SolverKind solver = SolverKind::Reduced;
    KerrDetuningMode kerr_mode = KerrDetuningMode::PaperFaithful;
    double t_max_ns = 600.0;
    int samples = 5000;
    std::string initial = "q1"; // amplitude name or ket digit string
    std::string output_path = "run.csv";

    SystemParams system() const { return scaled.to_system(); }
    std::vector<double> time_grid() const;
    void validate() const; // throws ConfigError with field-level messages
};

struct SweepSpec {
    RunConfig base;
    std::string parameter;      // scaled-parameter name, e.g. "p" or "j"
    std::vector<double> values; // applied in order
    double threshold = 0.9;     // transfer-metrics crossing threshold
};

RunConfig load_config(const std::string& text);
SweepSpec load_sweep(const std::string& text);

// Canonical config document for the effective configuration (what the CSV
// header embeds). load_config(echo_config(c)) reproduces c exactly.
std::string echo_config(const RunConfig& c);
std::string echo_sweep(const SweepSpec& s);

// Apply one swept value to a copy of the base config.
RunConfig apply_swept_value(const SweepSpec& spec, double value);

// Maps "q1".."f3" / "k" to amplitude slot 0..5, or -1 if not a named label.
int amplitude_slot(const std::string& label, bool kerr);

const char* solver_name(SolverKind s);
const char* kerr_mode_name(KerrDetuningMode m);

} // namespace qst
