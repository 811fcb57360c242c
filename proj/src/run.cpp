#include "qst/run.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qst/analytic.hpp"
#include "qst/hamiltonian.hpp"

namespace qst {

namespace {

TimeSeries series_from_reduced(const ReducedSeries& rs, bool kerr) {
    TimeSeries ts;
    ts.has_kerr = kerr;
    ts.t = rs.t;
    const std::size_t n = rs.t.size();
    ts.sigma_z1.reserve(n);
    ts.sigma_z3.reserve(n);
    ts.n1.reserve(n);
    ts.n2.reserve(n);
    ts.n3.reserve(n);
    if (kerr) ts.nb.reserve(n);
    ts.pops.reserve(n);
    ts.norm_sq = rs.norm_sq;
    for (std::size_t i = 0; i < n; ++i) {
        const auto pops = populations(rs.states[i]);
        const auto [sz1, sz3] = inversion(pops);
        ts.sigma_z1.push_back(sz1);
        ts.sigma_z3.push_back(sz3);
        ts.n1.push_back(pops[1]);
        ts.n2.push_back(pops[2]);
        ts.n3.push_back(pops[4]);
        if (kerr) ts.nb.push_back(pops[5]);
        std::array<double, 6> slot{};
        for (std::size_t a = 0; a < pops.size(); ++a) slot[a] = pops[a];
        ts.pops.push_back(slot);
    }
    return ts;
}

ReducedState reduced_initial(const RunConfig& c) {
    const int slot = amplitude_slot(c.initial, c.scaled.kerr_enabled);
    Vector v = Vector::Zero(c.scaled.kerr_enabled ? 6 : 5);
    v(slot) = 1.0;
    return ReducedState::from_vector(v, c.scaled.kerr_enabled);
}

BasisLabel full_initial_label(const RunConfig& c) {
    const int slot = amplitude_slot(c.initial, c.scaled.kerr_enabled);
    if (slot >= 0) {
        BasisLabel l;
        switch (slot) {
        case 0: l.k1 = 1; break;
        case 1: l.n1 = 1; break;
        case 2: l.n2 = 1; break;
        case 3: l.k3 = 1; break;
        case 4: l.n3 = 1; break;
        default: l.nb = 1; break;
        }
        return l;
    }
    BasisLabel l;
    l.k1 = c.initial[0] - '0';
    l.n1 = c.initial[1] - '0';
    l.n2 = c.initial[2] - '0';
    l.k3 = c.initial[3] - '0';
    l.n3 = c.initial[4] - '0';
    if (c.initial.size() == 6) l.nb = c.initial[5] - '0';
    return l;
}

} // namespace

TimeSeries run_series(const RunConfig& config) {
    config.validate();
    const SystemParams p = config.system();
    const auto grid = config.time_grid();

    switch (config.solver) {
    case SolverKind::Reduced: {
        const auto rs = integrate(reduced_initial(config), p, grid, config.kerr_mode);
        return series_from_reduced(rs, p.kerr_enabled);
    }
    case SolverKind::Analytic: {
        const SymmetricParams sp = SymmetricParams::from(p);
        ReducedSeries rs;
        rs.t = grid;
        rs.states.reserve(grid.size());
        rs.norm_sq.reserve(grid.size());
        for (double t : grid) {
            rs.states.push_back(closed_form(sp, t));
            rs.norm_sq.push_back(rs.states.back().norm_sq());
        }
        return series_from_reduced(rs, false);
    }
    case SolverKind::Full: {
        const BasisSet basis = BasisSet::build(p);
        const Matrix h = build_total(p, basis);
        Vector psi = Vector::Zero(static_cast<Eigen::Index>(basis.size()));
        psi(static_cast<Eigen::Index>(basis.index_of(full_initial_label(config)))) = 1.0;
        const auto states = evolve(psi, h, grid);
        return observables_series(states, basis, p, grid);
    }
    }
    throw std::logic_error("run_series: unhandled solver");
}

TimeSeries run(const RunConfig& config) {
    TimeSeries ts = run_series(config);
    write_text_file(config.output_path, series_to_csv(ts, config));
    return ts;
}

const std::vector<std::string>& preset_ids() {
    static const std::vector<std::string> ids = {"3a", "3b", "4",  "5",  "6", "7a",
                                                 "7b", "7c", "7d", "8a", "8b"};
    return ids;
}

RunConfig figure_preset(const std::string& id) {
    RunConfig c; // defaults: lambda = 0.1, j = 0.01 (= 0.1 lambda), reduced solver
    c.t_max_ns = 600.0;
    c.samples = 5000;

    auto kerr = [&](double omega_k, double p_coup) {
        c.scaled.kerr_enabled = true;
        c.scaled.j12 = c.scaled.j23 = 0.05; // J = 0.5 lambda
        c.scaled.omega_k = omega_k;
        c.scaled.q_anh = 0.2;
        c.scaled.p_coup = p_coup;
        c.kerr_mode = KerrDetuningMode::PaperFaithful;
    };

    if (id == "3a" || id == "8b") {
        // J = 0.1 lambda, inversion traces (defaults)
    } else if (id == "3b" || id == "4") {
        c.scaled.j12 = c.scaled.j23 = 0.02; // J = 0.2 lambda
    } else if (id == "5" || id == "6") {
        c.scaled.j12 = c.scaled.j23 = 0.02;
        c.scaled.omega_c = 0.99; // detuning = 0.01 omega_a
        c.solver = SolverKind::Full;
    } else if (id == "7a") {
        kerr(0.5, 0.25);
    } else if (id == "7b") {
        kerr(0.5, 0.5);
    } else if (id == "7c") {
        kerr(0.5, 0.557);
    } else if (id == "7d") {
        kerr(1.0, 0.557);
    } else if (id == "8a") {
        kerr(1.0, 0.5);
    } else {
        std::string valid;
        for (const auto& v : preset_ids()) valid += (valid.empty() ? "" : ", ") + v;
        throw ConfigError({"unknown preset '" + id + "'; valid ids: " + valid});
    }
    c.output_path = "fig" + id + ".csv";
    return c;
}

std::vector<std::string> reproduce(const std::string& id, const std::string& outdir) {
    RunConfig c = figure_preset(id);
    std::string path = c.output_path;
    if (!outdir.empty()) path = outdir + "/" + path;
    c.output_path = path;
    run(c);
    return {path};
}

std::vector<SweepRow> sweep_rows(const SweepSpec& spec, int jobs) {
    const std::size_t n = spec.values.size();
    std::vector<SweepRow> rows(n);
    std::vector<std::string> failures(n);

    auto work = [&](std::size_t i) {
        try {
            const RunConfig c = apply_swept_value(spec, spec.values[i]);
            const TimeSeries ts = run_series(c);
            rows[i] = {spec.values[i], transfer_metrics(ts, spec.threshold)};
        } catch (const std::exception& e) {
            failures[i] = e.what();
        }
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                work(i);
        };
        std::vector<std::thread> pool;
        const auto count = static_cast<std::size_t>(std::min<int>(jobs, static_cast<int>(n)));
        pool.reserve(count);
        for (std::size_t k = 0; k < count; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < n; ++i)
        if (!failures[i].empty())
            throw std::runtime_error("sweep: run failed at " + spec.parameter + " = " +
                                     format_double(spec.values[i]) + ": " + failures[i]);
    return rows;
}

std::string sweep_summary_csv(const SweepSpec& spec, int jobs) {
    const auto rows = sweep_rows(spec, jobs);
    std::ostringstream out;
    out << "# coupled-cavity state transfer sweep\n";
    out << "# --- config ---\n";
    {
        std::istringstream cfg(echo_sweep(spec));
        std::string line;
        while (std::getline(cfg, line)) out << "# " << line << "\n";
    }
    out << "# --- end config ---\n";
    out << "value,peak_sigma_z_3,t_first_peak_ns,t_threshold_cross_ns\n";
    for (const auto& row : rows) {
        out << format_double(row.value) << ',' << format_double(row.metrics.peak)
            << ',' << format_double(row.metrics.t_peak) << ',';
        if (row.metrics.t_threshold) out << format_double(*row.metrics.t_threshold);
        out << '\n';
    }
    return out.str();
}

void sweep(const SweepSpec& spec, int jobs, const std::string& out_path) {
    write_text_file(out_path, sweep_summary_csv(spec, jobs));
}

} // namespace qst
