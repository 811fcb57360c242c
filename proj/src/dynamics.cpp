#include "qst/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qst {

namespace {

constexpr Complex kI{0.0, 1.0};

double gershgorin_bound(const Matrix& m) {
    double mu = 0.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        double row = 0.0;
        for (Eigen::Index c = 0; c < m.cols(); ++c) row += std::abs(m(r, c));
        mu = std::max(mu, row);
    }
    return mu;
}

} // namespace

std::vector<Vector> evolve(const Vector& initial, const Matrix& h,
                           const std::vector<double>& t_grid,
                           double substeps_per_ns) {
    if (h.rows() != h.cols() || h.rows() != initial.size())
        throw std::invalid_argument("evolve: state/Hamiltonian dimension mismatch");
    if (t_grid.empty()) throw std::invalid_argument("evolve: empty time grid");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (t_grid[i] <= t_grid[i - 1])
            throw std::invalid_argument("evolve: time grid must be strictly increasing");

    double rate = substeps_per_ns;
    if (rate <= 0.0) {
        // >= 200 steps per period of the fastest scale present in H
        const double mu = std::max(gershgorin_bound(h), 1e-12);
        rate = 200.0 * mu / two_pi;
    }

    const Matrix gen = -kI * h;
    std::vector<Vector> out;
    out.reserve(t_grid.size());
    Vector psi = initial;
    out.push_back(psi);

    Vector k1(psi.size()), k2(psi.size()), k3(psi.size()), k4(psi.size()),
        tmp(psi.size());
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double span = t_grid[i] - t_grid[i - 1];
        const auto steps = std::max<long>(1, static_cast<long>(std::ceil(span * rate)));
        const double dt = span / static_cast<double>(steps);
        for (long s = 0; s < steps; ++s) {
            k1.noalias() = gen * psi;
            tmp = psi + (0.5 * dt) * k1;
            k2.noalias() = gen * tmp;
            tmp = psi + (0.5 * dt) * k2;
            k3.noalias() = gen * tmp;
            tmp = psi + dt * k3;
            k4.noalias() = gen * tmp;
            psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        if (!psi.allFinite()) {
            std::ostringstream msg;
            msg << "evolve: non-finite state at t = " << t_grid[i]
                << " ns (step " << 1.0 / rate << " ns); check parameter scales";
            throw std::runtime_error(msg.str());
        }
        out.push_back(psi);
    }
    return out;
}

double expectation(const Matrix& op, const Vector& state) {
    if (op.rows() != op.cols() || op.rows() != state.size())
        throw std::invalid_argument("expectation: dimension mismatch");
    const double herm_gap = (op - op.adjoint()).cwiseAbs().maxCoeff();
    if (herm_gap > 1e-12 * (1.0 + op.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("expectation: operator is not Hermitian");
    const Complex v = state.dot(op * state); // dot conjugates the left factor
    if (std::abs(v.imag()) > 1e-10 * (1.0 + std::abs(v.real())))
        throw std::runtime_error("expectation: imaginary residue exceeds tolerance");
    return v.real();
}

TimeSeries observables_series(const std::vector<Vector>& states,
                              const BasisSet& basis, const SystemParams& p,
                              const std::vector<double>& t_grid) {
    if (states.size() != t_grid.size())
        throw std::invalid_argument("observables_series: state/grid length mismatch");

    const auto& dims = basis.dims();
    const QubitOps q = qubit_ops();
    const Matrix sz1 = embed({q.sz, Subsystem::Qubit1}, basis);
    const Matrix sz3 = embed({q.sz, Subsystem::Qubit3}, basis);
    const Matrix num1 = embed(number_op(dims[1], Subsystem::Cavity1), basis);
    const Matrix num2 = embed(number_op(dims[2], Subsystem::Cavity2), basis);
    const Matrix num3 = embed(number_op(dims[4], Subsystem::Cavity3), basis);
    Matrix numb;
    if (basis.has_kerr()) numb = embed(number_op(dims[5], Subsystem::KerrMode), basis);

    // Single-excitation sector kets, in amplitude order q1, f1, f2, q3, f3[, k].
    std::array<std::size_t, 6> slot{};
    slot[0] = basis.index_of({1, 0, 0, 0, 0, 0});
    slot[1] = basis.index_of({0, 1, 0, 0, 0, 0});
    slot[2] = basis.index_of({0, 0, 1, 0, 0, 0});
    slot[3] = basis.index_of({0, 0, 0, 1, 0, 0});
    slot[4] = basis.index_of({0, 0, 0, 0, 1, 0});
    if (basis.has_kerr()) slot[5] = basis.index_of({0, 0, 0, 0, 0, 1});

    const int m_max = basis.max_excitation();
    std::vector<int> sector_of(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        sector_of[i] = basis.label_at(i).excitation();

    TimeSeries ts;
    ts.has_kerr = basis.has_kerr();
    ts.t = t_grid;
    const std::size_t n = states.size();
    ts.sigma_z1.reserve(n);
    ts.sigma_z3.reserve(n);
    ts.n1.reserve(n);
    ts.n2.reserve(n);
    ts.n3.reserve(n);
    if (ts.has_kerr) ts.nb.reserve(n);
    ts.pops.reserve(n);
    ts.norm_sq.reserve(n);
    ts.sector_pops.reserve(n);

    for (const Vector& psi : states) {
        ts.sigma_z1.push_back(expectation(sz1, psi));
        ts.sigma_z3.push_back(expectation(sz3, psi));
        ts.n1.push_back(expectation(num1, psi));
        ts.n2.push_back(expectation(num2, psi));
        ts.n3.push_back(expectation(num3, psi));
        if (ts.has_kerr) ts.nb.push_back(expectation(numb, psi));

        std::array<double, 6> pop{};
        for (int a = 0; a < (ts.has_kerr ? 6 : 5); ++a)
            pop[static_cast<std::size_t>(a)] =
                std::norm(psi(static_cast<Eigen::Index>(slot[static_cast<std::size_t>(a)])));
        ts.pops.push_back(pop);

        ts.norm_sq.push_back(psi.squaredNorm());

        std::vector<double> sectors(static_cast<std::size_t>(m_max) + 1, 0.0);
        for (std::size_t i = 0; i < sector_of.size(); ++i)
            sectors[static_cast<std::size_t>(sector_of[i])] +=
                std::norm(psi(static_cast<Eigen::Index>(i)));
        ts.sector_pops.push_back(std::move(sectors));
    }
    return ts;
}

TransferMetrics transfer_metrics(const TimeSeries& series, double threshold) {
    if (series.t.empty())
        throw std::invalid_argument("transfer_metrics: empty series");
    TransferMetrics m;
    m.threshold = threshold;
    m.peak = series.sigma_z3.front();
    m.t_peak = series.t.front();
    for (std::size_t i = 0; i < series.t.size(); ++i) {
        if (series.sigma_z3[i] > m.peak) { // strict: ties keep the earliest time
            m.peak = series.sigma_z3[i];
            m.t_peak = series.t[i];
        }
        if (!m.t_threshold && series.sigma_z3[i] >= threshold)
            m.t_threshold = series.t[i];
    }
    return m;
}

} // namespace qst
