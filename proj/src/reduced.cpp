#include "qst/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qst {

namespace {

constexpr Complex kI{0.0, 1.0};

// Largest |eigenvalue| bound via Gershgorin row sums.
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

double ReducedState::norm_sq() const {
    double n = std::norm(q1) + std::norm(f1) + std::norm(f2) + std::norm(q3) +
               std::norm(f3);
    if (kerr) n += std::norm(k);
    return n;
}

Vector ReducedState::to_vector() const {
    Vector v(dim());
    v(0) = q1;
    v(1) = f1;
    v(2) = f2;
    v(3) = q3;
    v(4) = f3;
    if (kerr) v(5) = k;
    return v;
}

ReducedState ReducedState::from_vector(const Vector& v, bool kerr) {
    if (v.size() != (kerr ? 6 : 5))
        throw std::invalid_argument("ReducedState: vector size mismatch");
    ReducedState s;
    s.kerr = kerr;
    s.q1 = v(0);
    s.f1 = v(1);
    s.f2 = v(2);
    s.q3 = v(3);
    s.f3 = v(4);
    if (kerr) s.k = v(5);
    return s;
}

ReducedState ReducedState::initial_q1(bool kerr) {
    ReducedState s;
    s.kerr = kerr;
    s.q1 = 1.0;
    return s;
}

Matrix coefficient_matrix(const SystemParams& p, KerrDetuningMode mode) {
    const int n = p.kerr_enabled ? 6 : 5;
    Matrix m = Matrix::Zero(n, n);
    m(0, 1) = m(1, 0) = p.lambda1;
    m(1, 2) = m(2, 1) = p.j12;
    m(2, 4) = m(4, 2) = p.j23;
    m(3, 4) = m(4, 3) = p.lambda3;
    if (p.kerr_enabled) {
        m(2, 5) = m(5, 2) = p.p_coup;
        double delta = p.omega_k - p.omega_c;
        if (mode == KerrDetuningMode::PaperFaithful) delta -= p.q_anh;
        m(5, 5) = delta;
    }
    return m;
}

ReducedState derivs_no_kerr(const ReducedState& s, const SystemParams& p) {
    if (p.kerr_enabled)
        throw std::invalid_argument("derivs_no_kerr: Kerr mode is enabled");
    ReducedState d;
    d.kerr = false;
    d.q1 = -kI * (p.lambda1 * s.f1);
    d.f1 = -kI * (p.lambda1 * s.q1 + p.j12 * s.f2);
    d.f2 = -kI * (p.j12 * s.f1 + p.j23 * s.f3);
    d.q3 = -kI * (p.lambda3 * s.f3);
    d.f3 = -kI * (p.lambda3 * s.q3 + p.j23 * s.f2);
    return d;
}

ReducedState derivs_kerr(const ReducedState& s, const SystemParams& p,
                         KerrDetuningMode mode) {
    if (!p.kerr_enabled)
        throw std::invalid_argument("derivs_kerr: Kerr mode is disabled");
    double delta = p.omega_k - p.omega_c;
    if (mode == KerrDetuningMode::PaperFaithful) delta -= p.q_anh;
    ReducedState d;
    d.kerr = true;
    d.q1 = -kI * (p.lambda1 * s.f1);
    d.f1 = -kI * (p.lambda1 * s.q1 + p.j12 * s.f2);
    d.f2 = -kI * (p.j12 * s.f1 + p.j23 * s.f3 + p.p_coup * s.k);
    d.q3 = -kI * (p.lambda3 * s.f3);
    d.f3 = -kI * (p.lambda3 * s.q3 + p.j23 * s.f2);
    d.k = -kI * (delta * s.k + p.p_coup * s.f2);
    return d;
}

ReducedSeries integrate(const ReducedState& initial, const SystemParams& p,
                        const std::vector<double>& t_grid,
                        KerrDetuningMode mode) {
    p.validate();
    if (initial.kerr != p.kerr_enabled)
        throw std::invalid_argument("integrate: state/params Kerr mismatch");
    if (std::abs(initial.norm_sq() - 1.0) > 1e-9)
        throw std::invalid_argument("integrate: initial state not normalized");
    if (t_grid.empty()) throw std::invalid_argument("integrate: empty time grid");
    if (t_grid.front() != 0.0)
        throw std::invalid_argument("integrate: time grid must start at 0");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (t_grid[i] <= t_grid[i - 1])
            throw std::invalid_argument("integrate: time grid must be strictly increasing");

    const Matrix m = coefficient_matrix(p, mode);
    const Matrix gen = -kI * m; // dc/dt = gen * c

    // Step target: 2000 steps per lambda-period, densified when the spectral
    // bound of the generator is the faster scale.
    const double lam = std::max(p.lambda1, p.lambda3);
    const double mu = std::max({gershgorin_bound(m), lam, 1e-12});
    double dt_target = two_pi / mu / 2000.0;
    if (lam > 0.0) dt_target = std::min(dt_target, two_pi / lam / 2000.0);

    ReducedSeries out;
    out.t = t_grid;
    out.states.reserve(t_grid.size());
    out.norm_sq.reserve(t_grid.size());

    Vector c = initial.to_vector();
    out.states.push_back(ReducedState::from_vector(c, p.kerr_enabled));
    out.norm_sq.push_back(c.squaredNorm());

    Vector k1(c.size()), k2(c.size()), k3(c.size()), k4(c.size()), tmp(c.size());
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double span = t_grid[i] - t_grid[i - 1];
        const auto steps = static_cast<long>(std::ceil(span / dt_target));
        const double h = span / static_cast<double>(steps);
        for (long s = 0; s < steps; ++s) {
            k1.noalias() = gen * c;
            tmp = c + (0.5 * h) * k1;
            k2.noalias() = gen * tmp;
            tmp = c + (0.5 * h) * k2;
            k3.noalias() = gen * tmp;
            tmp = c + h * k3;
            k4.noalias() = gen * tmp;
            c += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        out.states.push_back(ReducedState::from_vector(c, p.kerr_enabled));
        out.norm_sq.push_back(c.squaredNorm());
    }
    return out;
}

std::vector<double> populations(const ReducedState& s) {
    std::vector<double> p = {std::norm(s.q1), std::norm(s.f1), std::norm(s.f2),
                             std::norm(s.q3), std::norm(s.f3)};
    if (s.kerr) p.push_back(std::norm(s.k));
    return p;
}

std::pair<double, double> inversion(const std::vector<double>& pops) {
    if (pops.size() != 5 && pops.size() != 6)
        throw std::invalid_argument("inversion: expected 5 or 6 populations");
    double total = 0.0;
    for (double v : pops) total += v;
    const double sz1 = pops[0] - (total - pops[0]);
    const double sz3 = pops[3] - (total - pops[3]);
    return {sz1, sz3};
}

} // namespace qst
