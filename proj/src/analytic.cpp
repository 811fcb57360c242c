#include "qst/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qst {

namespace {

constexpr Complex kI{0.0, 1.0};

Poly poly_det(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    // Laplace expansion along the first row; fine for n <= 6.
    Poly det;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].degree() < 0) continue;
        std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == col) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        Poly term = m[0][col] * poly_det(std::move(minor));
        if (col % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

// Cramer solution of (s I + i M) X = e0 for a real symmetric M.
LaplaceSolution cramer_solution(const Matrix& m) {
    const auto n = static_cast<std::size_t>(m.rows());
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Complex off = kI * m(static_cast<Eigen::Index>(r),
                                       static_cast<Eigen::Index>(c));
            a[r][c] = (r == c) ? Poly::linear(off) : Poly::constant(off);
        }
    const Poly den = poly_det(a);

    LaplaceSolution sol;
    sol.amp.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto aj = a;
        for (std::size_t r = 0; r < n; ++r)
            aj[r][j] = Poly::constant(r == 0 ? 1.0 : 0.0);
        sol.amp.push_back({poly_det(std::move(aj)), den});
    }
    return sol;
}

struct PoleCluster {
    Complex s0;
    std::vector<Complex> members;
};

std::vector<PoleCluster> cluster_roots(const std::vector<Complex>& roots) {
    double scale = 1.0;
    for (const auto& r : roots) scale = std::max(scale, std::abs(r));
    const double tol = 1e-6 * scale;

    std::vector<PoleCluster> clusters;
    for (const auto& r : roots) {
        PoleCluster* home = nullptr;
        for (auto& cl : clusters)
            if (std::abs(r - cl.s0) < tol) {
                home = &cl;
                break;
            }
        if (!home) {
            clusters.push_back({r, {}});
            home = &clusters.back();
        }
        home->members.push_back(r);
        Complex mean = 0.0;
        for (const auto& x : home->members) mean += x;
        home->s0 = mean / static_cast<double>(home->members.size());
    }
    return clusters;
}

} // namespace

SymmetricParams SymmetricParams::make(double lambda, double j) {
    if (!(lambda > 0.0)) throw std::invalid_argument("SymmetricParams: lambda must be > 0");
    if (j < 0.0) throw std::invalid_argument("SymmetricParams: j must be >= 0");
    return {lambda, j, std::sqrt(2.0 * j * j + lambda * lambda)};
}

SymmetricParams SymmetricParams::from(const SystemParams& p) {
    if (p.kerr_enabled)
        throw std::invalid_argument("SymmetricParams: closed forms exclude the Kerr mode");
    if (p.lambda1 != p.lambda3 || p.j12 != p.j23)
        throw std::invalid_argument("SymmetricParams: couplings must be symmetric");
    if (p.detuning() != 0.0)
        throw std::invalid_argument("SymmetricParams: closed forms assume zero detuning");
    return make(p.lambda1, p.j12);
}

ReducedState closed_form(const SymmetricParams& p, double t) {
    if (t < 0.0) throw std::invalid_argument("closed_form: t must be >= 0");
    const double om2 = p.omega_big * p.omega_big;
    const double cl = std::cos(p.lambda * t);
    const double co = std::cos(p.omega_big * t);
    const double sl = std::sin(p.lambda * t);
    const double so = std::sin(p.omega_big * t);
    const double sym = (p.lambda * p.lambda * co + 2.0 * p.j * p.j) / om2;

    ReducedState s;
    s.kerr = false;
    s.q1 = 0.5 * (cl + sym);
    s.q3 = 0.5 * (sym - cl);
    s.f1 = -0.5 * kI * (sl + p.lambda / p.omega_big * so);
    s.f3 = 0.5 * kI * (sl - p.lambda / p.omega_big * so);
    s.f2 = p.j * p.lambda / om2 * (co - 1.0);
    return s;
}

std::array<double, 5> probabilities(const SymmetricParams& p, double t) {
    const ReducedState s = closed_form(p, t);
    return {std::norm(s.q1), std::norm(s.f1), std::norm(s.f2), std::norm(s.q3),
            std::norm(s.f3)};
}

std::pair<double, double> inversions(const SymmetricParams& p, double t) {
    const auto pr = probabilities(p, t);
    const auto pops = std::vector<double>(pr.begin(), pr.end());
    return inversion(pops);
}

double q1_printed_variant(const SymmetricParams& p, double t) {
    const double co = std::cos(p.omega_big * t); // cosh(t sqrt(-Omega^2))
    return -0.5 * (std::cos(p.lambda * t) +
                   (p.lambda * p.lambda * co + 2.0 * p.j * p.j) /
                       (4.0 * p.j * p.j + 2.0 * p.lambda * p.lambda));
}

LaplaceSolution laplace_solution(const SymmetricParams& p) {
    SystemParams sys;
    sys.lambda1 = sys.lambda3 = p.lambda;
    sys.j12 = sys.j23 = p.j;
    sys.kerr_enabled = false;
    return cramer_solution(coefficient_matrix(sys, KerrDetuningMode::FirstPrinciples));
}

LaplaceSolution laplace_solution_kerr(const SystemParams& p, KerrDetuningMode mode) {
    if (!p.kerr_enabled)
        throw std::invalid_argument("laplace_solution_kerr: Kerr mode is disabled");
    return cramer_solution(coefficient_matrix(p, mode));
}

std::vector<Complex> poles(const RationalSolution& rs) { return poly_roots(rs.den); }

std::vector<Complex> inverse_transform(const RationalSolution& rs,
                                       const std::vector<double>& t) {
    if (rs.num.degree() >= rs.den.degree())
        throw std::invalid_argument("inverse_transform: solution must be strictly proper");
    const auto roots = poly_roots(rs.den);
    const auto clusters = cluster_roots(roots);
    const Complex lead = rs.den.c[static_cast<std::size_t>(rs.den.degree())];

    std::vector<Complex> x(t.size(), 0.0);
    for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
        const Complex s0 = clusters[ci].s0;
        const std::size_t mult = clusters[ci].members.size();

        // q(u) = den(u + s0) / u^mult, built exactly from the other clusters'
        // roots so near-zero low-order coefficients never get divided.
        Poly q = Poly::constant(lead);
        for (std::size_t cj = 0; cj < clusters.size(); ++cj) {
            if (cj == ci) continue;
            for (const auto& r : clusters[cj].members) q = q * Poly::linear(s0 - r);
        }

        // Series of num(u + s0) / q(u) up to order mult-1.
        const Poly num_sh = rs.num.shifted(s0);
        std::vector<Complex> series(mult, 0.0);
        std::vector<Complex> qinv(mult, 0.0);
        qinv[0] = 1.0 / q.c[0];
        for (std::size_t k = 1; k < mult; ++k) {
            Complex acc = 0.0;
            for (std::size_t j = 1; j <= k; ++j) {
                const Complex qj = j < q.c.size() ? q.c[j] : Complex(0.0);
                acc += qj * qinv[k - j];
            }
            qinv[k] = -acc / q.c[0];
        }
        for (std::size_t k = 0; k < mult; ++k) {
            Complex acc = 0.0;
            for (std::size_t j = 0; j <= k; ++j) {
                const Complex nj = j < num_sh.c.size() ? num_sh.c[j] : Complex(0.0);
                acc += nj * qinv[k - j];
            }
            series[k] = acc;
        }

        // series[k] / (s - s0)^(mult-k) -> series[k] t^(mult-k-1) e^(s0 t) / (mult-k-1)!
        for (std::size_t i = 0; i < t.size(); ++i) {
            const Complex phase = std::exp(s0 * t[i]);
            double factorial = 1.0;
            Complex sum = 0.0;
            for (std::size_t k = mult; k-- > 0;) {
                const std::size_t power = mult - k - 1;
                if (power > 0) factorial *= static_cast<double>(power);
                sum += series[k] * std::pow(t[i], static_cast<double>(power)) / factorial;
            }
            x[i] += phase * sum;
        }
    }
    return x;
}

double verify_inverse_transform(const SymmetricParams& p,
                                const std::vector<double>& t_grid) {
    const LaplaceSolution sol = laplace_solution(p);
    double worst = 0.0;
    for (std::size_t a = 0; a < sol.amp.size(); ++a) {
        const auto via_laplace = inverse_transform(sol.amp[a], t_grid);
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            const ReducedState s = closed_form(p, t_grid[i]);
            const Complex direct = s.to_vector()(static_cast<Eigen::Index>(a));
            worst = std::max(worst, std::abs(via_laplace[i] - direct));
        }
    }
    return worst;
}

} // namespace qst
