// poly.hpp — dense univariate polynomials with complex coefficients,
// ascending order. Small degrees only (<= a dozen); used for the s-domain
// rational solutions and their partial-fraction inversion.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace qst {

struct Poly {
    std::vector<std::complex<double>> c; // c[k] multiplies s^k

    Poly() = default;
    explicit Poly(std::vector<std::complex<double>> coeffs) : c(std::move(coeffs)) {}
    static Poly constant(std::complex<double> v) { return Poly({v}); }
    // s + a
    static Poly linear(std::complex<double> a) { return Poly({a, 1.0}); }

    int degree() const {
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
            if (c[static_cast<std::size_t>(k)] != std::complex<double>(0.0)) return k;
        return -1; // zero polynomial
    }

    std::complex<double> eval(std::complex<double> s) const {
        std::complex<double> v = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * s + *it;
        return v;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), 0.0);
        for (std::size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
        return *this;
    }

    Poly operator*(const Poly& o) const {
        if (c.empty() || o.c.empty()) return Poly{};
        Poly r;
        r.c.assign(c.size() + o.c.size() - 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        return r;
    }

    Poly operator*(std::complex<double> v) const {
        Poly r = *this;
        for (auto& x : r.c) x *= v;
        return r;
    }

    Poly operator-() const { return *this * std::complex<double>(-1.0); }

    // Coefficients of p(u + s0) in u (synthetic-division Taylor shift).
    Poly shifted(std::complex<double> s0) const {
        Poly r = *this;
        const std::size_t n = r.c.size();
        for (std::size_t pass = 0; pass + 1 < n; ++pass)
            for (std::size_t k = n - 1; k > pass; --k) r.c[k - 1] += s0 * r.c[k];
        return r;
    }
};

// Roots via the companion matrix of the monic polynomial.
inline std::vector<std::complex<double>> poly_roots(const Poly& p) {
    const int deg = p.degree();
    if (deg < 0) throw std::invalid_argument("poly_roots: zero polynomial");
    if (deg == 0) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    const std::complex<double> lead = p.c[static_cast<std::size_t>(deg)];
    for (int k = 0; k < deg; ++k)
        comp(k, deg - 1) = -p.c[static_cast<std::size_t>(k)] / lead;
    for (int k = 1; k < deg; ++k) comp(k, k - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("poly_roots: eigensolver failed");
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(deg));
    for (int k = 0; k < deg; ++k) roots[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
    return roots;
}

} // namespace qst
