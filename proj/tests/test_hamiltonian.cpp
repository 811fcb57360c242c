#include <doctest.h>

#include "qst/hamiltonian.hpp"

using namespace qst;

namespace {

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix restrict_to(const Matrix& m, const std::vector<std::size_t>& idx) {
    Matrix r(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(static_cast<Eigen::Index>(idx[i]), static_cast<Eigen::Index>(idx[j]));
    return r;
}

} // namespace

TEST_CASE("H0 diagonal values on the single-excitation kets at resonance") {
    SystemParams p;
    const BasisSet b = BasisSet::build(p);
    const Matrix h0 = build_h0(p, b);

    // opposite sigma_z signs cancel on |10000>
    const auto q1 = static_cast<Eigen::Index>(b.index_of({1, 0, 0, 0, 0, 0}));
    CHECK(std::abs(h0(q1, q1)) < 1e-12);

    // all five ansatz kets degenerate at zero detuning
    for (const auto i : excitation_sector(b, 1)) {
        const auto ii = static_cast<Eigen::Index>(i);
        CHECK(std::abs(h0(ii, ii)) < 1e-12);
    }
}

TEST_CASE("Kerr ket diagonal entry is omega_k - omega_a at one boson") {
    SystemParams p;
    p.kerr_enabled = true;
    p.omega_k = 0.5 * two_pi;
    const BasisSet b = BasisSet::build(p);
    const Matrix h0 = build_h0(p, b);
    const auto kk = static_cast<Eigen::Index>(b.index_of({0, 0, 0, 0, 0, 1}));
    // the two-boson self-interaction contributes nothing at n_b = 1
    CHECK(h0(kk, kk).real() == doctest::Approx(p.omega_k - p.omega_a).epsilon(1e-14));
    CHECK(std::abs(h0(kk, kk).imag()) < 1e-14);
}

TEST_CASE("interaction matrix elements") {
    SystemParams p;
    p.kerr_enabled = true;
    const BasisSet b = BasisSet::build(p);
    const Matrix hi = build_hi(p, b);

    const auto q1 = static_cast<Eigen::Index>(b.index_of({1, 0, 0, 0, 0, 0}));
    const auto f1 = static_cast<Eigen::Index>(b.index_of({0, 1, 0, 0, 0, 0}));
    const auto f2 = static_cast<Eigen::Index>(b.index_of({0, 0, 1, 0, 0, 0}));
    const auto kk = static_cast<Eigen::Index>(b.index_of({0, 0, 0, 0, 0, 1}));

    CHECK(hi(f1, q1).real() == doctest::Approx(p.lambda1));
    CHECK(hi(f2, f1).real() == doctest::Approx(p.j12));
    CHECK(hi(kk, f2).real() == doctest::Approx(p.p_coup));
}

TEST_CASE("total Hamiltonian is Hermitian and conserves excitation number") {
    SystemParams base;
    SystemParams detuned = base;
    detuned.omega_c = 0.99 * base.omega_a;
    SystemParams kerr = base;
    kerr.kerr_enabled = true;
    kerr.omega_k = 0.5 * two_pi;
    kerr.p_coup = 0.557 * two_pi;

    for (const auto& p : {base, detuned, kerr}) {
        const BasisSet b = BasisSet::build(p);
        const Matrix h = build_total(p, b);
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

        const Matrix n = total_excitation_op(b);
        CHECK(commutator(h, n).cwiseAbs().maxCoeff() < 1e-12);

        // no elements between different excitation sectors
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t jj = 0; jj < b.size(); ++jj)
                if (b.label_at(i).excitation() != b.label_at(jj).excitation())
                    CHECK(std::abs(h(static_cast<Eigen::Index>(i),
                                     static_cast<Eigen::Index>(jj))) < 1e-15);
    }
}

TEST_CASE("free and interaction parts commute at resonance") {
    SystemParams p;
    const BasisSet b = BasisSet::build(p);
    const Matrix h0 = build_h0(p, b);
    const Matrix hi = build_hi(p, b);
    CHECK(commutator(h0, hi).cwiseAbs().maxCoeff() < 1e-12);

    // restricted to the single-excitation sector this extends to the Kerr
    // system at omega_k = omega_c, where the self-interaction acts as zero
    SystemParams pk = p;
    pk.kerr_enabled = true;
    pk.omega_k = pk.omega_c;
    const BasisSet bk = BasisSet::build(pk);
    const auto sector = excitation_sector(bk, 1);
    const Matrix c = commutator(build_h0(pk, bk), build_hi(pk, bk));
    CHECK(restrict_to(c, sector).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("detuning breaks the free/interaction commutation") {
    SystemParams p;
    p.omega_c = 0.99 * p.omega_a;
    const BasisSet b = BasisSet::build(p);
    const Matrix c = commutator(build_h0(p, b), build_hi(p, b));
    CHECK(c.cwiseAbs().maxCoeff() > 1e-3);
}
