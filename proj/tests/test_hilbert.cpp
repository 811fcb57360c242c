#include <doctest.h>

#include "qst/hilbert.hpp"

using namespace qst;

namespace {

SystemParams no_kerr_params() {
    SystemParams p;
    return p;
}

SystemParams kerr_params() {
    SystemParams p;
    p.kerr_enabled = true;
    return p;
}

} // namespace

TEST_CASE("basis sizes at default truncation") {
    CHECK(BasisSet::build(no_kerr_params()).size() == 32); // 2 * 2^3 * 2
    CHECK(BasisSet::build(kerr_params()).size() == 64);    // * 2 Kerr levels
}

TEST_CASE("basis ordering is row-major and index_of inverts label_at") {
    for (const auto& p : {no_kerr_params(), kerr_params()}) {
        const BasisSet b = BasisSet::build(p);
        for (std::size_t i = 0; i < b.size(); ++i)
            CHECK(b.index_of(b.label_at(i)) == i);
    }
}

TEST_CASE("basis rejects truncations that cannot hold one excitation") {
    SystemParams p;
    p.n_max = 1;
    CHECK_THROWS_AS(BasisSet::build(p), std::invalid_argument);
    SystemParams pk = kerr_params();
    pk.nb_max = 1;
    CHECK_THROWS_AS(BasisSet::build(pk), std::invalid_argument);
}

TEST_CASE("single-excitation sector matches the ansatz kets") {
    const BasisSet b = BasisSet::build(no_kerr_params());
    const auto sector = excitation_sector(b, 1);
    REQUIRE(sector.size() == 5);
    // q1, f1, f2, q3, f3 kets, in basis order
    CHECK(b.label_at(sector[0]) == BasisLabel{0, 0, 0, 0, 1, 0});
    CHECK(b.label_at(sector[1]) == BasisLabel{0, 0, 0, 1, 0, 0});
    CHECK(b.label_at(sector[2]) == BasisLabel{0, 0, 1, 0, 0, 0});
    CHECK(b.label_at(sector[3]) == BasisLabel{0, 1, 0, 0, 0, 0});
    CHECK(b.label_at(sector[4]) == BasisLabel{1, 0, 0, 0, 0, 0});

    CHECK(excitation_sector(b, 0).size() == 1);
    CHECK(b.label_at(excitation_sector(b, 0)[0]) == BasisLabel{});

    const BasisSet bk = BasisSet::build(kerr_params());
    CHECK(excitation_sector(bk, 1).size() == 6);
}

TEST_CASE("annihilation ladder elements") {
    const auto a2 = annihilation(2, Subsystem::Cavity1);
    CHECK(a2.mat(0, 1).real() == doctest::Approx(1.0));
    CHECK(a2.mat.cwiseAbs().sum() == doctest::Approx(1.0));

    const auto a3 = annihilation(3, Subsystem::Cavity1);
    CHECK(a3.mat(1, 2).real() == doctest::Approx(std::sqrt(2.0)));

    const Matrix n = a3.mat.adjoint() * a3.mat;
    for (int i = 0; i < 3; ++i) CHECK(n(i, i).real() == doctest::Approx(i));

    CHECK_THROWS_AS(annihilation(1, Subsystem::Cavity1), std::invalid_argument);
}

TEST_CASE("qubit operator algebra") {
    const QubitOps q = qubit_ops();
    const Matrix id = q.sp * q.sm + q.sm * q.sp;
    CHECK((id - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

    const Matrix comm = q.sz * q.sp - q.sp * q.sz;
    CHECK((comm - 2.0 * q.sp).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

    Vector excited(2);
    excited << 0.0, 1.0;
    const Vector ground = q.sm * excited;
    CHECK(std::abs(ground(0)) == doctest::Approx(1.0));
    CHECK(std::abs(ground(1)) == doctest::Approx(0.0));
}

TEST_CASE("embedding identities") {
    const BasisSet b = BasisSet::build(no_kerr_params());

    LocalOperator id_local{Matrix::Identity(2, 2), Subsystem::Cavity1};
    const Matrix full_id = embed(id_local, b);
    CHECK((full_id - Matrix::Identity(32, 32)).cwiseAbs().maxCoeff() ==
          doctest::Approx(0.0));

    // embed(a1) lowers |01000> to |00000>
    const Matrix a1 = embed(annihilation(2, Subsystem::Cavity1), b);
    Vector ket = Vector::Zero(32);
    ket(static_cast<Eigen::Index>(b.index_of({0, 1, 0, 0, 0, 0}))) = 1.0;
    const Vector lowered = a1 * ket;
    CHECK(std::abs(lowered(static_cast<Eigen::Index>(b.index_of({0, 0, 0, 0, 0, 0}))) -
                   Complex(1.0)) == doctest::Approx(0.0));
    CHECK(lowered.norm() == doctest::Approx(1.0));

    // distinct factors commute
    const Matrix a2dag = embed(creation(2, Subsystem::Cavity2), b);
    CHECK((a1 * a2dag - a2dag * a1).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

    // Hermiticity preserved
    const QubitOps q = qubit_ops();
    const Matrix sz1 = embed({q.sz, Subsystem::Qubit1}, b);
    CHECK((sz1 - sz1.adjoint()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

    // subsystem mismatch
    CHECK_THROWS_AS(embed({Matrix::Identity(3, 3), Subsystem::Qubit1}, b),
                    std::invalid_argument);
    CHECK_THROWS_AS(embed(annihilation(2, Subsystem::KerrMode), b),
                    std::invalid_argument);
}

TEST_CASE("total excitation operator is diagonal with the sector labels") {
    for (const auto& p : {no_kerr_params(), kerr_params()}) {
        const BasisSet b = BasisSet::build(p);
        const Matrix n = total_excitation_op(b);
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t jj = 0; jj < b.size(); ++jj) {
                const Complex v = n(static_cast<Eigen::Index>(i),
                                    static_cast<Eigen::Index>(jj));
                if (i == jj)
                    CHECK(v.real() ==
                          doctest::Approx(b.label_at(i).excitation()));
                else
                    CHECK(std::abs(v) == doctest::Approx(0.0));
            }
        }
    }
}
