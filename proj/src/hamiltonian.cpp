#include "qst/hamiltonian.hpp"

namespace qst {

Matrix build_h0(const SystemParams& p, const BasisSet& basis) {
    const auto& dims = basis.dims();
    const QubitOps q = qubit_ops();

    Matrix h = p.omega_c * embed(number_op(dims[1], Subsystem::Cavity1), basis);
    h += p.omega_c * embed(number_op(dims[2], Subsystem::Cavity2), basis);
    h += p.omega_c * embed(number_op(dims[4], Subsystem::Cavity3), basis);
    h += 0.5 * p.omega_a * embed({q.sz, Subsystem::Qubit1}, basis);
    h += 0.5 * p.omega_a * embed({q.sz, Subsystem::Qubit3}, basis);

    if (basis.has_kerr()) {
        const int db = dims[5];
        h += p.omega_k * embed(number_op(db, Subsystem::KerrMode), basis);
        // b^dag^2 b^2 = n_b (n_b - 1), zero on occupations 0 and 1
        Matrix anh = Matrix::Zero(db, db);
        for (int n = 0; n < db; ++n) anh(n, n) = static_cast<double>(n) * (n - 1);
        h += p.q_anh * embed({anh, Subsystem::KerrMode}, basis);
    }
    return h;
}

Matrix build_hi(const SystemParams& p, const BasisSet& basis) {
    const auto& dims = basis.dims();
    const QubitOps q = qubit_ops();

    const Matrix a1 = embed(annihilation(dims[1], Subsystem::Cavity1), basis);
    const Matrix a2 = embed(annihilation(dims[2], Subsystem::Cavity2), basis);
    const Matrix a3 = embed(annihilation(dims[4], Subsystem::Cavity3), basis);
    const Matrix sm1 = embed({q.sm, Subsystem::Qubit1}, basis);
    const Matrix sm3 = embed({q.sm, Subsystem::Qubit3}, basis);

    Matrix h = p.lambda1 * (a1.adjoint() * sm1);
    h += p.lambda3 * (a3.adjoint() * sm3);
    h += p.j12 * (a1.adjoint() * a2);
    h += p.j23 * (a2.adjoint() * a3);
    if (basis.has_kerr()) {
        const Matrix b = embed(annihilation(dims[5], Subsystem::KerrMode), basis);
        h += p.p_coup * (a2.adjoint() * b);
    }
    h = (h + h.adjoint()).eval();
    return h;
}

Matrix build_total(const SystemParams& p, const BasisSet& basis) {
    return build_h0(p, basis) + build_hi(p, basis);
}

} // namespace qst
