#include "qst/hilbert.hpp"

#include <stdexcept>

namespace qst {

int BasisLabel::occupation(Subsystem s) const {
    switch (s) {
    case Subsystem::Qubit1: return k1;
    case Subsystem::Cavity1: return n1;
    case Subsystem::Cavity2: return n2;
    case Subsystem::Qubit3: return k3;
    case Subsystem::Cavity3: return n3;
    case Subsystem::KerrMode: return nb;
    }
    throw std::invalid_argument("BasisLabel: unknown subsystem");
}

BasisSet BasisSet::build(const SystemParams& p) {
    p.validate();
    BasisSet b;
    b.has_kerr_ = p.kerr_enabled;
    b.dims_ = {2, p.n_max, p.n_max, 2, p.n_max};
    if (p.kerr_enabled) b.dims_.push_back(p.nb_max);

    std::size_t total = 1;
    for (int d : b.dims_) total *= static_cast<std::size_t>(d);
    b.labels_.reserve(total);

    const int nbm = p.kerr_enabled ? p.nb_max : 1;
    for (int k1 = 0; k1 < 2; ++k1)
        for (int n1 = 0; n1 < p.n_max; ++n1)
            for (int n2 = 0; n2 < p.n_max; ++n2)
                for (int k3 = 0; k3 < 2; ++k3)
                    for (int n3 = 0; n3 < p.n_max; ++n3)
                        for (int nb = 0; nb < nbm; ++nb)
                            b.labels_.push_back({k1, n1, n2, k3, n3, nb});
    return b;
}

const BasisLabel& BasisSet::label_at(std::size_t i) const {
    if (i >= labels_.size()) throw std::out_of_range("BasisSet: index out of range");
    return labels_[i];
}

std::size_t BasisSet::index_of(const BasisLabel& label) const {
    std::size_t idx = 0;
    for (std::size_t s = 0; s < dims_.size(); ++s) {
        const int occ = label.occupation(static_cast<Subsystem>(s));
        if (occ < 0 || occ >= dims_[s])
            throw std::out_of_range("BasisSet: label occupation outside truncation");
        idx = idx * static_cast<std::size_t>(dims_[s]) + static_cast<std::size_t>(occ);
    }
    if (!has_kerr_ && label.nb != 0)
        throw std::out_of_range("BasisSet: Kerr occupation in a Kerr-free basis");
    return idx;
}

int BasisSet::max_excitation() const {
    int m = 0;
    for (int d : dims_) m += d - 1;
    return m;
}

LocalOperator annihilation(int dim, Subsystem sub) {
    if (dim < 2) throw std::invalid_argument("annihilation: dim must be >= 2");
    Matrix a = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return {a, sub};
}

LocalOperator creation(int dim, Subsystem sub) {
    LocalOperator a = annihilation(dim, sub);
    a.mat = a.mat.adjoint().eval();
    return a;
}

LocalOperator number_op(int dim, Subsystem sub) {
    if (dim < 2) throw std::invalid_argument("number_op: dim must be >= 2");
    Matrix n = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) n(i, i) = static_cast<double>(i);
    return {n, sub};
}

QubitOps qubit_ops() {
    QubitOps o;
    o.sz = Matrix::Zero(2, 2);
    o.sz(0, 0) = -1.0;
    o.sz(1, 1) = 1.0;
    o.sp = Matrix::Zero(2, 2);
    o.sp(1, 0) = 1.0;
    o.sm = o.sp.adjoint();
    return o;
}

Matrix embed(const LocalOperator& op, const BasisSet& basis) {
    const auto& dims = basis.dims();
    const auto sub = static_cast<std::size_t>(op.sub);
    if (sub >= dims.size())
        throw std::invalid_argument("embed: subsystem not present in this basis");
    if (op.mat.rows() != op.mat.cols() || op.mat.rows() != dims[sub])
        throw std::invalid_argument("embed: operator dimension does not match subsystem");

    // Index arithmetic: idx = outer * (d * inner_sz) + occ * inner_sz + inner,
    // where inner_sz is the product of dims after `sub`.
    std::size_t inner_sz = 1;
    for (std::size_t s = sub + 1; s < dims.size(); ++s)
        inner_sz *= static_cast<std::size_t>(dims[s]);
    const auto d = static_cast<std::size_t>(dims[sub]);
    const std::size_t outer_sz = basis.size() / (inner_sz * d);

    Matrix full = Matrix::Zero(static_cast<Eigen::Index>(basis.size()),
                               static_cast<Eigen::Index>(basis.size()));
    for (std::size_t outer = 0; outer < outer_sz; ++outer) {
        for (std::size_t row = 0; row < d; ++row) {
            for (std::size_t col = 0; col < d; ++col) {
                const Complex v = op.mat(static_cast<Eigen::Index>(row),
                                         static_cast<Eigen::Index>(col));
                if (v == Complex(0.0)) continue;
                const std::size_t base_r = (outer * d + row) * inner_sz;
                const std::size_t base_c = (outer * d + col) * inner_sz;
                for (std::size_t inner = 0; inner < inner_sz; ++inner)
                    full(static_cast<Eigen::Index>(base_r + inner),
                         static_cast<Eigen::Index>(base_c + inner)) = v;
            }
        }
    }
    return full;
}

std::vector<std::size_t> excitation_sector(const BasisSet& basis, int m) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis.label_at(i).excitation() == m) idx.push_back(i);
    return idx;
}

Matrix total_excitation_op(const BasisSet& basis) {
    const auto& dims = basis.dims();
    const QubitOps q = qubit_ops();
    Matrix total = embed({q.sp * q.sm, Subsystem::Qubit1}, basis);
    total += embed({q.sp * q.sm, Subsystem::Qubit3}, basis);
    total += embed(number_op(dims[1], Subsystem::Cavity1), basis);
    total += embed(number_op(dims[2], Subsystem::Cavity2), basis);
    total += embed(number_op(dims[4], Subsystem::Cavity3), basis);
    if (basis.has_kerr())
        total += embed(number_op(dims[5], Subsystem::KerrMode), basis);
    return total;
}

} // namespace qst
