// hilbert.hpp — truncated tensor-product basis |k1 n1 n2 k3 n3 (nb)>, local
// ladder/qubit operators, their full-space embeddings, and excitation sectors.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "qst/params.hpp"

namespace qst {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Factor order matches the ket label order.
enum class Subsystem : int {
    Qubit1 = 0,
    Cavity1 = 1,
    Cavity2 = 2,
    Qubit3 = 3,
    Cavity3 = 4,
    KerrMode = 5,
};

struct BasisLabel {
    int k1 = 0; // qubit 1 level (0 ground, 1 excited)
    int n1 = 0; // photons in cavity 1
    int n2 = 0; // photons in cavity 2
    int k3 = 0; // qubit 3 level
    int n3 = 0; // photons in cavity 3
    int nb = 0; // Kerr bosons; stays 0 when the Kerr mode is absent

    int excitation() const { return k1 + n1 + n2 + k3 + n3 + nb; }
    int occupation(Subsystem s) const;
    bool operator==(const BasisLabel&) const = default;
};

// Ordered enumeration of the truncated product space. Indices are row-major
// over (k1, n1, n2, k3, n3, nb), so index_of is arithmetic and bijective.
class BasisSet {
public:
    static BasisSet build(const SystemParams& p);

    std::size_t size() const { return labels_.size(); }
    bool has_kerr() const { return has_kerr_; }
    std::size_t n_subsystems() const { return dims_.size(); }
    const std::vector<int>& dims() const { return dims_; }
    const std::vector<BasisLabel>& labels() const { return labels_; }

    const BasisLabel& label_at(std::size_t i) const;
    std::size_t index_of(const BasisLabel& label) const; // throws if out of bounds
    int max_excitation() const;

private:
    std::vector<int> dims_;
    std::vector<BasisLabel> labels_;
    bool has_kerr_ = false;
};

struct LocalOperator {
    Matrix mat;    // square, dim = subsystem truncation
    Subsystem sub;
};

// <n-1|a|n> = sqrt(n)
LocalOperator annihilation(int dim, Subsystem sub);
LocalOperator creation(int dim, Subsystem sub);
LocalOperator number_op(int dim, Subsystem sub);

// sigma_z = diag(-1 ground, +1 excited); sigma_plus raises ground -> excited.
struct QubitOps {
    Matrix sz, sp, sm;
};
QubitOps qubit_ops();

// op (x) identity on every other factor, in basis order.
Matrix embed(const LocalOperator& op, const BasisSet& basis);

// Indices of labels with total excitation m, in basis order.
std::vector<std::size_t> excitation_sector(const BasisSet& basis, int m);

// Sum of embedded number operators and sigma_+ sigma_-; diagonal with the
// sector label as eigenvalue.
Matrix total_excitation_op(const BasisSet& basis);

} // namespace qst
