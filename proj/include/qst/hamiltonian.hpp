// hamiltonian.hpp — free, interaction and total Hamiltonians of the chain,
// assembled from embedded local operators. Rotating-wave form throughout.

#pragma once

#include "qst/hilbert.hpp"
#include "qst/params.hpp"

namespace qst {

// Diagonal part: sum_i omega_c a_i^dag a_i + (omega_a/2)(sz1 + sz3)
// [+ omega_k b^dag b + q b^dag^2 b^2 with the Kerr mode].
Matrix build_h0(const SystemParams& p, const BasisSet& basis);

// Exchange part: lambda_i (a_i^dag sm_i + h.c.) + J_lm (a_l^dag a_m + h.c.)
// [+ p (a_2^dag b + h.c.)].
Matrix build_hi(const SystemParams& p, const BasisSet& basis);

Matrix build_total(const SystemParams& p, const BasisSet& basis);

} // namespace qst
