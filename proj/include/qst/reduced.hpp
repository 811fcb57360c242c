// reduced.hpp — single-excitation amplitude dynamics. The closed system is
// i dc/dt = M c with M the Hermitian coefficient matrix over the amplitudes
// (q1, f1, f2, q3, f3[, k]); integration is fixed-step RK4.

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qst/hilbert.hpp"
#include "qst/params.hpp"

namespace qst {

// Reading of the Kerr amplitude's detuning coefficient:
//   PaperFaithful    -> (omega_k - omega - q)
//   FirstPrinciples  -> (omega_k - omega); the two-boson self-interaction
//                       annihilates the one-boson state, so q cannot enter.
// FirstPrinciples is the validation reference (it matches the full-space
// propagation); PaperFaithful is the reproduction mode.
enum class KerrDetuningMode { PaperFaithful, FirstPrinciples };

struct ReducedState {
    Complex q1{}, f1{}, f2{}, q3{}, f3{}, k{};
    bool kerr = false;

    int dim() const { return kerr ? 6 : 5; }
    double norm_sq() const;

    Vector to_vector() const;
    static ReducedState from_vector(const Vector& v, bool kerr);

    // Excitation starts on qubit 1: q1(0) = 1.
    static ReducedState initial_q1(bool kerr = false);
};

// 5x5 (no Kerr) or 6x6 (Kerr) Hermitian generator; entries are real.
Matrix coefficient_matrix(const SystemParams& p, KerrDetuningMode mode);

ReducedState derivs_no_kerr(const ReducedState& s, const SystemParams& p);
ReducedState derivs_kerr(const ReducedState& s, const SystemParams& p,
                         KerrDetuningMode mode);

struct ReducedSeries {
    std::vector<double> t;
    std::vector<ReducedState> states;
    std::vector<double> norm_sq; // per-sample norm drift diagnostic
};

// Fixed-step RK4 sampled at the grid points. The base step resolves a
// lambda-period with 2000 steps; it shrinks further when the generator's
// Gershgorin bound sets a faster scale (Kerr detuning or strong p).
// Requires a normalized initial state and a strictly increasing grid from 0.
ReducedSeries integrate(const ReducedState& initial, const SystemParams& p,
                        const std::vector<double>& t_grid,
                        KerrDetuningMode mode = KerrDetuningMode::PaperFaithful);

// |amplitude|^2, in state order; size 5 or 6.
std::vector<double> populations(const ReducedState& s);

// (<sz1>, <sz3>) per the population-difference form: own population minus
// the sum of all others. Equals 2|q_i|^2 - 1 on normalized states.
std::pair<double, double> inversion(const std::vector<double>& pops);

} // namespace qst
