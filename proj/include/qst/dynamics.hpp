// dynamics.hpp — Schroedinger-picture propagation over the full truncated
// space (fixed-substep RK4) and observable extraction per sample.

#pragma once

#include <optional>
#include <vector>

#include "qst/hamiltonian.hpp"
#include "qst/hilbert.hpp"

namespace qst {

struct TimeSeries {
    std::vector<double> t; // ns
    std::vector<double> sigma_z1, sigma_z3;
    std::vector<double> n1, n2, n3;
    std::vector<double> nb;                     // empty without the Kerr mode
    std::vector<std::array<double, 6>> pops;    // q1, f1, f2, q3, f3, k slots
    std::vector<double> norm_sq;
    std::vector<std::vector<double>> sector_pops; // per sample, indexed by m
    bool has_kerr = false;

    std::size_t samples() const { return t.size(); }
};

// i dpsi/dt = H psi by RK4, sampled at the grid points. substeps_per_ns = 0
// picks the step so the fastest scale (Gershgorin bound of H) is resolved
// by >= 200 steps per period. Throws on NaN blowup with a diagnostic.
std::vector<Vector> evolve(const Vector& initial, const Matrix& h,
                           const std::vector<double>& t_grid,
                           double substeps_per_ns = 0.0);

// Re <psi|op|psi>; throws if op is not Hermitian or the imaginary residue
// exceeds 1e-10.
double expectation(const Matrix& op, const Vector& state);

TimeSeries observables_series(const std::vector<Vector>& states,
                              const BasisSet& basis, const SystemParams& p,
                              const std::vector<double>& t_grid);

struct TransferMetrics {
    double peak = -1.0;                 // max <sz3> over the window
    double t_peak = 0.0;                // earliest time attaining the max
    std::optional<double> t_threshold;  // earliest <sz3> >= threshold, if any
    double threshold = 0.9;
};

TransferMetrics transfer_metrics(const TimeSeries& series, double threshold = 0.9);

} // namespace qst
