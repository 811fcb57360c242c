// params.hpp — physical rates, frequencies and truncation settings for the
// three-cavity chain with end qubits and an optional Kerr mode on cavity 2.
//
// All energies are angular frequencies in rad/ns with hbar = 1.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace qst {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// ghz -> rad/ns
inline double angular(double f_ghz) { return two_pi * f_ghz; }

struct SystemParams {
    double omega_a = two_pi;         // qubit transition frequency
    double omega_c = two_pi;         // cavity mode frequency (all three cavities)
    double lambda1 = 0.1 * two_pi;   // atom-field coupling, cavity 1
    double lambda3 = 0.1 * two_pi;   // atom-field coupling, cavity 3
    double j12 = 0.01 * two_pi;      // hopping between cavities 1 and 2
    double j23 = 0.01 * two_pi;      // hopping between cavities 2 and 3

    bool kerr_enabled = false;
    double omega_k = two_pi;         // Kerr mode frequency
    double q_anh = 0.2 * two_pi;     // anharmonicity (two-boson self-interaction)
    double p_coup = 0.5 * two_pi;    // cavity-2 <-> Kerr mode exchange strength

    int n_max = 2;                   // photon levels per cavity (occupations 0..n_max-1)
    int nb_max = 2;                  // Kerr boson levels (occupations 0..nb_max-1)

    double detuning() const { return omega_a - omega_c; }

    void validate() const {
        auto finite = [](double x) { return std::isfinite(x); };
        if (!finite(omega_a) || !finite(omega_c))
            throw std::invalid_argument("SystemParams: frequencies must be finite");
        if (!finite(lambda1) || !finite(lambda3) || !finite(j12) || !finite(j23))
            throw std::invalid_argument("SystemParams: couplings must be finite");
        if (lambda1 < 0 || lambda3 < 0 || j12 < 0 || j23 < 0)
            throw std::invalid_argument("SystemParams: couplings must be >= 0");
        if (n_max < 2)
            throw std::invalid_argument(
                "SystemParams: n_max must be >= 2 (one excitation needs two levels)");
        if (kerr_enabled) {
            if (!finite(omega_k) || !finite(q_anh) || !finite(p_coup))
                throw std::invalid_argument("SystemParams: Kerr rates must be finite");
            if (p_coup < 0)
                throw std::invalid_argument("SystemParams: p_coup must be >= 0");
            if (nb_max < 2)
                throw std::invalid_argument("SystemParams: nb_max must be >= 2");
        }
    }
};

} // namespace qst
