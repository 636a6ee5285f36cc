// Single-band electron states of a finite square well along z with
// BenDaniel-Duke matching (Z and Z'/m continuous). Bound energies come
// from the even/odd transcendental equations; envelopes are piecewise
// analytic and normalized on the full line.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dotcav/constants.hpp"
#include "dotcav/zgrid.hpp"

namespace dotcav {

struct ElectronZState {
    int d = 0;           // 1-based index, sorted by energy
    double energy = 0;   // eV above the well conduction-band edge
    bool even = true;    // parity about z = 0
    double k_well = 0;   // 1/nm, wavevector inside the well
    double kappa = 0;    // 1/nm, decay constant in the barrier
    double amp_well = 0; // normalization of the cos/sin part
    double amp_barrier = 0;
    double half_width = 0; // L/2, nm
    std::vector<double> envelope; // sampled on the caller's z grid

    // Analytic envelope at arbitrary z (well centred at 0).
    double value(double z) const {
        const double az = std::abs(z);
        if (az <= half_width) {
            return amp_well * (even ? std::cos(k_well * z) : std::sin(k_well * z));
        }
        const double tail = amp_barrier * std::exp(-kappa * (az - half_width));
        if (even) return tail;
        return z > 0 ? tail : -tail;
    }
};

namespace detail {

inline double matching_even(double E, double V, double half_L, double mw, double mb) {
    const double t = units::hbar2_over_2m0_eVnm2;
    const double k = std::sqrt(mw * E / t);
    const double kap = std::sqrt(mb * (V - E) / t);
    return (k / mw) * std::sin(k * half_L) - (kap / mb) * std::cos(k * half_L);
}

inline double matching_odd(double E, double V, double half_L, double mw, double mb) {
    const double t = units::hbar2_over_2m0_eVnm2;
    const double k = std::sqrt(mw * E / t);
    const double kap = std::sqrt(mb * (V - E) / t);
    return (k / mw) * std::cos(k * half_L) + (kap / mb) * std::sin(k * half_L);
}

} // namespace detail

// All bound states of the finite well. well_depth in meV, width in nm,
// masses in units of m0. Zero states is a valid result.
inline std::vector<ElectronZState> solve_single_band(double well_depth_meV,
                                                     double well_width_nm,
                                                     double m_well, double m_barrier,
                                                     const ZGrid& grid = {}) {
    if (!(well_depth_meV > 0) || !(well_width_nm > 0) || !(m_well > 0) || !(m_barrier > 0))
        throw std::invalid_argument("solve_single_band: inputs must be positive");

    const double V = well_depth_meV * 1e-3;
    const double half_L = 0.5 * well_width_nm;
    const double t = units::hbar2_over_2m0_eVnm2;

    std::vector<ElectronZState> states;
    for (int parity = 0; parity < 2; ++parity) {
        const bool even = (parity == 0);
        auto f = [&](double E) {
            return even ? detail::matching_even(E, V, half_L, m_well, m_barrier)
                        : detail::matching_odd(E, V, half_L, m_well, m_barrier);
        };
        const int nscan = 4000;
        const double Elo = V * 1e-9, Ehi = V * (1.0 - 1e-9);
        double prevE = Elo, prevF = f(Elo);
        for (int i = 1; i <= nscan; ++i) {
            const double E = Elo + (Ehi - Elo) * i / nscan;
            const double F = f(E);
            if (prevF == 0.0 || prevF * F < 0.0) {
                double a = prevE, b = E, fa = prevF;
                for (int it = 0; it < 100 && b - a > 1e-15; ++it) {
                    const double m = 0.5 * (a + b), fm = f(m);
                    if (fa * fm <= 0.0) b = m; else { a = m; fa = fm; }
                }
                ElectronZState s;
                s.even = even;
                s.energy = 0.5 * (a + b);
                s.k_well = std::sqrt(m_well * s.energy / t);
                s.kappa = std::sqrt(m_barrier * (V - s.energy) / t);
                s.half_width = half_L;
                states.push_back(s);
            }
            prevE = E;
            prevF = F;
        }
    }

    std::sort(states.begin(), states.end(),
              [](const auto& a, const auto& b) { return a.energy < b.energy; });

    for (std::size_t i = 0; i < states.size(); ++i) {
        auto& s = states[i];
        s.d = static_cast<int>(i) + 1;
        const double kL = s.k_well * well_width_nm;
        // Interior integral of cos^2/sin^2 plus the two exponential tails.
        const double interior = s.even
            ? half_L + std::sin(kL) / (2.0 * s.k_well)
            : half_L - std::sin(kL) / (2.0 * s.k_well);
        const double edge = s.even ? std::cos(s.k_well * half_L) : std::sin(s.k_well * half_L);
        const double norm2 = interior + edge * edge / s.kappa;
        s.amp_well = 1.0 / std::sqrt(norm2);
        s.amp_barrier = s.amp_well * edge; // continuity at |z| = L/2

        s.envelope.resize(grid.n);
        for (int j = 0; j < grid.n; ++j) s.envelope[j] = s.value(grid.z(j));
    }
    return states;
}

} // namespace dotcav
