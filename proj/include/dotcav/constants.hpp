// Physical constants (CODATA 2018) and the derived combinations used
// throughout the pipeline. Internal unit system for the quantum-mechanical
// stages: energies in eV, lengths in nm. SI values are kept alongside for
// the cavity-QED stage, which works in rad/s.
#pragma once

namespace dotcav {

struct PhysicalConstants {
    double hbar    = 1.054571817e-34;   // J s
    double e_charge = 1.602176634e-19;  // C
    double m0      = 9.1093837015e-31;  // kg
    double eps0    = 8.8541878128e-12;  // F/m
    double c_light = 2.99792458e8;      // m/s
    double debye   = 3.33564095198e-30; // C m  (1e-21 / c)
};

inline constexpr PhysicalConstants kConst{};

namespace units {

// hbar^2 / (2 m0) expressed in eV nm^2; the kinetic prefactor of every
// effective-mass and Luttinger term.
inline constexpr double hbar2_over_2m0_eVnm2 =
    kConst.hbar * kConst.hbar / (2.0 * kConst.m0 * kConst.e_charge) * 1e18;

// e^2 / (4 pi eps0) in eV nm: Coulomb kernel prefactor.
inline constexpr double coulomb_eVnm = 1.4399645478425668;

// h c in eV nm: photon wavelength <-> energy.
inline constexpr double hc_eVnm = 1239.8419843320028;

// 1 eV in rad/s: E/hbar.
inline constexpr double eV_to_rad_per_s = kConst.e_charge / kConst.hbar;

inline constexpr double two_pi = 6.283185307179586476925286766559;

} // namespace units

} // namespace dotcav
