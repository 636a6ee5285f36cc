// Block-diagonalized 6x6 Luttinger-Kohn valence Hamiltonian for a layered
// stack, decomposed as H(kz) = H2 kz^2 + H1 kz + H0 per 3x3 block.
// Hole energies are positive measured from the well valence-band edge;
// the layer band_edge_shift is the hole confinement potential.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "dotcav/constants.hpp"
#include "dotcav/materials.hpp"

namespace dotcav {

struct StrainTensor {
    double exx = 0, eyy = 0, ezz = 0;
    double ezx = 0, eyz = 0, exy = 0;
};

struct Layer {
    MaterialParams material;
    double thickness_nm = 0;      // ignored for the outer (semi-infinite) layers
    StrainTensor strain{};
    double band_edge_shift_eV = 0; // V in the block Hamiltonian
};

struct LayerStack {
    std::vector<Layer> layers; // barrier, well(s), barrier
    double k_par = 0;          // in-plane wavevector modulus, 1/nm
    double phi = 0;            // in-plane angle, rad

    void check() const {
        if (layers.size() < 3)
            throw std::invalid_argument("LayerStack needs at least 3 layers");
        for (std::size_t i = 1; i + 1 < layers.size(); ++i)
            if (!(layers[i].thickness_nm > 0))
                throw std::invalid_argument("interior layer thickness must be > 0");
    }
};

enum class BlockSign { plus, minus };

struct BlockCoefficients {
    Eigen::Matrix3cd H2, H1, H0;
    BlockSign sign = BlockSign::plus;
};

// Coefficients of the kz expansion for one layer. Within a constant-parameter
// layer the commutator term of C vanishes and the symmetrized kz products in
// S and Sigma reduce to plain products, so S and Sigma share the same linear
// kz coefficient; operator ordering survives only through how H1 enters the
// boundary-condition matrix.
inline BlockCoefficients build_block(const Layer& layer, double k_par, double phi,
                                     BlockSign sign) {
    using std::complex;
    const MaterialParams& m = layer.material;
    const double t = units::hbar2_over_2m0_eVnm2;
    const double s = (sign == BlockSign::plus) ? 1.0 : -1.0;
    const complex<double> I(0.0, 1.0);

    const double g1 = m.gamma1, g2 = m.gamma2, g3 = m.gamma3;
    const double gbar = 0.5 * (g2 + g3);
    const double mu = 0.5 * (g3 - g2);
    const double delta = (1.0 + g1 + g2 - 3.0 * g3) / 9.0;
    const double sigma = gbar - 0.5 * delta;
    const double pi_p = mu + 1.5 * delta;
    const double gphi = std::sqrt(gbar * gbar + mu * mu - 2.0 * gbar * mu * std::cos(phi));

    const double kp2 = k_par * k_par;
    const double R = -std::sqrt(3.0) * t * gphi * kp2;
    // kz coefficient shared by S and Sigma inside a uniform layer;
    // (sigma - delta) + pi = gamma3.
    const double s1 = 2.0 * std::sqrt(3.0) * t * k_par * ((sigma - delta) + pi_p);

    // Pikus-Bir terms; S_eps (and with it the shear response along z) is
    // dropped for the planar dot where e_zx ~ e_yz.
    const StrainTensor& e = layer.strain;
    const double P_eps = -m.a_v * (e.exx + e.eyy + e.ezz);
    const double Q_eps = -0.5 * m.b_def * (e.exx + e.eyy - 2.0 * e.ezz);
    const complex<double> R_eps =
        0.5 * std::sqrt(3.0) * m.b_def * (e.exx - e.eyy) - I * m.d_def * e.exy;

    const double V = layer.band_edge_shift_eV;
    const complex<double> Rtot = R + R_eps;

    BlockCoefficients blk;
    blk.sign = sign;

    Eigen::Matrix3cd& H2 = blk.H2;
    Eigen::Matrix3cd& H1 = blk.H1;
    Eigen::Matrix3cd& H0 = blk.H0;
    H2.setZero();
    H1.setZero();
    H0.setZero();

    H2(0, 0) = t * (g1 - 2.0 * g2);
    H2(1, 1) = t * (g1 + 2.0 * g2);
    H2(2, 2) = t * g1;
    H2(1, 2) = H2(2, 1) = -2.0 * std::sqrt(2.0) * t * g2;

    H1(0, 1) = -s * I * s1;
    H1(1, 0) = s * I * s1;
    H1(0, 2) = s * I * s1 / std::sqrt(2.0);
    H1(2, 0) = -s * I * s1 / std::sqrt(2.0);
    H1(1, 2) = -s * I * std::sqrt(1.5) * s1;
    H1(2, 1) = s * I * std::sqrt(1.5) * s1;

    H0(0, 0) = t * (g1 + g2) * kp2 + V + P_eps + Q_eps;
    H0(1, 1) = t * (g1 - g2) * kp2 + V + P_eps - Q_eps;
    H0(2, 2) = t * g1 * kp2 + m.delta_so + V + P_eps;
    H0(0, 1) = Rtot;
    H0(1, 0) = std::conj(Rtot);
    H0(0, 2) = std::sqrt(2.0) * Rtot;
    H0(2, 0) = std::sqrt(2.0) * std::conj(Rtot);
    H0(1, 2) = H0(2, 1) = std::sqrt(2.0) * (t * g2 * kp2 + Q_eps);

    if (sign == BlockSign::minus) {
        // H- = conj(H+); H2 and the strains are real, H1 flips via s above,
        // but R_eps can be complex, so conjugate H0 explicitly.
        H0 = H0.conjugate().eval();
    }

    if (std::abs(H2.determinant()) < 1e-12)
        throw std::invalid_argument("build_block: singular H2 (gamma1 too close to 2*gamma2)");
    return blk;
}

} // namespace dotcav
