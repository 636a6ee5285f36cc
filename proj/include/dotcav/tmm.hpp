// Companion-matrix transfer-matrix method for hole bound states of a
// layered stack. The second-order three-band envelope equation is reduced
// to a first-order six-component system Phi' = Lambda Phi, solved per layer
// by eigendecomposition, and stitched across interfaces with the
// boundary-condition matrix B. Bound states are roots of det T22(E).
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "dotcav/luttinger.hpp"
#include "dotcav/zgrid.hpp"

namespace dotcav {

using Mat6cd = Eigen::Matrix<std::complex<double>, 6, 6>;
using Vec6cd = Eigen::Matrix<std::complex<double>, 6, 1>;

// Raised when the companion eigenproblem is too ill-conditioned at a given
// energy; the sweep responds by nudging the energy.
struct DegenerateEnergyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompanionSystem {
    Mat6cd lambda; // companion matrix
    Mat6cd P;      // eigenvector columns, forward modes first
    Vec6cd d;      // eigenvalues; [0..2] forward (Re > 0), [3..5] backward
};

// Companion form of H2 kz^2 + H1 kz + H0 = E with kz -> -i d/dz.
inline CompanionSystem companion(const BlockCoefficients& blk, double E_eV,
                                 double cond_limit = 1e12) {
    CompanionSystem sys;
    const Eigen::Matrix3cd H2inv = blk.H2.inverse();
    sys.lambda.setZero();
    sys.lambda.block<3, 3>(0, 3) = Eigen::Matrix3cd::Identity();
    sys.lambda.block<3, 3>(3, 0) =
        H2inv * (blk.H0 - E_eV * Eigen::Matrix3cd::Identity());
    sys.lambda.block<3, 3>(3, 3) = std::complex<double>(0, -1) * H2inv * blk.H1;

    Eigen::ComplexEigenSolver<Mat6cd> es(sys.lambda);
    if (es.info() != Eigen::Success)
        throw DegenerateEnergyError("companion: eigensolver failed");

    // Forward = positive real part; near-zero real parts classify by Im.
    std::array<int, 6> idx{0, 1, 2, 3, 4, 5};
    auto forward = [&](int i) {
        const auto v = es.eigenvalues()(i);
        if (std::abs(v.real()) > 1e-9) return v.real() > 0;
        return v.imag() > 0;
    };
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        const bool fa = forward(a), fb = forward(b);
        if (fa != fb) return fa;
        return es.eigenvalues()(a).real() > es.eigenvalues()(b).real();
    });
    int nfwd = 0;
    for (int i = 0; i < 6; ++i) nfwd += forward(i) ? 1 : 0;
    if (nfwd != 3)
        throw DegenerateEnergyError("companion: forward/backward split is not 3+3");

    for (int i = 0; i < 6; ++i) {
        sys.d(i) = es.eigenvalues()(idx[i]);
        sys.P.col(i) = es.eigenvectors().col(idx[i]);
    }

    Eigen::JacobiSVD<Mat6cd> svd(sys.P);
    const double cond =
        svd.singularValues()(0) / std::max(svd.singularValues()(5), 1e-300);
    if (!(cond < cond_limit))
        throw DegenerateEnergyError("companion: defective eigenvector matrix");
    return sys;
}

enum class SpuriousMode { clamp, eliminate };

// Clamp spurious large-|Re| eigenvalues; eigenvectors are untouched.
inline CompanionSystem clamp_spurious(CompanionSystem sys, double kappa_max) {
    if (!(kappa_max > 0)) throw std::invalid_argument("kappa_max must be > 0");
    for (int i = 0; i < 6; ++i) {
        const double re = sys.d(i).real();
        if (std::abs(re) > kappa_max)
            sys.d(i) = std::complex<double>(re > 0 ? kappa_max : -kappa_max,
                                            sys.d(i).imag());
    }
    return sys;
}

// Boundary-condition matrix: continuity of the envelope and of the
// multiband probability current -iH1 F - H2 F'.
inline Mat6cd boundary_matrix(const BlockCoefficients& blk) {
    Mat6cd B;
    B.setZero();
    B.block<3, 3>(0, 0) = Eigen::Matrix3cd::Identity();
    B.block<3, 3>(3, 0) = std::complex<double>(0, -1) * blk.H1;
    B.block<3, 3>(3, 3) = -blk.H2;
    return B;
}

struct TransferMatrix {
    Mat6cd T;
    Eigen::Matrix3cd T11() const { return T.block<3, 3>(0, 0); }
    Eigen::Matrix3cd T12() const { return T.block<3, 3>(0, 3); }
    Eigen::Matrix3cd T21() const { return T.block<3, 3>(3, 0); }
    Eigen::Matrix3cd T22() const { return T.block<3, 3>(3, 3); }
};

struct TmmOptions {
    double kappa_max = 10.0; // 1/nm
    SpuriousMode spurious = SpuriousMode::clamp;
    BlockSign sign = BlockSign::plus;
    double cond_limit = 1e12;
};

namespace detail {

struct LayerSolution {
    CompanionSystem sys;
    Mat6cd B;
    double z_left = 0; // reference coordinate (left interface; outer layers
                       // reference their single interface)
    double dz = 0;     // 0 for outer layers
};

inline std::vector<LayerSolution> solve_layers(const LayerStack& stack, double E_eV,
                                               const TmmOptions& opt) {
    stack.check();
    const int l = static_cast<int>(stack.layers.size());
    std::vector<LayerSolution> sol(l);
    // Interface coordinates, well region centred on z = 0.
    double interior = 0;
    for (int i = 1; i < l - 1; ++i) interior += stack.layers[i].thickness_nm;
    double zc = -0.5 * interior;
    for (int i = 0; i < l; ++i) {
        auto blk = build_block(stack.layers[i], stack.k_par, stack.phi, opt.sign);
        auto sys = companion(blk, E_eV, opt.cond_limit);
        sys = clamp_spurious(sys, opt.kappa_max);
        sol[i].sys = sys;
        sol[i].B = boundary_matrix(blk);
        sol[i].z_left = zc;
        if (i >= 1 && i < l - 1) {
            sol[i].dz = stack.layers[i].thickness_nm;
            zc += sol[i].dz;
        }
    }
    return sol;
}

// exp(sign * D * dz) as a diagonal matrix. When `normalize` is set the
// result is divided by a positive scalar so repeated products cannot
// overflow; that rescaling preserves the roots and null space of T22 but
// must be off when amplitudes of adjacent layers are compared directly.
// In eliminate mode the spurious modes transfer nothing at all.
inline Mat6cd propagator(const CompanionSystem& sys, double dz, double sign,
                         double kappa_max, SpuriousMode mode, bool normalize) {
    Vec6cd e;
    double max_re = 0.0;
    if (normalize) {
        max_re = -1e300;
        for (int i = 0; i < 6; ++i)
            max_re = std::max(max_re, sign * sys.d(i).real() * dz);
    }
    for (int i = 0; i < 6; ++i) {
        if (mode == SpuriousMode::eliminate && std::abs(sys.d(i).real()) >= kappa_max) {
            e(i) = 0.0;
            continue;
        }
        e(i) = std::exp(sign * sys.d(i) * dz - max_re);
    }
    return e.asDiagonal();
}

} // namespace detail

// Transfer matrix mapping mode amplitudes at the last interface (in the last
// layer's eigenbasis) to amplitudes at the first interface (first layer's
// basis). With forward modes ordered first, a bound state feeds only the
// decaying amplitudes b at the far side (a = 0) and requires T22 b = 0 so
// nothing grows into the near barrier.
inline TransferMatrix total_transfer(const LayerStack& stack, double E_eV,
                                     const TmmOptions& opt = {}) {
    const auto sol = detail::solve_layers(stack, E_eV, opt);
    const int l = static_cast<int>(sol.size());
    TransferMatrix tm;
    tm.T.setIdentity();
    for (int j = l - 2; j >= 0; --j) {
        // Q_j = exp(-D_j dz_j) P_j^-1 B_j^-1 B_{j+1} P_{j+1} Q_{j+1}
        Mat6cd cross = sol[j].sys.P.partialPivLu().solve(
            sol[j].B.partialPivLu().solve(sol[j + 1].B * sol[j + 1].sys.P));
        Mat6cd prop = detail::propagator(sol[j].sys, sol[j].dz, -1.0, opt.kappa_max,
                                         opt.spurious, /*normalize=*/true);
        tm.T = prop * cross * tm.T;
    }
    return tm;
}

struct HoleBoundState {
    int b = 0;         // 1-based, sorted by energy
    double energy = 0; // eV above the well valence-band edge
    // envelopes[t], t = px_up, px_dn, py_up, py_dn, pz_up, pz_dn
    std::array<std::vector<std::complex<double>>, 6> envelopes;
    ZGrid grid;
    bool degenerate_warning = false;

    double norm_squared() const {
        double s = 0;
        for (const auto& env : envelopes)
            for (int i = 0; i < grid.n; ++i)
                s += std::norm(env[i]) * trapezoid_weight(grid, i);
        return s;
    }
};

struct BoundStateOptions {
    TmmOptions tmm{};
    int n_sweep = 2000;
    double bisect_tol_eV = 1e-12; // contract asks <= 1 ueV; go to the floor
    double det_dip_factor = 1e-3;
    double degeneracy_ratio = 1e-6;
    ZGrid grid{};
};

namespace detail {

// u_i = |J,mJ> in the orbital basis (px_up, px_dn, py_up, py_dn, pz_up, pz_dn),
// then the axial block combinations w_i with the standard phase choices.
// Columns of the returned 6x3 matrix are the plus-block basis vectors.
inline Eigen::Matrix<std::complex<double>, 6, 3> plus_block_basis(double phi) {
    using C = std::complex<double>;
    const C I(0, 1);
    Eigen::Matrix<C, 6, 6> u;
    u.setZero();
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
    const double r23 = std::sqrt(2.0 / 3.0);
    // |3/2,+3/2>
    u(0, 0) = -1.0 / r2; u(2, 0) = -I / r2;
    // |3/2,+1/2>
    u(1, 1) = -1.0 / r6; u(3, 1) = -I / r6; u(4, 1) = r23;
    // |3/2,-1/2>
    u(0, 2) = 1.0 / r6; u(2, 2) = -I / r6; u(5, 2) = r23;
    // |3/2,-3/2>
    u(1, 3) = 1.0 / r2; u(3, 3) = -I / r2;
    // |1/2,+1/2>
    u(1, 4) = -1.0 / r3; u(3, 4) = -I / r3; u(4, 4) = -1.0 / r3;
    // |1/2,-1/2>
    u(0, 5) = -1.0 / r3; u(2, 5) = I / r3; u(5, 5) = 1.0 / r3;

    const C alpha = std::exp(I * (0.75 * M_PI + 1.5 * phi));
    const C beta = std::exp(I * (0.25 * M_PI + 0.5 * phi));
    Eigen::Matrix<C, 6, 3> w;
    w.col(0) = (std::conj(alpha) * u.col(0) - alpha * u.col(3)) / r2;
    w.col(1) = (std::conj(beta) * u.col(1) + beta * u.col(2)) / r2;
    w.col(2) = (std::conj(beta) * u.col(4) + beta * u.col(5)) / r2;
    return w;
}

} // namespace detail

// Sweep det T22 over the energy window, bisect the sign changes of its real
// part, verify a genuine |det| dip at each root, and reconstruct, symmetrize
// and normalize the six orbital envelopes of every bound state.
inline std::vector<HoleBoundState> find_bound_states(const LayerStack& stack,
                                                     double E_lo_eV, double E_hi_eV,
                                                     const BoundStateOptions& opt = {}) {
    stack.check();
    opt.grid.check();
    if (!(E_hi_eV > E_lo_eV)) throw std::invalid_argument("empty energy window");
    const int n = std::max(opt.n_sweep, 100);

    auto det22 = [&](double E) -> std::complex<double> {
        for (int attempt = 0;; ++attempt) {
            try {
                return total_transfer(stack, E, opt.tmm).T22().determinant();
            } catch (const DegenerateEnergyError&) {
                if (attempt >= 4) throw;
                E += (E_hi_eV - E_lo_eV) * 1e-9 * (attempt + 1);
            }
        }
    };

    std::vector<double> Es(n + 1), abs_det(n + 1);
    std::vector<std::complex<double>> dets(n + 1);
    for (int i = 0; i <= n; ++i) {
        Es[i] = E_lo_eV + (E_hi_eV - E_lo_eV) * i / n;
        dets[i] = det22(Es[i]);
        abs_det[i] = std::abs(dets[i]);
    }

    std::vector<double> roots;
    for (int i = 0; i < n; ++i) {
        if (!(dets[i].real() == 0.0) && dets[i].real() * dets[i + 1].real() >= 0.0)
            continue;
        double a = Es[i], b = Es[i + 1];
        double fa = dets[i].real();
        while (b - a > opt.bisect_tol_eV) {
            const double m = 0.5 * (a + b);
            const double fm = det22(m).real();
            if (fa * fm <= 0.0) b = m; else { a = m; fa = fm; }
        }
        const double root = 0.5 * (a + b);
        // Reject sign flips of Re(det) that are not actual zeros of |det|.
        std::vector<double> nbhd;
        for (int k = std::max(0, i - 5); k <= std::min(n, i + 5); ++k)
            nbhd.push_back(abs_det[k]);
        std::nth_element(nbhd.begin(), nbhd.begin() + nbhd.size() / 2, nbhd.end());
        const double med = nbhd[nbhd.size() / 2];
        if (std::abs(det22(root)) > opt.det_dip_factor * med) continue;
        roots.push_back(root);
    }

    std::vector<HoleBoundState> states;
    for (double E : roots) {
        const auto sol = detail::solve_layers(stack, E, opt.tmm);
        const int l = static_cast<int>(sol.size());
        const auto tm = total_transfer(stack, E, opt.tmm);

        Eigen::JacobiSVD<Eigen::Matrix3cd> svd(tm.T22(), Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        const bool degenerate =
            sv(1) < opt.degeneracy_ratio * std::max(sv(0), 1e-300);
        Eigen::Vector3cd b_in = svd.matrixV().col(2);

        // Amplitudes per layer, marching from the far (last) interface back.
        // Unnormalized propagators keep adjacent layers mutually consistent;
        // one common rescale afterwards guards against overflow.
        std::vector<Vec6cd> Q(l);
        Q[l - 1].setZero();
        Q[l - 1].tail<3>() = b_in;
        for (int j = l - 2; j >= 0; --j) {
            Mat6cd cross = sol[j].sys.P.partialPivLu().solve(
                sol[j].B.partialPivLu().solve(sol[j + 1].B * sol[j + 1].sys.P));
            Mat6cd prop = detail::propagator(sol[j].sys, sol[j].dz, -1.0,
                                             opt.tmm.kappa_max, opt.tmm.spurious,
                                             /*normalize=*/false);
            Q[j] = prop * cross * Q[j + 1];
        }
        double qmax = 0;
        for (const auto& q : Q) qmax = std::max(qmax, q.cwiseAbs().maxCoeff());
        if (qmax > 0)
            for (auto& q : Q) q /= qmax;
        // Growing residuals in the outer layers are numerical, not physical.
        Q[0].tail<3>().setZero();

        const auto w = detail::plus_block_basis(stack.phi);
        HoleBoundState st;
        st.grid = opt.grid;
        st.energy = E;
        st.degenerate_warning = degenerate;
        for (auto& env : st.envelopes) env.assign(opt.grid.n, {0, 0});

        const double z_first = sol[0].z_left;
        const double z_last = sol[l - 1].z_left;
        for (int i = 0; i < opt.grid.n; ++i) {
            const double z = opt.grid.z(i);
            int j;
            if (z <= z_first) j = 0;
            else if (z >= z_last) j = l - 1;
            else {
                j = 1;
                while (j < l - 1 && z > sol[j].z_left + sol[j].dz) ++j;
            }
            Vec6cd q = Q[j];
            if (j == l - 1) q.head<3>().setZero();
            Vec6cd phase;
            for (int k = 0; k < 6; ++k)
                phase(k) = std::exp(sol[j].sys.d(k) * (z - sol[j].z_left)) * q(k);
            const Eigen::Vector3cd F = (sol[j].sys.P * phase).head<3>();
            const Eigen::Matrix<std::complex<double>, 6, 1> spinor = w * F;
            for (int t = 0; t < 6; ++t) st.envelopes[t][i] = spinor(t);
        }

        // Phase rotation that purifies parity about z = 0: for a state obeying
        // Z(-z) = c Z*(z), dividing by sqrt(c) makes real parts even and
        // imaginary parts odd per component.
        std::complex<double> c = 0;
        double nrm = 0;
        for (int t = 0; t < 6; ++t)
            for (int i = 0; i < opt.grid.n; ++i) {
                const int ir = opt.grid.n - 1 - i;
                c += st.envelopes[t][ir] * st.envelopes[t][i] * trapezoid_weight(opt.grid, i);
                nrm += std::norm(st.envelopes[t][i]) * trapezoid_weight(opt.grid, i);
            }
        if (std::abs(c) > 0.5 * nrm) {
            const std::complex<double> rot = std::exp(std::complex<double>(
                0, -0.5 * std::arg(c)));
            for (auto& env : st.envelopes)
                for (auto& v : env) v *= rot;
        }

        const double scale = 1.0 / std::sqrt(st.norm_squared());
        for (auto& env : st.envelopes)
            for (auto& v : env) v *= scale;

        states.push_back(std::move(st));
    }

    std::sort(states.begin(), states.end(),
              [](const auto& a, const auto& b) { return a.energy < b.energy; });
    for (std::size_t i = 0; i < states.size(); ++i)
        states[i].b = static_cast<int>(i) + 1;
    return states;
}

} // namespace dotcav
