// Bessel functions of integer order and their positive zeros.
// Zeros are bracketed from McMahon's expansion plus the interlacing
// property and polished by bisection to ~1e-13 relative.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dotcav {

inline double bessel_j(int n, double x) {
    return std::cyl_bessel_j(static_cast<double>(n), x);
}

inline double bessel_j_deriv(int n, double x) {
    if (n == 0) return -std::cyl_bessel_j(1.0, x);
    return 0.5 * (std::cyl_bessel_j(n - 1.0, x) - std::cyl_bessel_j(n + 1.0, x));
}

namespace detail {

// McMahon asymptotic estimate of the nu-th zero of J_n.
inline double mcmahon_zero(int n, int nu) {
    const double beta = (nu + 0.5 * n - 0.25) * M_PI;
    const double mu = 4.0 * n * n;
    const double b = beta;
    return b - (mu - 1.0) / (8.0 * b)
             - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * std::pow(8.0 * b, 3));
}

} // namespace detail

// nu-th positive zero of J_n (nu >= 1).
inline double bessel_zero(int n, int nu) {
    if (n < 0 || nu < 1) throw std::invalid_argument("bessel_zero: need n >= 0, nu >= 1");

    double guess = detail::mcmahon_zero(n, nu);
    // For small n the estimate is already within a fraction of the spacing;
    // widen the bracket until a sign change is found.
    double half = 0.5;
    double lo = std::max(guess - half, 1e-8);
    double hi = guess + half;
    double flo = bessel_j(n, lo), fhi = bessel_j(n, hi);
    int guard = 0;
    while (flo * fhi > 0.0) {
        half *= 1.6;
        lo = std::max(guess - half, 1e-8);
        hi = guess + half;
        flo = bessel_j(n, lo);
        fhi = bessel_j(n, hi);
        if (++guard > 30) throw std::runtime_error("bessel_zero: bracketing failed");
    }

    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = bessel_j(n, mid);
        if (flo * fm <= 0.0) { hi = mid; } else { lo = mid; flo = fm; }
    }
    // One Newton step sharpens the bisection result to full precision.
    double x = 0.5 * (lo + hi);
    const double d = bessel_j_deriv(n, x);
    if (d != 0.0) x -= bessel_j(n, x) / d;
    return x;
}

// First `count` zeros of J_n.
inline std::vector<double> bessel_zeros(int n, int count) {
    std::vector<double> z(count);
    for (int nu = 1; nu <= count; ++nu) z[nu - 1] = bessel_zero(n, nu);
    return z;
}

} // namespace dotcav
