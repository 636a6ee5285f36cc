// Independent Bessel oracle: power series in long double plus scan-and-bisect
// zero finding. Deliberately avoids std::cyl_bessel_j so it can certify the
// library's Bessel path.
#pragma once

#include <cmath>
#include <vector>

namespace oracle {

inline long double bessel_j_series(int n, long double x) {
    const long double half = 0.5L * x;
    long double term = 1.0L;
    for (int k = 1; k <= n; ++k) term *= half / k; // (x/2)^n / n!
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= -(half * half) / (static_cast<long double>(k) * (k + n));
        sum += term;
        if (std::abs(term) < 1e-24L * (std::abs(sum) + 1e-30L)) break;
    }
    return sum;
}

// nu-th positive zero of J_n by scanning in steps of 0.02 and bisecting.
inline double bessel_zero_bisect(int n, int nu) {
    int found = 0;
    long double x = 1e-6L, f = bessel_j_series(n, x);
    const long double step = 0.02L;
    for (int i = 0; i < 200000; ++i) {
        const long double x2 = x + step;
        const long double f2 = bessel_j_series(n, x2);
        if (f * f2 < 0.0L) {
            ++found;
            if (found == nu) {
                long double a = x, b = x2, fa = f;
                for (int it = 0; it < 200; ++it) {
                    const long double m = 0.5L * (a + b);
                    const long double fm = bessel_j_series(n, m);
                    if (fa * fm <= 0.0L) b = m; else { a = m; fa = fm; }
                }
                return static_cast<double>(0.5L * (a + b));
            }
        }
        x = x2;
        f = f2;
    }
    return -1.0;
}

} // namespace oracle
