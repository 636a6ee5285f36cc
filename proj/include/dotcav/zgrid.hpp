#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dotcav {

// Uniform sampling grid along the growth (z) axis, centred on the well.
struct ZGrid {
    double zmin = -20.0; // nm
    double zmax = 20.0;  // nm
    int n = 2048;

    double dz() const { return (zmax - zmin) / (n - 1); }
    double z(int i) const { return zmin + i * dz(); }

    std::vector<double> points() const {
        std::vector<double> p(n);
        for (int i = 0; i < n; ++i) p[i] = z(i);
        return p;
    }

    void check() const {
        if (n < 16 || !(zmax > zmin)) throw std::invalid_argument("bad ZGrid");
    }
};

// Trapezoid weight for index i on a uniform grid.
inline double trapezoid_weight(const ZGrid& g, int i) {
    return (i == 0 || i == g.n - 1) ? 0.5 * g.dz() : g.dz();
}

} // namespace dotcav
