// Material parameter database for the GaAs / AlGaAs system.
// Binary endpoint values are tabulated; ternary compositions are produced
// by linear interpolation in the Al mole fraction.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dotcav {

struct MaterialParams {
    double gamma1 = 0;   // Luttinger parameters, dimensionless
    double gamma2 = 0;
    double gamma3 = 0;
    double delta_so = 0; // spin-orbit splitting, eV
    double a_v = 0;      // hydrostatic deformation potential, eV
    double b_def = 0;    // uniaxial deformation potential, eV
    double d_def = 0;    // shear deformation potential, eV
    double eps_r = 0;    // relative permittivity
    double me_eff = 0;   // conduction electron mass, units of m0

    void check() const {
        if (!(gamma1 > gamma2 && gamma2 >= 0.0))
            throw std::invalid_argument("MaterialParams: need gamma1 > gamma2 >= 0");
        if (!(gamma1 > gamma3 && gamma3 >= 0.0))
            throw std::invalid_argument("MaterialParams: need gamma1 > gamma3 >= 0");
        if (!(delta_so > 0.0))
            throw std::invalid_argument("MaterialParams: need delta_so > 0");
        if (!(eps_r > 1.0))
            throw std::invalid_argument("MaterialParams: need eps_r > 1");
    }
};

struct BandOffsets {
    double dEc_meV = 0; // conduction-band barrier
    double dEv_meV = 0; // valence-band barrier

    void check() const {
        if (dEc_meV < 0 || dEv_meV < 0)
            throw std::invalid_argument("BandOffsets must be non-negative");
    }
};

namespace materials {

// gamma1..gamma3, delta_so: tabulated Luttinger parameters.
// a_v, b: Pikus-Bir deformation potentials. The shear potential d is
// carried for completeness but the strain block drops it (planar dot,
// e_zx ~ e_yz and S_eps is ignored).
// Electron masses and the AlAs permittivity are not part of the tabulated
// set in the source data; standard literature values are used and both are
// overridable through the pipeline config.
inline MaterialParams gaas() {
    MaterialParams m;
    m.gamma1 = 6.98;  m.gamma2 = 2.06;  m.gamma3 = 2.93;
    m.delta_so = 0.341;
    m.a_v = -1.116;   m.b_def = -2.0;   m.d_def = -4.8;
    m.eps_r = 13.2;
    m.me_eff = 0.067;
    return m;
}

inline MaterialParams alas() {
    MaterialParams m;
    m.gamma1 = 3.76;  m.gamma2 = 0.82;  m.gamma3 = 1.42;
    m.delta_so = 0.280;
    m.a_v = -2.47;    m.b_def = -2.3;   m.d_def = -3.4;
    m.eps_r = 10.06;
    m.me_eff = 0.15;
    return m;
}

inline MaterialParams lookup(std::string_view name) {
    if (name == "GaAs") return gaas();
    if (name == "AlAs") return alas();
    throw std::invalid_argument("unknown material: " + std::string(name));
}

// Al(x)Ga(1-x)As by linear interpolation between the binary endpoints.
inline MaterialParams interpolate_ternary(double x_al) {
    if (!(x_al >= 0.0 && x_al <= 1.0))
        throw std::invalid_argument("Al fraction out of [0,1]");
    const MaterialParams a = gaas();
    const MaterialParams b = alas();
    auto mix = [x_al](double ga, double al) { return (1.0 - x_al) * ga + x_al * al; };
    MaterialParams m;
    m.gamma1 = mix(a.gamma1, b.gamma1);
    m.gamma2 = mix(a.gamma2, b.gamma2);
    m.gamma3 = mix(a.gamma3, b.gamma3);
    m.delta_so = mix(a.delta_so, b.delta_so);
    m.a_v = mix(a.a_v, b.a_v);
    m.b_def = mix(a.b_def, b.b_def);
    m.d_def = mix(a.d_def, b.d_def);
    m.eps_r = mix(a.eps_r, b.eps_r);
    m.me_eff = mix(a.me_eff, b.me_eff);
    m.check();
    return m;
}

} // namespace materials
} // namespace dotcav
