#include "nsk/random_field.hpp"

#include <cmath>
#include <vector>

namespace nsk {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ScalarField band_limited_random(const Grid& g, int max_mode, std::uint64_t seed) {
    DeterministicRng rng(seed);
    struct Mode {
        int mx, my;
        double c, s; // cos and sin coefficients
    };
    std::vector<Mode> modes;
    if (g.dim() == 1) {
        for (int m = 1; m <= max_mode; ++m)
            modes.push_back({m, 0, rng.next_symmetric(), rng.next_symmetric()});
    } else {
        for (int my = -max_mode; my <= max_mode; ++my)
            for (int mx = 0; mx <= max_mode; ++mx) {
                if (mx == 0 && my <= 0) continue; // one per conjugate pair
                modes.push_back({mx, my, rng.next_symmetric(), rng.next_symmetric()});
            }
    }
    const double k0 = 2.0 * kPi / g.length();
    ScalarField out = ScalarField::sample(g, [&](double x, double y) {
        double v = 0.0;
        for (const Mode& m : modes) {
            double phase = k0 * (m.mx * x + m.my * y);
            v += m.c * std::cos(phase) + m.s * std::sin(phase);
        }
        return v;
    });
    double peak = out.v.abs().maxCoeff();
    if (peak > 0.0) out.v /= peak;
    return out;
}

} // namespace nsk
