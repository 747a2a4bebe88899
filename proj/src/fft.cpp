#include "nsk/fft.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace nsk {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct Plan {
    int n = 0;
    std::vector<int> rev;          // bit-reversal permutation
    std::vector<Complex> twiddle;  // exp(-2 pi i k / n), k < n/2

    explicit Plan(int n) : n(n), rev(n), twiddle(n / 2) {
        int log2n = 0;
        while ((1 << log2n) < n) ++log2n;
        for (int i = 0; i < n; ++i) {
            int r = 0;
            for (int b = 0; b < log2n; ++b)
                if (i & (1 << b)) r |= 1 << (log2n - 1 - b);
            rev[i] = r;
        }
        for (int k = 0; k < n / 2; ++k) {
            double a = -2.0 * kPi * k / n;
            twiddle[k] = Complex(std::cos(a), std::sin(a));
        }
    }
};

const Plan& plan_for(int n) {
    thread_local std::map<int, Plan> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, Plan(n)).first;
    return it->second;
}

} // namespace

namespace fft {

void transform_pow2(Complex* a, int n, bool inverse) {
    if (n == 1) return;
    const Plan& p = plan_for(n);
    for (int i = 0; i < n; ++i) {
        int j = p.rev[i];
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        int half = len / 2;
        int step = n / len;
        for (int base = 0; base < n; base += len) {
            for (int k = 0; k < half; ++k) {
                Complex w = p.twiddle[k * step];
                if (inverse) w = std::conj(w);
                Complex u = a[base + k];
                Complex t = a[base + k + half] * w;
                a[base + k] = u + t;
                a[base + k + half] = u - t;
            }
        }
    }
    if (inverse) {
        double s = 1.0 / n;
        for (int i = 0; i < n; ++i) a[i] *= s;
    }
}

} // namespace fft

Eigen::ArrayXcd forward_transform(const Grid& g, const Eigen::ArrayXd& values) {
    const int n = g.n();
    Eigen::ArrayXcd spec(g.size());
    for (int i = 0; i < g.size(); ++i) spec[i] = Complex(values[i], 0.0);
    if (g.dim() == 1) {
        fft::transform_pow2(spec.data(), n, false);
        return spec;
    }
    // rows (x direction, contiguous)
    for (int iy = 0; iy < n; ++iy)
        fft::transform_pow2(spec.data() + iy * n, n, false);
    // columns (y direction, strided through scratch)
    thread_local std::vector<Complex> col;
    col.resize(n);
    for (int ix = 0; ix < n; ++ix) {
        for (int iy = 0; iy < n; ++iy) col[iy] = spec[ix + n * iy];
        fft::transform_pow2(col.data(), n, false);
        for (int iy = 0; iy < n; ++iy) spec[ix + n * iy] = col[iy];
    }
    return spec;
}

Eigen::ArrayXd inverse_transform_real(const Grid& g, const Eigen::ArrayXcd& spec) {
    const int n = g.n();
    Eigen::ArrayXcd work = spec;
    if (g.dim() == 1) {
        fft::transform_pow2(work.data(), n, true);
    } else {
        for (int iy = 0; iy < n; ++iy)
            fft::transform_pow2(work.data() + iy * n, n, true);
        thread_local std::vector<Complex> col;
        col.resize(n);
        for (int ix = 0; ix < n; ++ix) {
            for (int iy = 0; iy < n; ++iy) col[iy] = work[ix + n * iy];
            fft::transform_pow2(col.data(), n, true);
            for (int iy = 0; iy < n; ++iy) work[ix + n * iy] = col[iy];
        }
    }
    Eigen::ArrayXd out(g.size());
    for (int i = 0; i < g.size(); ++i) out[i] = work[i].real();
    return out;
}

} // namespace nsk
