#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "siop/fft.hpp"
#include "siop/grid.hpp"

namespace siop {

/// C-infinity bump: exp(1 - 1/(1 - r^2)) for r = |z - center|/radius < 1,
/// 0 outside. Equals 1 at the center.
inline double bump(cplx z, double radius = 1.0, cplx center = {}) {
    const double r2 = std::norm((z - center) / radius);
    if (r2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - r2));
}

/// Smooth radial cutoff: 1 for |z| <= r0, 0 for |z| >= r1, C^inf in between.
inline double radial_cutoff(cplx z, double r0, double r1) {
    const double r = std::abs(z);
    if (r <= r0) return 1.0;
    if (r >= r1) return 0.0;
    auto g = [](double t) { return t <= 0.0 ? 0.0 : std::exp(-1.0 / t); };
    const double t = (r - r0) / (r1 - r0);
    return g(1.0 - t) / (g(1.0 - t) + g(t));
}

/// Per-cell iid complex noise, uniform in [-1,1]^2, from a seeded PRNG.
inline Field noise_field(GridSpec spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Field f(spec);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double re = uni(rng);
        const double im = uni(rng);
        f[i] = {re, im};
    }
    return f;
}

/// Smooth compactly supported random field: white noise low-passed by a
/// Gaussian filter in Fourier space, then multiplied by a bump supported in
/// |z - center| < radius. cutoff_frac sets the filter width as a fraction of
/// the Nyquist wavenumber — the filter acts on PHYSICAL wavenumbers, so the
/// sampled function is grid-resolution independent up to the noise draw.
inline Field smooth_random_field(GridSpec spec, std::uint64_t seed,
                                 double radius = 1.0, cplx center = {},
                                 double cutoff_wavenumber = 4.0) {
    const int n = spec.n;
    Field f = noise_field(spec, seed);
    fft::forward2d(n, f.values().data());
    for (int j = 0; j < n; ++j) {
        const double ky = fft::wavenumber(j, n, spec.l);
        for (int k = 0; k < n; ++k) {
            const double kx = fft::wavenumber(k, n, spec.l);
            const double k2 = kx * kx + ky * ky;
            f.at(j, k) *= std::exp(-k2 / (2.0 * cutoff_wavenumber * cutoff_wavenumber));
        }
    }
    fft::inverse2d(n, f.values().data());
    double mx = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) mx = std::max(mx, std::abs(f[i]));
    if (mx == 0.0) mx = 1.0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            f.at(j, k) *= bump(spec.point(j, k), radius, center) / mx;
    return f;
}

/// Same field minus its 180-degree rotation: exactly zero grid mean while
/// keeping compact support (wanted by the isometry and algebra checks).
inline Field zero_mean_random_field(GridSpec spec, std::uint64_t seed,
                                    double radius = 1.0,
                                    double cutoff_wavenumber = 4.0) {
    Field f = smooth_random_field(spec, seed, radius, {}, cutoff_wavenumber);
    const int n = spec.n;
    Field out(spec);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            // -z is on the grid for index (n-j)%n, (n-k)%n
            out.at(j, k) = f.at(j, k) - f.at((n - j) % n, (n - k) % n);
        }
    return out;
}

} // namespace siop
