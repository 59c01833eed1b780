#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "siop/grid.hpp"

namespace siop {

/// Discrete Hölder-quotient diagnostic: per-scale sup of
/// |u(x)-u(y)| / |x-y|^alpha over sampled axis-aligned pairs.
struct HolderEstimate {
    double alpha = 0.0;
    std::vector<double> scales;     // physical separations h*2^s
    std::vector<double> quotients;  // per-scale sup
    double sup_quotient = 0.0;
};

/// Pairs are (p, p + 2^s * e) for e in {x,y}, restricted to pairs that do
/// not wrap around the torus and, when a mask is given, to pairs whose both
/// endpoints have mask > 1/2. At most ~1e6 pairs are sampled per scale with
/// a deterministic stride.
inline HolderEstimate holder_quotient(const Field& u, double alpha,
                                      const Field* mask = nullptr) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("holder_quotient: alpha must be in (0,1)");
    if (mask) detail::require_same_grid(u, *mask, "holder_quotient");

    const int n = u.n();
    const double h = u.h();
    const int smax = static_cast<int>(std::floor(std::log2(n / 4.0)));

    HolderEstimate est;
    est.alpha = alpha;

    constexpr std::int64_t kMaxPairs = 1000000;
    for (int s = 0; s <= smax; ++s) {
        const int d = 1 << s;
        const double sep = h * d;
        // Two orientations, roughly n*(n-d) admissible pairs each.
        const std::int64_t avail = 2ll * n * (n - d);
        int stride = 1;
        while (avail / (static_cast<std::int64_t>(stride) * stride) > kMaxPairs)
            ++stride;

        double q = 0.0;
        auto consider = [&](int j0, int k0, int j1, int k1) {
            if (mask && (mask->at(j0, k0).real() <= 0.5 ||
                         mask->at(j1, k1).real() <= 0.5))
                return;
            const double diff = std::abs(u.at(j0, k0) - u.at(j1, k1));
            if (diff > q) q = diff;
        };
        for (int j = 0; j < n; j += stride) {
            for (int k = 0; k + d < n; k += stride) consider(j, k, j, k + d);
        }
        for (int j = 0; j + d < n; j += stride) {
            for (int k = 0; k < n; k += stride) consider(j, k, j + d, k);
        }
        est.scales.push_back(sep);
        est.quotients.push_back(q / std::pow(sep, alpha));
    }
    est.sup_quotient = 0.0;
    for (double q : est.quotients) est.sup_quotient = std::max(est.sup_quotient, q);
    return est;
}

} // namespace siop
