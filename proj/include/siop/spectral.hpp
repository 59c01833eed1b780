#pragma once

#include "siop/fft.hpp"
#include "siop/grid.hpp"

namespace siop {

enum class Wirtinger { dz, dzbar };

/// Fourier-multiplier Wirtinger derivative on the periodic grid.
/// With kappa = xi_x + i*xi_y, the symbols are i*conj(kappa)/2 for d/dz
/// and i*kappa/2 for d/dzbar. Exact on band-limited fields.
inline Field spectral_derivative(const Field& u, Wirtinger which) {
    const int n = u.n();
    const double l = u.l();
    Field out = u;
    fft::forward2d(n, out.values().data());
    for (int j = 0; j < n; ++j) {
        const double xi_y = fft::wavenumber(j, n, l);
        for (int k = 0; k < n; ++k) {
            const double xi_x = fft::wavenumber(k, n, l);
            const cplx kappa(xi_x, xi_y);
            const cplx sym = (which == Wirtinger::dz)
                                 ? cplx(0.0, 0.5) * std::conj(kappa)
                                 : cplx(0.0, 0.5) * kappa;
            out.at(j, k) *= sym;
        }
    }
    fft::inverse2d(n, out.values().data());
    return out;
}

} // namespace siop
