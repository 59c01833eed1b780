#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace siop {

using cplx = std::complex<double>;

/// Uniform periodic square grid over [-l, l)^2 with n samples per axis.
/// Sample (j,k) sits at z = (-l + k*h) + i*(-l + j*h), h = 2l/n.
struct GridSpec {
    int n = 0;
    double l = 0.0;

    GridSpec() = default;
    GridSpec(int n_, double l_) : n(n_), l(l_) {
        if (n < 8 || n % 2 != 0)
            throw std::invalid_argument("GridSpec: n must be even and >= 8");
        if (!(l > 0.0))
            throw std::invalid_argument("GridSpec: l must be positive");
    }

    double h() const { return 2.0 * l / n; }
    std::size_t size() const { return static_cast<std::size_t>(n) * n; }

    cplx point(int j, int k) const {
        const double s = h();
        return {-l + k * s, -l + j * s};
    }

    bool operator==(const GridSpec& o) const { return n == o.n && l == o.l; }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

/// Complex samples on a GridSpec, row-major with the y index outer.
class Field {
public:
    Field() = default;
    Field(GridSpec spec, cplx fill = {})
        : spec_(spec), v_(spec.size(), fill) {}
    Field(GridSpec spec, std::vector<cplx> values)
        : spec_(spec), v_(std::move(values)) {
        if (v_.size() != spec_.size())
            throw std::invalid_argument("Field: value count does not match grid");
    }

    const GridSpec& spec() const { return spec_; }
    int n() const { return spec_.n; }
    double l() const { return spec_.l; }
    double h() const { return spec_.h(); }

    cplx& at(int j, int k) { return v_[idx(j, k)]; }
    const cplx& at(int j, int k) const { return v_[idx(j, k)]; }
    cplx& operator[](std::size_t i) { return v_[i]; }
    const cplx& operator[](std::size_t i) const { return v_[i]; }

    std::vector<cplx>& values() { return v_; }
    const std::vector<cplx>& values() const { return v_; }
    std::size_t size() const { return v_.size(); }

    std::size_t idx(int j, int k) const {
        return static_cast<std::size_t>(j) * spec_.n + k;
    }

private:
    GridSpec spec_;
    std::vector<cplx> v_;
};

namespace detail {
inline void require_same_grid(const Field& a, const Field& b, const char* who) {
    if (a.spec() != b.spec())
        throw std::invalid_argument(std::string(who) + ": grid mismatch");
}
} // namespace detail

/// Sample a pointwise function of z on the grid. Rejects non-finite samples.
inline Field make_field(GridSpec spec, const std::function<cplx(cplx)>& sampler) {
    Field f(spec);
    for (int j = 0; j < spec.n; ++j)
        for (int k = 0; k < spec.n; ++k) {
            const cplx w = sampler(spec.point(j, k));
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                throw std::runtime_error(
                    "make_field: non-finite sample at (j=" + std::to_string(j) +
                    ",k=" + std::to_string(k) + ")");
            f.at(j, k) = w;
        }
    return f;
}

/// Circular translation by (p,q) grid steps: out(j,k) = u(j+q wrapped, k+p wrapped)
/// so that the sampled function moves by p*h in x and q*h in y.
inline Field shift(const Field& u, int p, int q) {
    const int n = u.n();
    auto wrap = [n](int i) { i %= n; return i < 0 ? i + n : i; };
    Field out(u.spec());
    for (int j = 0; j < n; ++j) {
        const int js = wrap(j + q);
        for (int k = 0; k < n; ++k)
            out.at(j, k) = u.at(js, wrap(k + p));
    }
    return out;
}

/// Periodic difference: delta(u,p,q) = shift(u,p,q) - u.
inline Field delta(const Field& u, int p, int q) {
    Field out = shift(u, p, q);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= u[i];
    return out;
}

struct Norms {
    double l2 = 0.0;
    double linf = 0.0;
};

/// Grid norms. l2 carries the area weight h (fractional mask values weight
/// cells by their inside-area fraction); linf runs over cells with mask > 0.
inline Norms norms(const Field& u, const Field* mask = nullptr) {
    if (mask) detail::require_same_grid(u, *mask, "norms");
    double sq = 0.0, mx = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double w = mask ? (*mask)[i].real() : 1.0;
        if (w <= 0.0) continue;
        const double a = std::abs(u[i]);
        sq += w * a * a;
        mx = std::max(mx, a);
    }
    return {u.h() * std::sqrt(sq), mx};
}

inline double l2_norm(const Field& u, const Field* mask = nullptr) {
    return norms(u, mask).l2;
}

// ---------------------------------------------------------------------------
// Pointwise field arithmetic
// ---------------------------------------------------------------------------

inline Field operator+(const Field& a, const Field& b) {
    detail::require_same_grid(a, b, "operator+");
    Field out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

inline Field operator-(const Field& a, const Field& b) {
    detail::require_same_grid(a, b, "operator-");
    Field out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

/// Pointwise product.
inline Field operator*(const Field& a, const Field& b) {
    detail::require_same_grid(a, b, "operator*");
    Field out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b[i];
    return out;
}

inline Field operator*(cplx s, const Field& a) {
    Field out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= s;
    return out;
}

inline Field operator*(const Field& a, cplx s) { return s * a; }

inline Field conj(const Field& a) {
    Field out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::conj(out[i]);
    return out;
}

inline double max_abs_diff(const Field& a, const Field& b) {
    detail::require_same_grid(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace siop
