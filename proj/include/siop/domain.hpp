#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "siop/grid.hpp"

namespace siop {

/// Smooth bounded domain given by a trigonometric-polynomial boundary
/// parametrization gamma(theta) = sum_{|k|<=d} c_k e^{ik theta}, a disc, or
/// a centered annulus (outer boundary counterclockwise, inner clockwise).
struct DomainSpec {
    enum class Kind { disc, annulus, curve };

    Kind kind = Kind::disc;
    cplx center = {};
    double radius = 1.0;      // disc
    double r_inner = 0.0;     // annulus
    double r_outer = 0.0;     // annulus
    std::vector<cplx> coeffs; // curve: c_k for k = -d..d, odd length

    static DomainSpec disc(cplx center = {}, double radius = 1.0) {
        if (!(radius > 0.0)) throw std::invalid_argument("disc: radius <= 0");
        DomainSpec d;
        d.kind = Kind::disc;
        d.center = center;
        d.radius = radius;
        return d;
    }

    static DomainSpec annulus(double r, double R) {
        if (!(0.0 < r && r < R))
            throw std::invalid_argument("annulus: need 0 < r < R");
        DomainSpec d;
        d.kind = Kind::annulus;
        d.r_inner = r;
        d.r_outer = R;
        return d;
    }

    static DomainSpec curve(std::vector<cplx> coeffs) {
        if (coeffs.empty() || coeffs.size() % 2 == 0)
            throw std::invalid_argument(
                "curve: coeffs must list c_k for k=-d..d (odd length)");
        DomainSpec d;
        d.kind = Kind::curve;
        d.coeffs = std::move(coeffs);
        d.validate_curve();
        return d;
    }

    /// Convenience: axis-aligned ellipse a*cos(theta) + i*b*sin(theta).
    static DomainSpec ellipse(double a, double b) {
        const double dp = 0.5 * (a + b), dm = 0.5 * (a - b);
        return curve({cplx(dm, 0.0), cplx(0.0, 0.0), cplx(dp, 0.0)});
    }

    int components() const { return kind == Kind::annulus ? 2 : 1; }

    int curve_degree() const {
        return static_cast<int>(coeffs.size() / 2);
    }

    /// gamma, gamma', gamma'' for boundary component `comp` at angle theta.
    /// comp 0 is the outer (counterclockwise) boundary.
    void boundary_point(int comp, double theta, cplx* g, cplx* dg = nullptr,
                        cplx* d2g = nullptr) const {
        const cplx e = std::polar(1.0, theta);
        switch (kind) {
        case Kind::disc: {
            const cplx w = radius * e;
            if (g) *g = center + w;
            if (dg) *dg = cplx(0, 1) * w;
            if (d2g) *d2g = -w;
            return;
        }
        case Kind::annulus: {
            if (comp == 0) {
                const cplx w = r_outer * e;
                if (g) *g = w;
                if (dg) *dg = cplx(0, 1) * w;
                if (d2g) *d2g = -w;
            } else {
                const cplx w = r_inner * std::conj(e); // clockwise
                if (g) *g = w;
                if (dg) *dg = cplx(0, -1) * w;
                if (d2g) *d2g = -w;
            }
            return;
        }
        case Kind::curve: {
            const int d = curve_degree();
            cplx s = 0, s1 = 0, s2 = 0;
            for (int k = -d; k <= d; ++k) {
                const cplx ck = coeffs[static_cast<std::size_t>(k + d)];
                const cplx ek = std::polar(1.0, k * theta);
                s += ck * ek;
                s1 += cplx(0, k) * ck * ek;
                s2 += -static_cast<double>(k) * static_cast<double>(k) * ck * ek;
            }
            if (g) *g = s;
            if (dg) *dg = s1;
            if (d2g) *d2g = s2;
            return;
        }
        }
    }

    /// Radius of the smallest origin-centered square box containing the domain.
    double bounding_radius() const {
        switch (kind) {
        case Kind::disc:
            return std::max(std::abs(center.real()), std::abs(center.imag())) +
                   radius;
        case Kind::annulus:
            return r_outer;
        case Kind::curve: {
            double m = 0.0;
            for (int i = 0; i < 2048; ++i) {
                cplx g;
                boundary_point(0, 2.0 * M_PI * i / 2048, &g);
                m = std::max({m, std::abs(g.real()), std::abs(g.imag())});
            }
            return m;
        }
        }
        return 0.0;
    }

    bool inside(cplx z) const {
        switch (kind) {
        case Kind::disc:
            return std::abs(z - center) < radius;
        case Kind::annulus: {
            const double r = std::abs(z);
            return r_inner < r && r < r_outer;
        }
        case Kind::curve:
            return winding(z) != 0;
        }
        return false;
    }

    /// Closed-form area when available (curve: via the boundary integral
    /// (1/2i) oint conj(gamma) gamma' dtheta, exact for trig polynomials).
    double area() const {
        switch (kind) {
        case Kind::disc:
            return M_PI * radius * radius;
        case Kind::annulus:
            return M_PI * (r_outer * r_outer - r_inner * r_inner);
        case Kind::curve: {
            // area = pi * sum_k k |c_k|^2
            const int d = curve_degree();
            double a = 0.0;
            for (int k = -d; k <= d; ++k)
                a += k * std::norm(coeffs[static_cast<std::size_t>(k + d)]);
            return M_PI * a;
        }
        }
        return 0.0;
    }

private:
    void validate_curve() const {
        const int m = 4096;
        std::vector<cplx> pts(m);
        double min_dg = 1e300, max_dg = 0.0;
        for (int i = 0; i < m; ++i) {
            cplx g, dg;
            boundary_point(0, 2.0 * M_PI * i / m, &g, &dg);
            pts[i] = g;
            min_dg = std::min(min_dg, std::abs(dg));
            max_dg = std::max(max_dg, std::abs(dg));
        }
        if (min_dg <= 1e-12 * max_dg)
            throw std::invalid_argument("curve: degenerate (|gamma'| vanishes)");
        // Simpleness heuristic: samples far apart in parameter must not
        // collide in the plane.
        const int coarse = 512, step = m / coarse;
        for (int i = 0; i < coarse; ++i)
            for (int j = i + 8; j < coarse; ++j) {
                if ((coarse - (j - i)) < 8) continue; // periodic neighbors
                const double dist =
                    std::abs(pts[static_cast<std::size_t>(i * step)] -
                             pts[static_cast<std::size_t>(j * step)]);
                const double param_gap = 2.0 * M_PI * (j - i) / coarse;
                if (dist < 1e-3 * std::min(param_gap, 2.0 * M_PI - param_gap) *
                               min_dg)
                    throw std::invalid_argument("curve: self-intersection detected");
            }
        double orient = 0.0; // signed area must be positive (ccw)
        for (int i = 0; i < m; ++i) {
            const cplx a = pts[i], b = pts[(i + 1) % m];
            orient += a.real() * b.imag() - a.imag() * b.real();
        }
        if (orient <= 0.0)
            throw std::invalid_argument("curve: must be counterclockwise");
    }

    int winding(cplx z) const {
        // Nonzero-winding test against a dense polygonization.
        const int m = 4096;
        int w = 0;
        cplx prev;
        boundary_point(0, 0.0, &prev);
        for (int i = 1; i <= m; ++i) {
            cplx cur;
            boundary_point(0, 2.0 * M_PI * (i % m) / m, &cur);
            const bool up = prev.imag() <= z.imag() && cur.imag() > z.imag();
            const bool dn = cur.imag() <= z.imag() && prev.imag() > z.imag();
            if (up || dn) {
                const double t =
                    (z.imag() - prev.imag()) / (cur.imag() - prev.imag());
                const double xc = prev.real() + t * (cur.real() - prev.real());
                if (xc > z.real()) w += up ? 1 : -1;
            }
            prev = cur;
        }
        return w;
    }
};

/// Boundary sample grid: nodes theta_j = 2 pi j / m with positions and
/// derivatives per component (annulus: outer ccw then inner cw).
struct BoundaryGrid {
    struct Component {
        std::vector<cplx> gamma;
        std::vector<cplx> dgamma;
        std::vector<cplx> d2gamma;
    };
    int m = 0;
    std::vector<Component> comps;

    double dtheta() const { return 2.0 * M_PI / m; }

    /// Max arc spacing |gamma'| * dtheta over all components.
    double arc_spacing() const {
        double s = 0.0;
        for (const auto& c : comps)
            for (const auto& dg : c.dgamma) s = std::max(s, std::abs(dg));
        return s * dtheta();
    }
};

/// Samples of a function on one boundary component.
struct BoundaryTrace {
    std::vector<cplx> values;

    std::size_t size() const { return values.size(); }
};

inline bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

inline BoundaryGrid boundary_grid(const DomainSpec& domain, int m) {
    if (!is_power_of_two(m) || m < 4)
        throw std::invalid_argument("boundary_grid: m must be a power of two >= 4");
    BoundaryGrid bg;
    bg.m = m;
    bg.comps.resize(domain.components());
    for (int c = 0; c < domain.components(); ++c) {
        auto& comp = bg.comps[static_cast<std::size_t>(c)];
        comp.gamma.resize(m);
        comp.dgamma.resize(m);
        comp.d2gamma.resize(m);
        for (int j = 0; j < m; ++j) {
            const double theta = 2.0 * M_PI * j / m;
            domain.boundary_point(c, theta, &comp.gamma[j], &comp.dgamma[j],
                                  &comp.d2gamma[j]);
        }
    }
    return bg;
}

/// Sample a trace from a pointwise function of the boundary position.
inline BoundaryTrace sample_trace(const BoundaryGrid& bg, int comp,
                                  const std::function<cplx(cplx)>& f) {
    BoundaryTrace t;
    const auto& g = bg.comps[static_cast<std::size_t>(comp)].gamma;
    t.values.resize(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) t.values[j] = f(g[j]);
    return t;
}

namespace detail {

/// Inside flags for the 4n x 4n subsample lattice of a curve domain,
/// computed by a nonzero-winding scanline against a dense polygonization.
inline std::vector<std::uint8_t> scanline_subsamples(const DomainSpec& domain,
                                                     GridSpec spec) {
    const int n4 = 4 * spec.n;
    const double hs = spec.h() / 4.0;
    const double x0 = -spec.l - 3.0 * spec.h() / 8.0; // first subsample center
    std::vector<std::uint8_t> inside(static_cast<std::size_t>(n4) * n4, 0);

    const int mpoly = 8192;
    std::vector<cplx> poly;
    for (int c = 0; c < domain.components(); ++c)
        for (int i = 0; i <= mpoly; ++i) {
            cplx g;
            domain.boundary_point(c, 2.0 * M_PI * (i % mpoly) / mpoly, &g);
            poly.push_back(g); // segments c*(mpoly+1)+i .. +i+1
        }

    struct Crossing {
        double x;
        int dir;
    };
    std::vector<Crossing> cr;
    for (int row = 0; row < n4; ++row) {
        const double y = x0 + row * hs;
        cr.clear();
        for (int c = 0; c < domain.components(); ++c) {
            const std::size_t base = static_cast<std::size_t>(c) * (mpoly + 1);
            for (int i = 0; i < mpoly; ++i) {
                const cplx a = poly[base + i], b = poly[base + i + 1];
                const bool up = a.imag() <= y && b.imag() > y;
                const bool dn = b.imag() <= y && a.imag() > y;
                if (!up && !dn) continue;
                const double t = (y - a.imag()) / (b.imag() - a.imag());
                cr.push_back({a.real() + t * (b.real() - a.real()), up ? 1 : -1});
            }
        }
        std::sort(cr.begin(), cr.end(),
                  [](const Crossing& a, const Crossing& b) { return a.x < b.x; });
        int w = 0;
        std::size_t ci = 0;
        for (int col = 0; col < n4; ++col) {
            const double x = x0 + col * hs;
            while (ci < cr.size() && cr[ci].x <= x) w += cr[ci++].dir;
            inside[static_cast<std::size_t>(row) * n4 + col] = (w != 0);
        }
    }
    return inside;
}

} // namespace detail

/// Characteristic function of the domain with area-fraction weights on
/// boundary cells (4x4 subsampling); 1 deep inside, 0 outside.
inline Field mask_field(const DomainSpec& domain, GridSpec spec) {
    if (domain.bounding_radius() > spec.l - 2.0 * spec.h())
        throw std::invalid_argument("mask_field: domain exceeds grid square");
    const int n = spec.n;
    Field mask(spec);

    if (domain.kind == DomainSpec::Kind::curve) {
        const auto sub = detail::scanline_subsamples(domain, spec);
        const int n4 = 4 * n;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int cnt = 0;
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b)
                        cnt += sub[static_cast<std::size_t>(4 * j + a) * n4 +
                                   (4 * k + b)];
                mask.at(j, k) = cnt / 16.0;
            }
        return mask;
    }

    const double h = spec.h();
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const cplx z = spec.point(j, k);
            int cnt = 0;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    const cplx zs = z + cplx((b - 1.5) * h / 4.0,
                                             (a - 1.5) * h / 4.0);
                    cnt += domain.inside(zs) ? 1 : 0;
                }
            mask.at(j, k) = cnt / 16.0;
        }
    return mask;
}

/// Distance to the boundary, positive inside and negative outside.
/// Curve domains use Newton projection seeded from dense samples, with a
/// dense-minimum fallback when Newton stalls.
inline double signed_distance(const DomainSpec& domain, cplx z) {
    switch (domain.kind) {
    case DomainSpec::Kind::disc:
        return domain.radius - std::abs(z - domain.center);
    case DomainSpec::Kind::annulus: {
        const double r = std::abs(z);
        return std::min(r - domain.r_inner, domain.r_outer - r);
    }
    case DomainSpec::Kind::curve: {
        const int mseed = 256;
        double best = 1e300, best_theta = 0.0;
        for (int i = 0; i < mseed; ++i) {
            const double th = 2.0 * M_PI * i / mseed;
            cplx g;
            domain.boundary_point(0, th, &g);
            const double d = std::abs(g - z);
            if (d < best) {
                best = d;
                best_theta = th;
            }
        }
        // Newton on F(theta) = Re[(gamma - z) conj(gamma')] = 0.
        double th = best_theta;
        bool converged = false;
        for (int it = 0; it < 30; ++it) {
            cplx g, dg, d2g;
            domain.boundary_point(0, th, &g, &dg, &d2g);
            const double F = ((g - z) * std::conj(dg)).real();
            const double dF =
                std::norm(dg) + ((g - z) * std::conj(d2g)).real();
            if (std::abs(dF) < 1e-30) break;
            const double step = F / dF;
            th -= step;
            if (std::abs(step) < 1e-14) {
                converged = true;
                break;
            }
        }
        double dist = best;
        if (converged) {
            cplx g;
            domain.boundary_point(0, th, &g);
            dist = std::min(dist, std::abs(g - z));
        } else {
            const int mdense = 16384;
            dist = 1e300;
            for (int i = 0; i < mdense; ++i) {
                cplx g;
                domain.boundary_point(0, 2.0 * M_PI * i / mdense, &g);
                dist = std::min(dist, std::abs(g - z));
            }
        }
        return domain.inside(z) ? dist : -dist;
    }
    }
    return 0.0;
}

} // namespace siop
