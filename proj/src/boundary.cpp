#include "ratrange/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <map>
#include <queue>

namespace ratrange {

namespace {

bool in_interval_tol(double x, double lo, double hi, double tol) {
    return x >= lo - tol && x <= hi + tol;
}

}  // namespace

// Nothing is returned if the radicands fail, the point degenerates to the
// axis, or the closed-form inverse does not round-trip (which weeds out
// spurious algebraic branches).
std::optional<double> branch_re_beta(double beta, double y, int outer,
                                     const ProblemParams& prm) {
    if (y == 0.0) return std::nullopt;
    const double c = prm.c, d = prm.d;
    const double P = c - d * d / 2.0 - d * y - beta * d / (4.0 * y);
    const double Q = beta * c + c * c + 2.0 * c * d * y + 4.0 * c * y * y;
    const double disc = P * P - Q;
    if (disc < 0.0) return std::nullopt;
    const double x2 = P + outer * std::sqrt(disc) - y * y;
    if (x2 < 0.0) return std::nullopt;
    const double x = std::sqrt(x2);
    if (x <= 1e-9 * (1.0 + std::abs(y))) return std::nullopt;
    try {
        if (std::abs(beta_hat(complex(x, y), prm) - beta) > 1e-6 * (1.0 + std::abs(beta)))
            return std::nullopt;
    } catch (const on_disk_boundary_error&) {
        return std::nullopt;
    }
    return x;
}

std::optional<double> branch_re_alpha(double alpha, double y, int outer,
                                      const ProblemParams& prm) {
    const double c = prm.c, d = prm.d;
    if (y >= 0.0) return std::nullopt;  // Pi_beta lives in the closed lower half plane
    const double den = d + 2.0 * y;
    if (std::abs(den) <= 1e-12 * (1.0 + d)) return std::nullopt;
    const double R = alpha * d / (2.0 * den);
    const double S = -2.0 * alpha * c * y / den;
    const double disc = R * R - S;
    if (disc < 0.0) return std::nullopt;
    const double x2 = R + outer * std::sqrt(disc) - y * y;
    if (x2 < 0.0) return std::nullopt;
    const double x = std::sqrt(x2);
    if (x <= 1e-9 * (1.0 + std::abs(y))) return std::nullopt;
    if (in_disk(complex(x, y), prm) != DiskPosition::Outside) return std::nullopt;
    try {
        if (std::abs(alpha_hat(complex(x, y), prm) - alpha) >
            1e-6 * (1.0 + std::abs(alpha)))
            return std::nullopt;
    } catch (const on_disk_boundary_error&) {
        return std::nullopt;
    }
    return x;
}

namespace {

using BranchFn = std::function<std::optional<double>(double y, int outer)>;

// Sample one outer-sign channel over the grid, bisecting validity flips to
// localize strand endpoints to 1e-6 in y. Each strand is mirrored into the
// left half plane afterwards.
void sample_channels(const std::vector<double>& grid, const BranchFn& fn,
                     BranchCurve& out) {
    for (int outer : {+1, -1}) {
        std::vector<BranchSample> strand;
        auto flush = [&]() {
            if (strand.size() >= 2) {
                std::vector<BranchSample> mirror(strand);
                for (auto& s : mirror) {
                    s.re = -s.re;
                    s.side = -1;
                }
                out.strands.push_back(strand);
                out.strands.push_back(std::move(mirror));
            }
            strand.clear();
        };
        auto refine = [&](double y_bad, double y_good) -> BranchSample {
            for (int iter = 0; iter < 60 && std::abs(y_good - y_bad) > 1e-6; ++iter) {
                const double mid = 0.5 * (y_bad + y_good);
                if (fn(mid, outer))
                    y_good = mid;
                else
                    y_bad = mid;
            }
            const double x = *fn(y_good, outer);
            return {x, y_good, outer, +1};
        };
        bool have_prev = false;
        double prev_y = 0.0;
        bool prev_valid = false;
        for (double y : grid) {
            const auto x = fn(y, outer);
            if (x) {
                if (have_prev && !prev_valid) strand.push_back(refine(prev_y, y));
                strand.push_back({*x, y, outer, +1});
            } else if (prev_valid) {
                strand.push_back(refine(y, prev_y));
                flush();
            }
            have_prev = true;
            prev_y = y;
            prev_valid = x.has_value();
        }
        flush();
    }
}

double pad_below(double v) { return v - 0.1 * (1.0 + std::abs(v)); }

bool include_poles_on_curve(double alpha, const ProblemParams& prm) {
    const double gap = prm.d * prm.d - 4.0 * prm.c;  // d <= 2 sqrt(c) <=> gap <= 0
    const double guard = 1e-12 * (1.0 + prm.d * prm.d);
    if (gap < -guard) return true;
    if (std::abs(gap) <= guard) return !(alpha < -prm.c);
    return false;
}

// Restrict strands to the kept region, bisecting each cut along the branch
// equation so the trimmed endpoint lands on the box-corner point shared with
// the adjacent edge curve (otherwise the rasterized walls would leak there).
void filter_strands(BranchCurve& curve,
                    const std::function<bool(const BranchSample&)>& keep,
                    const ProblemParams& prm) {
    auto eval = [&](double y, int outer, int side) -> std::optional<BranchSample> {
        std::optional<double> x;
        if (curve.family == BranchCurve::Family::FixedBeta)
            x = branch_re_beta(curve.value, y, outer, prm);
        else if (curve.family == BranchCurve::Family::FixedAlpha)
            x = branch_re_alpha(curve.value, y, outer, prm);
        if (!x) return std::nullopt;
        return BranchSample{side < 0 ? -*x : *x, y, outer, side};
    };
    auto refine = [&](const BranchSample& good, const BranchSample& bad) {
        double y_good = good.im, y_bad = bad.im;
        BranchSample best = good;
        for (int iter = 0; iter < 60 && std::abs(y_good - y_bad) > 1e-9; ++iter) {
            const double mid = 0.5 * (y_good + y_bad);
            const auto s = eval(mid, good.outer_sign, good.side);
            if (s && keep(*s)) {
                best = *s;
                y_good = mid;
            } else {
                y_bad = mid;
            }
        }
        return best;
    };
    std::vector<std::vector<BranchSample>> filtered;
    for (const auto& strand : curve.strands) {
        std::vector<BranchSample> cur;
        auto flush = [&]() {
            if (cur.size() >= 2) filtered.push_back(cur);
            cur.clear();
        };
        for (std::size_t i = 0; i < strand.size(); ++i) {
            const BranchSample& s = strand[i];
            if (keep(s)) {
                if (cur.empty() && i > 0 && !keep(strand[i - 1]))
                    cur.push_back(refine(s, strand[i - 1]));
                cur.push_back(s);
            } else {
                if (!cur.empty()) cur.push_back(refine(cur.back(), s));
                flush();
            }
        }
        flush();
    }
    curve.strands = std::move(filtered);
}

// alpha forced by an axis point i*mu on the fixed-beta edge, and vice versa.
double alpha_of_axis(double mu, double beta, const ProblemParams& prm) {
    const double den = prm.c + prm.d * mu + mu * mu;
    return -mu * mu - mu * mu * beta / den;
}

std::optional<double> beta_of_axis(double mu, double alpha, const ProblemParams& prm) {
    if (mu == 0.0) return std::nullopt;
    return (prm.c + prm.d * mu + mu * mu) * (-alpha - mu * mu) / (mu * mu);
}

}  // namespace

std::vector<double> default_im_grid(double im_lo, double im_hi, int n) {
    std::vector<double> g(std::size_t(std::max(n, 2)));
    const double h = (im_hi - im_lo) / double(g.size() - 1);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = im_lo + double(i) * h;
    return g;
}

double curve_im_lower_bound_beta(double beta, const ProblemParams& prm) {
    const double c = prm.c, d = prm.d;
    double lo = -d;
    if (d * d >= 4.0 * beta) lo = std::min(lo, (-d - std::sqrt(d * d - 4.0 * beta)) / 4.0);
    const double gap = 4.0 * c - d * d;
    if (gap != 0.0) {
        const double t = 1.0 + 4.0 * beta / gap;
        if (t >= 0.0) lo = std::min(lo, (-d - d * std::sqrt(t)) / 4.0);
    }
    if (beta > 0.0)
        for (const auto& r : q_beta_real_roots(beta, prm)) lo = std::min(lo, r.value);
    return pad_below(lo);
}

double curve_im_lower_bound_alpha(double alpha, const ProblemParams& prm) {
    const double c = prm.c, d = prm.d;
    double lo = -d;
    if (c > 0.0) {
        const double t = 1.0 - alpha / c;
        if (t >= 0.0) lo = std::min(lo, (-d - d * std::sqrt(t)) / 4.0);
    }
    if (alpha != 0.0)
        for (const auto& r : q_alpha_real_roots(alpha, prm)) lo = std::min(lo, r.value);
    return pad_below(lo);
}

BranchCurve curve_fixed_beta(double beta, const std::vector<double>& im_grid,
                             const ProblemParams& prm) {
    if (!(beta > 0.0)) throw config_error("curve_fixed_beta requires beta > 0");
    BranchCurve curve;
    curve.family = BranchCurve::Family::FixedBeta;
    curve.value = beta;
    sample_channels(
        im_grid, [&](double y, int outer) { return branch_re_beta(beta, y, outer, prm); },
        curve);
    for (const auto& r : q_beta_real_roots(beta, prm)) curve.axis_mu.push_back(r.value);
    curve.special.push_back(ComplexPoint(0.0, 0.0));
    curve.special.push_back(ComplexPoint::infinity());
    return curve;
}

BranchCurve curve_fixed_alpha(double alpha, const std::vector<double>& im_grid,
                              const ProblemParams& prm) {
    if (alpha == 0.0) throw config_error("curve_fixed_alpha requires alpha != 0");
    BranchCurve curve;
    curve.family = BranchCurve::Family::FixedAlpha;
    curve.value = alpha;
    sample_channels(
        im_grid,
        [&](double y, int outer) { return branch_re_alpha(alpha, y, outer, prm); }, curve);
    for (const auto& r : q_alpha_real_roots(alpha, prm))
        if (r.satisfies_constraint) curve.axis_mu.push_back(r.value);
    if (include_poles_on_curve(alpha, prm)) {
        const Poles p = poles(prm);
        curve.special.push_back(p.delta_plus);
        curve.special.push_back(p.delta_minus);
    }
    return curve;
}

std::vector<BranchCurve> boundary_set(const OmegaBox& box,
                                      const std::vector<double>& im_grid,
                                      const ProblemParams& prm) {
    std::vector<BranchCurve> curves;
    const double big_alpha = 1e6;
    const double big_beta = 1e6;

    auto add_beta_edge = [&](double b, const char* tag) {
        BranchCurve curve;
        curve.tag = tag;
        if (!std::isfinite(b)) {
            curve.family = BranchCurve::Family::FixedBeta;
            curve.value = b;
            curve.special.push_back(ComplexPoint(0.0, 0.0));
            curve.special.push_back(ComplexPoint::infinity());
        } else if (b == 0.0) {
            // beta = 0 edge: p factors as (w^2 - alpha)(w^2 + i d w - c),
            // giving the real ray +-sqrt(alpha) plus the poles
            curve.family = BranchCurve::Family::BetaZero;
            curve.value = 0.0;
            const double a_hi = std::min(box.alpha_hi, big_alpha);
            const double a_lo = std::max(box.alpha_lo, 0.0);
            if (a_hi > 0.0 && a_lo < a_hi) {
                const double x0 = std::sqrt(a_lo), x1 = std::sqrt(a_hi);
                curve.strands.push_back({{x0, 0.0, 0, +1}, {x1, 0.0, 0, +1}});
                curve.strands.push_back({{-x0, 0.0, 0, -1}, {-x1, 0.0, 0, -1}});
            }
            const Poles p = poles(prm);
            curve.special.push_back(p.delta_plus);
            curve.special.push_back(p.delta_minus);
            if (prm.c == 0.0 || in_interval(0.0, box.alpha_lo, box.alpha_hi))
                curve.special.push_back(ComplexPoint(0.0, 0.0));
        } else {
            curve = curve_fixed_beta(b, im_grid, prm);
            curve.tag = tag;
            filter_strands(curve, [&](const BranchSample& s) {
                try {
                    const double a = alpha_hat(complex(s.re, s.im), prm);
                    return in_interval_tol(a, box.alpha_lo, box.alpha_hi,
                                           1e-6 * (1.0 + std::abs(a)));
                } catch (const on_disk_boundary_error&) {
                    return false;
                }
            }, prm);
            std::vector<double> mu_keep;
            for (double mu : curve.axis_mu) {
                const double a = alpha_of_axis(mu, b, prm);
                if (std::isfinite(a) &&
                    in_interval_tol(a, box.alpha_lo, box.alpha_hi,
                                    1e-6 * (1.0 + std::abs(a))))
                    mu_keep.push_back(mu);
            }
            curve.axis_mu = std::move(mu_keep);
            curve.special.clear();
            if (prm.c == 0.0 || in_interval(0.0, box.alpha_lo, box.alpha_hi))
                curve.special.push_back(ComplexPoint(0.0, 0.0));
            if (box.alpha_unbounded()) curve.special.push_back(ComplexPoint::infinity());
        }
        curves.push_back(std::move(curve));
    };

    auto add_alpha_edge = [&](double a, const char* tag) {
        BranchCurve curve;
        curve.tag = tag;
        if (!std::isfinite(a)) {
            curve.family = BranchCurve::Family::FixedAlpha;
            curve.value = a;
            const Poles p = poles(prm);
            curve.special.push_back(p.delta_plus);
            curve.special.push_back(p.delta_minus);
            curve.special.push_back(ComplexPoint::infinity());
        } else if (a == 0.0) {
            // alpha = 0 edge: roots 0 (double) and +-sqrt(beta+c-d^2/4) - i d/2
            curve.family = BranchCurve::Family::AlphaZero;
            curve.value = 0.0;
            const double b_hi = std::min(box.beta_hi, big_beta);
            const double off = prm.c - prm.d * prm.d / 4.0;
            const double t_lo = box.beta_lo + off, t_hi = b_hi + off;
            if (t_hi > 0.0) {
                const double x0 = std::sqrt(std::max(t_lo, 0.0));
                const double x1 = std::sqrt(t_hi);
                const double y = -prm.d / 2.0;
                if (x1 > x0) {
                    curve.strands.push_back({{x0, y, 0, +1}, {x1, y, 0, +1}});
                    curve.strands.push_back({{-x0, y, 0, -1}, {-x1, y, 0, -1}});
                }
            }
            curve.special.push_back(ComplexPoint(0.0, 0.0));
        } else {
            curve = curve_fixed_alpha(a, im_grid, prm);
            curve.tag = tag;
            filter_strands(curve, [&](const BranchSample& s) {
                try {
                    const double b = beta_hat(complex(s.re, s.im), prm);
                    return in_interval_tol(b, box.beta_lo, box.beta_hi,
                                           1e-6 * (1.0 + std::abs(b)));
                } catch (const on_disk_boundary_error&) {
                    return false;
                }
            }, prm);
            std::vector<double> mu_keep;
            for (double mu : curve.axis_mu) {
                const auto b = beta_of_axis(mu, a, prm);
                if (b && std::isfinite(*b) &&
                    in_interval_tol(*b, box.beta_lo, box.beta_hi,
                                    1e-6 * (1.0 + std::abs(*b))))
                    mu_keep.push_back(mu);
            }
            curve.axis_mu = std::move(mu_keep);
        }
        curves.push_back(std::move(curve));
    };

    add_beta_edge(box.beta_lo, "beta_lo");
    if (box.beta_hi != box.beta_lo) add_beta_edge(box.beta_hi, "beta_hi");
    add_alpha_edge(box.alpha_lo, "alpha_lo");
    if (box.alpha_hi != box.alpha_lo) add_alpha_edge(box.alpha_hi, "alpha_hi");
    return curves;
}

std::vector<BranchCurve> boundary_set(const OmegaBox& box, const ProblemParams& prm) {
    double im_lo = -prm.d;
    for (double b : {box.beta_lo, box.beta_hi})
        if (std::isfinite(b) && b > 0.0)
            im_lo = std::min(im_lo, curve_im_lower_bound_beta(b, prm));
    for (double a : {box.alpha_lo, box.alpha_hi})
        if (std::isfinite(a) && a != 0.0)
            im_lo = std::min(im_lo, curve_im_lower_bound_alpha(a, prm));
    return boundary_set(box, default_im_grid(im_lo, 0.5), prm);
}

Viewport default_viewport(const OmegaBox& box, const ProblemParams& prm) {
    const double bh = std::isfinite(box.beta_hi) ? box.beta_hi : box.beta_lo + 10.0;
    double L = 1.0;
    if (std::isfinite(box.alpha_lo)) L = std::max(L, std::sqrt(std::abs(box.alpha_lo)));
    if (std::isfinite(box.alpha_hi)) L = std::max(L, std::sqrt(std::abs(box.alpha_hi)));
    L = std::max(L, std::sqrt(std::max(bh + prm.c, 1.0)));
    L = std::max(L, prm.d);
    L = std::max(L, 2.0 * prm.c / prm.d);
    L *= 1.5;
    double im_lo = -(prm.d + std::sqrt(prm.d * prm.d + 4.0 * bh)) / 1.5;
    im_lo = std::min(im_lo, curve_im_lower_bound_beta(std::max(bh, 1e-6), prm));
    for (double a : {box.alpha_lo, box.alpha_hi})
        if (std::isfinite(a) && a != 0.0)
            im_lo = std::min(im_lo, curve_im_lower_bound_alpha(a, prm));
    return {-L, L, im_lo, 0.5};
}

namespace {

struct Raster {
    const Viewport& vp;
    int nx, ny;
    std::vector<char>& mask;

    double cw() const { return (vp.re_hi - vp.re_lo) / nx; }
    double ch() const { return (vp.im_hi - vp.im_lo) / ny; }

    void mark(double x, double y) {
        const int ix = int(std::floor((x - vp.re_lo) / cw()));
        const int iy = int(std::floor((y - vp.im_lo) / ch()));
        if (ix < 0 || ix >= nx || iy < 0 || iy >= ny) return;
        mask[std::size_t(iy) * nx + ix] = 1;
    }

    // clip to the viewport, then mark at half-cell steps along the segment
    void segment(double x0, double y0, double x1, double y1) {
        double t0 = 0.0, t1 = 1.0;
        const double dx = x1 - x0, dy = y1 - y0;
        auto clip = [&](double p, double q) {
            if (p == 0.0) return q >= 0.0;
            const double r = q / p;
            if (p < 0.0) {
                if (r > t1) return false;
                if (r > t0) t0 = r;
            } else {
                if (r < t0) return false;
                if (r < t1) t1 = r;
            }
            return true;
        };
        if (!clip(-dx, x0 - vp.re_lo) || !clip(dx, vp.re_hi - x0) ||
            !clip(-dy, y0 - vp.im_lo) || !clip(dy, vp.im_hi - y0))
            return;
        const double ax = x0 + t0 * dx, ay = y0 + t0 * dy;
        const double bx = x0 + t1 * dx, by = y0 + t1 * dy;
        const int steps = 1 + int(std::ceil(std::max(std::abs(bx - ax) / (cw() / 2.0),
                                                     std::abs(by - ay) / (ch() / 2.0))));
        for (int i = 0; i <= steps; ++i) {
            const double t = double(i) / steps;
            mark(ax + t * (bx - ax), ay + t * (by - ay));
        }
    }
};

}  // namespace

RegionMap classify_regions(const OmegaBox& box, const Viewport& viewport, int resolution,
                           const ProblemParams& prm) {
    if (resolution < 64) throw config_error("resolution must be >= 64");
    RegionMap map;
    map.viewport = viewport;
    map.nx = map.ny = resolution;
    const int nx = map.nx, ny = map.ny;
    const std::size_t ncell = std::size_t(nx) * ny;

    // The coloring acts on the complement of the off-axis curve set only:
    // the imaginary-axis part of the enclosure is one-dimensional and two
    // complement components are neighbors only across a genuine curve
    // segment, never across the axis. Axis cells are stamped into the final
    // label mask afterwards.
    std::vector<char> bmask(ncell, 0);
    Raster raster{viewport, nx, ny, bmask};

    const double ch = (viewport.im_hi - viewport.im_lo) / ny;
    const auto grid = default_im_grid(viewport.im_lo - ch, viewport.im_hi + ch,
                                      std::max(2048, 4 * resolution));
    const auto curves = boundary_set(box, grid, prm);
    for (const auto& curve : curves) {
        for (const auto& strand : curve.strands)
            for (std::size_t i = 0; i + 1 < strand.size(); ++i)
                raster.segment(strand[i].re, strand[i].im, strand[i + 1].re,
                               strand[i + 1].im);
    }

    // flood fill the complement into 4-connected components
    std::vector<int> comp(ncell, -1);
    int ncomp = 0;
    for (std::size_t start = 0; start < ncell; ++start) {
        if (bmask[start] || comp[start] >= 0) continue;
        const int id = ncomp++;
        std::queue<std::size_t> q;
        q.push(start);
        comp[start] = id;
        while (!q.empty()) {
            const std::size_t cur = q.front();
            q.pop();
            const int ix = int(cur % nx), iy = int(cur / nx);
            const int nbs[4][2] = {{ix - 1, iy}, {ix + 1, iy}, {ix, iy - 1}, {ix, iy + 1}};
            for (const auto& nb : nbs) {
                if (nb[0] < 0 || nb[0] >= nx || nb[1] < 0 || nb[1] >= ny) continue;
                const std::size_t j = std::size_t(nb[1]) * nx + nb[0];
                if (bmask[j] || comp[j] >= 0) continue;
                comp[j] = id;
                q.push(j);
            }
        }
    }

    // Component adjacency: two components are neighbors only when they share
    // a curve *segment*, not a single crossing point. Raster contact alone
    // cannot tell the two apart (near a transversal crossing both arms can
    // share one wall row), so each wall contact is classified by the exact
    // number of polyline crossings between the two facing cell centers: an
    // odd count is a genuine single-curve wall, an even count is a crossing
    // contact. Pairs are linked by majority vote over their contacts.
    struct Seg {
        double x0, y0, x1, y1;
    };
    std::vector<Seg> segs;
    for (const auto& curve : curves)
        for (const auto& strand : curve.strands)
            for (std::size_t i = 0; i + 1 < strand.size(); ++i)
                segs.push_back({strand[i].re, strand[i].im, strand[i + 1].re,
                                strand[i + 1].im});
    const double cw = (viewport.re_hi - viewport.re_lo) / nx;
    // per-column / per-row bins of segment indices
    std::vector<std::vector<int>> col_bins, row_bins;
    col_bins.resize(std::size_t(nx));
    row_bins.resize(std::size_t(ny));
    for (int s = 0; s < int(segs.size()); ++s) {
        const auto& g = segs[std::size_t(s)];
        int c0 = int(std::floor((std::min(g.x0, g.x1) - viewport.re_lo) / cw));
        int c1 = int(std::floor((std::max(g.x0, g.x1) - viewport.re_lo) / cw));
        for (int c = std::max(c0, 0); c <= std::min(c1, nx - 1); ++c)
            col_bins[std::size_t(c)].push_back(s);
        int r0 = int(std::floor((std::min(g.y0, g.y1) - viewport.im_lo) / ch));
        int r1 = int(std::floor((std::max(g.y0, g.y1) - viewport.im_lo) / ch));
        for (int r = std::max(r0, 0); r <= std::min(r1, ny - 1); ++r)
            row_bins[std::size_t(r)].push_back(s);
    }
    // crossings of the vertical segment x = xc, y in (ylo, yhi)
    auto vertical_crossings = [&](int col, double xc, double ylo, double yhi) {
        int n = 0;
        for (int s : col_bins[std::size_t(col)]) {
            const auto& g = segs[std::size_t(s)];
            const double lo = std::min(g.x0, g.x1), hi = std::max(g.x0, g.x1);
            if (!(lo < xc && xc <= hi)) continue;  // half-open: no vertex double count
            const double t = (xc - g.x0) / (g.x1 - g.x0);
            const double y = g.y0 + t * (g.y1 - g.y0);
            if (y > ylo && y < yhi) ++n;
        }
        return n;
    };
    auto horizontal_crossings = [&](int row, double yc, double xlo, double xhi) {
        int n = 0;
        for (int s : row_bins[std::size_t(row)]) {
            const auto& g = segs[std::size_t(s)];
            const double lo = std::min(g.y0, g.y1), hi = std::max(g.y0, g.y1);
            if (!(lo < yc && yc <= hi)) continue;
            const double t = (yc - g.y0) / (g.y1 - g.y0);
            const double x = g.x0 + t * (g.x1 - g.x0);
            if (x > xlo && x < xhi) ++n;
        }
        return n;
    };
    std::map<std::pair<int, int>, int> votes;  // odd contacts minus even contacts
    auto vote = [&](int a, int b, bool odd) {
        votes[{std::min(a, b), std::max(a, b)}] += odd ? 1 : -1;
    };
    // tiny offset keeps rays away from polyline vertices and the axis
    const double nudge = 0.171717 * cw;
    for (int ix = 0; ix < nx; ++ix) {
        int run_start = -1;
        for (int iy = 0; iy <= ny; ++iy) {
            const bool wall = iy < ny && bmask[std::size_t(iy) * nx + ix];
            if (wall && run_start < 0) run_start = iy;
            if (!wall && run_start >= 0) {
                if (run_start > 0 && iy < ny) {
                    const int a = comp[std::size_t(run_start - 1) * nx + ix];
                    const int b = comp[std::size_t(iy) * nx + ix];
                    if (a >= 0 && b >= 0 && a != b) {
                        const double xc = map.cell_re(ix) + nudge;
                        const double ylo = map.cell_im(run_start - 1);
                        const double yhi = map.cell_im(iy);
                        vote(a, b, vertical_crossings(ix, xc, ylo, yhi) % 2 == 1);
                    }
                }
                run_start = -1;
            }
        }
    }
    for (int iy = 0; iy < ny; ++iy) {
        int run_start = -1;
        for (int ix = 0; ix <= nx; ++ix) {
            const bool wall = ix < nx && bmask[std::size_t(iy) * nx + ix];
            if (wall && run_start < 0) run_start = ix;
            if (!wall && run_start >= 0) {
                if (run_start > 0 && ix < nx) {
                    const int a = comp[std::size_t(iy) * nx + run_start - 1];
                    const int b = comp[std::size_t(iy) * nx + ix];
                    if (a >= 0 && b >= 0 && a != b) {
                        const double yc = map.cell_im(iy) + nudge;
                        const double xlo = map.cell_re(run_start - 1);
                        const double xhi = map.cell_re(ix);
                        vote(a, b, horizontal_crossings(iy, yc, xlo, xhi) % 2 == 1);
                    }
                }
                run_start = -1;
            }
        }
    }
    std::vector<std::vector<int>> adj(ncomp);
    for (const auto& [pr, score] : votes) {
        if (score <= 0) continue;
        adj[pr.first].push_back(pr.second);
        adj[pr.second].push_back(pr.first);
    }

    // 2-color from the components touching the top edge (Outside)
    std::vector<int> color(ncomp, -1);
    std::queue<int> q;
    for (int ix = 0; ix < nx; ++ix) {
        const std::size_t i = std::size_t(ny - 1) * nx + ix;
        const int c = comp[i];
        if (c >= 0 && color[c] < 0) {
            color[c] = 0;
            q.push(c);
        }
    }
    std::vector<int> depth(ncomp, 0);
    while (!q.empty()) {
        const int c = q.front();
        q.pop();
        for (int nb : adj[c]) {
            if (color[nb] < 0) {
                color[nb] = 1 - color[c];
                depth[nb] = depth[c] + 1;
                map.coloring_iterations = std::max(map.coloring_iterations, depth[nb]);
                q.push(nb);
            }
        }
    }

    // pointwise truth at every non-boundary cell center
    std::vector<char> truth(ncell, 0);
    for (std::size_t i = 0; i < ncell; ++i) {
        if (bmask[i]) continue;
        const int ix = int(i % nx), iy = int(i / nx);
        try {
            truth[i] = contains(ComplexPoint(map.cell_re(ix), map.cell_im(iy)), box, prm)
                           .inside
                           ? 1
                           : 0;
        } catch (const numeric_error&) {
            truth[i] = 0;
        }
    }

    std::size_t checked = 0, agreed = 0;
    std::vector<std::size_t> comp_total(ncomp, 0), comp_inside(ncomp, 0),
        comp_mismatch(ncomp, 0);
    for (std::size_t i = 0; i < ncell; ++i) {
        if (bmask[i]) continue;
        const int c = comp[i];
        ++checked;
        ++comp_total[c];
        if (truth[i]) ++comp_inside[c];
        const int label = color[c] < 0 ? -1 : color[c];
        if (label == truth[i])
            ++agreed;
        else
            ++comp_mismatch[c];
    }
    map.pre_fallback_agreement = checked ? double(agreed) / double(checked) : 1.0;

    for (int c = 0; c < ncomp; ++c) {
        if (color[c] < 0 || comp_mismatch[c] > 0) {
            color[c] = (2 * comp_inside[c] > comp_total[c]) ? 1 : 0;
            map.fallback_used = true;
        }
    }

    // stamp the one-dimensional parts (axis segments, isolated points,
    // curve/axis intersections, special points) into the label mask
    const AxisStructure ax = axis_segments(box, prm);
    for (const auto& seg : ax.segments) {
        const double lo = std::max(seg.mu_lo, viewport.im_lo);
        const double hi = std::min(seg.mu_hi, viewport.im_hi);
        if (lo <= hi) raster.segment(0.0, lo, 0.0, hi);
    }
    for (double mu : ax.isolated) raster.mark(0.0, mu);
    for (const auto& curve : curves) {
        for (double mu : curve.axis_mu) raster.mark(0.0, mu);
        for (const auto& s : curve.special)
            if (!s.at_infinity) raster.mark(s.re(), s.im());
    }

    map.labels.assign(ncell, CellLabel::Outside);
    for (std::size_t i = 0; i < ncell; ++i) {
        if (bmask[i]) {
            map.labels[i] = CellLabel::Boundary;
            continue;
        }
        int label = color[comp[i]];
        if (label != truth[i]) {  // residual per-cell correction
            label = truth[i];
            map.fallback_used = true;
        }
        map.labels[i] = label ? CellLabel::Inside : CellLabel::Outside;
    }

    // inside components, joined across boundary cells
    std::vector<int> comp2(ncell, -1);
    for (std::size_t start = 0; start < ncell; ++start) {
        if (comp2[start] >= 0 || map.labels[start] == CellLabel::Outside) continue;
        bool has_inside = false;
        std::queue<std::size_t> fq;
        fq.push(start);
        comp2[start] = 1;
        while (!fq.empty()) {
            const std::size_t cur = fq.front();
            fq.pop();
            if (map.labels[cur] == CellLabel::Inside) has_inside = true;
            const int ix = int(cur % nx), iy = int(cur / nx);
            const int nbs[4][2] = {{ix - 1, iy}, {ix + 1, iy}, {ix, iy - 1}, {ix, iy + 1}};
            for (const auto& nb : nbs) {
                if (nb[0] < 0 || nb[0] >= nx || nb[1] < 0 || nb[1] >= ny) continue;
                const std::size_t j = std::size_t(nb[1]) * nx + nb[0];
                if (comp2[j] >= 0 || map.labels[j] == CellLabel::Outside) continue;
                comp2[j] = 1;
                fq.push(j);
            }
        }
        if (has_inside) ++map.inside_component_count;
    }
    return map;
}

}  // namespace ratrange
