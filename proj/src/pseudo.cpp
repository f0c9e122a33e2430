#include "ratrange/pseudo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

namespace ratrange {

KappaLambda kappa_lambda(complex omega, const ProblemParams& prm) {
    if (near_pole(omega, prm)) throw pole_evaluation_error();
    const complex w2 = omega * omega;
    const complex den = prm.c - complex(0.0, prm.d) * omega - w2;
    return {w2 / den, w2};
}

Epsilon0Result epsilon0(complex omega, const OmegaBox& box, const ProblemParams& prm) {
    const KappaLambda kl = kappa_lambda(omega, prm);
    const double kr = kl.kappa.real(), ki = kl.kappa.imag();
    const double lr = kl.lambda.real(), li = kl.lambda.imag();

    auto clampv = [](double v, double lo, double hi) {
        return std::min(std::max(v, lo), hi);
    };
    auto abs_t = [&](double a, double b) {
        return std::hypot(a - kr * b - lr, ki * b + li);
    };

    Epsilon0Result res;
    if (kr == 0.0) {
        // |t|^2 separates into an alpha square and a beta square
        res.branch = Epsilon0Branch::AxisSeparable;
        res.alpha = clampv(lr, box.alpha_lo, box.alpha_hi);
        res.beta = ki != 0.0 ? clampv(-li / ki, box.beta_lo, box.beta_hi) : box.beta_lo;
        res.value = abs_t(res.alpha, res.beta);
    } else {
        const double k2 = kr * kr + ki * ki;
        auto beta_star = [&](double a_end) {
            // unconstrained minimizer of |t|^2 in beta at fixed alpha
            return -(ki * li - kr * (a_end - lr)) / k2;
        };
        struct Cand {
            double a, b;
            Epsilon0Branch br;
        };
        std::vector<Cand> cands;
        if (std::isfinite(box.alpha_lo))
            cands.push_back({box.alpha_lo,
                             clampv(beta_star(box.alpha_lo), box.beta_lo, box.beta_hi),
                             Epsilon0Branch::LowerCorner});
        if (std::isfinite(box.alpha_hi))
            cands.push_back({box.alpha_hi,
                             clampv(beta_star(box.alpha_hi), box.beta_lo, box.beta_hi),
                             Epsilon0Branch::UpperCorner});
        // betas whose alpha-optimum falls inside the alpha interval
        const double b1 = (box.alpha_lo - lr) / kr;
        const double b2 = (box.alpha_hi - lr) / kr;
        const double int_lo = std::max(std::min(b1, b2), box.beta_lo);
        const double int_hi = std::min(std::max(b1, b2), box.beta_hi);
        if (int_lo <= int_hi) {
            double b;
            if (ki != 0.0) {
                b = clampv(-li / ki, int_lo, int_hi);
            } else if (std::isfinite(int_lo) && std::isfinite(int_hi)) {
                b = 0.5 * (int_lo + int_hi);  // arbitrary; midpoint for determinism
            } else {
                b = std::isfinite(int_lo) ? int_lo
                                          : (std::isfinite(int_hi) ? int_hi : 0.0);
            }
            cands.push_back({b * kr + lr, b, Epsilon0Branch::Interior});
        }
        if (cands.empty()) throw numeric_error("epsilon0: empty candidate set");
        bool first = true;
        for (const auto& cand : cands) {
            const double v = abs_t(cand.a, cand.b);
            if (first || v < res.value) {
                res.value = v;
                res.alpha = cand.a;
                res.beta = cand.b;
                res.branch = cand.br;
                first = false;
            }
        }
    }
    // the closed enclosure is exactly the zero set
    if (res.value != 0.0 && contains(ComplexPoint(omega), box, prm).inside)
        res.value = 0.0;
    return res;
}

double resolvent_bound(complex omega, const OmegaBox& box, const ProblemParams& prm) {
    const double e0 = epsilon0(omega, box, prm).value;
    return e0 > 0.0 ? 1.0 / e0 : inf;
}

AxisStructure pseudo_axis_segments(const OmegaBox& box, double epsilon,
                                   const ProblemParams& prm) {
    if (!(epsilon >= 0.0)) throw config_error("epsilon must be >= 0");
    const double lo =
        std::isfinite(box.alpha_lo) ? box.alpha_lo - epsilon : box.alpha_lo;
    const double hi =
        std::isfinite(box.alpha_hi) ? box.alpha_hi + epsilon : box.alpha_hi;
    return axis_segments(OmegaBox(lo, hi, box.beta_lo, box.beta_hi), prm);
}

namespace {

using EdgeKey = std::uint64_t;

EdgeKey edge_key(int ix, int iy, int dir, int n) {
    return (EdgeKey(iy) * EdgeKey(n + 2) + EdgeKey(ix)) * 2 + EdgeKey(dir);
}

}  // namespace

std::vector<std::vector<ComplexPoint>> pseudo_contour(const OmegaBox& box,
                                                      double epsilon,
                                                      const Viewport& vp,
                                                      int resolution,
                                                      const ProblemParams& prm) {
    if (!(epsilon > 0.0)) throw config_error("epsilon must be > 0");
    if (resolution < 8) throw config_error("resolution must be >= 8");
    const int n = resolution;
    const double dx = (vp.re_hi - vp.re_lo) / n;
    const double dy = (vp.im_hi - vp.im_lo) / n;

    auto value_at = [&](double x, double y) {
        try {
            return epsilon0(complex(x, y), box, prm).value;
        } catch (const pole_evaluation_error&) {
            return epsilon0(complex(x + 1e-9 * (1.0 + std::abs(x)), y + 1e-9), box, prm)
                .value;
        }
    };

    std::vector<double> f(std::size_t(n + 1) * (n + 1));
    for (int iy = 0; iy <= n; ++iy)
        for (int ix = 0; ix <= n; ++ix)
            f[std::size_t(iy) * (n + 1) + ix] =
                value_at(vp.re_lo + ix * dx, vp.im_lo + iy * dy);

    auto inside = [&](int ix, int iy) {
        return f[std::size_t(iy) * (n + 1) + ix] < epsilon;
    };

    const double tol = 1e-6 * std::max(1.0, epsilon);
    std::map<EdgeKey, ComplexPoint> verts;
    auto crossing = [&](int ix, int iy, int dir) -> EdgeKey {
        const EdgeKey key = edge_key(ix, iy, dir, n);
        if (verts.count(key)) return key;
        double x0 = vp.re_lo + ix * dx, y0 = vp.im_lo + iy * dy;
        double x1 = dir == 0 ? x0 + dx : x0;
        double y1 = dir == 0 ? y0 : y0 + dy;
        double f0 = f[std::size_t(iy) * (n + 1) + ix];
        double f1 = dir == 0 ? f[std::size_t(iy) * (n + 1) + ix + 1]
                             : f[std::size_t(iy + 1) * (n + 1) + ix];
        // bisect the edge to the requested level tolerance
        double mx = 0.5 * (x0 + x1), my = 0.5 * (y0 + y1);
        for (int iter = 0; iter < 60; ++iter) {
            mx = 0.5 * (x0 + x1);
            my = 0.5 * (y0 + y1);
            const double fm = value_at(mx, my);
            if (std::abs(fm - epsilon) <= tol) break;
            if ((fm < epsilon) == (f0 < epsilon)) {
                x0 = mx;
                y0 = my;
                f0 = fm;
            } else {
                x1 = mx;
                y1 = my;
                f1 = fm;
            }
        }
        verts[key] = ComplexPoint(mx, my);
        return key;
    };

    std::vector<std::pair<EdgeKey, EdgeKey>> segments;
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const bool s00 = inside(ix, iy), s10 = inside(ix + 1, iy);
            const bool s01 = inside(ix, iy + 1), s11 = inside(ix + 1, iy + 1);
            std::vector<EdgeKey> keys;
            if (s00 != s10) keys.push_back(crossing(ix, iy, 0));          // bottom
            if (s10 != s11) keys.push_back(crossing(ix + 1, iy, 1));      // right
            if (s01 != s11) keys.push_back(crossing(ix, iy + 1, 0));      // top
            if (s00 != s01) keys.push_back(crossing(ix, iy, 1));          // left
            if (keys.size() == 2) {
                segments.push_back({keys[0], keys[1]});
            } else if (keys.size() == 4) {
                // saddle: resolve with the center value
                const double fc = value_at(vp.re_lo + (ix + 0.5) * dx,
                                           vp.im_lo + (iy + 0.5) * dy);
                const bool center_in = fc < epsilon;
                // keys order: bottom, right, top, left
                if (center_in == s00) {
                    segments.push_back({keys[0], keys[1]});  // bottom-right
                    segments.push_back({keys[2], keys[3]});  // top-left
                } else {
                    segments.push_back({keys[0], keys[3]});  // bottom-left
                    segments.push_back({keys[1], keys[2]});  // right-top
                }
            }
        }
    }

    // stitch segments into polylines
    std::map<EdgeKey, std::vector<std::size_t>> incident;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        incident[segments[i].first].push_back(i);
        incident[segments[i].second].push_back(i);
    }
    std::vector<char> used(segments.size(), 0);
    std::vector<std::vector<ComplexPoint>> polylines;
    auto walk = [&](std::size_t start, EdgeKey from) {
        std::vector<ComplexPoint> line{verts[from]};
        std::size_t seg = start;
        EdgeKey cur = from;
        while (!used[seg]) {
            used[seg] = 1;
            cur = segments[seg].first == cur ? segments[seg].second : segments[seg].first;
            line.push_back(verts[cur]);
            std::size_t next = seg;
            for (std::size_t cand : incident[cur])
                if (!used[cand]) {
                    next = cand;
                    break;
                }
            if (next == seg) break;
            seg = next;
        }
        polylines.push_back(std::move(line));
    };
    // open chains first (endpoints of odd degree), then cycles
    for (const auto& [key, segs] : incident) {
        if (segs.size() % 2 == 0) continue;
        for (std::size_t s : segs)
            if (!used[s]) walk(s, key);
    }
    for (std::size_t i = 0; i < segments.size(); ++i)
        if (!used[i]) walk(i, segments[i].first);
    return polylines;
}

}  // namespace ratrange
