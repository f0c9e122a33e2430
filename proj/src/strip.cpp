#include "ratrange/strip.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

namespace ratrange {

namespace {

double convert_dhat(double dhat) { return 2.0 * std::sqrt(std::max(dhat, 0.0)); }

bool poles_on_alpha_curve(double alpha, const ProblemParams& prm) {
    const double gap = prm.d * prm.d - 4.0 * prm.c;
    const double guard = 1e-12 * (1.0 + prm.d * prm.d);
    if (gap < -guard) return true;
    if (std::abs(gap) <= guard) return !(alpha < -prm.c);
    return false;
}

// Attainment test for one curve family: on-axis touch ordinates plus the
// off-axis branch equations, with a small probe window for edge queries.
struct Occupancy {
    std::function<bool(double)> off_axis;
    std::vector<double> axis;   // on-axis curve ordinates
    std::vector<double> extra;  // attained but off-axis (pole ordinate)

    bool attained(double y) const {
        for (double mu : axis)
            if (std::abs(y - mu) <= 1e-9 * (1.0 + std::abs(mu))) return true;
        for (double mu : extra)
            if (std::abs(y - mu) <= 1e-9 * (1.0 + std::abs(mu))) return true;
        return off_axis(y);
    }
    bool near_attained(double y) const {
        static constexpr double offs[] = {0.0,   1e-8, -1e-8, 1e-7, -1e-7,
                                          3e-7, -3e-7, 1e-6,  -1e-6};
        for (double o : offs)
            if (attained(y + o)) return true;
        return false;
    }
};

Occupancy occupancy_beta(double beta, const ProblemParams& prm) {
    Occupancy occ;
    occ.off_axis = [beta, prm](double y) {
        return branch_re_beta(beta, y, +1, prm).has_value() ||
               branch_re_beta(beta, y, -1, prm).has_value();
    };
    for (const auto& r : q_beta_real_roots(beta, prm)) occ.axis.push_back(r.value);
    return occ;
}

Occupancy occupancy_alpha(double alpha, const ProblemParams& prm) {
    Occupancy occ;
    occ.off_axis = [alpha, prm](double y) {
        return branch_re_alpha(alpha, y, +1, prm).has_value() ||
               branch_re_alpha(alpha, y, -1, prm).has_value();
    };
    for (const auto& r : q_alpha_real_roots(alpha, prm))
        if (r.satisfies_constraint) occ.axis.push_back(r.value);
    if (poles_on_alpha_curve(alpha, prm)) occ.extra.push_back(-prm.d / 2.0);
    return occ;
}

struct Band {
    double lo, hi;
};

// Maximal verified curve-free band between attained candidate ordinates.
std::optional<Band> widest_band(std::vector<double> cand, const Occupancy& occ) {
    std::sort(cand.begin(), cand.end());
    std::vector<double> ys;
    for (double y : cand) {
        if (!std::isfinite(y)) continue;
        if (!ys.empty() && std::abs(y - ys.back()) <= 1e-9 * (1.0 + std::abs(y)))
            continue;
        ys.push_back(y);
    }
    const std::size_t n = ys.size();
    std::vector<char> att(n);
    for (std::size_t i = 0; i < n; ++i) att[i] = occ.near_attained(ys[i]) ? 1 : 0;

    auto gap_empty = [&](double a, double b) {
        constexpr int kScan = 800;
        constexpr double eps = 1e-6;
        if (b - a <= 2.0 * eps) return true;
        for (int i = 1; i < kScan; ++i) {
            const double y = a + (b - a) * double(i) / kScan;
            if (y <= a + eps || y >= b - eps) continue;
            if (occ.attained(y)) return false;
        }
        return true;
    };

    std::optional<Band> best;
    for (std::size_t i = 0; i < n; ++i) {
        if (!att[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!gap_empty(ys[j - 1], ys[j])) break;
            if (att[j]) {
                if (!best || ys[j] - ys[i] > best->hi - best->lo)
                    best = Band{ys[i], ys[j]};
                break;
            }
        }
    }
    return best;
}

// Edge point(s) attaining an ordinate: axis root, pole pair, or branch pair.
void fill_edge(double y, const Occupancy& occ,
               const std::function<std::optional<double>(double, int)>& branch,
               const ProblemParams& prm, bool& on_axis,
               std::vector<ComplexPoint>& pts) {
    for (double mu : occ.axis) {
        if (std::abs(y - mu) <= 1e-6 * (1.0 + std::abs(mu))) {
            on_axis = true;
            pts.push_back(ComplexPoint(0.0, mu));
            return;
        }
    }
    on_axis = false;
    for (double mu : occ.extra) {
        if (std::abs(y - mu) <= 1e-6 * (1.0 + std::abs(mu))) {
            const Poles p = poles(prm);
            pts.push_back(p.delta_plus);
            pts.push_back(p.delta_minus);
            return;
        }
    }
    static constexpr double offs[] = {0.0,   1e-8, -1e-8, 1e-7, -1e-7,
                                      3e-7, -3e-7, 1e-6,  -1e-6, 1e-5, -1e-5};
    for (double o : offs) {
        for (int outer : {+1, -1}) {
            if (auto x = branch(y + o, outer)) {
                pts.push_back(ComplexPoint(*x, y + o));
                pts.push_back(ComplexPoint(-*x, y + o));
                return;
            }
        }
    }
}

double pick_root_in(const std::vector<RealRoot>& roots, double lo, double hi,
                    double tol) {
    for (const auto& r : roots)
        if (r.value > lo + tol && r.value <= hi + tol) return r.value;
    return inf;
}

}  // namespace

DiscriminantThresholds discriminant_ds_beta(double beta, const ProblemParams& prm) {
    if (!(beta > 0.0)) throw config_error("discriminant_ds_beta requires beta > 0");
    DiscriminantThresholds th;
    const double c = prm.c;
    if (c == 0.0) {
        th.d1 = 0.0;
        th.d2 = convert_dhat(27.0 * beta / 32.0);
        return th;
    }
    const double guard = 1e-12 * (1.0 + beta + c);
    th.degenerate =
        std::abs(beta - 4.0 * c) <= guard || std::abs(beta - 8.0 * c) <= guard;

    const double a3 = beta - 8.0 * c;
    const double a2 = -(27.0 * beta * beta / 32.0 - 6.0 * beta * c - 24.0 * c * c);
    const double a1 = -3.0 * c * c * (5.0 * beta + 8.0 * c);
    const double a0 = 8.0 * c * c * c * (beta + c);
    const auto roots = real_cubic_roots(a3, a2, a1, a0);  // sorted ascending
    const double tol = 1e-9 * (1.0 + c);

    th.d1 = convert_dhat(pick_root_in(roots, 0.0, c, tol));
    if (beta >= 4.0 * c - guard) {
        const double dhat2 = pick_root_in(roots, c, inf, tol);
        th.d2 = std::isfinite(dhat2) ? convert_dhat(dhat2) : inf;
        if (beta < 8.0 * c - guard) {
            double dhat3 = -inf;
            for (const auto& r : roots) dhat3 = std::max(dhat3, r.value);
            th.d3 = dhat3 > c + tol ? convert_dhat(dhat3) : inf;
        }
    }
    return th;
}

double d0_alpha(double alpha, const ProblemParams& prm) {
    if (alpha == 0.0) throw config_error("d0_alpha requires alpha != 0");
    const double c = prm.c;
    if (c == 0.0) return alpha > 0.0 ? convert_dhat(27.0 * alpha / 4.0) : 0.0;
    const double a = alpha;
    const auto roots = real_cubic_roots(
        4.0 * a * a * a, -a * a * (27.0 * a * a - 6.0 * a * c + 27.0 * c * c),
        192.0 * a * a * a * c * c, -256.0 * a * a * a * c * c * c);
    const double tol = 1e-9 * (1.0 + c + std::abs(a));
    double dhat = -inf;
    if (alpha > 0.0) {
        for (const auto& r : roots) dhat = std::max(dhat, r.value);
    } else {
        for (const auto& r : roots)
            if (r.value > tol && r.value <= c + tol) dhat = std::max(dhat, r.value);
    }
    if (!std::isfinite(dhat) || dhat < 0.0)
        throw numeric_error("d0_alpha: qualifying discriminant root not found");
    return convert_dhat(dhat);
}

bool strip_exists_beta(double beta, const ProblemParams& prm) {
    if (!(beta > 0.0)) throw config_error("strip_exists_beta requires beta > 0");
    const DiscriminantThresholds th = discriminant_ds_beta(beta, prm);
    return prm.d > std::min(2.0 * std::sqrt(beta), th.d2);
}

MinImag min_imag_beta(double beta, const ProblemParams& prm) {
    if (!(beta > 0.0)) throw config_error("min_imag_beta requires beta > 0");
    const double c = prm.c, d = prm.d;
    double dhat = 0.0;
    if (c > 0.0) {
        const auto roots = real_cubic_roots(
            c, beta * beta / 16.0 - beta * c - 3.0 * c * c,
            c * c * (2.0 * beta + 3.0 * c), -c * c * c * (beta + c));
        dhat = pick_root_in(roots, 0.0, c, 1e-9 * (1.0 + c));
        if (!std::isfinite(dhat)) dhat = 0.0;
    }
    if (d >= 2.0 * std::sqrt(dhat)) {
        double mu = inf;
        for (const auto& r : q_beta_real_roots(beta, prm)) mu = std::min(mu, r.value);
        if (!std::isfinite(mu))
            throw numeric_error("min_imag_beta: no axis root in the on-axis case");
        return {mu, true};
    }
    const double t = 1.0 + 4.0 * beta / (4.0 * c - d * d);
    return {(-d - d * std::sqrt(t)) / 4.0, false};
}

StripReport strip_edges_beta(double beta, const ProblemParams& prm) {
    if (!(beta > 0.0)) throw config_error("strip_edges_beta requires beta > 0");
    StripReport rep;
    const MinImag mi = min_imag_beta(beta, prm);
    rep.min_imag = mi.ordinate;
    rep.min_on_axis = mi.on_axis;
    if (!strip_exists_beta(beta, prm)) return rep;
    rep.exists = true;

    const Occupancy occ = occupancy_beta(beta, prm);
    std::vector<double> cand(occ.axis);
    const double c = prm.c, d = prm.d;
    if (d * d >= 4.0 * beta) {
        const double s = std::sqrt(d * d - 4.0 * beta);
        cand.push_back((-d - s) / 4.0);
        cand.push_back((-d + s) / 4.0);
    }
    const double gap = 4.0 * c - d * d;
    if (gap != 0.0) {
        const double t = 1.0 + 4.0 * beta / gap;
        if (t >= 0.0) {
            cand.push_back((-d - d * std::sqrt(t)) / 4.0);
            cand.push_back((-d + d * std::sqrt(t)) / 4.0);
        }
    }
    const auto band = widest_band(cand, occ);
    if (!band) throw verification_failure();
    rep.s_low = band->lo;
    rep.s_high = band->hi;
    auto branch = [&](double y, int outer) { return branch_re_beta(beta, y, outer, prm); };
    fill_edge(rep.s_low, occ, branch, prm, rep.low_on_axis, rep.low_points);
    fill_edge(rep.s_high, occ, branch, prm, rep.high_on_axis, rep.high_points);
    return rep;
}

StripReport strip_alpha(double alpha, const ProblemParams& prm) {
    if (alpha == 0.0) throw config_error("strip_alpha requires alpha != 0");
    StripReport rep;
    const double c = prm.c, d = prm.d;
    const Occupancy occ = occupancy_alpha(alpha, prm);

    std::vector<double> cand(occ.axis);
    cand.insert(cand.end(), occ.extra.begin(), occ.extra.end());
    if (c > 0.0) {
        const double t = 1.0 - alpha / c;
        if (t >= 0.0) {
            cand.push_back((-d - d * std::sqrt(t)) / 4.0);
            cand.push_back((-d + d * std::sqrt(t)) / 4.0);
        }
        if (std::abs(alpha - c) <= 1e-12 * (1.0 + c)) {
            cand.push_back(-std::sqrt(c));
            if (d * d / 16.0 >= c) {
                const double s = std::sqrt(d * d / 16.0 - c);
                cand.push_back(-d / 4.0 - s);
                cand.push_back(-d / 4.0 + s);
            }
        }
    }

    // global minimum: lowest attained candidate
    std::vector<double> sorted(cand);
    std::sort(sorted.begin(), sorted.end());
    for (double y : sorted) {
        if (!std::isfinite(y) || !occ.near_attained(y)) continue;
        rep.min_imag = y;
        for (double mu : occ.axis)
            if (std::abs(y - mu) <= 1e-6 * (1.0 + std::abs(mu))) rep.min_on_axis = true;
        break;
    }

    if (alpha < 0.0) {
        rep.min_only = true;
        if (!std::isfinite(rep.min_imag)) throw verification_failure();
        const double span = 4.0 * (1.0 + std::abs(rep.min_imag));
        for (int k = 1; k <= 400; ++k) {
            const double y = rep.min_imag - span * double(k) / 400.0;
            if (occ.attained(y)) throw verification_failure();
        }
        return rep;
    }

    rep.exists = alpha < c || d > d0_alpha(alpha, prm);
    if (!rep.exists) return rep;
    const auto band = widest_band(cand, occ);
    if (!band) throw verification_failure();
    rep.s_low = band->lo;
    rep.s_high = band->hi;
    auto branch = [&](double y, int outer) {
        return branch_re_alpha(alpha, y, outer, prm);
    };
    fill_edge(rep.s_low, occ, branch, prm, rep.low_on_axis, rep.low_points);
    fill_edge(rep.s_high, occ, branch, prm, rep.high_on_axis, rep.high_points);
    return rep;
}

}  // namespace ratrange
