#include "ratrange/axis.hpp"

#include <algorithm>
#include <cmath>

namespace ratrange {

namespace {

// Axis roots i*mu of p_{(alpha,beta)} are real roots of
// h(mu) = mu^4 + d mu^3 + (alpha+beta+c) mu^2 + alpha d mu + alpha c.
// For c = 0 the forced root mu = 0 is factored out and the cubic is used;
// zero is re-added by the membership rule in axis_segments.
std::vector<RealRoot> corner_axis_roots(double alpha, double beta,
                                        const ProblemParams& params) {
    if (params.c == 0.0) {
        return real_cubic_roots(1.0, params.d, alpha + beta, alpha * params.d);
    }
    return real_quartic_roots(params.d, alpha + beta + params.c, alpha * params.d,
                              alpha * params.c);
}

struct PoleSegment {
    bool present = false;
    double lo = 0.0, hi = 0.0;

    bool contains(double mu) const {
        if (!present) return false;
        if (!std::isfinite(mu)) return false;
        const double tol = kRootClusterTol * (1.0 + std::abs(mu));
        return mu >= lo - tol && mu <= hi + tol;
    }
};

PoleSegment pole_segment(const ProblemParams& params) {
    PoleSegment n;
    const double disc = params.d * params.d / 4.0 - params.c;
    if (disc < -1e-12 * (1.0 + params.d * params.d)) return n;
    const double s = std::sqrt(std::max(disc, 0.0));
    n.present = true;
    n.lo = -params.d / 2.0 - s;
    n.hi = -params.d / 2.0 + s;
    return n;
}

struct Corner {
    double alpha;
    double beta;
};

std::vector<std::pair<double, int>> corner_mu_contributions(const Corner& corner,
                                                            const ProblemParams& params,
                                                            const PoleSegment& n) {
    std::vector<std::pair<double, int>> out;
    if (!std::isfinite(corner.alpha)) {
        // limits alpha -> +-inf: roots delta_+, delta_-, and infinity; the
        // infinite roots approach +-i*inf only for alpha -> -inf
        if (n.present) {
            out.push_back({n.hi, 1});  // Im(delta_+)
            out.push_back({n.lo, 1});  // Im(delta_-)
        }
        if (corner.alpha < 0.0) {
            out.push_back({inf, 1});
            out.push_back({-inf, 1});
        }
        return out;
    }
    if (!std::isfinite(corner.beta)) {
        out.push_back({0.0, 2});
        return out;
    }
    for (const auto& r : corner_axis_roots(corner.alpha, corner.beta, params))
        out.push_back({r.value, r.multiplicity});
    return out;
}

void accumulate(std::vector<AxisPoint>& points, double mu, int mult, const Corner& corner,
                bool in_pole_segment) {
    for (auto& p : points) {
        if (p.in_pole_segment != in_pole_segment) continue;
        const bool same =
            (std::isinf(mu) && p.mu == mu) ||
            (std::isfinite(mu) && std::isfinite(p.mu) &&
             std::abs(p.mu - mu) <= kRootClusterTol * (1.0 + std::abs(mu)));
        if (same) {
            p.m += mult;
            p.generators.push_back({corner.alpha, corner.beta, mult});
            return;
        }
    }
    AxisPoint p;
    p.mu = mu;
    p.m = mult;
    p.in_pole_segment = in_pole_segment;
    p.generators.push_back({corner.alpha, corner.beta, mult});
    points.push_back(p);
}

std::vector<Corner> dedupe(std::vector<Corner> corners) {
    if (corners.size() == 2 && corners[0].alpha == corners[1].alpha &&
        corners[0].beta == corners[1].beta) {
        corners.pop_back();
    }
    return corners;
}

}  // namespace

std::vector<RealRoot> q_beta_real_roots(double beta, const ProblemParams& params) {
    if (!(beta > 0.0)) throw config_error("q_beta requires beta > 0");
    const double c = params.c, d = params.d;
    return real_quartic_roots(2.0 * d, 2.0 * c + d * d, d * (beta / 2.0 + 2.0 * c),
                              c * (beta + c));
}

std::vector<ConstrainedRealRoot> q_alpha_real_roots(double alpha,
                                                    const ProblemParams& params) {
    if (alpha == 0.0) throw config_error("q_alpha requires alpha != 0");
    const double c = params.c, d = params.d;
    auto roots = real_quartic_roots(d / 2.0, 0.0, -alpha * d / 2.0, -alpha * c);
    std::vector<ConstrainedRealRoot> out;
    const double bound = -2.0 * c / d;
    for (const auto& r : roots) {
        const double tol = 1e-9 * (1.0 + std::abs(r.value));
        bool ok;
        if (alpha < -c)
            ok = r.value < bound - tol;
        else
            ok = r.value <= bound + tol;
        out.push_back({r.value, r.multiplicity, ok});
    }
    return out;
}

CornerRootSets corner_root_sets(const OmegaBox& box, const ProblemParams& params) {
    const PoleSegment n = pole_segment(params);
    const auto tau1 =
        dedupe({{box.alpha_lo, box.beta_lo}, {box.alpha_hi, box.beta_hi}});
    const auto tau2 =
        dedupe({{box.alpha_lo, box.beta_hi}, {box.alpha_hi, box.beta_lo}});

    CornerRootSets sets;
    for (const auto& corner : tau1) {
        for (auto [mu, mult] : corner_mu_contributions(corner, params, n)) {
            if (n.contains(mu)) continue;  // R1 excludes N
            accumulate(sets.r1, mu, mult, corner, false);
        }
    }
    for (const auto& corner : tau2) {
        for (auto [mu, mult] : corner_mu_contributions(corner, params, n)) {
            if (!n.contains(mu)) continue;  // R2 is restricted to N
            accumulate(sets.r2, mu, mult, corner, true);
        }
    }
    return sets;
}

AxisStructure axis_segments(const OmegaBox& box, const ProblemParams& params) {
    AxisStructure out;

    const bool alpha_degenerate = box.alpha_lo == box.alpha_hi;
    const bool beta_degenerate = box.beta_lo == box.beta_hi;
    if (alpha_degenerate && beta_degenerate) {
        // single quartic: the axis set is its axis roots, all isolated
        for (const auto& r : corner_axis_roots(box.alpha_lo, box.beta_lo, params))
            out.isolated.push_back(r.value);
        if (params.c == 0.0 && !out.contains_mu(0.0, 1e-12)) out.isolated.push_back(0.0);
        std::sort(out.isolated.begin(), out.isolated.end());
        return out;
    }

    const CornerRootSets sets = corner_root_sets(box, params);
    out.points = sets.r1;
    out.points.insert(out.points.end(), sets.r2.begin(), sets.r2.end());

    std::vector<double> odd;
    for (const auto& p : out.points)
        if (p.m % 2 == 1) odd.push_back(p.mu);
    std::sort(odd.begin(), odd.end());
    if (odd.size() % 2 != 0) throw odd_pairing_error();
    for (std::size_t j = 0; j + 1 < odd.size(); j += 2)
        out.segments.push_back({odd[j], odd[j + 1]});

    for (const auto& p : out.points) {
        if (p.m % 2 == 1) continue;
        const double tol = kRootClusterTol * (1.0 + std::abs(p.mu));
        if (!out.contains_mu(p.mu, tol)) out.isolated.push_back(p.mu);
    }
    if (params.c == 0.0 && !out.contains_mu(0.0, 1e-12)) out.isolated.push_back(0.0);
    std::sort(out.isolated.begin(), out.isolated.end());
    return out;
}

}  // namespace ratrange
