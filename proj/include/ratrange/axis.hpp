#pragma once

#include "ratrange/core.hpp"

namespace ratrange {

// Real roots of q_beta(mu) = mu^4 + 2d mu^3 + (2c+d^2) mu^2
//                            + d(beta/2+2c) mu + c(beta+c).
std::vector<RealRoot> q_beta_real_roots(double beta, const ProblemParams& params);

struct ConstrainedRealRoot {
    double value;
    int multiplicity;
    bool satisfies_constraint;  // nu <= -2c/d, strict when alpha < -c
};

// Real roots of q_alpha(nu) = nu^4 + (d/2) nu^3 - (alpha d/2) nu - alpha c,
// flagged against the admissibility constraint.
std::vector<ConstrainedRealRoot> q_alpha_real_roots(double alpha,
                                                    const ProblemParams& params);

struct CornerContribution {
    double alpha;  // +-inf allowed
    double beta;
    int multiplicity;
};

struct AxisPoint {
    double mu;  // +-inf allowed
    int m;      // total multiplicity over the generating corner pairs
    bool in_pole_segment;  // true when the point was collected inside N
    std::vector<CornerContribution> generators;
};

struct CornerRootSets {
    std::vector<AxisPoint> r1;  // axis corner roots outside N (diagonal corners)
    std::vector<AxisPoint> r2;  // axis corner roots inside N (anti-diagonal corners)
};

CornerRootSets corner_root_sets(const OmegaBox& box, const ProblemParams& params);

struct AxisStructure {
    struct Segment {
        double mu_lo;  // -inf allowed
        double mu_hi;  // +inf allowed
    };
    std::vector<Segment> segments;
    std::vector<double> isolated;
    std::vector<AxisPoint> points;  // all collected candidates with multiplicities

    bool contains_mu(double mu, double tol = 0.0) const {
        for (const auto& s : segments)
            if (mu >= s.mu_lo - tol && mu <= s.mu_hi + tol) return true;
        for (double p : isolated)
            if (std::abs(mu - p) <= tol) return true;
        return false;
    }
};

// Segment/isolated-point structure of the enclosure on the imaginary axis.
AxisStructure axis_segments(const OmegaBox& box, const ProblemParams& params);

}  // namespace ratrange
