#pragma once

#include "ratrange/boundary.hpp"

namespace ratrange {

struct DiscriminantThresholds {
    // fixed-beta family; absent thresholds are +infinity
    double d1 = inf;
    double d2 = inf;
    double d3 = inf;
    // fixed-alpha family
    double d0 = inf;
    // the configuration sits inside a threshold guard band (beta ~ 4c or 8c)
    bool degenerate = false;
};

DiscriminantThresholds discriminant_ds_beta(double beta, const ProblemParams& params);

// Largest d where the q_alpha real-root count changes; 0 when alpha<0, c=0.
double d0_alpha(double alpha, const ProblemParams& params);

bool strip_exists_beta(double beta, const ProblemParams& params);

struct StripReport {
    bool exists = false;
    double s_low = std::numeric_limits<double>::quiet_NaN();
    double s_high = std::numeric_limits<double>::quiet_NaN();
    std::vector<ComplexPoint> low_points, high_points;
    bool low_on_axis = false;
    bool high_on_axis = false;

    // global minimum of the curve ordinates (always reported; for alpha < 0
    // it is the only content, flagged by min_only)
    bool min_only = false;
    double min_imag = std::numeric_limits<double>::quiet_NaN();
    bool min_on_axis = false;
};

// Maximal curve-free horizontal band of the fixed-beta family; candidates
// from the closed forms, selected and certified by a direct curve scan.
StripReport strip_edges_beta(double beta, const ProblemParams& params);

struct MinImag {
    double ordinate;
    bool on_axis;
};

MinImag min_imag_beta(double beta, const ProblemParams& params);

StripReport strip_alpha(double alpha, const ProblemParams& params);

}  // namespace ratrange
