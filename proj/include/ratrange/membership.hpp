#pragma once

#include "ratrange/core.hpp"

namespace ratrange {

// Closed-form inverse maps: the unique (alpha, beta) whose quartic has an
// off-axis omega as a root. Both blow up on the disk boundary.
double beta_hat(complex omega, const ProblemParams& params);
double alpha_hat(complex omega, const ProblemParams& params);

enum class MembershipWitness {
    SpecialZero,
    SpecialDeltaPlus,
    SpecialDeltaMinus,
    SpecialInfinity,
    AxisCondition,
    OffAxis,
    DiskBoundaryExcluded,
};

struct MembershipVerdict {
    bool inside = false;
    MembershipWitness witness = MembershipWitness::OffAxis;
    // OffAxis witness values (NaN otherwise).
    double beta_value = std::numeric_limits<double>::quiet_NaN();
    double alpha_value = std::numeric_limits<double>::quiet_NaN();
    // True when the deciding quantity sits on an interval endpoint.
    bool boundary_flag = false;
};

// Exact membership test for the enclosure of the numerical range.
MembershipVerdict contains(const ComplexPoint& omega, const OmegaBox& box,
                           const ProblemParams& params);

struct SignRegions {
    bool in_pi_beta;
    bool in_pi_alpha;
};

// Sign regions controlling beta_hat >= 0 and alpha_hat >= 0 off the axis.
SignRegions sign_regions(complex omega, const ProblemParams& params);

}  // namespace ratrange
