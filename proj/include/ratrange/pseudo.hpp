#pragma once

#include "ratrange/axis.hpp"
#include "ratrange/membership.hpp"

namespace ratrange {

// t_{(alpha,beta)}(omega) = alpha - lambda - beta * kappa.
struct KappaLambda {
    complex kappa;
    complex lambda;
};

KappaLambda kappa_lambda(complex omega, const ProblemParams& params);

enum class Epsilon0Branch {
    AxisSeparable,  // kappa_Re = 0: the two squares minimize independently
    LowerCorner,    // candidate (alpha_lo, clamped beta)
    UpperCorner,    // candidate (alpha_hi, clamped beta)
    Interior,       // candidate with alpha = beta kappa_Re + lambda_Re
};

struct Epsilon0Result {
    double value = 0.0;
    double alpha = 0.0;  // argmin; +-inf never wins (|t| diverges in alpha)
    double beta = 0.0;
    Epsilon0Branch branch = Epsilon0Branch::AxisSeparable;
};

// Exact minimum of |t_{(alpha,beta)}(omega)| over the box (constrained
// least squares in closed form).
Epsilon0Result epsilon0(complex omega, const OmegaBox& box, const ProblemParams& params);

// ||T^{-1}(omega)|| <= 1/epsilon0; +infinity inside the enclosure.
double resolvent_bound(complex omega, const OmegaBox& box, const ProblemParams& params);

// Level set epsilon0 = epsilon as stitched polylines over the viewport.
std::vector<std::vector<ComplexPoint>> pseudo_contour(const OmegaBox& box,
                                                      double epsilon,
                                                      const Viewport& viewport,
                                                      int resolution,
                                                      const ProblemParams& params);

// Axis structure of the epsilon-pseudo enclosure: the alpha interval
// inflated by epsilon on both ends.
AxisStructure pseudo_axis_segments(const OmegaBox& box, double epsilon,
                                   const ProblemParams& params);

}  // namespace ratrange
