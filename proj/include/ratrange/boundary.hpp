#pragma once

#include <optional>
#include <string>

#include "ratrange/axis.hpp"
#include "ratrange/membership.hpp"

namespace ratrange {

// Nonnegative real part solving one branch equation at ordinate y, if the
// radicands admit a genuine off-axis curve point there (round-trip checked).
std::optional<double> branch_re_beta(double beta, double y, int outer_sign,
                                     const ProblemParams& params);
std::optional<double> branch_re_alpha(double alpha, double y, int outer_sign,
                                      const ProblemParams& params);

struct BranchSample {
    double re;
    double im;
    int outer_sign;  // sign in front of the inner radical
    int side;        // left/right sign of the real part
};

// One edge curve, sampled on an omega_Im grid. Strands are maximal ordered
// polylines of one branch channel; axis crossings and limit points are kept
// separately so downstream consumers can treat them exactly.
struct BranchCurve {
    enum class Family { FixedBeta, FixedAlpha, BetaZero, AlphaZero };
    Family family;
    double value;     // the fixed alpha or beta
    std::string tag;  // edge label for serialization ("beta_lo", ...)
    std::vector<std::vector<BranchSample>> strands;
    std::vector<double> axis_mu;         // on-axis intersections
    std::vector<ComplexPoint> special;   // 0, infinity, delta+-
};

std::vector<double> default_im_grid(double im_lo, double im_hi, int n = 2048);

// Grid extents wide enough to cover the respective curve families.
double curve_im_lower_bound_beta(double beta, const ProblemParams& params);
double curve_im_lower_bound_alpha(double alpha, const ProblemParams& params);

BranchCurve curve_fixed_beta(double beta, const std::vector<double>& im_grid,
                             const ProblemParams& params);
BranchCurve curve_fixed_alpha(double alpha, const std::vector<double>& im_grid,
                              const ProblemParams& params);

// All edge curves of the box, restricted to the box by the inverse maps.
std::vector<BranchCurve> boundary_set(const OmegaBox& box,
                                      const std::vector<double>& im_grid,
                                      const ProblemParams& params);
std::vector<BranchCurve> boundary_set(const OmegaBox& box, const ProblemParams& params);

Viewport default_viewport(const OmegaBox& box, const ProblemParams& params);

enum class CellLabel : unsigned char { Outside, Inside, Boundary };

struct RegionMap {
    Viewport viewport{};
    int nx = 0, ny = 0;
    std::vector<CellLabel> labels;  // row-major, iy * nx + ix, iy = 0 at im_lo
    int inside_component_count = 0;
    bool fallback_used = false;
    double pre_fallback_agreement = 1.0;  // fraction of non-boundary cells
    int coloring_iterations = 0;

    CellLabel at(int ix, int iy) const { return labels[std::size_t(iy) * nx + ix]; }
    double cell_re(int ix) const {
        return viewport.re_lo + (ix + 0.5) * (viewport.re_hi - viewport.re_lo) / nx;
    }
    double cell_im(int iy) const {
        return viewport.im_lo + (iy + 0.5) * (viewport.im_hi - viewport.im_lo) / ny;
    }
};

// Raster inside/outside classification of the enclosure over the viewport,
// cross-checked cell-by-cell against the exact membership test.
RegionMap classify_regions(const OmegaBox& box, const Viewport& viewport, int resolution,
                           const ProblemParams& params);

}  // namespace ratrange
