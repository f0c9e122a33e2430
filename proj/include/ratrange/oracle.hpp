#pragma once

#include <cstdint>

#include "ratrange/core.hpp"

namespace ratrange {

// Diagonal selfadjoint realization of the box: numerical ranges are exactly
// the prescribed intervals (endpoints attained). Unbounded alpha ends are
// truncated to +-truncation for the matrix; the analytic modules keep the
// true infinite interval.
struct MatrixPair {
    std::vector<double> a_diag;
    std::vector<double> b_diag;
};

MatrixPair make_matrix_pair(const OmegaBox& box, int n, double truncation = 1e6);

// Quartic roots at (alpha_u, beta_u) for random complex unit vectors u.
std::vector<ComplexPoint> sample_numerical_range(const MatrixPair& pair, int n_samples,
                                                 std::uint64_t seed,
                                                 const ProblemParams& params);

// Smallest singular value of T(omega) for the diagonal realization:
// entrywise minimum of |t_{(a_k, b_k)}(omega)|.
double sigma_min_T(const MatrixPair& pair, complex omega, const ProblemParams& params);

}  // namespace ratrange
