#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <random>
#include <vector>

#include "ratrange/core.hpp"

namespace testhelp {

// Roots of a monic complex polynomial via companion-matrix eigenvalues —
// an independent oracle for the closed-form solvers.
inline std::vector<ratrange::complex> companion_roots(
    const std::vector<ratrange::complex>& coeffs /* c0..c_{n-1}, monic */) {
    const int n = int(coeffs.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -coeffs[std::size_t(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    std::vector<ratrange::complex> roots;
    roots.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

inline std::vector<ratrange::complex> companion_quartic(
    const ratrange::QuarticCoeffs& q) {
    return companion_roots({q.c[0], q.c[1], q.c[2], q.c[3]});
}

// Real roots (near-real eigenvalues) of a monic real quartic.
inline std::vector<double> companion_real_quartic(double a3, double a2, double a1,
                                                  double a0, double tol = 1e-7) {
    std::vector<double> out;
    for (const auto& z : companion_roots({ratrange::complex(a0), ratrange::complex(a1),
                                          ratrange::complex(a2), ratrange::complex(a3)})) {
        if (std::abs(z.imag()) <= tol * (1.0 + std::abs(z))) out.push_back(z.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Greedy bipartite match: max over one set of min distance to the other.
inline double max_root_mismatch(std::vector<ratrange::complex> a,
                                std::vector<ratrange::complex> b) {
    double worst = 0.0;
    for (const auto& x : a) {
        double best = ratrange::inf;
        for (const auto& y : b) best = std::min(best, std::abs(x - y));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace testhelp
