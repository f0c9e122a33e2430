#pragma once

#include <array>

#include "ratrange/types.hpp"

namespace ratrange {

struct Poles {
    complex theta;       // principal sqrt(c - d^2/4)
    ComplexPoint delta_plus;
    ComplexPoint delta_minus;
};

Poles poles(const ProblemParams& params);

// True when omega is within tol of either pole.
bool near_pole(complex omega, const ProblemParams& params, double tol = 1e-12);

// t_{(alpha,beta)}(omega) = alpha - w^2 - w^2 beta/(c - i d w - w^2).
complex eval_t(double alpha, double beta, complex omega, const ProblemParams& params);

// Monic quartic w^4 + i d w^3 - (alpha+beta+c) w^2 - i alpha d w + alpha c.
struct QuarticCoeffs {
    // c[0] = constant term, ..., c[4] = 1 (leading).
    std::array<complex, 5> c;

    complex eval(complex w) const {
        complex acc = c[4];
        for (int k = 3; k >= 0; --k) acc = acc * w + c[k];
        return acc;
    }
    complex eval_deriv(complex w) const {
        complex acc = 4.0 * c[4];
        for (int k = 3; k >= 1; --k) acc = acc * w + double(k) * c[k];
        return acc;
    }
    double max_coeff_mag() const {
        double m = 0.0;
        for (const auto& x : c) m = std::max(m, std::abs(x));
        return m;
    }
};

QuarticCoeffs quartic_coeffs(double alpha, double beta, const ProblemParams& params);

struct RootMultiset {
    std::vector<ComplexPoint> roots;      // size 4 (finite case)
    std::vector<double> residuals;        // |p(root)| per finite root
    // Cluster representatives with total multiplicity, under the relative
    // clustering tolerance. Infinite roots cluster at infinity.
    struct Cluster {
        ComplexPoint point;
        int multiplicity;
    };
    std::vector<Cluster> clusters;
};

inline constexpr double kRootClusterTol = 1e-7;

// Closed-form (resolvent cubic) solve with Newton polishing.
RootMultiset solve_quartic(const QuarticCoeffs& coeffs);

// Convenience: roots of p_{(alpha,beta)} for finite parameters.
RootMultiset solve_p(double alpha, double beta, const ProblemParams& params);

// Roots in the limit alpha -> +-inf or beta -> +inf (exactly one infinite).
RootMultiset limit_roots(double alpha, double beta, const ProblemParams& params);

enum class DiskPosition { Inside, OnBoundary, Outside };

// Position of omega relative to the disk |w + ic/d| < c/d (empty when c = 0).
DiskPosition in_disk(complex omega, const ProblemParams& params, double tol = 1e-12);

// Roots of a cubic with complex coefficients c3 z^3 + c2 z^2 + c1 z + c0.
std::vector<complex> solve_cubic(complex c3, complex c2, complex c1, complex c0);

// Real roots (with multiplicity, clustered) of a monic real quartic
// x^4 + a3 x^3 + a2 x^2 + a1 x + a0.
struct RealRoot {
    double value;
    int multiplicity;
};
std::vector<RealRoot> real_quartic_roots(double a3, double a2, double a1, double a0);

// Real roots of c3 x^3 + c2 x^2 + c1 x + c0 (quadratic/linear when c3 = 0).
std::vector<RealRoot> real_cubic_roots(double c3, double c2, double c1, double c0);

}  // namespace ratrange
