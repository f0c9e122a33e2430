#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratrange {

using complex = std::complex<double>;

// Extended reals are plain doubles; +-infinity carry the usual total order.
inline constexpr double inf = std::numeric_limits<double>::infinity();

struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct pole_evaluation_error : numeric_error {
    pole_evaluation_error() : numeric_error("PoleEvaluation") {}
};
struct on_disk_boundary_error : numeric_error {
    on_disk_boundary_error() : numeric_error("OnDiskBoundary") {}
};
struct convergence_failure : numeric_error {
    convergence_failure() : numeric_error("ConvergenceFailure") {}
};
struct odd_pairing_error : numeric_error {
    odd_pairing_error() : numeric_error("OddPairing") {}
};
struct verification_failure : numeric_error {
    verification_failure() : numeric_error("VerificationFailure") {}
};

// Scalars c, d of the rational coefficient w^2/(c - i d w - w^2).
struct ProblemParams {
    double c;
    double d;

    ProblemParams(double c_, double d_) : c(c_), d(d_) {
        if (!(c >= 0.0) || !std::isfinite(c))
            throw config_error("c must be finite and >= 0");
        if (!(d > 0.0) || !std::isfinite(d))
            throw config_error("d must be finite and > 0");
    }
};

// Rectangle of admissible coefficient functionals: alpha interval may be
// unbounded on either side, beta interval must have a finite lower end.
struct OmegaBox {
    double alpha_lo;
    double alpha_hi;
    double beta_lo;
    double beta_hi;

    OmegaBox(double alo, double ahi, double blo, double bhi)
        : alpha_lo(alo), alpha_hi(ahi), beta_lo(blo), beta_hi(bhi) {
        if (std::isnan(alo) || std::isnan(ahi) || std::isnan(blo) || std::isnan(bhi))
            throw config_error("box endpoints must not be NaN");
        if (!(alpha_lo <= alpha_hi)) throw config_error("alpha_lo <= alpha_hi required");
        if (!(beta_lo <= beta_hi)) throw config_error("beta_lo <= beta_hi required");
        if (!std::isfinite(beta_lo)) throw config_error("beta_lo must be finite");
    }

    bool alpha_unbounded() const {
        return !std::isfinite(alpha_lo) || !std::isfinite(alpha_hi);
    }
};

// Point on the Riemann sphere.
struct ComplexPoint {
    complex z{0.0, 0.0};
    bool at_infinity = false;

    ComplexPoint() = default;
    ComplexPoint(complex v) : z(v) {}
    ComplexPoint(double re, double im) : z(re, im) {}
    static ComplexPoint infinity() {
        ComplexPoint p;
        p.at_infinity = true;
        return p;
    }

    double re() const { return z.real(); }
    double im() const { return z.imag(); }
};

struct Viewport {
    double re_lo, re_hi, im_lo, im_hi;
};

// Closed interval membership with a small absolute guard per endpoint.
inline bool in_interval(double x, double lo, double hi, bool* on_edge = nullptr) {
    const double tol_lo = 1e-12 * (1.0 + std::abs(std::isfinite(lo) ? lo : 0.0));
    const double tol_hi = 1e-12 * (1.0 + std::abs(std::isfinite(hi) ? hi : 0.0));
    bool inside = (x >= lo - tol_lo) && (x <= hi + tol_hi);
    if (on_edge) {
        *on_edge = inside && (std::abs(x - lo) <= tol_lo || std::abs(x - hi) <= tol_hi);
    }
    return inside;
}

}  // namespace ratrange
