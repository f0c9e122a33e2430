#include "ratrange/membership.hpp"

#include <cmath>

namespace ratrange {

namespace {

double hat_denominator(complex omega, const ProblemParams& params) {
    return params.d * std::norm(omega) + 2.0 * params.c * omega.imag();
}

void check_disk_boundary(complex omega, const ProblemParams& params) {
    const double den = hat_denominator(omega, params);
    const double scale =
        1.0 + params.d * std::norm(omega) + 2.0 * params.c * std::abs(omega);
    if (std::abs(den) <= 1e-12 * scale) throw on_disk_boundary_error();
}

}  // namespace

double beta_hat(complex omega, const ProblemParams& params) {
    check_disk_boundary(omega, params);
    const double x = omega.real(), y = omega.imag();
    const double u = -x * x + y * y + params.d * y + params.c;
    const double v = x * (2.0 * y + params.d);
    const double num = -2.0 * y * (u * u + v * v);
    return num / hat_denominator(omega, params);
}

double alpha_hat(complex omega, const ProblemParams& params) {
    check_disk_boundary(omega, params);
    const double y = omega.imag();
    const double n2 = std::norm(omega);
    return (2.0 * y + params.d) * n2 * n2 / hat_denominator(omega, params);
}

SignRegions sign_regions(complex omega, const ProblemParams& params) {
    const DiskPosition pos = in_disk(omega, params);
    const double y = omega.imag();
    SignRegions s;
    s.in_pi_beta = (pos == DiskPosition::Outside) && (y <= 0.0);
    s.in_pi_alpha = ((pos == DiskPosition::Outside) && (y >= -params.d / 2.0)) ||
                    ((pos == DiskPosition::Inside) && (y <= -params.d / 2.0));
    return s;
}

MembershipVerdict contains(const ComplexPoint& omega, const OmegaBox& box,
                           const ProblemParams& params) {
    MembershipVerdict v;
    const bool alpha_unbounded = box.alpha_unbounded();
    const bool beta_has_zero = in_interval(0.0, box.beta_lo, box.beta_hi);

    if (omega.at_infinity) {
        v.witness = MembershipWitness::SpecialInfinity;
        v.inside = alpha_unbounded;
        return v;
    }
    const complex z = omega.z;
    const double scale = 1.0 + std::abs(z);
    if (std::abs(z) <= 1e-12) {
        v.witness = MembershipWitness::SpecialZero;
        v.inside = params.c == 0.0 || in_interval(0.0, box.alpha_lo, box.alpha_hi);
        return v;
    }
    const Poles p = poles(params);
    if (std::abs(z - p.delta_plus.z) <= 1e-12 * scale) {
        v.witness = MembershipWitness::SpecialDeltaPlus;
        v.inside = alpha_unbounded || beta_has_zero || params.c == 0.0;
        return v;
    }
    if (std::abs(z - p.delta_minus.z) <= 1e-12 * scale) {
        v.witness = MembershipWitness::SpecialDeltaMinus;
        v.inside = alpha_unbounded || beta_has_zero;
        return v;
    }

    if (std::abs(z.real()) <= 1e-12 * scale) {
        // axis point i*mu: alpha = -mu^2 - mu^2 beta/(c + d mu + mu^2) must
        // meet the box for some beta in the beta interval
        v.witness = MembershipWitness::AxisCondition;
        const double mu = z.imag();
        const double den = params.c + params.d * mu + mu * mu;
        const double a0 = -mu * mu - mu * mu * box.beta_lo / den;
        double range_lo = a0, range_hi = a0;
        const double slope = -mu * mu / den;
        if (std::isfinite(box.beta_hi)) {
            const double a1 = -mu * mu - mu * mu * box.beta_hi / den;
            range_lo = std::min(a0, a1);
            range_hi = std::max(a0, a1);
        } else if (slope > 0.0) {
            range_hi = inf;
        } else if (slope < 0.0) {
            range_lo = -inf;
        }
        const double tol = 1e-12 * (1.0 + std::abs(mu * mu));
        v.inside = (range_lo <= box.alpha_hi + tol) && (box.alpha_lo - tol <= range_hi);
        if (v.inside) {
            v.boundary_flag = std::abs(range_lo - box.alpha_hi) <= tol ||
                              std::abs(box.alpha_lo - range_hi) <= tol;
        }
        return v;
    }

    if (in_disk(z, params) == DiskPosition::OnBoundary) {
        v.witness = MembershipWitness::DiskBoundaryExcluded;
        v.inside = false;
        return v;
    }

    v.witness = MembershipWitness::OffAxis;
    v.beta_value = beta_hat(z, params);
    v.alpha_value = alpha_hat(z, params);
    bool beta_edge = false, alpha_edge = false;
    const bool beta_ok = in_interval(v.beta_value, box.beta_lo, box.beta_hi, &beta_edge);
    const bool alpha_ok =
        in_interval(v.alpha_value, box.alpha_lo, box.alpha_hi, &alpha_edge);
    v.inside = beta_ok && alpha_ok;
    v.boundary_flag = v.inside && (beta_edge || alpha_edge);
    return v;
}

}  // namespace ratrange
