#include "ratrange/core.hpp"

#include <algorithm>
#include <cmath>

namespace ratrange {

Poles poles(const ProblemParams& params) {
    const complex theta = std::sqrt(complex(params.c - params.d * params.d / 4.0, 0.0));
    const complex shift(0.0, -params.d / 2.0);
    Poles p;
    p.theta = theta;
    p.delta_plus = ComplexPoint(theta + shift);
    p.delta_minus = ComplexPoint(-theta + shift);
    return p;
}

bool near_pole(complex omega, const ProblemParams& params, double tol) {
    const Poles p = poles(params);
    const double scale = 1.0 + std::abs(omega);
    return std::abs(omega - p.delta_plus.z) <= tol * scale ||
           std::abs(omega - p.delta_minus.z) <= tol * scale;
}

complex eval_t(double alpha, double beta, complex omega, const ProblemParams& params) {
    if (near_pole(omega, params)) throw pole_evaluation_error();
    const complex w2 = omega * omega;
    const complex den = params.c - complex(0.0, params.d) * omega - w2;
    return alpha - w2 - w2 * beta / den;
}

QuarticCoeffs quartic_coeffs(double alpha, double beta, const ProblemParams& params) {
    QuarticCoeffs q;
    q.c[4] = 1.0;
    q.c[3] = complex(0.0, params.d);
    q.c[2] = -(alpha + beta + params.c);
    q.c[1] = complex(0.0, -alpha * params.d);
    q.c[0] = alpha * params.c;
    return q;
}

std::vector<complex> solve_cubic(complex c3, complex c2, complex c1, complex c0) {
    if (std::abs(c3) == 0.0) {
        // quadratic fallback
        if (std::abs(c2) == 0.0) {
            if (std::abs(c1) == 0.0) return {};
            return {-c0 / c1};
        }
        const complex disc = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
        // avoid cancellation in the numerator
        const complex q = (std::real(std::conj(c1) * disc) >= 0.0) ? -(c1 + disc) / 2.0
                                                                   : -(c1 - disc) / 2.0;
        std::vector<complex> r;
        r.push_back(q / c2);
        if (std::abs(q) > 0.0)
            r.push_back(c0 / q);
        else
            r.push_back(complex(0.0, 0.0));
        return r;
    }
    const complex a = c2 / c3, b = c1 / c3, c = c0 / c3;
    // depressed cubic y^3 + p y + q, z = y - a/3
    const complex p = b - a * a / 3.0;
    const complex q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    complex u3 = -q / 2.0 + disc;
    if (std::abs(u3) < std::abs(-q / 2.0 - disc)) u3 = -q / 2.0 - disc;
    std::vector<complex> roots;
    if (std::abs(u3) == 0.0) {
        roots.assign(3, -a / 3.0);
        return roots;
    }
    const complex u = std::pow(u3, 1.0 / 3.0);
    const complex w(-0.5, std::sqrt(3.0) / 2.0);
    for (int k = 0; k < 3; ++k) {
        complex uk = u;
        if (k == 1) uk *= w;
        if (k == 2) uk *= std::conj(w);
        const complex y = uk - p / (3.0 * uk);
        roots.push_back(y - a / 3.0);
    }
    return roots;
}

namespace {

// Ferrari via the resolvent cubic w^3 + 2p w^2 + (p^2-4r) w - q^2 = 0
// applied to the depressed quartic y^4 + p y^2 + q y + r.
std::array<complex, 4> quartic_roots_closed_form(const QuarticCoeffs& coeffs) {
    const complex a = coeffs.c[3];
    const complex b = coeffs.c[2];
    const complex c = coeffs.c[1];
    const complex d = coeffs.c[0];

    const complex p = b - 3.0 * a * a / 8.0;
    const complex q = c - a * b / 2.0 + a * a * a / 8.0;
    const complex r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;
    const complex shift = -a / 4.0;

    const double scale = 1.0 + std::abs(p) + std::abs(r);
    std::array<complex, 4> y;
    if (std::abs(q) <= 1e-14 * scale) {
        // biquadratic
        const complex s = std::sqrt(p * p - 4.0 * r);
        const complex u = (-p + s) / 2.0;
        const complex v = (-p - s) / 2.0;
        const complex su = std::sqrt(u), sv = std::sqrt(v);
        y = {su, -su, sv, -sv};
    } else {
        auto ws = solve_cubic(1.0, 2.0 * p, p * p - 4.0 * r, -q * q);
        complex w = ws.front();
        for (const auto& cand : ws)
            if (std::abs(cand) > std::abs(w)) w = cand;
        const complex s = std::sqrt(w);
        const complex u = (p + w - q / s) / 2.0;
        const complex v = (p + w + q / s) / 2.0;
        // (y^2 - s y + v)(y^2 + s y + u)
        const complex d1 = std::sqrt(s * s - 4.0 * v);
        const complex d2 = std::sqrt(s * s - 4.0 * u);
        y = {(s + d1) / 2.0, (s - d1) / 2.0, (-s + d2) / 2.0, (-s - d2) / 2.0};
    }
    std::array<complex, 4> roots;
    for (int i = 0; i < 4; ++i) roots[i] = y[i] + shift;
    return roots;
}

void polish(const QuarticCoeffs& coeffs, complex& root) {
    for (int iter = 0; iter < 8; ++iter) {
        const complex f = coeffs.eval(root);
        const complex fp = coeffs.eval_deriv(root);
        if (std::abs(fp) < 1e-300) break;
        const complex step = f / fp;
        const complex next = root - step;
        if (std::abs(coeffs.eval(next)) >= std::abs(f)) break;
        root = next;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(root))) break;
    }
}

std::vector<RootMultiset::Cluster> cluster_roots(const std::vector<ComplexPoint>& roots) {
    std::vector<RootMultiset::Cluster> clusters;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        if (roots[i].at_infinity) {
            int mult = 1;
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                if (!used[j] && roots[j].at_infinity) {
                    used[j] = true;
                    ++mult;
                }
            }
            clusters.push_back({ComplexPoint::infinity(), mult});
            continue;
        }
        complex sum = roots[i].z;
        int mult = 1;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j] || roots[j].at_infinity) continue;
            const double tol = kRootClusterTol * (1.0 + std::abs(roots[i].z));
            if (std::abs(roots[j].z - roots[i].z) <= tol) {
                used[j] = true;
                sum += roots[j].z;
                ++mult;
            }
        }
        clusters.push_back({ComplexPoint(sum / double(mult)), mult});
    }
    return clusters;
}

}  // namespace

RootMultiset solve_quartic(const QuarticCoeffs& coeffs) {
    auto raw = quartic_roots_closed_form(coeffs);
    RootMultiset out;
    const double target = 1e-10 * std::max(1.0, coeffs.max_coeff_mag());
    for (auto& r : raw) {
        polish(coeffs, r);
        const double res = std::abs(coeffs.eval(r));
        if (res > target) throw convergence_failure();
        out.roots.push_back(ComplexPoint(r));
        out.residuals.push_back(res);
    }
    out.clusters = cluster_roots(out.roots);
    return out;
}

RootMultiset solve_p(double alpha, double beta, const ProblemParams& params) {
    return solve_quartic(quartic_coeffs(alpha, beta, params));
}

RootMultiset limit_roots(double alpha, double beta, const ProblemParams& params) {
    const bool alpha_inf = !std::isfinite(alpha);
    const bool beta_inf = !std::isfinite(beta);
    if (alpha_inf == beta_inf)
        throw config_error("limit_roots needs exactly one infinite parameter");
    RootMultiset out;
    if (alpha_inf) {
        const Poles p = poles(params);
        out.roots = {p.delta_plus, p.delta_minus, ComplexPoint::infinity(),
                     ComplexPoint::infinity()};
    } else {
        if (beta < 0.0) throw config_error("beta -> -inf is out of range");
        // two roots collapse to 0, two escape along +-inf - i d/2
        out.roots = {ComplexPoint(0.0, 0.0), ComplexPoint(0.0, 0.0),
                     ComplexPoint::infinity(), ComplexPoint::infinity()};
    }
    out.residuals.assign(out.roots.size(), 0.0);
    out.clusters = cluster_roots(out.roots);
    return out;
}

DiskPosition in_disk(complex omega, const ProblemParams& params, double tol) {
    if (params.c == 0.0) return DiskPosition::Outside;
    const double radius = params.c / params.d;
    const double dist = std::abs(omega + complex(0.0, radius));
    const double guard = tol * (1.0 + radius);
    if (dist < radius - guard) return DiskPosition::Inside;
    if (dist > radius + guard) return DiskPosition::Outside;
    return DiskPosition::OnBoundary;
}

std::vector<RealRoot> real_quartic_roots(double a3, double a2, double a1, double a0) {
    QuarticCoeffs q;
    q.c = {complex(a0), complex(a1), complex(a2), complex(a3), complex(1.0)};
    const RootMultiset rm = solve_quartic(q);
    std::vector<RealRoot> out;
    for (const auto& cl : rm.clusters) {
        if (cl.point.at_infinity) continue;
        const double tol = kRootClusterTol * (1.0 + std::abs(cl.point.z));
        if (std::abs(cl.point.z.imag()) > tol) continue;
        double x = cl.point.z.real();
        // polish as a real root
        for (int iter = 0; iter < 4; ++iter) {
            const double f = ((x + a3) * x + a2) * x * x + a1 * x + a0;
            const double fp = ((4.0 * x + 3.0 * a3) * x + 2.0 * a2) * x + a1;
            if (std::abs(fp) < 1e-300) break;
            const double step = f / fp;
            if (!std::isfinite(step)) break;
            x -= step;
            if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
        }
        out.push_back({x, cl.multiplicity});
    }
    std::sort(out.begin(), out.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    // merge clusters that collided after polishing
    std::vector<RealRoot> merged;
    for (const auto& r : out) {
        if (!merged.empty() &&
            std::abs(r.value - merged.back().value) <=
                kRootClusterTol * (1.0 + std::abs(r.value))) {
            merged.back().multiplicity += r.multiplicity;
        } else {
            merged.push_back(r);
        }
    }
    return merged;
}

std::vector<RealRoot> real_cubic_roots(double c3, double c2, double c1, double c0) {
    const auto zs = solve_cubic(complex(c3), complex(c2), complex(c1), complex(c0));
    std::vector<RealRoot> out;
    for (const auto& z : zs) {
        const double tol = kRootClusterTol * (1.0 + std::abs(z));
        if (std::abs(z.imag()) > tol) continue;
        double x = z.real();
        for (int iter = 0; iter < 6; ++iter) {
            const double f = ((c3 * x + c2) * x + c1) * x + c0;
            const double fp = (3.0 * c3 * x + 2.0 * c2) * x + c1;
            if (std::abs(fp) < 1e-300) break;
            const double step = f / fp;
            if (!std::isfinite(step)) break;
            x -= step;
            if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
        }
        out.push_back({x, 1});
    }
    std::sort(out.begin(), out.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    std::vector<RealRoot> merged;
    for (const auto& r : out) {
        if (!merged.empty() && std::abs(r.value - merged.back().value) <=
                                   kRootClusterTol * (1.0 + std::abs(r.value))) {
            merged.back().multiplicity += r.multiplicity;
        } else {
            merged.push_back(r);
        }
    }
    return merged;
}

}  // namespace ratrange
