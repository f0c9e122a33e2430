#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ratrange/axis.hpp"
#include "ratrange/membership.hpp"

using namespace ratrange;

TEST_CASE("q_beta roots match the companion-matrix oracle") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> pos(0.05, 8.0);
    std::uniform_real_distribution<double> cval(0.0, 8.0);
    for (int trial = 0; trial < 300; ++trial) {
        const ProblemParams prm(cval(rng), pos(rng));
        const double beta = pos(rng);
        const auto got = q_beta_real_roots(beta, prm);
        const auto oracle = testhelp::companion_real_quartic(
            2.0 * prm.d, 2.0 * prm.c + prm.d * prm.d,
            prm.d * (beta / 2.0 + 2.0 * prm.c), prm.c * (beta + prm.c));
        int total = 0;
        for (const auto& r : got) total += r.multiplicity;
        // clustered double roots may appear as two near-real eigenvalues
        CHECK(total == int(oracle.size()));
        for (const auto& r : got) {
            double best = inf;
            for (double o : oracle) best = std::min(best, std::abs(o - r.value));
            CHECK(best < 1e-5 * (1.0 + std::abs(r.value)));
        }
    }
}

TEST_CASE("q_alpha roots and constraint flags") {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> pos(0.05, 8.0);
    std::uniform_real_distribution<double> aval(-8.0, 8.0);
    for (int trial = 0; trial < 300; ++trial) {
        const ProblemParams prm(pos(rng), pos(rng));
        const double alpha = aval(rng);
        const auto got = q_alpha_real_roots(alpha, prm);
        const auto oracle = testhelp::companion_real_quartic(
            prm.d / 2.0, 0.0, -alpha * prm.d / 2.0, -alpha * prm.c);
        int total = 0;
        for (const auto& r : got) total += r.multiplicity;
        CHECK(total == int(oracle.size()));
        const double bound = -2.0 * prm.c / prm.d;
        for (const auto& r : got) {
            if (r.satisfies_constraint)
                CHECK(r.value <= bound + 1e-6 * (1.0 + std::abs(bound)));
            // values clearly above the bound must be flagged inadmissible
            if (r.value > bound + 1e-6 * (1.0 + std::abs(bound)))
                CHECK_FALSE(r.satisfies_constraint);
        }
    }
}

namespace {

// Dense axis scan oracle for the segment structure.
void check_axis_equivalence(const OmegaBox& box, const ProblemParams& prm,
                            const AxisStructure& axis, double span, double res) {
    for (double mu = -span; mu <= span; mu += res) {
        const bool structural = axis.contains_mu(mu, 2.0 * res);
        const bool pointwise = contains(ComplexPoint(0.0, mu), box, prm).inside;
        if (pointwise) CHECK(structural);
        if (!structural) CHECK_FALSE(pointwise);
    }
}

}  // namespace

TEST_CASE("axis segments match dense membership for fixed configurations") {
    SUBCASE("bounded box, c=4 d=4") {
        const ProblemParams prm(4.0, 4.0);
        const OmegaBox box(-32.0, 4.0, 0.0, 4.0);
        const AxisStructure axis = axis_segments(box, prm);
        check_axis_equivalence(box, prm, axis, 8.0, 1e-3);
        CHECK(axis.contains_mu(-2.0, 1e-9));  // pole ordinate is interior
    }
    SUBCASE("unbounded alpha, c=6 d=4") {
        const ProblemParams prm(6.0, 4.0);
        const OmegaBox box(-inf, inf, 4.0, 11.0);
        const AxisStructure axis = axis_segments(box, prm);
        check_axis_equivalence(box, prm, axis, 10.0, 1e-3);
    }
    SUBCASE("positive alpha keeps all roots at mu <= 0") {
        const ProblemParams prm(6.0, 4.0);
        const AxisStructure axis = axis_segments(OmegaBox(1.0, 2.0, 1.0, 2.0), prm);
        for (const auto& s : axis.segments) CHECK(s.mu_hi <= 1e-9);
        for (double mu : axis.isolated) CHECK(mu <= 1e-9);
    }
}

TEST_CASE("axis segments match dense membership for random boxes") {
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> pos(0.1, 6.0);
    std::uniform_real_distribution<double> aval(-10.0, 10.0);
    for (int trial = 0; trial < 12; ++trial) {
        const ProblemParams prm(pos(rng), pos(rng));
        double alo = aval(rng), ahi = aval(rng);
        if (alo > ahi) std::swap(alo, ahi);
        double blo = pos(rng), bhi = pos(rng);
        if (blo > bhi) std::swap(blo, bhi);
        const OmegaBox box(alo, ahi, blo, bhi);
        const AxisStructure axis = axis_segments(box, prm);
        check_axis_equivalence(box, prm, axis, 8.0, 1e-3);
    }
}

TEST_CASE("degenerate (point) boxes reduce to single-quartic axis roots") {
    const ProblemParams prm(1.0, 1.0);
    // alpha = -1.5, beta = 1.5, c = d = 1: i is a root, so mu = 1 is isolated
    const AxisStructure axis = axis_segments(OmegaBox(-1.5, -1.5, 1.5, 1.5), prm);
    CHECK(axis.segments.empty());
    CHECK(axis.contains_mu(1.0, 1e-6));
    // every reported point really is a root of the corner quartic
    const QuarticCoeffs q = quartic_coeffs(-1.5, 1.5, prm);
    for (double mu : axis.isolated)
        CHECK(std::abs(q.eval(complex(0.0, mu))) <=
              1e-7 * std::max(1.0, q.max_coeff_mag()));
}

TEST_CASE("corner root sets split along the pole segment") {
    const ProblemParams prm(1.0, 4.0);  // d^2 >= 4c: N = [-2-sqrt(3), -2+sqrt(3)]
    const OmegaBox box(-3.0, 2.0, 0.5, 4.0);
    const CornerRootSets sets = corner_root_sets(box, prm);
    const double s = std::sqrt(prm.d * prm.d / 4.0 - prm.c);
    for (const auto& p : sets.r1) {
        if (!std::isfinite(p.mu)) continue;
        const bool in_n = p.mu >= -prm.d / 2.0 - s - 1e-9 &&
                          p.mu <= -prm.d / 2.0 + s + 1e-9;
        CHECK_FALSE((in_n && !p.in_pole_segment));
    }
    for (const auto& p : sets.r2) {
        CHECK(p.in_pole_segment);
        CHECK(p.mu >= -prm.d / 2.0 - s - 1e-9);
        CHECK(p.mu <= -prm.d / 2.0 + s + 1e-9);
    }
}

TEST_CASE("c = 0 axis structure always contains the origin") {
    const ProblemParams prm(0.0, 2.0);
    const AxisStructure axis = axis_segments(OmegaBox(1.0, 2.0, 1.0, 2.0), prm);
    CHECK(axis.contains_mu(0.0, 1e-9));
}
