#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ratrange/boundary.hpp"

using namespace ratrange;

TEST_CASE("branch equations round-trip through the inverse maps") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> pos(0.1, 6.0);
    std::uniform_real_distribution<double> ords(-4.0, -0.01);
    for (int trial = 0; trial < 400; ++trial) {
        const ProblemParams prm(pos(rng), pos(rng));
        const double beta = pos(rng);
        const double y = ords(rng);
        for (int sign : {-1, 1}) {
            const auto x = branch_re_beta(beta, y, sign, prm);
            if (!x) continue;
            CHECK(*x >= 0.0);
            const complex w(*x, y);
            CHECK(beta_hat(w, prm) == doctest::Approx(beta).epsilon(1e-6));
            // curve points carry a genuine quartic root at (alpha_hat, beta)
            const QuarticCoeffs q = quartic_coeffs(alpha_hat(w, prm), beta, prm);
            CHECK(std::abs(q.eval(w)) <= 1e-7 * std::max(1.0, q.max_coeff_mag()));
        }
        const double alpha = pos(rng) * 2.0 - 6.0;
        for (int sign : {-1, 1}) {
            const auto x = branch_re_alpha(alpha, y, sign, prm);
            if (!x) continue;
            const complex w(*x, y);
            CHECK(alpha_hat(w, prm) == doctest::Approx(alpha).epsilon(1e-6));
        }
    }
}

TEST_CASE("fixed-alpha curves sit on the expected side of -d/2") {
    const ProblemParams prm(1.0, 2.0);
    const auto grid = default_im_grid(curve_im_lower_bound_alpha(3.0, prm), 0.0, 512);
    const BranchCurve pos_curve = curve_fixed_alpha(3.0, grid, prm);
    for (const auto& strand : pos_curve.strands)
        for (const auto& s : strand) {
            CHECK(s.im <= 1e-9);
            CHECK(s.im >= -prm.d / 2.0 - 1e-9);
        }
    const auto grid_neg =
        default_im_grid(curve_im_lower_bound_alpha(-3.0, prm), 0.0, 512);
    const BranchCurve neg_curve = curve_fixed_alpha(-3.0, grid_neg, prm);
    for (const auto& strand : neg_curve.strands)
        for (const auto& s : strand) CHECK(s.im <= -prm.d / 2.0 + 1e-9);
}

TEST_CASE("fixed-beta curve stays in the lower half plane") {
    const ProblemParams prm(4.0, 4.0);
    const auto grid = default_im_grid(curve_im_lower_bound_beta(4.0, prm), 0.0, 512);
    const BranchCurve curve = curve_fixed_beta(4.0, grid, prm);
    CHECK_FALSE(curve.strands.empty());
    for (const auto& strand : curve.strands)
        for (const auto& s : strand) CHECK(s.im <= 1e-9);
}

TEST_CASE("boundary set edge structure") {
    const ProblemParams prm(4.0, 4.0);
    const OmegaBox box(-32.0, 4.0, 0.0, 4.0);
    const auto curves = boundary_set(box, prm);
    REQUIRE(curves.size() == 4);
    bool saw_beta_zero = false;
    for (const auto& c : curves) {
        if (c.family == BranchCurve::Family::BetaZero) {
            saw_beta_zero = true;
            // beta = 0 edge: real segment [-sqrt(alpha_hi), sqrt(alpha_hi)]
            // restricted to alpha >= 0, plus the poles as special points
            bool has_delta = false;
            const Poles p = poles(prm);
            for (const auto& sp : c.special)
                if (!sp.at_infinity && std::abs(sp.z - p.delta_plus.z) < 1e-9)
                    has_delta = true;
            CHECK(has_delta);
            for (const auto& strand : c.strands)
                for (const auto& s : strand) {
                    CHECK(std::abs(s.im) < 1e-12);
                    CHECK(std::abs(s.re) <= std::sqrt(4.0) + 1e-9);
                }
        }
    }
    CHECK(saw_beta_zero);
}

TEST_CASE("unbounded alpha box keeps only the fixed-beta curves") {
    const ProblemParams prm(6.0, 4.0);
    const OmegaBox box(-inf, inf, 4.0, 11.0);
    const auto curves = boundary_set(box, prm);
    int strand_families = 0;
    for (const auto& c : curves) {
        if (c.strands.empty()) continue;  // infinite alpha edges: specials only
        CHECK(c.family == BranchCurve::Family::FixedBeta);
        ++strand_families;
    }
    CHECK(strand_families == 2);
}

TEST_CASE("region classification agrees with pointwise membership") {
    const ProblemParams prm(4.0, 4.0);
    const OmegaBox box(-32.0, 4.0, 0.0, 4.0);
    const Viewport vp = default_viewport(box, prm);
    const RegionMap map = classify_regions(box, vp, 96, prm);
    CHECK(map.pre_fallback_agreement >= 0.999);
    int checked = 0;
    for (int iy = 0; iy < map.ny; ++iy)
        for (int ix = 0; ix < map.nx; ++ix) {
            if (map.at(ix, iy) == CellLabel::Boundary) continue;
            const ComplexPoint w(map.cell_re(ix), map.cell_im(iy));
            bool truth;
            try {
                truth = contains(w, box, prm).inside;
            } catch (const numeric_error&) {
                continue;
            }
            CHECK((map.at(ix, iy) == CellLabel::Inside) == truth);
            ++checked;
        }
    CHECK(checked > 0);
}

TEST_CASE("viewport far above the curve is entirely outside") {
    const ProblemParams prm(4.0, 4.0);
    const OmegaBox box(1.0, 4.0, 1.0, 4.0);  // 0 not admissible for alpha
    const Viewport vp{-3.0, 3.0, 5.0, 9.0};
    CHECK_THROWS_AS(classify_regions(box, vp, 32, prm), config_error);
    const RegionMap map = classify_regions(box, vp, 64, prm);
    for (const auto label : map.labels) CHECK(label == CellLabel::Outside);
    CHECK(map.inside_component_count == 0);
}

TEST_CASE("default viewport covers the boundary curves") {
    const ProblemParams prm(6.0, 4.0);
    const OmegaBox box(1.0, inf, 0.0, 11.0);
    const Viewport vp = default_viewport(box, prm);
    CHECK(vp.re_lo < 0.0);
    CHECK(vp.re_hi > 0.0);
    CHECK(vp.im_lo < -prm.d / 2.0);
    CHECK(vp.im_hi >= 0.0);
    const auto curves = boundary_set(box, prm);
    for (const auto& c : curves)
        for (const auto& strand : c.strands)
            for (const auto& s : strand) {
                CHECK(s.im >= vp.im_lo - 1e-6);
                CHECK(s.im <= vp.im_hi + 1e-6);
            }
}
