#include <doctest.h>

#include "helpers.hpp"
#include "ratrange/strip.hpp"

using namespace ratrange;

TEST_CASE("strip existence threshold at d = 2 sqrt(beta)") {
    const double beta = 1.0;
    SUBCASE("c = 1") {
        CHECK_FALSE(strip_exists_beta(beta, ProblemParams(1.0, 1.9)));
        CHECK(strip_exists_beta(beta, ProblemParams(1.0, 2.1)));
    }
    SUBCASE("bisection localizes the transition") {
        double lo = 1.0, hi = 3.0;
        while (hi - lo > 1e-7) {
            const double mid = 0.5 * (lo + hi);
            (strip_exists_beta(beta, ProblemParams(1.0, mid)) ? hi : lo) = mid;
        }
        CHECK(0.5 * (lo + hi) == doctest::Approx(2.0).epsilon(1e-6));
    }
}

TEST_CASE("discriminant thresholds") {
    SUBCASE("c = 0 closed forms") {
        const double beta = 2.0;
        const auto th = discriminant_ds_beta(beta, ProblemParams(0.0, 1.0));
        CHECK(th.d1 == doctest::Approx(0.0));
        CHECK(th.d2 == doctest::Approx(2.0 * std::sqrt(27.0 * beta / 32.0)));
    }
    SUBCASE("d0 at alpha = c") {
        CHECK(d0_alpha(1.0, ProblemParams(1.0, 1.0)) == doctest::Approx(4.0));
        CHECK(d0_alpha(4.0, ProblemParams(4.0, 1.0)) == doctest::Approx(8.0));
    }
    SUBCASE("d0 lower bound 4 sqrt(max(alpha, c)) for alpha > 0") {
        for (double alpha : {0.5, 1.0, 3.0, 9.0}) {
            const ProblemParams prm(2.0, 1.0);
            const double d0 = d0_alpha(alpha, prm);
            CHECK(d0 >= 4.0 * std::sqrt(std::max(alpha, prm.c)) - 1e-9);
        }
    }
    SUBCASE("alpha <= 0 with c = 0 gives no threshold") {
        CHECK(d0_alpha(-1.0, ProblemParams(0.0, 1.0)) == doctest::Approx(0.0));
    }
}

TEST_CASE("fixed-beta strip edges are certified curve-free") {
    const ProblemParams prm(1.0, 3.0);
    const StripReport rep = strip_edges_beta(1.0, prm);
    REQUIRE(rep.exists);
    CHECK(rep.s_low < rep.s_high);
    // no curve point may fall strictly inside the certified band
    const auto grid = default_im_grid(curve_im_lower_bound_beta(1.0, prm), 0.0, 4096);
    const BranchCurve curve = curve_fixed_beta(1.0, grid, prm);
    for (const auto& strand : curve.strands)
        for (const auto& s : strand) {
            CHECK_FALSE((s.im > rep.s_low + 1e-5 && s.im < rep.s_high - 1e-5));
        }
    for (double mu : curve.axis_mu)
        CHECK_FALSE((mu > rep.s_low + 1e-5 && mu < rep.s_high - 1e-5));
    // the closure touches the curve on both edges
    CHECK((rep.low_on_axis || !rep.low_points.empty()));
    CHECK((rep.high_on_axis || !rep.high_points.empty()));
}

TEST_CASE("no strip below the threshold") {
    const StripReport rep = strip_edges_beta(1.0, ProblemParams(1.0, 1.5));
    CHECK_FALSE(rep.exists);
    CHECK(std::isfinite(rep.min_imag));
}

TEST_CASE("strip widens monotonically in d") {
    const double beta = 1.0, c = 1.0;
    double prev_low = -inf, prev_high = -inf;
    bool first = true;
    for (double d = 2.2; d <= 6.0; d += 0.2) {
        const StripReport rep = strip_edges_beta(beta, ProblemParams(c, d));
        REQUIRE(rep.exists);
        if (!first) {
            CHECK(rep.s_low <= prev_low + 1e-9);
            CHECK(rep.s_high >= prev_high - 1e-9);
        }
        prev_low = rep.s_low;
        prev_high = rep.s_high;
        first = false;
    }
}

TEST_CASE("fixed-alpha strip worked example") {
    // alpha = c = 1, d = 5: edges at -sqrt(c) = -1 and -d/4 - sqrt(d^2/16 - c) = -2
    const StripReport rep = strip_alpha(1.0, ProblemParams(1.0, 5.0));
    REQUIRE(rep.exists);
    CHECK(rep.s_low == doctest::Approx(-2.0));
    CHECK(rep.s_high == doctest::Approx(-1.0));
    CHECK(rep.min_on_axis);
}

TEST_CASE("fixed-alpha strip existence") {
    // alpha = c: strip exists iff d > d0 = 4 sqrt(c)
    CHECK_FALSE(strip_alpha(1.0, ProblemParams(1.0, 3.0)).exists);
    CHECK(strip_alpha(1.0, ProblemParams(1.0, 4.5)).exists);
    // 0 < alpha < c: a strip exists for every d
    CHECK(strip_alpha(0.5, ProblemParams(2.0, 1.0)).exists);
}

TEST_CASE("negative alpha reports only the curve minimum") {
    const StripReport rep = strip_alpha(-2.0, ProblemParams(1.0, 2.0));
    CHECK(rep.min_only);
    CHECK_FALSE(rep.exists);
    CHECK(std::isfinite(rep.min_imag));
    CHECK(rep.min_imag <= -1.0 + 1e-9);  // below -d/2
}

TEST_CASE("min_imag_beta sits at or below every curve sample") {
    for (double d : {1.0, 2.5, 4.0}) {
        const ProblemParams prm(1.0, d);
        const MinImag mi = min_imag_beta(2.0, prm);
        const auto grid =
            default_im_grid(curve_im_lower_bound_beta(2.0, prm), 0.0, 2048);
        const BranchCurve curve = curve_fixed_beta(2.0, grid, prm);
        for (const auto& strand : curve.strands)
            for (const auto& s : strand) CHECK(s.im >= mi.ordinate - 1e-6);
        for (double mu : curve.axis_mu) CHECK(mu >= mi.ordinate - 1e-6);
    }
}
