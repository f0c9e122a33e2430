#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ratrange/core.hpp"

using namespace ratrange;

TEST_CASE("poles closed forms") {
    SUBCASE("c = 0, d = 2: principal pole at the origin") {
        const Poles p = poles(ProblemParams(0.0, 2.0));
        CHECK(p.theta == complex(0.0, 1.0));
        CHECK(std::abs(p.delta_plus.z) == doctest::Approx(0.0));
        CHECK(p.delta_minus.re() == doctest::Approx(0.0));
        CHECK(p.delta_minus.im() == doctest::Approx(-2.0));
    }
    SUBCASE("c = 6, d = 4: real theta") {
        const Poles p = poles(ProblemParams(6.0, 4.0));
        CHECK(p.theta.real() == doctest::Approx(std::sqrt(2.0)));
        CHECK(p.theta.imag() == doctest::Approx(0.0));
        CHECK(p.delta_plus.re() == doctest::Approx(std::sqrt(2.0)));
        CHECK(p.delta_plus.im() == doctest::Approx(-2.0));
        CHECK(p.delta_minus.re() == doctest::Approx(-std::sqrt(2.0)));
        CHECK(p.delta_minus.im() == doctest::Approx(-2.0));
    }
    SUBCASE("poles are zeros of the denominator") {
        const ProblemParams prm(3.0, 5.0);
        const Poles p = poles(prm);
        for (complex w : {p.delta_plus.z, p.delta_minus.z}) {
            const complex denom = prm.c - complex(0.0, prm.d) * w - w * w;
            CHECK(std::abs(denom) < 1e-12);
            CHECK(near_pole(w, prm));
        }
        CHECK_FALSE(near_pole(complex(1.0, 1.0), prm));
    }
}

TEST_CASE("eval_t worked values") {
    const ProblemParams prm(1.0, 1.0);
    const complex t = eval_t(1.0, 2.0, complex(0.0, 1.0), prm);
    CHECK(t.real() == doctest::Approx(8.0 / 3.0));
    CHECK(t.imag() == doctest::Approx(0.0));
    CHECK_THROWS_AS(eval_t(1.0, 2.0, poles(prm).delta_plus.z, prm),
                    pole_evaluation_error);
}

TEST_CASE("quartic coefficients and evaluation") {
    const ProblemParams prm(1.0, 1.0);
    const QuarticCoeffs q = quartic_coeffs(-1.5, 1.5, prm);
    // i is a root of p_{(-1.5, 1.5)} when c = d = 1
    CHECK(std::abs(q.eval(complex(0.0, 1.0))) < 1e-14);
}

TEST_CASE("solve_p on a factorized case") {
    // beta = 0: p = (w^2 - alpha)(w^2 + i d w - c); alpha=4, c=3, d=2
    const RootMultiset rm = solve_p(4.0, 0.0, ProblemParams(3.0, 2.0));
    const std::vector<complex> expect = {
        {2.0, 0.0}, {-2.0, 0.0}, {std::sqrt(2.0), -1.0}, {-std::sqrt(2.0), -1.0}};
    std::vector<complex> got;
    for (const auto& r : rm.roots) got.push_back(r.z);
    CHECK(testhelp::max_root_mismatch(expect, got) < 1e-10);
    CHECK(testhelp::max_root_mismatch(got, expect) < 1e-10);
}

TEST_CASE("quartic roots match the companion-matrix oracle") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> unif(-10.0, 10.0);
    std::uniform_real_distribution<double> pos(0.05, 10.0);
    for (int trial = 0; trial < 500; ++trial) {
        const ProblemParams prm(pos(rng), pos(rng));
        const double alpha = unif(rng);
        const double beta = pos(rng);
        const QuarticCoeffs q = quartic_coeffs(alpha, beta, prm);
        const RootMultiset rm = solve_p(alpha, beta, prm);
        std::vector<complex> got;
        for (const auto& r : rm.roots) got.push_back(r.z);
        const auto oracle = testhelp::companion_quartic(q);
        CHECK(testhelp::max_root_mismatch(oracle, got) < 1e-6);
        for (double res : rm.residuals)
            CHECK(res <= 1e-10 * std::max(1.0, q.max_coeff_mag()));
    }
}

TEST_CASE("Vieta relations hold for solved roots") {
    std::mt19937_64 rng(999);
    std::uniform_real_distribution<double> unif(-5.0, 5.0);
    std::uniform_real_distribution<double> pos(0.1, 5.0);
    for (int trial = 0; trial < 500; ++trial) {
        const ProblemParams prm(pos(rng), pos(rng));
        const double alpha = unif(rng), beta = pos(rng);
        const RootMultiset rm = solve_p(alpha, beta, prm);
        complex sum = 0.0, prod = 1.0;
        for (const auto& r : rm.roots) {
            sum += r.z;
            prod *= r.z;
        }
        CHECK(std::abs(sum - complex(0.0, -prm.d)) < 1e-6 * (1.0 + std::abs(sum)));
        CHECK(std::abs(prod - alpha * prm.c) < 1e-6 * (1.0 + std::abs(prod)));
    }
}

TEST_CASE("root set is symmetric under w -> -conj(w)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(-5.0, 5.0);
    std::uniform_real_distribution<double> pos(0.1, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        const ProblemParams prm(pos(rng), pos(rng));
        const RootMultiset rm = solve_p(unif(rng), pos(rng), prm);
        std::vector<complex> got, mirrored;
        for (const auto& r : rm.roots) {
            got.push_back(r.z);
            mirrored.push_back(-std::conj(r.z));
        }
        CHECK(testhelp::max_root_mismatch(got, mirrored) < 1e-6);
    }
}

TEST_CASE("limit roots at infinite parameters") {
    const ProblemParams prm(6.0, 4.0);
    SUBCASE("alpha -> +-infinity: poles plus a double root at infinity") {
        const RootMultiset rm = limit_roots(inf, 2.0, prm);
        int n_inf = 0;
        std::vector<complex> finite;
        for (const auto& r : rm.roots)
            r.at_infinity ? void(++n_inf) : finite.push_back(r.z);
        CHECK(n_inf == 2);
        const Poles p = poles(prm);
        CHECK(testhelp::max_root_mismatch({p.delta_plus.z, p.delta_minus.z}, finite) <
              1e-12);
    }
    SUBCASE("beta -> +infinity: double root at zero plus infinity") {
        const RootMultiset rm = limit_roots(1.0, inf, prm);
        int n_inf = 0, n_zero = 0;
        for (const auto& r : rm.roots) {
            if (r.at_infinity) ++n_inf;
            else if (std::abs(r.z) == 0.0) ++n_zero;
        }
        CHECK(n_inf == 2);
        CHECK(n_zero == 2);
    }
    CHECK_THROWS_AS(limit_roots(1.0, 2.0, prm), config_error);
    CHECK_THROWS_AS(limit_roots(inf, inf, prm), config_error);
}

TEST_CASE("limit roots agree with large finite parameters") {
    const ProblemParams prm(6.0, 4.0);  // simple poles: perturbation stays O(1/alpha)
    const Poles p = poles(prm);
    const RootMultiset rm = solve_p(1e6, 2.0, prm);
    std::vector<complex> finite;
    for (const auto& r : rm.roots)
        if (std::abs(r.z) < 1e2) finite.push_back(r.z);
    REQUIRE(finite.size() == 2);
    CHECK(testhelp::max_root_mismatch({p.delta_plus.z, p.delta_minus.z}, finite) <
          1e-4);
}

TEST_CASE("disk position") {
    const ProblemParams prm(1.0, 1.0);  // disk |w + i| < 1
    CHECK(in_disk(complex(0.0, -1.0), prm) == DiskPosition::Inside);
    CHECK(in_disk(complex(1.0, -1.0), prm) == DiskPosition::OnBoundary);
    CHECK(in_disk(complex(0.0, 0.0), prm) == DiskPosition::OnBoundary);
    CHECK(in_disk(complex(2.0, 0.0), prm) == DiskPosition::Outside);
    CHECK(in_disk(complex(0.0, -1.0), ProblemParams(0.0, 1.0)) ==
          DiskPosition::Outside);
}

TEST_CASE("real quartic roots with multiplicity") {
    // (x-1)^2 (x-2)(x-3) = x^4 - 7x^3 + 17x^2 - 17x + 6
    const auto roots = real_quartic_roots(-7.0, 17.0, -17.0, 6.0);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].value == doctest::Approx(1.0));
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].value == doctest::Approx(2.0));
    CHECK(roots[2].value == doctest::Approx(3.0));
    // x^4 + 1: no real roots
    CHECK(real_quartic_roots(0.0, 0.0, 0.0, 1.0).empty());
}

TEST_CASE("real cubic roots, including degenerate degree") {
    // 2(x+1)(x-2)(x-5) = 2x^3 - 12x^2 + 6x + 20
    const auto roots = real_cubic_roots(2.0, -12.0, 6.0, 20.0);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].value == doctest::Approx(-1.0));
    CHECK(roots[1].value == doctest::Approx(2.0));
    CHECK(roots[2].value == doctest::Approx(5.0));
    // quadratic fallback: x^2 - 4
    const auto quad = real_cubic_roots(0.0, 1.0, 0.0, -4.0);
    REQUIRE(quad.size() == 2);
    CHECK(quad[0].value == doctest::Approx(-2.0));
    CHECK(quad[1].value == doctest::Approx(2.0));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ProblemParams(-1.0, 1.0), config_error);
    CHECK_THROWS_AS(ProblemParams(1.0, 0.0), config_error);
    CHECK_THROWS_AS(ProblemParams(1.0, -2.0), config_error);
    CHECK_THROWS_AS(OmegaBox(2.0, 1.0, 0.0, 1.0), config_error);
    CHECK_THROWS_AS(OmegaBox(0.0, 1.0, -inf, 1.0), config_error);
    CHECK_NOTHROW(OmegaBox(-inf, inf, 0.0, inf));
    CHECK(OmegaBox(-inf, 1.0, 0.0, 1.0).alpha_unbounded());
    CHECK_FALSE(OmegaBox(0.0, 1.0, 0.0, 1.0).alpha_unbounded());
}
