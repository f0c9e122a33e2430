#include <doctest.h>

#include "helpers.hpp"
#include "ratrange/membership.hpp"
#include "ratrange/oracle.hpp"
#include "ratrange/pseudo.hpp"

using namespace ratrange;

TEST_CASE("matrix pair realizes the box endpoints") {
    const OmegaBox box(-2.0, 3.0, 0.5, 4.0);
    const MatrixPair pair = make_matrix_pair(box, 8);
    REQUIRE(pair.a_diag.size() == 8);
    CHECK(pair.a_diag.front() == doctest::Approx(-2.0));
    CHECK(pair.a_diag.back() == doctest::Approx(3.0));
    CHECK(pair.b_diag.front() == doctest::Approx(0.5));
    CHECK(pair.b_diag.back() == doctest::Approx(4.0));

    SUBCASE("unbounded ends are truncated") {
        const MatrixPair t = make_matrix_pair(OmegaBox(-inf, inf, 0.0, 1.0), 4, 100.0);
        CHECK(t.a_diag.front() == doctest::Approx(-100.0));
        CHECK(t.a_diag.back() == doctest::Approx(100.0));
    }
    SUBCASE("n = 1 collapses to the lower corner") {
        const MatrixPair one = make_matrix_pair(box, 1);
        REQUIRE(one.a_diag.size() == 1);
        CHECK(one.a_diag[0] == doctest::Approx(-2.0));
        CHECK(one.b_diag[0] == doctest::Approx(0.5));
    }
    CHECK_THROWS_AS(make_matrix_pair(box, 0), config_error);
    CHECK_THROWS_AS(make_matrix_pair(OmegaBox(0.0, 1.0, 0.0, 0.0), 4), config_error);
}

TEST_CASE("sampled numerical range is reproducible per seed") {
    const ProblemParams prm(4.0, 4.0);
    const MatrixPair pair = make_matrix_pair(OmegaBox(-32.0, 4.0, 0.0, 4.0), 16);
    const auto a = sample_numerical_range(pair, 50, 1234, prm);
    const auto b = sample_numerical_range(pair, 50, 1234, prm);
    const auto c = sample_numerical_range(pair, 50, 4321, prm);
    REQUIRE(a.size() == b.size());
    bool identical = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].z != b[i].z || a[i].at_infinity != b[i].at_infinity) identical = false;
    CHECK(identical);
    bool all_same_as_c = a.size() == c.size();
    if (all_same_as_c)
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].z != c[i].z) all_same_as_c = false;
    CHECK_FALSE(all_same_as_c);
}

TEST_CASE("sampled points land inside the enclosure") {
    const ProblemParams prm(4.0, 4.0);
    const OmegaBox box(-32.0, 4.0, 0.0, 4.0);
    const MatrixPair pair = make_matrix_pair(box, 12);
    int violations = 0;
    for (const auto& w : sample_numerical_range(pair, 500, 99, prm)) {
        try {
            if (!contains(w, box, prm).inside) ++violations;
        } catch (const numeric_error&) {
            ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("sigma_min worked example") {
    // A = diag(0, 1), B = diag(1, 0), c = d = 1:
    // t(0,1)(i) = 4/3 and t(1,0)(i) = 2, so sigma_min(T(i)) = 4/3.
    const ProblemParams prm(1.0, 1.0);
    MatrixPair pair;
    pair.a_diag = {0.0, 1.0};
    pair.b_diag = {1.0, 0.0};
    CHECK(sigma_min_T(pair, complex(0.0, 1.0), prm) == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("sigma_min dominates epsilon0 outside the enclosure") {
    const ProblemParams prm(4.0, 4.0);
    const OmegaBox box(-32.0, 4.0, 0.0, 4.0);
    const MatrixPair pair = make_matrix_pair(box, 32);
    for (double re = -8.0; re <= 8.0; re += 1.0)
        for (double im = -6.0; im <= 3.0; im += 1.0) {
            const complex w(re, im);
            if (near_pole(w, prm, 1e-6)) continue;
            bool inside;
            try {
                inside = contains(ComplexPoint(w), box, prm).inside;
            } catch (const numeric_error&) {
                continue;
            }
            if (inside) continue;
            const double e0 = epsilon0(w, box, prm).value;
            CHECK(sigma_min_T(pair, w, prm) >= e0 - 1e-10);
        }
}
