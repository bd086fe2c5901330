#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "wmax/closed_form.hpp"
#include "wmax/qstate.hpp"

using namespace wmax;

namespace {

double achieved_by(const OverlapResult& res, const PureState& psi) {
    REQUIRE(res.nearest.has_value());
    return std::norm(overlap(psi, *res.nearest));
}

}  // namespace

TEST_CASE("two-qubit overlap from the reduced determinant") {
    SUBCASE("Bell pair sits on the regime boundary at 1/2") {
        double s = std::sqrt(0.5);
        PureState bell(2, {{0b00, s}, {0b11, s}});
        auto res = pmax_two_qubit(bell);
        CHECK(res.pmax == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(res.regime == Regime::kBoundary);
        CHECK(achieved_by(res, bell) == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("product state gives 1") {
        PureState prod(2, {{0b01, 1.0}});
        auto res = pmax_two_qubit(prod);
        CHECK(res.pmax == doctest::Approx(1.0));
        CHECK(res.regime == Regime::kSlightlyEntangled);
    }

    SUBCASE("Schmidt coefficients 0.8/0.6") {
        PureState psi(2, {{0b00, 0.8}, {0b11, 0.6}});
        auto res = pmax_two_qubit(psi);
        CHECK(res.pmax == doctest::Approx(0.64).epsilon(1e-14));
        CHECK(achieved_by(res, psi) == doctest::Approx(0.64).epsilon(1e-12));
    }

    SUBCASE("complex amplitudes, nearest state achieves the value") {
        PureState psi(2, {{0b00, cplx(0.5, 0.1)},
                          {0b01, cplx(0.0, 0.3)},
                          {0b10, cplx(-0.4, 0.2)},
                          {0b11, std::sqrt(1.0 - 0.25 - 0.01 - 0.09 - 0.16 - 0.04)}});
        auto res = pmax_two_qubit(psi);
        CHECK(res.pmax >= 0.5);
        CHECK(res.pmax <= 1.0);
        CHECK(achieved_by(res, psi) == doctest::Approx(res.pmax).epsilon(1e-12));
    }

    CHECK_THROWS_AS(pmax_two_qubit(w_state(WParams::one_param(3, 0.2))),
                    std::invalid_argument);
}

TEST_CASE("three-coefficient circumradius form") {
    SUBCASE("equal coefficients give 4/9 through an equilateral triangle") {
        double c = 1.0 / std::sqrt(3.0);
        auto res = pmax_w3(WParams({c, c, c}));
        CHECK(res.pmax == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
        CHECK(res.regime == Regime::kHighlyEntangled);
        CHECK(res.method == "w3-circumradius");
        REQUIRE(res.circumradius.has_value());
        CHECK(*res.circumradius == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }

    SUBCASE("(0.6, 0.6, sqrt(0.28)) gives 0.5184/1.16") {
        auto res = pmax_w3(WParams({0.6, 0.6, std::sqrt(0.28)}));
        CHECK(res.pmax == doctest::Approx(0.4468965517241379).epsilon(1e-13));
        CHECK(res.regime == Regime::kHighlyEntangled);
    }

    SUBCASE("dominant coefficient flips to the max-squared rule") {
        auto res = pmax_w3(WParams({0.8, 0.36, 0.48}));
        CHECK(res.pmax == doctest::Approx(0.64).epsilon(1e-14));
        CHECK(res.regime == Regime::kSlightlyEntangled);
        CHECK(res.method == "w3-max-coefficient");
        // the one-hot nearest state achieves it
        CHECK(achieved_by(res, w_state(WParams({0.8, 0.36, 0.48}))) ==
              doctest::Approx(0.64).epsilon(1e-14));
    }

    SUBCASE("right coefficient triangle is the boundary") {
        auto res = pmax_w3(WParams({std::sqrt(0.5), 0.5, 0.5}));
        CHECK(res.pmax == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(res.regime == Regime::kBoundary);
        REQUIRE(res.circumradius.has_value());
        CHECK(*res.circumradius == doctest::Approx(std::sqrt(0.5) / 2.0).epsilon(1e-13));
    }

    SUBCASE("value is symmetric in the coefficients") {
        std::vector<double> c = {0.35, 0.62, 0.0};
        c[2] = std::sqrt(1.0 - c[0] * c[0] - c[1] * c[1]);
        std::sort(c.begin(), c.end());
        double reference = pmax_w3(WParams(c)).pmax;
        int checked = 0;
        do {
            CHECK(pmax_w3(WParams(c)).pmax == doctest::Approx(reference).epsilon(1e-13));
            ++checked;
        } while (std::next_permutation(c.begin(), c.end()));
        CHECK(checked == 6);
    }

    SUBCASE("matches the one-parameter formula on (a, a, q) triples") {
        for (double q : {0.1, 0.4, 0.6, 0.8}) {
            double a = std::sqrt((1.0 - q * q) / 2.0);
            double via_w3 = pmax_w3(WParams({a, a, q})).pmax;
            double via_wn = pmax_wn_one_param(3, q).pmax;
            CHECK(via_w3 == doctest::Approx(via_wn).epsilon(1e-12));
        }
    }

    SUBCASE("thin triangles stay numerically stable") {
        // nearly right triangle with a tiny third side; the value must stay
        // glued to the boundary value 1/2
        double eps = 1e-5;
        double big = std::sqrt((1.0 - eps * eps) / 2.0);
        auto res = pmax_w3(WParams({big, big, eps}));
        CHECK(res.pmax == doctest::Approx(0.5).epsilon(1e-7));
    }

    CHECK_THROWS_AS(pmax_w3(WParams({0.6, 0.8})), std::invalid_argument);
}

TEST_CASE("one-parameter family") {
    SUBCASE("n=4, q=1/2 hits 27/64") {
        auto res = pmax_wn_one_param(4, 0.5);
        CHECK(res.pmax == doctest::Approx(27.0 / 64.0).epsilon(1e-15));
        CHECK(res.regime == Regime::kHighlyEntangled);
        CHECK(res.method == "wn-one-param");
    }

    SUBCASE("n=6, q=0.3 frozen value") {
        auto res = pmax_wn_one_param(6, 0.3);
        CHECK(res.pmax == doctest::Approx(0.4037453114564203).epsilon(1e-13));
    }

    SUBCASE("equal-coefficient and reduction laws, n=5") {
        CHECK(pmax_wn_one_param(5, 1.0 / std::sqrt(5.0)).pmax ==
              doctest::Approx(std::pow(0.8, 4)).epsilon(1e-14));
        CHECK(pmax_wn_one_param(5, 0.0).pmax ==
              doctest::Approx(std::pow(0.75, 3)).epsilon(1e-14));
    }

    SUBCASE("beyond the branch point the value is q^2 with a one-hot optimum") {
        auto res = pmax_wn_one_param(4, 0.9);
        CHECK(res.pmax == doctest::Approx(0.81).epsilon(1e-15));
        CHECK(res.regime == Regime::kSlightlyEntangled);
        REQUIRE(res.nearest.has_value());
        double achieved = std::norm(overlap(w_state(WParams::one_param(4, 0.9)),
                                            *res.nearest));
        CHECK(achieved == doctest::Approx(0.81).epsilon(1e-14));
    }

    SUBCASE("branch point value is 1/2 for every n") {
        for (int n = 3; n <= 9; ++n) {
            auto res = pmax_wn_one_param(n, 1.0 / std::sqrt(2.0));
            CHECK(res.pmax == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(res.regime == Regime::kBoundary);
        }
    }

    SUBCASE("constructed nearest state achieves the value, any phase") {
        for (int n : {3, 5, 7}) {
            for (double q : {0.0, 0.3, 0.6}) {
                PureState w = w_state(WParams::one_param(n, q));
                double expected = pmax_wn_one_param(n, q).pmax;
                for (double phase : {0.0, 0.9}) {
                    ProductState near = nearest_wn_one_param(n, q, phase);
                    CHECK(std::norm(overlap(w, near)) ==
                          doctest::Approx(expected).epsilon(1e-12));
                }
            }
        }
    }

    CHECK_THROWS_AS(pmax_wn_one_param(2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(pmax_wn_one_param(4, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(nearest_wn_one_param(4, 0.8), std::invalid_argument);
}

TEST_CASE("two-parameter four-qubit family") {
    SUBCASE("a=0.3, b=0.4 frozen value") {
        auto res = pmax_w4_two_param(0.3, 0.4);
        CHECK(res.pmax == doctest::Approx(0.4459627839055152).epsilon(1e-13));
        CHECK(res.regime == Regime::kHighlyEntangled);
        CHECK(res.method == "w4-two-param");
        CHECK(!res.nearest.has_value());
    }

    SUBCASE("a=b=1/2 lies on the degenerate line and gives 27/64") {
        auto res = pmax_w4_two_param(0.5, 0.5);
        CHECK(res.pmax == doctest::Approx(27.0 / 64.0).epsilon(1e-12));
        CHECK(res.method == "w4-degenerate-line");
        CHECK(res.regime == Regime::kHighlyEntangled);
    }

    SUBCASE("value is symmetric in a and b") {
        CHECK(pmax_w4_two_param(0.3, 0.55).pmax ==
              doctest::Approx(pmax_w4_two_param(0.55, 0.3).pmax).epsilon(1e-15));
    }

    SUBCASE("a=q reduces to the one-parameter family at n=4") {
        for (double b : {0.2, 0.5, 0.65}) {
            double a = std::sqrt((1.0 - b * b) / 3.0);  // makes a = q
            CHECK(pmax_w4_two_param(a, b).pmax ==
                  doctest::Approx(pmax_wn_one_param(4, b).pmax).epsilon(1e-12));
        }
    }

    SUBCASE("a=0 closed value") {
        for (double b : {0.2, 0.45, 0.6}) {
            double q2 = (1.0 - b * b) / 2.0;
            double expected = 4.0 * q2 * q2 / (4.0 * q2 - b * b);
            CHECK(pmax_w4_two_param(0.0, b).pmax ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
    }

    SUBCASE("dominant coefficient regime") {
        auto res = pmax_w4_two_param(0.9, 0.2);
        CHECK(res.pmax == doctest::Approx(0.81).epsilon(1e-14));
        CHECK(res.regime == Regime::kSlightlyEntangled);
        REQUIRE(res.nearest.has_value());
        double q = std::sqrt((1.0 - 0.81 - 0.04) / 2.0);
        double achieved = std::norm(overlap(w_state(WParams({0.9, 0.2, q, q})),
                                            *res.nearest));
        CHECK(achieved == doctest::Approx(0.81).epsilon(1e-14));
    }

    SUBCASE("boundary at a^2 = 1/2") {
        auto res = pmax_w4_two_param(std::sqrt(0.5), 0.3);
        CHECK(res.pmax == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(res.regime == Regime::kBoundary);
    }

    CHECK_THROWS_AS(pmax_w4_two_param(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(pmax_w4_two_param(0.9, 0.9), std::invalid_argument);
}

TEST_CASE("max-squared-coefficient rule for slightly entangled W states") {
    SUBCASE("below 1/2 the rule does not apply") {
        CHECK(!pmax_slightly_entangled(WParams::one_param(5, 0.4)).has_value());
        CHECK(!pmax_slightly_entangled(WParams({0.6, 0.6, std::sqrt(0.28)})).has_value());
    }

    SUBCASE("dominant coefficient, any length") {
        auto res = pmax_slightly_entangled(WParams({0.8, 0.36, 0.48}));
        REQUIRE(res.has_value());
        CHECK(res->pmax == doctest::Approx(0.64).epsilon(1e-15));
        CHECK(res->regime == Regime::kSlightlyEntangled);
        CHECK(res->method == "slightly-entangled-rule");

        auto res6 = pmax_slightly_entangled(WParams::one_param(6, 0.85));
        REQUIRE(res6.has_value());
        CHECK(res6->pmax == doctest::Approx(0.7225).epsilon(1e-14));
    }

    SUBCASE("exact tie at 1/2 reports the boundary and the lowest index") {
        double s = std::sqrt(0.5);
        auto res = pmax_slightly_entangled(WParams({s, s}));
        REQUIRE(res.has_value());
        CHECK(res->regime == Regime::kBoundary);
        REQUIRE(res->nearest.has_value());
        // excitation sits on qubit 1 (lowest index wins the tie)
        CHECK(std::abs(res->nearest->factor(1).c1) == doctest::Approx(1.0));
        CHECK(std::abs(res->nearest->factor(2).c0) == doctest::Approx(1.0));
    }
}
