#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wmax/closed_form.hpp"
#include "wmax/oracle.hpp"
#include "wmax/qstate.hpp"
#include "wmax/stationarity.hpp"

using namespace wmax;

namespace {

// Bloch vector of factor k, rotated about z by -phi so that a common-azimuth
// family lands in the x-z plane.
BlochVector planar_bloch(const SingleQubitState& factor, double phi) {
    BlochVector s = BlochVector::from_state(factor);
    double c = std::cos(phi), sn = std::sin(phi);
    BlochVector out{s.x * c + s.y * sn, s.y * c - s.x * sn, s.z};
    // the rotation leaves only roundoff in y; snap it for the planar checks
    REQUIRE(std::abs(out.y) < 1e-10);
    out.y = 0.0;
    return out;
}

double azimuth(const SingleQubitState& factor) {
    BlochVector s = BlochVector::from_state(factor);
    return std::atan2(s.y, s.x);
}

ProductState with_factor(std::vector<SingleQubitState> factors) {
    return ProductState(std::move(factors));
}

}  // namespace

TEST_CASE("three-qubit Bloch objective equals the best-overlap identity") {
    WParams params({0.35, 0.62, std::sqrt(1.0 - 0.1225 - 0.3844)});
    PureState psi = w_state(params);

    // unit vectors off the x-z plane on purpose; the objective is general
    BlochVector s1{0.48, 0.6, 0.64};
    BlochVector s2{-0.6, 0.64, 0.48};

    double obj = objective_bloch3(params, s1, s2);

    auto prod = with_factor({s1.to_state(), s2.to_state(), SingleQubitState{}});
    double best_third = partial_inner(psi, prod, 3).norm_sq();
    CHECK(obj == doctest::Approx(best_third).epsilon(1e-13));

    // at the known optimum the objective reaches pmax
    auto sym = solve_symmetric(3, 0.4);
    double at_opt = objective_bloch3(WParams::one_param(3, 0.4), sym.s_vectors[0],
                                     sym.s_vectors[1]);
    CHECK(at_opt == doctest::Approx(pmax_wn_one_param(3, 0.4).pmax).epsilon(1e-12));

    CHECK_THROWS_AS(objective_bloch3(params, BlochVector{0.5, 0.0, 0.5}, s2),
                    std::invalid_argument);
}

TEST_CASE("four-qubit Bloch objective equals the best-overlap identity") {
    WParams params({0.45, 0.55, 0.3, std::sqrt(1.0 - 0.2025 - 0.3025 - 0.09)});
    PureState psi = w_state(params);
    CorrelationTensors t = correlation_tensors(psi);

    BlochVector s1{0.48, 0.6, 0.64};
    BlochVector s2{-0.6, 0.64, 0.48};
    BlochVector s3{0.8, -0.36, 0.48};

    double obj = objective_bloch4(t, s1, s2, s3);
    auto prod = with_factor(
        {s1.to_state(), s2.to_state(), s3.to_state(), SingleQubitState{}});
    double best_fourth = partial_inner(psi, prod, 4).norm_sq();
    CHECK(obj == doctest::Approx(best_fourth).epsilon(1e-13));
}

TEST_CASE("symmetric solutions of the one-parameter family") {
    SUBCASE("n=3 closed z-component and objective") {
        for (double q : {0.1, 0.4, 0.65}) {
            auto sol = solve_symmetric(3, q);
            REQUIRE(sol.s_vectors.size() == 2);
            double a2 = (1.0 - q * q) / 2.0;
            double expected_z = q * q / (4.0 * a2 - q * q);
            CHECK(sol.s_vectors[0].z == doctest::Approx(expected_z).epsilon(1e-14));
            CHECK(sol.s_vectors[1].z == doctest::Approx(expected_z).epsilon(1e-14));
            CHECK(sol.objective ==
                  doctest::Approx(pmax_wn_one_param(3, q).pmax).epsilon(1e-12));
            CHECK(sol.residual < 1e-12);
        }
    }

    SUBCASE("n=4 closed z-component and objective") {
        for (double q : {0.1, 0.5, 0.65}) {
            auto sol = solve_symmetric(4, q);
            REQUIRE(sol.s_vectors.size() == 3);
            double a2 = (1.0 - q * q) / 3.0;
            double expected_z = 1.0 / (9.0 * a2 - q * q);
            CHECK(sol.s_vectors[0].z == doctest::Approx(expected_z).epsilon(1e-14));
            CHECK(sol.objective ==
                  doctest::Approx(pmax_wn_one_param(4, q).pmax).epsilon(1e-12));
            CHECK(sol.residual < 1e-12);
        }
        CHECK(solve_symmetric(4, 0.5).objective ==
              doctest::Approx(27.0 / 64.0).epsilon(1e-13));
    }

    SUBCASE("equal-coefficient point n=3 has s_z = 1/3") {
        auto sol = solve_symmetric(3, 1.0 / std::sqrt(3.0));
        CHECK(sol.s_vectors[0].z == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
        CHECK(sol.objective == doctest::Approx(4.0 / 9.0).epsilon(1e-13));
    }

    CHECK_THROWS_AS(solve_symmetric(5, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(solve_symmetric(3, 0.8), std::invalid_argument);
}

TEST_CASE("stationarity residuals vanish at oracle optima") {
    SUBCASE("four-qubit multiplier-free equations") {
        WParams params({0.45, 0.55, 0.3, std::sqrt(1.0 - 0.2025 - 0.3025 - 0.09)});
        PureState psi = w_state(params);
        auto oracle = alternating_maximize(psi);
        REQUIRE(oracle.converged);

        // the optimal factors share one azimuth; rotate it away to satisfy
        // the planar convention of the residual equations
        double phi = azimuth(oracle.nearest.factor(1));
        CHECK(std::abs(std::remainder(azimuth(oracle.nearest.factor(2)) - phi,
                                      2.0 * std::numbers::pi)) < 1e-7);
        BlochVector s1 = planar_bloch(oracle.nearest.factor(1), phi);
        BlochVector s2 = planar_bloch(oracle.nearest.factor(2), phi);
        BlochVector s3 = planar_bloch(oracle.nearest.factor(3), phi);

        CorrelationTensors t = correlation_tensors(psi);
        auto res = residual_lagrange4(t, s1, s2, s3);
        for (double r : res) CHECK(std::abs(r) < 1e-9);

        // sensitivity: a small detuning of one vector must register
        BlochVector bumped = s1;
        bumped.z = s1.z + 1e-3;
        bumped.x = std::sqrt(1.0 - bumped.z * bumped.z);
        auto detuned = residual_lagrange4(t, bumped, s2, s3);
        CHECK(std::abs(detuned[0]) > 1e-6);
    }

    SUBCASE("three-qubit single-variable equation") {
        WParams params({0.55, 0.6, std::sqrt(1.0 - 0.3025 - 0.36)});
        PureState psi = w_state(params);
        auto oracle = alternating_maximize(psi);
        REQUIRE(oracle.converged);

        double phi = azimuth(oracle.nearest.factor(1));
        BlochVector s1 = planar_bloch(oracle.nearest.factor(1), phi);
        BlochVector s2 = planar_bloch(oracle.nearest.factor(2), phi);
        CHECK(std::abs(residual_single3(params, s1, s2)) < 1e-9);

        // swapping the first two coefficients swaps the vector roles
        WParams swapped({0.6, 0.55, std::sqrt(1.0 - 0.3025 - 0.36)});
        CHECK(std::abs(residual_single3(swapped, s2, s1)) < 1e-9);
    }

    SUBCASE("symmetric family satisfies the single-variable reduction") {
        for (double q : {0.2, 0.5, 0.7}) {
            auto sol = solve_symmetric(4, q);
            double sz = sol.s_vectors[0].z;
            double sx = sol.s_vectors[0].x;
            auto pq = single4_pq(WParams::one_param(4, q), sz, sz);
            CHECK(sx * pq.q == doctest::Approx(sz * pq.p).epsilon(1e-12));
        }
    }
}

TEST_CASE("residual preconditions") {
    WParams p3({0.55, 0.6, std::sqrt(1.0 - 0.3025 - 0.36)});
    BlochVector planar{0.6, 0.0, 0.8};
    BlochVector tilted{0.6, 0.8, 0.0};

    CHECK_THROWS_AS(residual_single3(p3, tilted, planar), std::invalid_argument);
    CHECK_THROWS_AS(residual_single3(p3, BlochVector{0.1, 0.0, 0.1}, planar),
                    std::invalid_argument);

    CorrelationTensors t = correlation_tensors(w_state(WParams::one_param(4, 0.4)));
    CHECK_THROWS_AS(residual_lagrange4(t, tilted, planar, planar), std::invalid_argument);

    CHECK_THROWS_AS(single4_pq(WParams::one_param(4, 0.4), 1.5, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(single4_pq(p3, 0.1, 0.1), std::invalid_argument);
}
