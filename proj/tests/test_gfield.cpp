#include <doctest.h>

#include <cmath>
#include <numbers>

#include "annulus/gfield.hpp"

using namespace annulus;
using geometry::Exponent;

TEST_CASE("g_rhs: hand values and regime guards") {
    CHECK(gfield::g_rhs(1.0, 0.5, Exponent(2.0)) == 0.0);  // factor (2-p) vanishes
    CHECK(gfield::g_rhs(3.7, 1e-12, Exponent(1.5)) ==
          doctest::Approx(0.0).epsilon(1e-10));  // fixed point at g = 0
    CHECK(gfield::g_rhs(1.0, 0.5, Exponent(1.5)) ==
          doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(gfield::g_rhs(1.0, 0.5, Exponent(1.0)), regime_error);
    CHECK_THROWS_AS(gfield::g_rhs(0.5, 0.5, Exponent(1.5)), domain_error);
    CHECK_THROWS_AS(gfield::g_rhs(1.0, 1.5, Exponent(1.5)), domain_error);
    // strictly negative on the admissible range for p < 2
    for (double t : {1.0, 2.0, 10.0})
        for (double g : {0.01, 0.5, 0.99})
            CHECK(gfield::g_rhs(t, g, Exponent(1.25)) < 0.0);
}

TEST_CASE("k_of_s: frozen value, normalization, monotonicity") {
    CHECK(gfield::k_of_s(0.5, 1.0, Exponent(1.5)) ==
          doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
    const Exponent p(1.5);
    const double tau = 0.37;
    const double b = gfield::b_of_tau(tau, p);
    CHECK(std::abs(gfield::k_of_s(tau, b, p) - 1.0) <= 1e-12);
    // strictly decreasing in s
    double prev = gfield::k_of_s(0.01, 1.0, p);
    for (double s = 0.05; s < 1.0; s += 0.05) {
        const double v = gfield::k_of_s(s, 1.0, p);
        CHECK(v < prev);
        prev = v;
    }
    CHECK_THROWS_AS(gfield::k_of_s(0.0, 1.0, p), singularity_error);
    CHECK_THROWS_AS(gfield::k_of_s(1.0, 1.0, p), singularity_error);
    CHECK_THROWS_AS(gfield::k_of_s(0.5, 1.0, Exponent(2.0)), regime_error);
}

TEST_CASE("b_of_tau: frozen value and limiting behavior") {
    CHECK(gfield::b_of_tau(0.5, Exponent(1.5)) ==
          doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-15));
    CHECK(gfield::b_of_tau(1e-3, Exponent(1.5)) ==
          doctest::Approx(0.001000500375).epsilon(1e-9));
    // b -> 0 as tau -> 0+ and b -> infinity as tau -> 1- for p in (1,2)
    CHECK(gfield::b_of_tau(1e-6, Exponent(1.5)) < 1e-5);
    CHECK(gfield::b_of_tau(0.999, Exponent(1.5)) ==
          doctest::Approx(31.59115383).epsilon(1e-9));
    CHECK(gfield::b_of_tau(1.0 - 1e-9, Exponent(1.5)) > 3e4);
    CHECK_THROWS_AS(gfield::b_of_tau(0.0, Exponent(1.5)), singularity_error);
    CHECK_THROWS_AS(gfield::b_of_tau(1.0, Exponent(1.5)), singularity_error);
}

TEST_CASE("B_func: value at tau is -log r, +infinity toward 0") {
    const Exponent p(1.5);
    const double tau = 0.5, r = 2.0;
    // both log terms vanish at s = tau
    CHECK(gfield::B_func(tau, tau, r, p) == doctest::Approx(-std::log(r)).epsilon(1e-15));
    CHECK(gfield::B_func(1e-14, tau, r, p) > 10.0);
    CHECK(gfield::B_func(0.297, tau, r, p) ==
          doctest::Approx(-0.0018968242462166042).epsilon(1e-12));
    CHECK_THROWS_AS(gfield::B_func(0.0, tau, r, p), singularity_error);
}

TEST_CASE("solve_s_circ: frozen roots and the tau_circ bracket") {
    const double s1 = gfield::solve_s_circ(0.5, 2.0, Exponent(1.5));
    CHECK(s1 == doctest::Approx(0.29653516540862679).epsilon(1e-12));
    CHECK(std::abs(gfield::B_func(s1, 0.5, 2.0, Exponent(1.5))) < 1e-12);
    const double s2 = gfield::solve_s_circ(0.3, 2.0, Exponent(1.25));
    CHECK(s2 == doctest::Approx(0.11254804708137405).epsilon(1e-12));
    const double s3 = gfield::solve_s_circ(0.7, 4.0, Exponent(1.75));
    CHECK(s3 == doctest::Approx(0.50756310236493361).epsilon(1e-12));

    // s_circ < tau_circ = 1/(1 + r^{4-2p} (1/tau - 1)) across a sweep
    for (double tau : {0.1, 0.3, 0.5, 0.7, 0.9})
        for (double r : {1.5, 2.0, 4.0})
            for (double pv : {1.25, 1.5, 1.75}) {
                const double s = gfield::solve_s_circ(tau, r, Exponent(pv));
                const double tau_circ =
                    1.0 / (1.0 + std::pow(r, 4.0 - 2.0 * pv) * (1.0 / tau - 1.0));
                CHECK(s > 0.0);
                CHECK(s < tau_circ);
                CHECK(tau_circ < tau);
            }

    // r -> 1+ pulls the root back to tau (B(tau) = -log r -> 0)
    CHECK(gfield::solve_s_circ(0.5, 1.0 + 1e-9, Exponent(1.5)) ==
          doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("B_func changes sign exactly once on (0, tau) across the sweep grid") {
    for (double tau : {0.2, 0.5, 0.8})
        for (double r : {1.5, 2.0, 4.0})
            for (double pv : {1.25, 1.5, 1.75}) {
                const Exponent p(pv);
                int sign_changes = 0;
                double prev = gfield::B_func(tau * 1e-6, tau, r, p);
                const int n = 2000;
                for (int i = 1; i <= n; ++i) {
                    const double s = tau * (1e-6 + (1.0 - 2e-6) * i / n);
                    const double v = gfield::B_func(s, tau, r, p);
                    if ((v > 0.0) != (prev > 0.0)) ++sign_changes;
                    prev = v;
                }
                CHECK(sign_changes == 1);
            }
}

TEST_CASE("g_tau_at: boundary normalization, monotonicity, exact inverse") {
    const Exponent p(1.5);
    const auto params = gfield::make_params(0.5, 2.0, p);
    CHECK(params.tau_circ == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(gfield::g_tau_at(1.0, params) == 0.5);
    CHECK(gfield::g_tau_at(2.0, params) == params.s_circ);
    double prev = 1.0;
    for (double t = 1.0; t <= 2.0; t += 0.01) {
        const double g = gfield::g_tau_at(t, params);
        CHECK(g <= prev);
        prev = g;
        // exact inverse: k(g(t)) = t
        if (t > 1.0 && t < 2.0)
            CHECK(std::abs(gfield::k_of_s(g, params.b, p) - t) <= 1e-10 * t);
    }
    CHECK_THROWS_AS(gfield::g_tau_at(0.99, params), domain_error);
    CHECK_THROWS_AS(gfield::g_tau_at(2.01, params), domain_error);
}

TEST_CASE("ODE consistency: finite differences of g match g_rhs") {
    // centered difference with step 1e-5 against the closed-form field
    for (double pv : {1.25, 1.5, 1.75}) {
        const Exponent p(pv);
        const auto params = gfield::make_params(0.6, 2.0, p);
        for (double t = 1.01; t < 1.99; t += 0.035) {
            const double h = 1e-5;
            const double fd =
                (gfield::g_tau_at(t + h, params) - gfield::g_tau_at(t - h, params)) /
                (2.0 * h);
            const double rhs = gfield::g_rhs(t, gfield::g_tau_at(t, params), p);
            CHECK(std::abs(fd - rhs) <= 1e-6);
        }
    }
}
