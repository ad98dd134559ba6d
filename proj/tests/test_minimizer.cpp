#include <doctest.h>

#include <cmath>
#include <numbers>

#include "annulus/minimizer.hpp"

using namespace annulus;
using geometry::Exponent;
using minimizer::Regime;

TEST_CASE("p = 2 regime: power map t^alpha") {
    const auto m = minimizer::build_minimizer(2.0, 4.0, Exponent(2.0), 200);
    CHECK(m.regime == Regime::power_p2);
    CHECK(m.b_or_tau == doctest::Approx(2.0).epsilon(1e-15));  // alpha = log4/log2
    CHECK(m.c == doctest::Approx(2.0).epsilon(1e-15));
    for (double t : {1.0, 1.2345, 1.7, 2.0}) {
        const auto [H, dH] = minimizer::H_eval(m, t);
        CHECK(H == doctest::Approx(t * t).epsilon(1e-14));
        CHECK(dH == doctest::Approx(2.0 * t).epsilon(1e-14));
    }
    // first integral with constant g: g/(1-g) = alpha^2 so g = 4/5
    CHECK(minimizer::g_eval(m, 1.5) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(m.table.H.front() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.table.H.back() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("p = 1 regime: closed form with frozen values at (r=2, R=2)") {
    const auto m = minimizer::build_minimizer(2.0, 2.0, Exponent(1.0), 1000);
    CHECK(m.regime == Regime::closed_form_p1);
    CHECK_FALSE(m.boundary_case);
    CHECK(m.b_or_tau == doctest::Approx(1.0851508640591686).epsilon(1e-12));
    CHECK(m.c == doctest::Approx(1.0 / 1.0851508640591686).epsilon(1e-12));
    CHECK(minimizer::H_eval(m, 1.0).first == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(minimizer::H_eval(m, 2.0).first == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(minimizer::H_eval(m, 1.25).first ==
          doctest::Approx(1.4092408546293914).epsilon(1e-13));
    CHECK(minimizer::H_eval(m, 1.5).first ==
          doctest::Approx(1.6660203570517626).epsilon(1e-13));
    CHECK(minimizer::H_eval(m, 1.75).first ==
          doctest::Approx(1.8541407235139510).epsilon(1e-13));
    CHECK(minimizer::H_eval(m, 1.0).second ==
          doctest::Approx(2.3732130575360334).epsilon(1e-12));
    // the conserved product is exactly 1/b at every node
    for (std::size_t i = 0; i < m.table.t.size(); i += 97) {
        const double t = m.table.t[i];
        const double g = m.table.g[i];
        CHECK(t * std::sqrt(g) == doctest::Approx(m.c).epsilon(1e-14));
    }
}

TEST_CASE("p = 1: far from identity at (r=2, R=2)") {
    const auto m = minimizer::build_minimizer(2.0, 2.0, Exponent(1.0), 2000);
    double max_dev = 0.0;
    for (std::size_t i = 0; i < m.table.t.size(); ++i)
        max_dev = std::max(max_dev, std::abs(m.table.H[i] - m.table.t[i]));
    CHECK(max_dev > 0.05);
    CHECK(max_dev == doctest::Approx(0.17396797469374052).epsilon(1e-4));
}

TEST_CASE("p1_threshold: frozen values and limits") {
    CHECK(minimizer::p1_threshold(2.0) ==
          doctest::Approx(std::exp(std::numbers::pi / 3.0)).epsilon(1e-15));
    CHECK(minimizer::p1_threshold(2.0) ==
          doctest::Approx(2.8496539082263615).epsilon(1e-14));
    CHECK(minimizer::p1_threshold(1.0001) ==
          doctest::Approx(1.0142420110901765).epsilon(1e-12));
    CHECK(minimizer::p1_threshold(1e6) ==
          doctest::Approx(4.8104725704903759).epsilon(1e-12));
    CHECK(std::abs(minimizer::p1_threshold(1e6) - std::exp(std::numbers::pi / 2.0)) < 1e-4);
    // strictly increasing in r, limit 1 at r -> 1+
    double prev = 1.0;
    for (double r : {1.001, 1.5, 2.0, 4.0, 100.0}) {
        const double v = minimizer::p1_threshold(r);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(minimizer::p1_threshold(1.0 + 1e-12) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK_THROWS_AS(minimizer::p1_threshold(1.0), domain_error);
}

TEST_CASE("p1_b: frozen value, threshold equality gives b = 1, divergence at R -> 1+") {
    CHECK(minimizer::p1_b(2.0, 2.0) == doctest::Approx(1.0851508640591686).epsilon(1e-12));
    for (double r : {1.5, 2.0, 4.0}) {
        const double R0 = minimizer::p1_threshold(r);
        CHECK(std::abs(minimizer::p1_b(r, R0) - 1.0) <= 1e-10);
    }
    // csc(log R) divergence
    CHECK(minimizer::p1_b(2.0, 1.0 + 1e-8) > 1e7);
    CHECK_THROWS_AS(minimizer::p1_b(2.0, 0.99), domain_error);
    CHECK_THROWS_AS(minimizer::p1_b(2.0, 4.0), nonexistence_error);
    try {
        minimizer::p1_b(2.0, 4.0);
    } catch (const nonexistence_error& e) {
        CHECK(e.threshold == doctest::Approx(2.8496539082263615).epsilon(1e-12));
    }
}

TEST_CASE("p = 1 existence gate in build_minimizer") {
    CHECK_THROWS_AS(minimizer::build_minimizer(2.0, 4.0, Exponent(1.0)), nonexistence_error);
    // equality case builds, flags boundary-case, and H' blows up at t = 1
    const double R0 = minimizer::p1_threshold(2.0);
    const auto m = minimizer::build_minimizer(2.0, R0, Exponent(1.0), 500);
    CHECK(m.boundary_case);
    CHECK(m.b_or_tau == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::isinf(minimizer::H_eval(m, 1.0).second));
    CHECK(m.table.H.back() == doctest::Approx(R0).epsilon(1e-10));
}

TEST_CASE("interior regime: boundary interpolation and first integral") {
    const auto m = minimizer::build_minimizer(2.0, 2.0, Exponent(1.5), 1000);
    CHECK(m.regime == Regime::shooting);
    CHECK(m.b_or_tau == doctest::Approx(0.61197239910182177).epsilon(1e-8));
    CHECK(std::abs(m.table.H.front() - 1.0) <= 1e-8);
    CHECK(std::abs(m.table.H.back() - 2.0) <= 1e-8);
    // frozen interior profile values
    CHECK(minimizer::H_eval(m, 1.25).first ==
          doctest::Approx(1.2959253792481876).epsilon(1e-9));
    CHECK(minimizer::H_eval(m, 1.5).first ==
          doctest::Approx(1.5581165263411597).epsilon(1e-9));
    CHECK(minimizer::H_eval(m, 1.75).first ==
          doctest::Approx(1.7912736683883112).epsilon(1e-9));
    CHECK(minimizer::g_eval(m, 1.5) == doctest::Approx(0.47469528373089333).epsilon(1e-8));
    // strictly increasing H, positive derivative
    for (std::size_t i = 0; i + 1 < m.table.t.size(); ++i) {
        CHECK(m.table.H[i] < m.table.H[i + 1]);
        CHECK(m.table.dH[i] > 0.0);
    }
    // first-integral identity at every node: t H'/H = sqrt(g/(1-g))
    for (std::size_t i = 0; i < m.table.t.size(); i += 37) {
        const double lhs = m.table.t[i] * m.table.dH[i] / m.table.H[i];
        const double g = m.table.g[i];
        CHECK(std::abs(lhs - std::sqrt(g / (1.0 - g))) <= 1e-7);
    }
    // nonconstant derivative (genuinely non-power map)
    CHECK(std::abs(m.table.dH.front() - m.table.dH.back()) > 1e-3);
}

TEST_CASE("H_eval derivative from the first integral tracks the H difference quotient") {
    for (double pv : {1.0, 1.5, 2.0}) {
        const auto m = minimizer::build_minimizer(2.0, 2.5, geometry::Exponent(pv), 1500);
        for (double t : {1.1, 1.5, 1.9}) {
            const double h = 1e-6;
            const double fd = (minimizer::H_eval(m, t + h).first -
                               minimizer::H_eval(m, t - h).first) /
                              (2.0 * h);
            CHECK(minimizer::H_eval(m, t).second == doctest::Approx(fd).epsilon(1e-4));
        }
    }
}

TEST_CASE("H_eval rejects out-of-range queries") {
    const auto m = minimizer::build_minimizer(2.0, 2.0, Exponent(1.5), 200);
    CHECK_THROWS_AS(minimizer::H_eval(m, 0.999), domain_error);
    CHECK_THROWS_AS(minimizer::H_eval(m, 2.001), domain_error);
}

TEST_CASE("p-continuity smoke test: p = 1.01 profile near the p = 1 profile") {
    const auto m1 = minimizer::build_minimizer(2.0, 2.0, Exponent(1.0), 800);
    const auto mp = minimizer::build_minimizer(2.0, 2.0, Exponent(1.01), 800);
    double sup = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double t = 1.0 + static_cast<double>(i) / 200.0;
        sup = std::max(sup, std::abs(minimizer::H_eval(m1, t).first -
                                     minimizer::H_eval(mp, t).first));
    }
    CHECK(sup < 0.05);
}

TEST_CASE("energy is continuous across the regime boundaries") {
    const auto e = [](double pv) {
        return minimizer::build_minimizer(2.0, 2.0, geometry::Exponent(pv), 1000).energy;
    };
    CHECK(std::abs(e(1.001) - e(1.0)) < 1e-4);
    CHECK(std::abs(e(1.999) - e(2.0)) < 1e-4);
}

TEST_CASE("sampled minimizer is an admissible grid map") {
    const auto m = minimizer::build_minimizer(2.0, 3.0, Exponent(1.75), 600);
    const auto grid = minimizer::sample_map(m, 64, 32);
    CHECK(geometry::is_homeomorphic_sample(grid));
    CHECK(geometry::within_target(grid, 1.0, 3.0));
}
