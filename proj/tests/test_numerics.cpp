#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "annulus/numerics.hpp"

using namespace annulus;

TEST_CASE("adaptive quadrature reproduces closed-form integrals") {
    num::QuadOptions opt;
    opt.abs_tol = 1e-12;
    CHECK(num::integrate([](double x) { return x * x; }, 0.0, 1.0, opt) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(num::integrate([](double x) { return std::exp(x); }, 0.0, 2.0, opt) ==
          doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-13));
    CHECK(num::integrate([](double x) { return 1.0 / x; }, 1.0, 2.0, opt) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-13));
    // steep but integrable: needs genuine subdivision
    CHECK(num::integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-8, 1.0, opt) ==
          doctest::Approx(2.0 * (1.0 - 1e-4)).epsilon(1e-10));
}

TEST_CASE("adaptive and composite rules agree") {
    const auto f = [](double x) { return std::sin(3.0 * x) * std::exp(-x); };
    const double adaptive = num::integrate(f, 0.0, 4.0, {1e-12, 1 << 15});
    const double composite = num::integrate_composite(f, 0.0, 4.0, 64);
    CHECK(adaptive == doctest::Approx(composite).epsilon(1e-12));
}

TEST_CASE("quadrature non-convergence carries the running estimate") {
    num::QuadOptions opt;
    opt.abs_tol = 1e-14;
    opt.max_subdiv = 4;  // deliberately starved
    bool threw = false;
    try {
        num::integrate([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3141)); }, 0.0,
                       1.0, opt);
    } catch (const numerical_error& e) {
        threw = true;
        CHECK(std::isfinite(e.achieved));
        CHECK(e.achieved > 0.0);
    }
    CHECK(threw);
}

TEST_CASE("bisection finds roots to double resolution") {
    const double root = num::bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0);
    CHECK(root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(num::bisect([](double x) { return x + 10.0; }, 0.0, 1.0),
                    internal_error);
}

TEST_CASE("monotone cubic preserves data and monotonicity") {
    std::vector<double> x, y;
    for (int i = 0; i <= 20; ++i) {
        x.push_back(1.0 + 0.05 * i);
        y.push_back(std::log(x.back()));  // strictly increasing, concave
    }
    num::MonotoneCubic interp(x, y);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(interp(x[i]) == doctest::Approx(y[i]).epsilon(1e-15));
    double prev = interp(1.0);
    for (double q = 1.0; q <= 2.0; q += 1e-3) {
        const double v = interp(q);
        CHECK(v >= prev - 1e-15);
        prev = v;
        CHECK(v == doctest::Approx(std::log(q)).epsilon(1e-4));
    }
    // derivative of the interpolant tracks the true derivative
    const auto [v, d] = interp.eval(1.5);
    CHECK(v == doctest::Approx(std::log(1.5)).epsilon(1e-8));
    CHECK(d == doctest::Approx(1.0 / 1.5).epsilon(2e-3));
    CHECK_THROWS_AS(interp(0.5), extrapolation_error);
    CHECK_THROWS_AS(interp(2.5), extrapolation_error);
}

TEST_CASE("monotone cubic interpolates linear data exactly") {
    std::vector<double> x{1.0, 1.3, 1.9, 2.0}, y{2.0, 2.6, 3.8, 4.0};
    num::MonotoneCubic interp(x, y);
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(1.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const double q = u(gen);
        const auto [v, d] = interp.eval(q);
        CHECK(v == doctest::Approx(2.0 * q).epsilon(1e-14));
        CHECK(d == doctest::Approx(2.0).epsilon(1e-12));
    }
}
