#include <doctest.h>

#include <cmath>
#include <numbers>

#include "annulus/energy.hpp"
#include "annulus/geometry.hpp"

using namespace annulus;
using geometry::PolarGridMap;

namespace {

// smooth non-radial test map on A(1, r): rho = t^alpha e^{mu(t) cos theta},
// Theta = theta + nu(t) sin(2 theta), with mu, nu vanishing at the boundary
PolarGridMap smooth_test_map(double r, std::size_t nt, std::size_t ntheta) {
    PolarGridMap m = geometry::make_grid(1.0, r, nt, ntheta);
    const double alpha = 1.3;
    for (std::size_t i = 0; i < nt; ++i) {
        const double t = m.t_grid[i];
        const double bump = std::sin(std::numbers::pi * (t - 1.0) / (r - 1.0));
        for (std::size_t j = 0; j < ntheta; ++j) {
            const double th = m.theta_grid[j];
            m.rho_at(i, j) = std::pow(t, alpha) * std::exp(0.04 * bump * std::cos(th));
            m.theta_at(i, j) = th + 0.05 * bump * std::sin(2.0 * th);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("normalize_annuli reduces to the model pair") {
    const auto a = geometry::normalize_annuli(1, 2, 1, 3);
    CHECK(a.r == 2.0);
    CHECK(a.R == 3.0);
    const auto b = geometry::normalize_annuli(2, 6, 5, 10);
    CHECK(b.r == 3.0);
    CHECK(b.R == 2.0);
    const auto c = geometry::normalize_annuli(0.5, 1, 0.25, 1);
    CHECK(c.r == 2.0);
    CHECK(c.R == 4.0);
    // idempotence: normalizing a normalized pair is the identity
    const auto again = geometry::normalize_annuli(1.0, b.r, 1.0, b.R);
    CHECK(again.r == b.r);
    CHECK(again.R == b.R);
}

TEST_CASE("normalize_annuli rejects bad radii naming the pair") {
    CHECK_THROWS_AS(geometry::normalize_annuli(0, 2, 1, 3), domain_error);
    CHECK_THROWS_AS(geometry::normalize_annuli(2, 2, 1, 3), domain_error);
    CHECK_THROWS_AS(geometry::normalize_annuli(1, 2, 3, 2), domain_error);
    CHECK_THROWS_AS(geometry::AnnulusPair(1.0, 2.0), domain_error);
    CHECK_THROWS_AS(geometry::AnnulusPair(2.0, 0.5), domain_error);
}

TEST_CASE("Exponent regimes") {
    using Regime = geometry::Exponent::Regime;
    CHECK(geometry::Exponent(1.0).regime() == Regime::p_one);
    CHECK(geometry::Exponent(2.0).regime() == Regime::p_two);
    CHECK(geometry::Exponent(1.5).regime() == Regime::interior);
    CHECK_THROWS_AS(geometry::Exponent(0.99), domain_error);
    CHECK_THROWS_AS(geometry::Exponent(2.01), domain_error);
}

TEST_CASE("invert_map is the pointwise reciprocal and an involution") {
    const auto id = geometry::identity_map(2.0, 32, 32);
    const auto inv = geometry::invert_map(id);
    for (std::size_t i = 0; i < id.nt(); ++i)
        for (std::size_t j = 0; j < id.ntheta(); ++j) {
            CHECK(inv.rho_at(i, j) == doctest::Approx(1.0 / id.t_grid[i]).epsilon(1e-15));
            CHECK(inv.theta_at(i, j) == -id.theta_at(i, j));
        }
    CHECK(inv.winding == -1);
    const auto twice = geometry::invert_map(inv);
    for (std::size_t k = 0; k < id.rho.size(); ++k) {
        CHECK(std::abs(twice.rho[k] - id.rho[k]) <= 1e-14);
        CHECK(twice.theta_val[k] == id.theta_val[k]);
    }
    CHECK(twice.winding == 1);
}

TEST_CASE("energy invariance under inversion on a smooth map") {
    const auto m = smooth_test_map(2.0, 64, 64);
    const geometry::Exponent p(1.5);
    const double e = energy::grid_energy(m, p);
    const double e_inv = energy::grid_energy(geometry::invert_map(m), p);
    CHECK(std::abs(e_inv - e) / e <= 1e-12);
}

TEST_CASE("rescale_map: identity cases and the lambda^(p-2) energy law") {
    const auto m = smooth_test_map(2.0, 96, 96);
    SUBCASE("lambda = 1 is the identity") {
        const auto same = geometry::rescale_map(m, 1.0, 1.0);
        CHECK(same.rho == m.rho);
        CHECK(same.t_grid == m.t_grid);
    }
    SUBCASE("identity map rescaled by equal factors stays the identity map") {
        const auto id = geometry::identity_map(2.0, 24, 24);
        const auto scaled = geometry::rescale_map(id, 2.0, 2.0);
        for (std::size_t i = 0; i < scaled.nt(); ++i)
            for (std::size_t j = 0; j < scaled.ntheta(); ++j)
                CHECK(scaled.rho_at(i, j) ==
                      doctest::Approx(scaled.t_grid[i]).epsilon(1e-15));
    }
    SUBCASE("energy scales by lambda_dom^(p-2), exactly invariant at p = 2") {
        for (const double pv : {1.0, 1.5, 2.0}) {
            const geometry::Exponent p(pv);
            const double e = energy::grid_energy(m, p);
            const double e2 = energy::grid_energy(geometry::rescale_map(m, 2.0, 3.0), p);
            CHECK(std::abs(e2 / (e * std::pow(2.0, pv - 2.0)) - 1.0) <= 1e-6);
        }
    }
    SUBCASE("nonpositive factors rejected") {
        CHECK_THROWS_AS(geometry::rescale_map(m, 0.0, 1.0), domain_error);
        CHECK_THROWS_AS(geometry::rescale_map(m, 1.0, -2.0), domain_error);
    }
}

TEST_CASE("rotation leaves samples winding-one and energy untouched") {
    const auto m = smooth_test_map(2.0, 64, 64);
    const auto rot = geometry::rotate_map(m, 1.0);
    CHECK(geometry::is_homeomorphic_sample(rot));
    const geometry::Exponent p(1.25);
    CHECK(energy::grid_energy(rot, p) == doctest::Approx(energy::grid_energy(m, p)).epsilon(1e-13));
}

TEST_CASE("homeomorphic-sample contract") {
    auto m = smooth_test_map(2.0, 32, 32);
    CHECK(geometry::is_homeomorphic_sample(m));
    CHECK(geometry::within_target(m, 1.0, std::pow(2.0, 1.3) * std::exp(0.04)));
    auto broken = m;
    broken.rho_at(5, 7) = broken.rho_at(4, 7);  // kill strict monotonicity on one ray
    CHECK_FALSE(geometry::is_homeomorphic_sample(broken));
    CHECK_FALSE(geometry::is_homeomorphic_sample(geometry::invert_map(m)));
}

TEST_CASE("validation flags bad samples") {
    auto m = geometry::identity_map(2.0, 8, 8);
    m.rho_at(1, 1) = -0.5;
    CHECK_THROWS_AS(m.validate(), singularity_error);
    auto n = geometry::identity_map(2.0, 8, 8);
    n.rho_at(2, 2) = std::nan("");
    CHECK_THROWS_AS(n.validate(), data_error);
}
