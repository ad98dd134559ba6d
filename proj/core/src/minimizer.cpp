#include "annulus/minimizer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "annulus/energy.hpp"

namespace annulus::minimizer {

namespace {

constexpr double kPi = std::numbers::pi;
// Floating slack for deciding "exact equality" at the p = 1 threshold.
constexpr double kThresholdSlack = 1e-12;

// arccot(x) = arctan(1/x) in (0, pi/2] for x >= 0.
double acot(double x) { return std::atan2(1.0, x); }

std::vector<double> log_spaced_nodes(double r, std::size_t n) {
    if (n < 3) throw domain_error("build_minimizer: need at least 3 nodes");
    std::vector<double> t(n);
    const double log_r = std::log(r);
    for (std::size_t i = 0; i < n; ++i)
        t[i] = std::exp(log_r * static_cast<double>(i) / static_cast<double>(n - 1));
    t.front() = 1.0;
    t.back() = r;
    return t;
}

}  // namespace

const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::closed_form_p1: return "closed-form-p1";
        case Regime::shooting: return "shooting";
        case Regime::power_p2: return "power-p2";
    }
    return "unknown";
}

double p1_modulus_bound(double r) {
    if (!(r > 1.0)) throw domain_error("p1_modulus_bound: r must be > 1");
    return kPi / 2.0 - acot(std::sqrt(r * r - 1.0));
}

double p1_threshold(double r) { return std::exp(p1_modulus_bound(r)); }

double p1_b(double r, double R) {
    if (!(r > 1.0)) throw domain_error("p1_b: r must be > 1");
    if (!(R > 1.0)) throw domain_error("p1_b: R must be > 1, got " + std::to_string(R));
    const double bound = p1_modulus_bound(r);
    const double log_R = std::log(R);
    if (log_R > bound + kThresholdSlack)
        throw nonexistence_error(
            "p1_b: no radial homeomorphism onto A(1, " + std::to_string(R) +
                "); the p = 1 threshold for r = " + std::to_string(r) + " is R0 = " +
                std::to_string(std::exp(bound)),
            std::exp(bound));
    const double b =
        std::sqrt(1.0 + r * r - 2.0 * r * std::cos(log_R)) / (r * std::sin(log_R));
    // roundoff can push b a hair under 1 at the threshold; the formula
    // guarantees b >= 1 on the admissible range
    return std::max(b, 1.0);
}

RadialMinimizer build_minimizer(double r, double R, const geometry::Exponent& p,
                                std::size_t n_nodes, double quad_tol) {
    geometry::AnnulusPair annuli(r, R);
    RadialMinimizer m{p, annuli, Regime::power_p2, 0.0, {}, 0.0, 0.0, false, std::nullopt, {}};
    const double pv = p.value();
    m.table.p = pv;
    m.table.r = r;
    m.table.R = R;
    m.table.t = log_spaced_nodes(r, n_nodes);
    const std::size_t n = m.table.t.size();
    m.table.H.resize(n);
    m.table.dH.resize(n);
    m.table.g.resize(n);

    switch (p.regime()) {
        case geometry::Exponent::Regime::p_one: {
            m.regime = Regime::closed_form_p1;
            const double b = p1_b(r, R);  // throws nonexistence above threshold
            m.b_or_tau = b;
            m.boundary_case = (p1_modulus_bound(r) - std::log(R)) <= kThresholdSlack;
            m.c = 1.0 / b;
            const double a1 = acot(std::sqrt(b * b - 1.0));
            for (std::size_t i = 0; i < n; ++i) {
                const double t = m.table.t[i];
                const double root = std::sqrt(b * b * t * t - 1.0);
                const double H = std::exp(a1 - acot(root));
                m.table.H[i] = H;
                m.table.dH[i] = H / (t * root);  // t H'/H = 1/sqrt(b^2 t^2 - 1)
                m.table.g[i] = 1.0 / (b * b * t * t);
            }
            break;
        }
        case geometry::Exponent::Regime::p_two: {
            m.regime = Regime::power_p2;
            const double alpha = std::log(R) / std::log(r);
            m.b_or_tau = alpha;
            m.c = alpha;
            const double g_const = alpha * alpha / (1.0 + alpha * alpha);
            for (std::size_t i = 0; i < n; ++i) {
                const double t = m.table.t[i];
                m.table.H[i] = std::pow(t, alpha);
                m.table.dH[i] = alpha * std::pow(t, alpha - 1.0);
                m.table.g[i] = g_const;
            }
            break;
        }
        case geometry::Exponent::Regime::interior: {
            m.regime = Regime::shooting;
            shooting::TauSolution sol = shooting::solve_tau(r, R, p, 1e-9, quad_tol);
            m.b_or_tau = sol.tau();
            m.c = sol.c;
            // g at the nodes (endpoints are exact by construction)
            for (std::size_t i = 0; i < n; ++i)
                m.table.g[i] = gfield::g_tau_at(m.table.t[i], sol.params);
            // cumulative exponent integral: H_i = exp(int_{g_i}^{tau} ...)
            const double seg_tol = quad_tol / static_cast<double>(n);
            double acc = 0.0;
            m.table.H[0] = 1.0;
            for (std::size_t i = 1; i < n; ++i) {
                // g is strictly decreasing; adjacent nodes can still tie at
                // ulp level on near-degenerate annuli
                if (m.table.g[i] < m.table.g[i - 1])
                    acc += shooting::s_integral(m.table.g[i], m.table.g[i - 1], p, seg_tol);
                m.table.H[i] = std::exp(acc);
            }
            for (std::size_t i = 0; i < n; ++i) {
                const double g = m.table.g[i];
                m.table.dH[i] =
                    m.table.H[i] * std::sqrt(g) / (m.table.t[i] * std::sqrt(1.0 - g));
            }
            m.interior = std::move(sol);
            break;
        }
    }

    m.h_interp = num::MonotoneCubic(m.table.t, m.table.H);
    m.energy = energy::radial_energy(m);
    return m;
}

double g_eval(const RadialMinimizer& m, double t) {
    if (!(t >= 1.0 && t <= m.r()))
        throw domain_error("g_eval: t = " + std::to_string(t) + " outside [1, " +
                           std::to_string(m.r()) + "]");
    switch (m.regime) {
        case Regime::closed_form_p1: {
            const double b = m.b_or_tau;
            return 1.0 / (b * b * t * t);
        }
        case Regime::power_p2: {
            const double alpha = m.b_or_tau;
            return alpha * alpha / (1.0 + alpha * alpha);
        }
        case Regime::shooting:
            return gfield::g_tau_at(t, m.interior->params);
    }
    throw internal_error("g_eval: unhandled regime");
}

std::pair<double, double> H_eval(const RadialMinimizer& m, double t) {
    if (!(t >= 1.0 && t <= m.r()))
        throw domain_error("H_eval: t = " + std::to_string(t) + " outside [1, " +
                           std::to_string(m.r()) + "]");
    switch (m.regime) {
        case Regime::closed_form_p1: {
            const double b = m.b_or_tau;
            const double root = std::sqrt(b * b * t * t - 1.0);
            const double H = std::exp(acot(std::sqrt(b * b - 1.0)) - acot(root));
            return {H, H / (t * root)};
        }
        case Regime::power_p2: {
            const double alpha = m.b_or_tau;
            return {std::pow(t, alpha), alpha * std::pow(t, alpha - 1.0)};
        }
        case Regime::shooting: {
            const double H = m.h_interp(t);
            const double g = gfield::g_tau_at(t, m.interior->params);
            return {H, H * std::sqrt(g) / (t * std::sqrt(1.0 - g))};
        }
    }
    throw internal_error("H_eval: unhandled regime");
}

geometry::PolarGridMap sample_map(const RadialMinimizer& m, std::size_t nt,
                                  std::size_t ntheta) {
    geometry::PolarGridMap grid = geometry::make_grid(1.0, m.r(), nt, ntheta);
    for (std::size_t i = 0; i < nt; ++i) {
        const double H = H_eval(m, grid.t_grid[i]).first;
        for (std::size_t j = 0; j < ntheta; ++j) {
            grid.rho_at(i, j) = H;
            grid.theta_at(i, j) = grid.theta_grid[j];
        }
    }
    return grid;
}

const RadialProfile& profile(const RadialMinimizer& m) { return m.table; }

}  // namespace annulus::minimizer
