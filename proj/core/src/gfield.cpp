#include "annulus/gfield.hpp"

#include <cmath>
#include <string>

#include "annulus/numerics.hpp"

namespace annulus::gfield {

namespace {

// Relative endpoint guard keeping bisection brackets off the log
// singularities at s = 0 and s = 1.
constexpr double kEndpointGuard = 1e-15;

void require_interior(const geometry::Exponent& p, const char* who) {
    if (p.value() <= 1.0 || p.value() >= 2.0)
        throw regime_error(std::string(who) + ": requires p in (1, 2), got " +
                           std::to_string(p.value()));
}

}  // namespace

double g_rhs(double t, double g, const geometry::Exponent& p) {
    if (p.value() <= 1.0)
        throw regime_error("g_rhs: requires p in (1, 2], got " + std::to_string(p.value()));
    if (!(t >= 1.0)) throw domain_error("g_rhs: t must be >= 1, got " + std::to_string(t));
    if (!(g > 0.0 && g < 1.0))
        throw domain_error("g_rhs: g must lie in (0, 1), got " + std::to_string(g));
    const double pv = p.value();
    // denominator t (1 + (p-2) g) >= (p-1) t > 0 on the admissible range
    return 2.0 * (2.0 - pv) * (g - 1.0) * g / (t + (pv - 2.0) * t * g);
}

double k_of_s(double s, double b, const geometry::Exponent& p) {
    require_interior(p, "k_of_s");
    if (!(s > 0.0 && s < 1.0))
        throw singularity_error("k_of_s: s must lie strictly inside (0, 1), got " +
                                std::to_string(s));
    if (!(b > 0.0)) throw domain_error("k_of_s: b must be positive");
    const double pv = p.value();
    return b * std::exp(((pv - 1.0) * std::log1p(-s) - std::log(s)) / (2.0 * (2.0 - pv)));
}

double b_of_tau(double tau, const geometry::Exponent& p) {
    require_interior(p, "b_of_tau");
    if (!(tau > 0.0 && tau < 1.0))
        throw singularity_error("b_of_tau: tau must lie strictly inside (0, 1), got " +
                                std::to_string(tau));
    const double pv = p.value();
    return std::exp(((pv - 1.0) * std::log1p(-tau) - std::log(tau)) / (2.0 * (pv - 2.0)));
}

double B_func(double s, double tau, double r, const geometry::Exponent& p) {
    require_interior(p, "B_func");
    if (!(s > 0.0 && s < 1.0))
        throw singularity_error("B_func: s must lie strictly inside (0, 1), got " +
                                std::to_string(s));
    if (!(tau > 0.0 && tau < 1.0)) throw domain_error("B_func: tau must lie in (0, 1)");
    if (!(r > 1.0)) throw domain_error("B_func: r must be > 1");
    const double pv = p.value();
    return ((pv - 1.0) * std::log((1.0 - s) / (1.0 - tau)) - std::log(s / tau)) /
               (2.0 * (2.0 - pv)) -
           std::log(r);
}

double solve_s_circ(double tau, double r, const geometry::Exponent& p) {
    require_interior(p, "solve_s_circ");
    if (!(tau > 0.0 && tau < 1.0)) throw domain_error("solve_s_circ: tau must lie in (0, 1)");
    if (!(r > 1.0)) throw domain_error("solve_s_circ: r must be > 1");
    const double lo = tau * kEndpointGuard;
    const double hi = tau * (1.0 - kEndpointGuard);
    const auto B = [&](double s) { return B_func(s, tau, r, p); };
    if (!(B(lo) > 0.0) || !(B(hi) < 0.0))
        throw internal_error("solve_s_circ: bracket carries no sign change; parameters "
                             "outside the admissible regime");
    return num::bisect(B, lo, hi);
}

GParams make_params(double tau, double r, const geometry::Exponent& p) {
    GParams params;
    params.p = p.value();
    params.tau = tau;
    params.r = r;
    params.log_b =
        ((p.value() - 1.0) * std::log1p(-tau) - std::log(tau)) / (2.0 * (p.value() - 2.0));
    params.b = std::exp(params.log_b);
    params.s_circ = solve_s_circ(tau, r, p);
    params.tau_circ = 1.0 / (1.0 + std::pow(r, 4.0 - 2.0 * p.value()) * (1.0 / tau - 1.0));
    return params;
}

double g_tau_at(double t, const GParams& params) {
    if (!(t >= 1.0 && t <= params.r))
        throw domain_error("g_tau_at: t must lie in [1, r] = [1, " + std::to_string(params.r) +
                           "], got " + std::to_string(t));
    if (t == 1.0) return params.tau;
    if (t == params.r) return params.s_circ;
    // log k(s) = log b + ((p-1) log(1-s) - log s) / (2(2-p)), evaluated
    // directly so bisection runs on logs alone.
    const double pv = params.p;
    const double log_b = params.log_b;
    const double target = std::log(t);
    const double inv_denom = 1.0 / (2.0 * (2.0 - pv));
    const auto f = [&](double s) {
        return log_b + ((pv - 1.0) * std::log1p(-s) - std::log(s)) * inv_denom - target;
    };
    const double lo = std::max(params.s_circ * (1.0 - kEndpointGuard), 0.0);
    const double hi = std::min(params.tau * (1.0 + kEndpointGuard), 1.0 - kEndpointGuard);
    return num::bisect(f, lo, hi);
}

}  // namespace annulus::gfield
