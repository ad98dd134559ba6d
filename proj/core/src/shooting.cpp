#include "annulus/shooting.hpp"

#include <cmath>
#include <string>

#include "annulus/numerics.hpp"

namespace annulus::shooting {

namespace {

// Lower piece under u^2 = s: the integrand becomes
//   (1 + (p-1) u^2 / (1-u^2)) / ((2-p) sqrt(1-u^2)),
// smooth at u = 0.
double integrand_u(double u, double pv) {
    const double u2 = u * u;
    return (1.0 + (pv - 1.0) * u2 / (1.0 - u2)) / ((2.0 - pv) * std::sqrt(1.0 - u2));
}

// Upper piece under u^2 = 1 - s:
//   ((p-1)/u^2 + 1/(1-u^2)) sqrt(1-u^2) / (2-p),
// smooth away from u = 0 (s = 1 is never reached: tau < 1).
double integrand_v(double v, double pv) {
    const double v2 = v * v;
    return ((pv - 1.0) / v2 + 1.0 / (1.0 - v2)) * std::sqrt(1.0 - v2) / (2.0 - pv);
}

}  // namespace

double s_integral(double s_lo, double s_hi, const geometry::Exponent& p, double abs_tol) {
    if (!p.interior()) throw regime_error("s_integral: requires p in (1, 2)");
    if (!(s_lo > 0.0 && s_hi < 1.0 && s_lo <= s_hi))
        throw domain_error("s_integral: need 0 < s_lo <= s_hi < 1");
    if (s_lo == s_hi) return 0.0;
    const double pv = p.value();
    const double split = 0.5;
    num::QuadOptions opt;
    double total = 0.0;
    if (s_lo < split) {
        const double hi = std::min(s_hi, split);
        opt.abs_tol = (s_hi > split) ? 0.5 * abs_tol : abs_tol;
        total += num::integrate([pv](double u) { return integrand_u(u, pv); },
                                std::sqrt(s_lo), std::sqrt(hi), opt);
    }
    if (s_hi > split) {
        const double lo = std::max(s_lo, split);
        opt.abs_tol = (s_lo < split) ? 0.5 * abs_tol : abs_tol;
        // u = sqrt(1-s) runs backwards; flip the limits once
        total += num::integrate([pv](double v) { return integrand_v(v, pv); },
                                std::sqrt(1.0 - s_hi), std::sqrt(1.0 - lo), opt);
    }
    return total;
}

double R_of_tau(double tau, double r, const geometry::Exponent& p, double quad_tol) {
    if (!(tau > 0.0 && tau < 1.0)) throw domain_error("R_of_tau: tau must lie in (0, 1)");
    if (!(r > 1.0)) throw domain_error("R_of_tau: r must be > 1");
    const gfield::GParams params = gfield::make_params(tau, r, p);
    return std::exp(s_integral(params.s_circ, tau, p, quad_tol));
}

double conserved_constant(double r, double s_circ, double p) {
    return std::pow(r, 2.0 - p) * std::pow(1.0 - s_circ, 0.5 * (1.0 - p)) * std::sqrt(s_circ);
}

TauSolution solve_tau(double r, double R, const geometry::Exponent& p, double tol_rel,
                      double quad_tol) {
    if (!(r > 1.0)) throw domain_error("solve_tau: r must be > 1, got " + std::to_string(r));
    if (!(R > 1.0)) throw domain_error("solve_tau: R must be > 1, got " + std::to_string(R));
    if (!p.interior()) throw regime_error("solve_tau: requires p in (1, 2)");

    const double tol = tol_rel * R;
    const auto shoot = [&](double tau) { return R_of_tau(tau, r, p, quad_tol) - R; };

    const double f_mid = shoot(0.5);
    double tau_best = 0.5;
    double res_best = std::abs(f_mid);
    if (res_best > tol) {
        // Expand the bracket from 0.5: R(tau) -> 1 as tau -> 0 and -> infinity
        // as tau -> 1, so a sign change must appear before the endpoints.
        double tau_lo = 0.5, tau_hi = 0.5;
        double f_lo = f_mid, f_hi = f_mid;
        while (f_lo > 0.0) {
            tau_lo *= 0.5;
            if (tau_lo < 1e-14)
                throw precision_error("solve_tau: bracket expansion exhausted toward tau = 0");
            f_lo = shoot(tau_lo);
        }
        while (f_hi < 0.0) {
            tau_hi = 0.5 * (tau_hi + 1.0);
            if (1.0 - tau_hi < 1e-14)
                throw precision_error("solve_tau: bracket expansion exhausted toward tau = 1");
            f_hi = shoot(tau_hi);
        }

        for (int iter = 0; iter < 200; ++iter) {
            const double tau = 0.5 * (tau_lo + tau_hi);
            if (tau <= tau_lo || tau >= tau_hi) break;  // bracket at double resolution
            const double f = shoot(tau);
            if (std::abs(f) < res_best) {
                res_best = std::abs(f);
                tau_best = tau;
            }
            if (res_best <= tol) break;
            if ((f > 0.0) == (f_lo > 0.0)) {
                tau_lo = tau;
                f_lo = f;
            } else {
                tau_hi = tau;
            }
        }
        if (!(res_best <= std::max(tol, 1e-8 * R)))
            throw precision_error("solve_tau: bisection stalled with |R(tau) - R| = " +
                                  std::to_string(res_best));
    }

    TauSolution sol;
    sol.params = gfield::make_params(tau_best, r, p);
    sol.r = r;
    sol.R = R;
    sol.c = conserved_constant(r, sol.params.s_circ, p.value());
    return sol;
}

}  // namespace annulus::shooting
