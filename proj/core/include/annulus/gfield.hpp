#ifndef ANNULUS_GFIELD_HPP
#define ANNULUS_GFIELD_HPP

#include "annulus/geometry.hpp"

namespace annulus::gfield {

/// Parameters of the g-field for one (tau, r, p): the normalization
/// constant b with g_tau(1) = tau, the outer value s_circ = g_tau(r), and
/// the a-priori upper bracket tau_circ for s_circ.
struct GParams {
    double p;         // exponent, interior (1, 2)
    double tau;       // g at the inner boundary, in (0, 1)
    double b;         // positive constant normalizing k(tau) = 1
    double log_b;     // log b, the representation actually used internally
                      // (b itself can leave double range as p -> 2)
    double s_circ;    // g at the outer boundary, in (0, tau)
    double tau_circ;  // 1 / (1 + r^{4-2p} (1/tau - 1)), upper bound for s_circ
    double r;         // domain outer radius the parameters were solved for
};

/// Right-hand side of the autonomous-in-g ODE
///   g' = 2 (2-p) (g-1) g / (t + (p-2) t g),
/// strictly negative for p < 2 on t >= 1, g in (0,1).
double g_rhs(double t, double g, const geometry::Exponent& p);

/// Closed-form inverse of g: k(s) = b exp(((p-1) log(1-s) - log s) / (2(2-p))),
/// strictly decreasing on (0,1). Interior p only.
double k_of_s(double s, double b, const geometry::Exponent& p);

/// Normalization constant b(tau) with k(tau; b, p) = 1, i.e. g_tau(1) = tau.
double b_of_tau(double tau, const geometry::Exponent& p);

/// B(s) = ((p-1) log((1-s)/(1-tau)) - log(s/tau)) / (2(2-p)) - log r.
/// Strictly decreasing, B(0+) = +inf, B(tau) = -log r; its unique root on
/// (0, tau) is s_circ.
double B_func(double s, double tau, double r, const geometry::Exponent& p);

/// Root of B on (0, tau) by bracketed bisection.
double solve_s_circ(double tau, double r, const geometry::Exponent& p);

/// Solve b, s_circ, tau_circ for the given (tau, r, p).
GParams make_params(double tau, double r, const geometry::Exponent& p);

/// g_tau(t) for t in [1, r], by bisection-inverting the strictly decreasing
/// k on (s_circ, tau). g_tau(1) = tau, g_tau(r) = s_circ.
double g_tau_at(double t, const GParams& params);

}  // namespace annulus::gfield

#endif
