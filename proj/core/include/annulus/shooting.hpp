#ifndef ANNULUS_SHOOTING_HPP
#define ANNULUS_SHOOTING_HPP

#include "annulus/gfield.hpp"

namespace annulus::shooting {

/// Result of the outer solve: the shooting parameter tau with
/// R(tau) = R, plus the conserved constant c = P(r).
struct TauSolution {
    gfield::GParams params;  // tau, b, s_circ, tau_circ for the solved tau
    double r;
    double R;
    double c;  // r^{2-p} (1 - s_circ)^{(1-p)/2} sqrt(s_circ)

    double tau() const { return params.tau; }
};

/// The exponent integral of the radial profile,
///   integral_{s_lo}^{s_hi} ((p-1)/(1-s) + 1/s) sqrt(s) / (2 (2-p) sqrt(1-s)) ds,
/// by adaptive quadrature with substitution u^2 = s on the lower part and
/// u^2 = 1 - s on the upper part. Absolute tolerance applies to the
/// integral (the exponent of H).
double s_integral(double s_lo, double s_hi, const geometry::Exponent& p,
                  double abs_tol = 1e-10);

/// Target-radius map R(tau) = exp(s_integral(s_circ, tau)). Tends to 1 as
/// tau -> 0 and to +infinity as tau -> 1.
double R_of_tau(double tau, double r, const geometry::Exponent& p, double quad_tol = 1e-11);

/// Conserved constant c = P(r) evaluated from the solved outer value.
double conserved_constant(double r, double s_circ, double p);

/// Find tau with |R(tau) - R| <= tol_rel * R. Expands a bracket from
/// tau = 0.5 (halving toward 0, midpointing toward 1) until R(tau) - R
/// changes sign, then bisects on the first detected sign change; no
/// monotonicity of R(tau) is assumed.
TauSolution solve_tau(double r, double R, const geometry::Exponent& p,
                      double tol_rel = 1e-9, double quad_tol = 1e-11);

}  // namespace annulus::shooting

#endif
