#ifndef ANNULUS_ENERGY_HPP
#define ANNULUS_ENERGY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "annulus/minimizer.hpp"

namespace annulus::energy {

/// Energy diagnostics for one solve or one grid evaluation.
struct EnergyReport {
    double energy = 0.0;       // F_p value
    double lower_bound = 0.0;  // sharp theoretical lower bound
    double gap = 0.0;          // energy - lower_bound
    double p_const_dev = 0.0;  // max relative deviation of P(t) from c
    double el_residual = 0.0;  // max normalized Euler-Lagrange residual
    std::size_t nt = 0;        // grid resolution when applicable
    std::size_t ntheta = 0;
};

/// 2 pi int_1^r t (1/t^2 + H'^2/H^2)^{p/2} dt for the solved minimizer,
/// by adaptive quadrature. The p = 1, b = 1 endpoint singularity at t = 1
/// is handled by the substitution u^2 = t - 1.
double radial_energy(const minimizer::RadialMinimizer& m, double quad_tol = 1e-9);

/// Same integral for an arbitrary tabulated profile (monotone cubic
/// interpolation of H and H'). Used for non-minimizing test profiles.
double radial_energy(const minimizer::RadialProfile& profile, double quad_tol = 1e-9);

/// Sharp lower bound for the energy over all admissible homeomorphisms:
///   2 pi int_1^r t^{1-p} (1 - p g(t)) / (1-g(t))^{p/2} dt + 2 pi p c log R.
/// Equals the minimizer's energy.
double lower_bound(const shooting::TauSolution& sol, double quad_tol = 1e-9);

/// Closed form of the p = 1 lower bound,
///   2 pi (sqrt(b^2 r^2 - 1) - sqrt(b^2 - 1) + arccsc(b r) - arccsc(b)) / b
///   + 2 pi log R / b.
double lower_bound_p1(double b, double r, double R);

/// Regime dispatcher for the lower bound of a built minimizer.
double lower_bound(const minimizer::RadialMinimizer& m, double quad_tol = 1e-9);

/// Weighted p-Dirichlet energy of a sampled map by second-order finite
/// differences and trapezoidal integration:
///   int ||Dh||^p / |h|^p t dt dtheta,  ||Dh||^2/|h|^2 = |grad log rho|^2
///   + |grad Theta|^2.
double grid_energy(const geometry::PolarGridMap& m, const geometry::Exponent& p);

/// Conserved product P(t) = t^{2-p} (1-g)^{(1-p)/2} sqrt(g) along the
/// profile nodes.
std::vector<std::pair<double, double>> p_profile(const minimizer::RadialMinimizer& m);

/// Max relative deviation of P(t) from the reference constant.
double p_const_deviation(const minimizer::RadialProfile& profile, double c_ref);
double p_const_deviation(const minimizer::RadialMinimizer& m);

/// Max normalized residual of the second-order Euler-Lagrange equation at
/// interior nodes. For solved profiles H'' comes from differentiating the
/// first integral; for raw profiles it is finite-differenced from the
/// tabulated H'.
double el_residual(const minimizer::RadialMinimizer& m);
double el_residual(const minimizer::RadialProfile& profile);

/// Assemble the radial diagnostics into one report.
EnergyReport make_report(const minimizer::RadialMinimizer& m, double quad_tol = 1e-9);

}  // namespace annulus::energy

#endif
