#ifndef ANNULUS_MINIMIZER_HPP
#define ANNULUS_MINIMIZER_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "annulus/numerics.hpp"
#include "annulus/shooting.hpp"

namespace annulus::minimizer {

/// How the profile was constructed.
enum class Regime { closed_form_p1, shooting, power_p2 };

const char* regime_name(Regime regime);

/// A tabulated radial profile H on [1, r]. Solved minimizers carry their
/// g-table; hand-built test profiles may leave it empty.
struct RadialProfile {
    double p = 2.0;
    double r = 0.0;
    double R = 0.0;
    std::vector<double> t;
    std::vector<double> H;
    std::vector<double> dH;
    std::vector<double> g;
};

/// The radial minimizer of the weighted p-Dirichlet energy between
/// A(1, r) and A(1, R).
struct RadialMinimizer {
    geometry::Exponent p;
    geometry::AnnulusPair annuli;
    Regime regime;
    /// b for p = 1, tau for interior p, alpha = log R / log r for p = 2.
    double b_or_tau = 0.0;
    RadialProfile table;
    double c = 0.0;       // conserved constant P(t)
    double energy = 0.0;  // 2 pi int_1^r t (1/t^2 + H'^2/H^2)^{p/2} dt
    /// Set when p = 1 sits exactly on the existence threshold (b = 1); the
    /// profile is still a homeomorphism but H' blows up at t = 1.
    bool boundary_case = false;
    /// Present for the shooting regime: exact g-field access.
    std::optional<shooting::TauSolution> interior;

    num::MonotoneCubic h_interp;  // monotone interpolant of the H table

    double r() const { return annuli.r; }
    double R() const { return annuli.R; }
};

/// Largest admissible target radius for p = 1: R0(r) = exp(pi/2 -
/// arctan(1/sqrt(r^2-1))). Strictly increasing in r, sup over r is e^{pi/2}.
double p1_threshold(double r);

/// The modulus bound log R0(r) = pi/2 - arctan(1/sqrt(r^2-1)).
double p1_modulus_bound(double r);

/// Shooting constant for p = 1: b = sqrt(1 + r^2 - 2 r cos(log R)) csc(log R) / r.
/// Defined for 1 < R <= R0(r); b >= 1, with b = 1 exactly at the threshold.
double p1_b(double r, double R);

/// Construct the radial minimizer. Dispatches on the regime of p:
/// closed form for p = 1 (existence gate per the threshold), shooting
/// quadrature for p in (1, 2), the power map t^alpha for p = 2.
RadialMinimizer build_minimizer(double r, double R, const geometry::Exponent& p,
                                std::size_t n_nodes = 1000, double quad_tol = 1e-11);

/// Evaluate (H, H') at t in [1, r]. Closed forms for p in {1, 2}; monotone
/// cubic interpolation of the table for interior p. H' always comes from
/// the first integral t H'/H = sqrt(g)/sqrt(1-g), never from differencing.
std::pair<double, double> H_eval(const RadialMinimizer& m, double t);

/// Exact g(t) along the solved profile.
double g_eval(const RadialMinimizer& m, double t);

/// Sample the minimizer as a polar grid map (rho = H(t), Theta = theta).
geometry::PolarGridMap sample_map(const RadialMinimizer& m, std::size_t nt,
                                  std::size_t ntheta);

/// View of the minimizer's table as a plain profile (for the generic
/// profile-based diagnostics).
const RadialProfile& profile(const RadialMinimizer& m);

}  // namespace annulus::minimizer

#endif
