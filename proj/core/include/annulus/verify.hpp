#ifndef ANNULUS_VERIFY_HPP
#define ANNULUS_VERIFY_HPP

#include <cstdint>
#include <vector>

#include "annulus/energy.hpp"

namespace annulus::verify {

/// Seeded boundary-fixing Fourier perturbation of the radial minimizer:
///   rho   <- rho exp(eps phi(t) sum_k c_k cos(k theta + a_k)),
///   Theta <- theta + eps psi(t) sum_k d_k sin(k theta + b_k),
/// with phi, psi vanishing at t in {1, r}, so boundary values and winding
/// are preserved by construction.
struct PerturbationSpec {
    enum class Mode { radial, angular, full };

    std::uint64_t seed = 0;
    double amplitude = 0.05;
    Mode mode = Mode::full;
    std::size_t n_modes = 2;
};

const char* mode_name(PerturbationSpec::Mode mode);

struct IneqCheck {
    double lhs;
    double rhs;
    bool holds;
};

/// Concavity inequality (a+bb)^{q/2} >= (1-s)^{1-q/2} a^{q/2} + s^{1-q/2} bb^{q/2}
/// for q in [1,2], s in [0,1]; equality exactly at bb/a = s/(1-s).
/// Endpoint weights use the convention 0^0 = 1 at q = 2.
IneqCheck check_koski(double a, double bb, double s, double q);

/// Tangent-line inequality a^p >= p x^{p-1} a - (p-1) x^p for the convex
/// map a -> a^p; equality at a = x (everywhere when p = 1).
IneqCheck check_preci(double a, double x, double p);

/// Circle integral int_{t T} |grad Theta| |dz| at row t_index; >= 2 pi for
/// homeomorphic samples up to discretization.
double angular_bound(const geometry::PolarGridMap& m, std::size_t t_index);

/// Ray integral int_1^r |grad rho|/rho dt at column theta_index; >= log R
/// for samples onto A(1, R) up to discretization.
double radial_bound(const geometry::PolarGridMap& m, std::size_t theta_index);

/// Build the perturbed sample of the minimizer. Perturbations breaking
/// per-ray monotonicity of rho are retried with halved amplitude (up to
/// 100 times); throws perturbation_error when exhausted.
geometry::PolarGridMap make_perturbed_map(const minimizer::RadialMinimizer& m,
                                          const PerturbationSpec& spec, std::size_t nt,
                                          std::size_t ntheta);

/// Grid energy of the perturbed map against the minimizer energy:
/// energy = F_p of the perturbation, lower_bound = minimizer energy,
/// gap = energy - lower_bound (>= -discretization for true minimizers).
energy::EnergyReport perturb_and_compare(const minimizer::RadialMinimizer& m,
                                         const PerturbationSpec& spec, std::size_t nt,
                                         std::size_t ntheta);

struct TrialResult {
    std::uint64_t seed = 0;
    PerturbationSpec::Mode mode = PerturbationSpec::Mode::full;
    double amplitude = 0.0;    // amplitude actually used (after halvings)
    double energy = 0.0;       // grid energy of the perturbed map
    double gap = 0.0;          // energy - minimizer energy
    double min_angular = 0.0;  // min over rows of the circle integral
    double min_radial = 0.0;   // min over columns of the ray integral
    std::size_t halvings = 0;
};

/// Deterministic seeded batch of perturbation trials, run concurrently.
/// Trial i is fully determined by base_seed + i; results are ordered by
/// trial index regardless of scheduling.
std::vector<TrialResult> run_trials(const minimizer::RadialMinimizer& m,
                                    std::size_t n_trials, std::uint64_t base_seed,
                                    std::size_t nt, std::size_t ntheta,
                                    double max_amplitude = 0.05, unsigned n_threads = 0);

/// Exact symmetry checks at grid level: rotation invariance, inversion
/// invariance, and the lambda^{p-2} domain rescaling law.
struct SymmetryReport {
    double rotation = 0.0;
    double inversion = 0.0;
    double rescale = 0.0;
    double max_violation() const;
};

SymmetryReport symmetry_suite(const minimizer::RadialMinimizer& m, std::size_t nt,
                              std::size_t ntheta);

}  // namespace annulus::verify

#endif
