#ifndef ANNULUS_GEOMETRY_HPP
#define ANNULUS_GEOMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "annulus/errors.hpp"

namespace annulus::geometry {

/// Tolerance for membership checks against the target annulus boundary;
/// boundary values are attained only as limits, so exact comparisons are
/// off by rounding.
inline constexpr double kBoundaryTol = 1e-9;

/// Normalized annulus pair: domain A(1, r) mapped onto target A(1, R),
/// boundary components in order (inner to inner, outer to outer).
struct AnnulusPair {
    double r;  // outer radius of the domain annulus, > 1
    double R;  // outer radius of the target annulus, > 1

    AnnulusPair(double r_outer, double R_outer);
};

/// Normalize general annuli (r0, R0) -> (r0s, R0s) to the (1, r) -> (1, R)
/// model pair by rescaling both domain and target.
AnnulusPair normalize_annuli(double r0, double R0, double r0s, double R0s);

/// Energy exponent p in [1, 2] with its regime tag. The endpoints select
/// closed-form constructions; the interior runs the shooting machinery.
class Exponent {
  public:
    enum class Regime { p_one, interior, p_two };

    explicit Exponent(double p);

    double value() const { return p_; }
    Regime regime() const {
        if (p_ == 1.0) return Regime::p_one;
        if (p_ == 2.0) return Regime::p_two;
        return Regime::interior;
    }
    bool interior() const { return regime() == Regime::interior; }

  private:
    double p_;
};

/// A map between annuli sampled on a polar grid: h(t e^{i theta}) =
/// rho e^{i Theta}. Theta is stored unwrapped (real-valued) so finite
/// differences are well defined; the continuation across the theta seam
/// adds winding * 2pi.
struct PolarGridMap {
    std::vector<double> t_grid;      // strictly increasing radii
    std::vector<double> theta_grid;  // uniform angles in [0, 2pi), no endpoint duplicate
    std::vector<double> rho;         // row-major (t, theta), values > 0
    std::vector<double> theta_val;   // row-major unwrapped argument
    int winding = 1;                 // Theta(t, th + 2pi) - Theta(t, th) = winding * 2pi

    std::size_t nt() const { return t_grid.size(); }
    std::size_t ntheta() const { return theta_grid.size(); }
    double& rho_at(std::size_t i, std::size_t j) { return rho[i * ntheta() + j]; }
    double rho_at(std::size_t i, std::size_t j) const { return rho[i * ntheta() + j]; }
    double& theta_at(std::size_t i, std::size_t j) { return theta_val[i * ntheta() + j]; }
    double theta_at(std::size_t i, std::size_t j) const { return theta_val[i * ntheta() + j]; }

    /// Structural validation: grid shapes, strict monotonicity of t, uniform
    /// theta, positive finite rho. Throws data_error / domain_error.
    void validate() const;
};

/// Build a uniform polar grid over [1, r] x [0, 2pi).
PolarGridMap make_grid(double t_inner, double t_outer, std::size_t nt, std::size_t ntheta);

/// Samples of the identity map z -> z on A(1, r).
PolarGridMap identity_map(double r, std::size_t nt, std::size_t ntheta);

/// Samples of z -> 1/h(z): rho' = 1/rho, Theta' = -Theta. The target annulus
/// becomes (1/R_outer, 1/R_inner) before renormalization; the weighted
/// p-Dirichlet energy is preserved exactly.
PolarGridMap invert_map(const PolarGridMap& m);

/// Samples of z -> h(lambda_dom z) / lambda_tgt on the rescaled grid
/// t' = t / lambda_dom. Grid stays aligned with the input samples, so the
/// result is exact (no resampling).
PolarGridMap rescale_map(const PolarGridMap& m, double lambda_dom, double lambda_tgt);

/// Samples of z -> e^{i alpha} h(z).
PolarGridMap rotate_map(const PolarGridMap& m, double alpha);

/// Check the homeomorphic-sample contract: rho strictly increasing along
/// every ray and winding-one continuation. Returns false rather than
/// throwing; used by the perturbation admissibility filter.
bool is_homeomorphic_sample(const PolarGridMap& m);

/// Membership of all rho samples in [inner (1 - tol), outer (1 + tol)].
bool within_target(const PolarGridMap& m, double inner, double outer,
                   double tol = kBoundaryTol);

}  // namespace annulus::geometry

#endif
