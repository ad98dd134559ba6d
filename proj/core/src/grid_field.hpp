// Internal: log-polar representation of a sampled map and the finite
// difference machinery shared by the grid energy and the certification
// bounds. Working with lambda = log rho makes inversion and rotation of the
// sample exact negations/shifts, so those symmetries hold to roundoff.
#ifndef ANNULUS_GRID_FIELD_HPP
#define ANNULUS_GRID_FIELD_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "annulus/errors.hpp"
#include "annulus/geometry.hpp"

namespace annulus::energy::detail {

struct LogField {
    std::vector<double> t;      // strictly increasing radii
    std::vector<double> lam;    // log rho, row-major (t, theta)
    std::vector<double> Theta;  // unwrapped argument, row-major
    int winding = 1;
    std::size_t nt = 0;
    std::size_t nth = 0;

    double lam_at(std::size_t i, std::size_t j) const { return lam[i * nth + j]; }
    double theta_at(std::size_t i, std::size_t j) const { return Theta[i * nth + j]; }
};

LogField to_log_field(const geometry::PolarGridMap& m);

/// q^{p/2} evaluator with sqrt chains for p a multiple of 1/4 (the common
/// sweep exponents); falls back to std::pow.
class PowHalfP {
  public:
    explicit PowHalfP(double p) : half_p_(0.5 * p), eighths_(-1) {
        const double k = 4.0 * p;  // 8 * (p/2)
        const double k_round = std::round(k);
        if (std::abs(k - k_round) < 1e-12) {
            const int ki = static_cast<int>(k_round);
            if (ki >= 4 && ki <= 8) eighths_ = ki;
        }
    }
    double operator()(double q) const {
        switch (eighths_) {
            case 4: return std::sqrt(q);
            case 5: {
                const double s1 = std::sqrt(q);
                return s1 * std::sqrt(std::sqrt(s1));
            }
            case 6: {
                const double s1 = std::sqrt(q);
                return s1 * std::sqrt(s1);
            }
            case 7: {
                const double s1 = std::sqrt(q);
                const double s2 = std::sqrt(s1);
                return s1 * s2 * std::sqrt(s2);
            }
            case 8: return q;
            default: return std::pow(q, half_p_);
        }
    }

  private:
    double half_p_;
    int eighths_;  // 8 * (p/2) when integral and in [4, 8], else -1
};

/// Energy of the field: sum over cells of t (|grad lam|^2 + |grad Theta|^2)^{p/2}
/// with trapezoid weights in t and the periodic rectangle rule in theta.
double field_energy(const LogField& f, double p);

/// Circle integral of |grad Theta| over the row i: int_{t T} |grad Theta| |dz|.
double angular_integral(const LogField& f, std::size_t i);

/// Ray integral of |grad rho|/rho = |grad lam| along the column j.
double radial_integral(const LogField& f, std::size_t j);

/// One-pass minima of the two certification integrals over all rows/columns.
struct ProvoMinima {
    double min_angular;
    double min_radial;
};
ProvoMinima provo_minima(const LogField& f);

}  // namespace annulus::energy::detail

#endif
