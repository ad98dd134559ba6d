#ifndef ANNULUS_REPORT_IO_HPP
#define ANNULUS_REPORT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "annulus/energy.hpp"
#include "annulus/verify.hpp"

namespace annulus::io {

/// Format a double with 17 significant digits (round-trip exact).
std::string fmt(double v);

/// Profile CSV: header `t,H,dH,g,P`, one row per node.
void write_profile_csv(std::ostream& os, const minimizer::RadialMinimizer& m);

/// Polar grid map CSV: header `t,theta,rho,Theta`, row-major over (t, theta);
/// radii and angles in absolute units (radians).
void write_map_csv(std::ostream& os, const geometry::PolarGridMap& m);

/// Parse a map CSV written by write_map_csv. Throws data_error on malformed
/// input (ragged rows, non-numeric fields, non-grid layout).
geometry::PolarGridMap read_map_csv(std::istream& is);

/// EnergyReport as a JSON object with 17-significant-digit numbers.
std::string energy_report_json(const energy::EnergyReport& rep);

/// Perturbation trials as a JSON list of {seed, mode, amplitude, energy, gap}.
std::string trials_json(const std::vector<verify::TrialResult>& trials);

/// SVG plot of the profile H(t) against the identity line. The embedded
/// metadata element records max_t |H(t) - t|. Returns that deviation.
double write_profile_svg(std::ostream& os, const minimizer::RadialMinimizer& m);

}  // namespace annulus::io

#endif
