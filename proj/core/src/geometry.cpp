#include "annulus/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace annulus::geometry {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

AnnulusPair::AnnulusPair(double r_outer, double R_outer) : r(r_outer), R(R_outer) {
    if (!(r > 1.0) || !std::isfinite(r))
        throw domain_error("AnnulusPair: domain outer radius r must be > 1, got " +
                           std::to_string(r));
    if (!(R > 1.0) || !std::isfinite(R))
        throw domain_error("AnnulusPair: target outer radius R must be > 1, got " +
                           std::to_string(R));
}

AnnulusPair normalize_annuli(double r0, double R0, double r0s, double R0s) {
    if (!(r0 > 0.0) || !(R0 > r0))
        throw domain_error("normalize_annuli: domain radii must satisfy 0 < " +
                           std::to_string(r0) + " < " + std::to_string(R0));
    if (!(r0s > 0.0) || !(R0s > r0s))
        throw domain_error("normalize_annuli: target radii must satisfy 0 < " +
                           std::to_string(r0s) + " < " + std::to_string(R0s));
    return AnnulusPair(R0 / r0, R0s / r0s);
}

Exponent::Exponent(double p) : p_(p) {
    if (!(p >= 1.0 && p <= 2.0))
        throw domain_error("Exponent: p must lie in [1, 2], got " + std::to_string(p));
}

void PolarGridMap::validate() const {
    const std::size_t n_t = nt(), n_th = ntheta();
    if (n_t < 2 || n_th < 2) throw domain_error("PolarGridMap: grid must be at least 2 x 2");
    if (rho.size() != n_t * n_th || theta_val.size() != n_t * n_th)
        throw data_error("PolarGridMap: sample arrays do not match grid dimensions");
    for (std::size_t i = 0; i + 1 < n_t; ++i)
        if (!(t_grid[i] < t_grid[i + 1]))
            throw domain_error("PolarGridMap: t_grid must be strictly increasing");
    if (!(t_grid.front() > 0.0)) throw domain_error("PolarGridMap: radii must be positive");
    const double dth = kTwoPi / static_cast<double>(n_th);
    for (std::size_t j = 0; j < n_th; ++j)
        if (std::abs(theta_grid[j] - static_cast<double>(j) * dth) > 1e-12)
            throw domain_error("PolarGridMap: theta_grid must be uniform on [0, 2pi)");
    for (std::size_t k = 0; k < rho.size(); ++k) {
        if (std::isnan(rho[k]) || std::isnan(theta_val[k]))
            throw data_error("PolarGridMap: NaN sample at index " + std::to_string(k));
        if (!(rho[k] > 0.0))
            throw singularity_error("PolarGridMap: nonpositive rho sample at index " +
                                    std::to_string(k));
    }
}

PolarGridMap make_grid(double t_inner, double t_outer, std::size_t nt, std::size_t ntheta) {
    if (!(t_outer > t_inner) || !(t_inner > 0.0))
        throw domain_error("make_grid: need 0 < t_inner < t_outer");
    if (nt < 2 || ntheta < 2) throw domain_error("make_grid: need nt, ntheta >= 2");
    PolarGridMap m;
    m.t_grid.resize(nt);
    m.theta_grid.resize(ntheta);
    for (std::size_t i = 0; i < nt; ++i)
        m.t_grid[i] =
            t_inner + (t_outer - t_inner) * static_cast<double>(i) / static_cast<double>(nt - 1);
    m.t_grid.back() = t_outer;
    for (std::size_t j = 0; j < ntheta; ++j)
        m.theta_grid[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(ntheta);
    m.rho.assign(nt * ntheta, 0.0);
    m.theta_val.assign(nt * ntheta, 0.0);
    return m;
}

PolarGridMap identity_map(double r, std::size_t nt, std::size_t ntheta) {
    PolarGridMap m = make_grid(1.0, r, nt, ntheta);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < ntheta; ++j) {
            m.rho_at(i, j) = m.t_grid[i];
            m.theta_at(i, j) = m.theta_grid[j];
        }
    return m;
}

PolarGridMap invert_map(const PolarGridMap& m) {
    m.validate();
    PolarGridMap out = m;
    for (std::size_t k = 0; k < m.rho.size(); ++k) {
        if (m.rho[k] == 0.0)
            throw singularity_error("invert_map: rho = 0 sample cannot be inverted");
        out.rho[k] = 1.0 / m.rho[k];
        out.theta_val[k] = -m.theta_val[k];
    }
    out.winding = -m.winding;
    return out;
}

PolarGridMap rescale_map(const PolarGridMap& m, double lambda_dom, double lambda_tgt) {
    m.validate();
    if (!(lambda_dom > 0.0) || !(lambda_tgt > 0.0))
        throw domain_error("rescale_map: scale factors must be positive");
    PolarGridMap out = m;
    for (auto& t : out.t_grid) t /= lambda_dom;
    for (auto& v : out.rho) v /= lambda_tgt;
    return out;
}

PolarGridMap rotate_map(const PolarGridMap& m, double alpha) {
    m.validate();
    PolarGridMap out = m;
    for (auto& v : out.theta_val) v += alpha;
    return out;
}

bool is_homeomorphic_sample(const PolarGridMap& m) {
    const std::size_t n_t = m.nt(), n_th = m.ntheta();
    if (m.winding != 1) return false;
    for (std::size_t j = 0; j < n_th; ++j)
        for (std::size_t i = 0; i + 1 < n_t; ++i)
            if (!(m.rho_at(i, j) < m.rho_at(i + 1, j))) return false;
    // theta_val must progress by 2pi over one period: strict increase across
    // columns plus the winding continuation is the discrete version.
    for (std::size_t i = 0; i < n_t; ++i)
        for (std::size_t j = 0; j + 1 < n_th; ++j)
            if (!(m.theta_at(i, j) < m.theta_at(i, j + 1))) return false;
    for (std::size_t i = 0; i < n_t; ++i)
        if (!(m.theta_at(i, n_th - 1) < m.theta_at(i, 0) + kTwoPi)) return false;
    return true;
}

bool within_target(const PolarGridMap& m, double inner, double outer, double tol) {
    const double lo = inner * (1.0 - tol);
    const double hi = outer * (1.0 + tol);
    for (double v : m.rho)
        if (v < lo || v > hi) return false;
    return true;
}

}  // namespace annulus::geometry
