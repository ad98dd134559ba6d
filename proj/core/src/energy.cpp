#include "annulus/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "grid_field.hpp"

namespace annulus::energy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double arccsc(double x) { return std::asin(1.0 / x); }

// Energy integrand of the p = 1 closed-form profile: b t / sqrt(b^2 t^2 - 1).
// Integrable 1/sqrt singularity at t = 1 when b = 1.
double p1_energy_integral(double b, double r, double quad_tol) {
    num::QuadOptions opt;
    opt.abs_tol = 0.5 * quad_tol;
    // substitution t = 1 + u^2 near the inner boundary
    const double t_split = std::min(r, 2.0);
    double total = num::integrate(
        [b](double u) {
            const double t = 1.0 + u * u;
            return 2.0 * u * b * t / std::sqrt(b * b * t * t - 1.0);
        },
        0.0, std::sqrt(t_split - 1.0), opt);
    if (t_split < r)
        total += num::integrate(
            [b](double t) { return b * t / std::sqrt(b * b * t * t - 1.0); }, t_split, r,
            opt);
    return total;
}

// Max over interior nodes of the normalized residual of the Euler-Lagrange
// equation in polynomial form:
//   H'' (t H^3 + (p-1) t^3 H H'^2)
//     = H' ((p-3) H^3 + t H^2 H' - t^2 H H'^2 + (p-1) t^3 H'^3).
// ddH_at(i) supplies H'' at node i.
template <class F>
double el_residual_impl(const minimizer::RadialProfile& prof, F&& ddH_at) {
    const std::size_t n = prof.t.size();
    const double p = prof.p;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double t = prof.t[i];
        const double H = prof.H[i];
        const double dH = prof.dH[i];
        const double ddH = ddH_at(i);
        const double lhs = ddH * (t * H * H * H + (p - 1.0) * t * t * t * H * dH * dH);
        const double term1 = (p - 3.0) * H * H * H * dH;
        const double term2 = t * H * H * dH * dH;
        const double term3 = -t * t * H * dH * dH * dH;
        const double term4 = (p - 1.0) * t * t * t * dH * dH * dH * dH;
        const double rhs = term1 + term2 + term3 + term4;
        const double scale = std::abs(lhs) + std::abs(term1) + std::abs(term2) +
                             std::abs(term3) + std::abs(term4);
        if (scale == 0.0) continue;
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    return worst;
}

}  // namespace

double radial_energy(const minimizer::RadialMinimizer& m, double quad_tol) {
    const double p = m.p.value();
    const double r = m.r();
    num::QuadOptions opt;
    opt.abs_tol = quad_tol;
    switch (m.regime) {
        case minimizer::Regime::closed_form_p1:
            return kTwoPi * p1_energy_integral(m.b_or_tau, r, quad_tol);
        case minimizer::Regime::power_p2: {
            const double alpha = m.b_or_tau;
            return kTwoPi *
                   num::integrate([alpha](double t) { return (1.0 + alpha * alpha) / t; },
                                  1.0, r, opt);
        }
        case minimizer::Regime::shooting: {
            // on the minimizer 1/t^2 + H'^2/H^2 = 1 / (t^2 (1 - g))
            const auto& params = m.interior->params;
            return kTwoPi * num::integrate(
                                [&](double t) {
                                    const double g = gfield::g_tau_at(t, params);
                                    return t * std::pow(t * t * (1.0 - g), -0.5 * p);
                                },
                                1.0, r, opt);
        }
    }
    throw internal_error("radial_energy: unhandled regime");
}

double radial_energy(const minimizer::RadialProfile& profile, double quad_tol) {
    if (profile.t.size() < 3) throw domain_error("radial_energy: profile too short");
    num::MonotoneCubic h(profile.t, profile.H);
    num::MonotoneCubic dh(profile.t, profile.dH);
    const double p = profile.p;
    num::QuadOptions opt;
    opt.abs_tol = quad_tol;
    return kTwoPi * num::integrate(
                        [&](double t) {
                            const double H = h(t);
                            const double ratio = dh(t) / H;
                            return t * std::pow(1.0 / (t * t) + ratio * ratio, 0.5 * p);
                        },
                        profile.t.front(), profile.t.back(), opt);
}

double lower_bound(const shooting::TauSolution& sol, double quad_tol) {
    const double p = sol.params.p;
    num::QuadOptions opt;
    opt.abs_tol = quad_tol;
    const double integral = num::integrate(
        [&](double t) {
            const double g = gfield::g_tau_at(t, sol.params);
            return std::pow(t, 1.0 - p) * (1.0 - p * g) * std::pow(1.0 - g, -0.5 * p);
        },
        1.0, sol.r, opt);
    return kTwoPi * integral + kTwoPi * p * sol.c * std::log(sol.R);
}

double lower_bound_p1(double b, double r, double R) {
    const double br = b * r;
    return kTwoPi *
               (std::sqrt(br * br - 1.0) - std::sqrt(b * b - 1.0) + arccsc(br) - arccsc(b)) /
               b +
           kTwoPi * std::log(R) / b;
}

double lower_bound(const minimizer::RadialMinimizer& m, double quad_tol) {
    switch (m.regime) {
        case minimizer::Regime::closed_form_p1:
            return lower_bound_p1(m.b_or_tau, m.r(), m.R());
        case minimizer::Regime::power_p2:
            return radial_energy(m, quad_tol);
        case minimizer::Regime::shooting:
            return lower_bound(*m.interior, quad_tol);
    }
    throw internal_error("lower_bound: unhandled regime");
}

double grid_energy(const geometry::PolarGridMap& m, const geometry::Exponent& p) {
    if (m.nt() < 16 || m.ntheta() < 16)
        throw domain_error("grid_energy: need nt, ntheta >= 16");
    const detail::LogField field = detail::to_log_field(m);
    return detail::field_energy(field, p.value());
}

std::vector<std::pair<double, double>> p_profile(const minimizer::RadialMinimizer& m) {
    const auto& prof = m.table;
    const double p = prof.p;
    std::vector<std::pair<double, double>> out;
    out.reserve(prof.t.size());
    for (std::size_t i = 0; i < prof.t.size(); ++i) {
        const double g = prof.g[i];
        const double P = std::pow(prof.t[i], 2.0 - p) *
                         std::pow(1.0 - g, 0.5 * (1.0 - p)) * std::sqrt(g);
        out.emplace_back(prof.t[i], P);
    }
    return out;
}

double p_const_deviation(const minimizer::RadialProfile& profile, double c_ref) {
    if (profile.g.empty()) throw domain_error("p_const_deviation: profile carries no g table");
    const double p = profile.p;
    double worst = 0.0;
    for (std::size_t i = 0; i < profile.t.size(); ++i) {
        const double g = profile.g[i];
        const double P = std::pow(profile.t[i], 2.0 - p) *
                         std::pow(1.0 - g, 0.5 * (1.0 - p)) * std::sqrt(g);
        worst = std::max(worst, std::abs(P - c_ref) / std::abs(c_ref));
    }
    return worst;
}

double p_const_deviation(const minimizer::RadialMinimizer& m) {
    return p_const_deviation(m.table, m.c);
}

double el_residual(const minimizer::RadialMinimizer& m) {
    const auto& prof = m.table;
    // H'' from differentiating the first integral t H'/H = phi(g):
    //   H'' = (H/t) (phi'(g) g' + t (H'/H)^2 - H'/H)
    const auto ddH_at = [&](std::size_t i) {
        const double t = prof.t[i];
        const double H = prof.H[i];
        const double g = prof.g[i];
        const double ratio = prof.dH[i] / H;
        double gdot = 0.0;
        switch (m.regime) {
            case minimizer::Regime::closed_form_p1: gdot = -2.0 * g / t; break;
            case minimizer::Regime::power_p2: gdot = 0.0; break;
            case minimizer::Regime::shooting: gdot = gfield::g_rhs(t, g, m.p); break;
        }
        const double phi_prime = 1.0 / (2.0 * std::sqrt(g) * std::pow(1.0 - g, 1.5));
        return (H / t) * (phi_prime * gdot + t * ratio * ratio - ratio);
    };
    return el_residual_impl(prof, ddH_at);
}

double el_residual(const minimizer::RadialProfile& profile) {
    if (profile.t.size() < 3) throw domain_error("el_residual: profile too short");
    // H'' by nonuniform centered differencing of the tabulated H'
    const auto ddH_at = [&](std::size_t i) {
        const double h1 = profile.t[i] - profile.t[i - 1];
        const double h2 = profile.t[i + 1] - profile.t[i];
        return (h1 * h1 * profile.dH[i + 1] - h2 * h2 * profile.dH[i - 1] +
                (h2 * h2 - h1 * h1) * profile.dH[i]) /
               (h1 * h2 * (h1 + h2));
    };
    return el_residual_impl(profile, ddH_at);
}

EnergyReport make_report(const minimizer::RadialMinimizer& m, double quad_tol) {
    EnergyReport rep;
    rep.energy = radial_energy(m, quad_tol);
    rep.lower_bound = lower_bound(m, quad_tol);
    rep.gap = rep.energy - rep.lower_bound;
    rep.p_const_dev = p_const_deviation(m);
    rep.el_residual = el_residual(m);
    return rep;
}

}  // namespace annulus::energy
