#include "grid_field.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace annulus::energy::detail {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Coefficients of the second-order finite difference stencils in t.
// Interior: nonuniform centered 3-point; boundary: one-sided 3-point.
struct RowStencil {
    // derivative = cm * f(row_m) + c0 * f(row_0) + cp * f(row_p)
    std::size_t row_m, row_0, row_p;
    double cm, c0, cp;
};

RowStencil t_stencil(const std::vector<double>& t, std::size_t i) {
    const std::size_t n = t.size();
    if (i == 0) {
        const double h1 = t[1] - t[0];
        const double h2 = t[2] - t[1];
        return {0, 1, 2, -(2.0 * h1 + h2) / (h1 * (h1 + h2)), (h1 + h2) / (h1 * h2),
                -h1 / (h2 * (h1 + h2))};
    }
    if (i == n - 1) {
        const double h1 = t[n - 1] - t[n - 2];
        const double h2 = t[n - 2] - t[n - 3];
        return {n - 1, n - 2, n - 3, (2.0 * h1 + h2) / (h1 * (h1 + h2)),
                -(h1 + h2) / (h1 * h2), h1 / (h2 * (h1 + h2))};
    }
    const double h1 = t[i] - t[i - 1];
    const double h2 = t[i + 1] - t[i];
    return {i - 1, i, i + 1, -h2 / (h1 * (h1 + h2)), (h2 - h1) / (h1 * h2),
            h1 / (h2 * (h1 + h2))};
}

double trapezoid_weight(const std::vector<double>& t, std::size_t i) {
    const std::size_t n = t.size();
    if (i == 0) return 0.5 * (t[1] - t[0]);
    if (i == n - 1) return 0.5 * (t[n - 1] - t[n - 2]);
    return 0.5 * (t[i + 1] - t[i - 1]);
}

// Centered theta-derivatives for the whole row, with periodic wraparound.
// The continuation across the seam adds jump (= winding * 2pi for Theta,
// 0 for lambda).
void theta_derivative_row(const double* f, std::size_t nth, double inv_2dth, double jump,
                          double* out) {
    out[0] = (f[1] - (f[nth - 1] - jump)) * inv_2dth;
    for (std::size_t j = 1; j + 1 < nth; ++j) out[j] = (f[j + 1] - f[j - 1]) * inv_2dth;
    out[nth - 1] = ((f[0] + jump) - f[nth - 2]) * inv_2dth;
}

}  // namespace

LogField to_log_field(const geometry::PolarGridMap& m) {
    m.validate();
    LogField f;
    f.t = m.t_grid;
    f.winding = m.winding;
    f.nt = m.nt();
    f.nth = m.ntheta();
    f.lam.resize(m.rho.size());
    for (std::size_t k = 0; k < m.rho.size(); ++k) f.lam[k] = std::log(m.rho[k]);
    f.Theta = m.theta_val;
    return f;
}

double field_energy(const LogField& f, double p) {
    const std::size_t nt = f.nt, nth = f.nth;
    if (nt < 3 || nth < 3) throw domain_error("field_energy: grid too coarse");
    const double dth = kTwoPi / static_cast<double>(nth);
    const double inv_2dth = 1.0 / (2.0 * dth);
    const double jump = static_cast<double>(f.winding) * kTwoPi;
    const PowHalfP pow_hp(p);

    std::vector<double> lam_th(nth), th_th(nth);
    double total = 0.0;
    for (std::size_t i = 0; i < nt; ++i) {
        const RowStencil st = t_stencil(f.t, i);
        const double* lam_m = &f.lam[st.row_m * nth];
        const double* lam_0 = &f.lam[st.row_0 * nth];
        const double* lam_p = &f.lam[st.row_p * nth];
        const double* th_m = &f.Theta[st.row_m * nth];
        const double* th_0 = &f.Theta[st.row_0 * nth];
        const double* th_p = &f.Theta[st.row_p * nth];
        const double* lam_row = &f.lam[i * nth];
        const double* th_row = &f.Theta[i * nth];
        theta_derivative_row(lam_row, nth, inv_2dth, 0.0, lam_th.data());
        theta_derivative_row(th_row, nth, inv_2dth, jump, th_th.data());

        const double ti = f.t[i];
        const double inv_t2 = 1.0 / (ti * ti);
        double row_sum = 0.0;
        for (std::size_t j = 0; j < nth; ++j) {
            const double lt = st.cm * lam_m[j] + st.c0 * lam_0[j] + st.cp * lam_p[j];
            const double tt = st.cm * th_m[j] + st.c0 * th_0[j] + st.cp * th_p[j];
            const double q =
                lt * lt + tt * tt + (lam_th[j] * lam_th[j] + th_th[j] * th_th[j]) * inv_t2;
            row_sum += pow_hp(q);
        }
        total += trapezoid_weight(f.t, i) * ti * row_sum * dth;
    }
    if (std::isnan(total)) throw data_error("field_energy: NaN encountered in the sum");
    return total;
}

double angular_integral(const LogField& f, std::size_t i) {
    const std::size_t nt = f.nt, nth = f.nth;
    if (nt < 3 || nth < 3) throw domain_error("angular_integral: grid too coarse");
    if (i >= nt) throw domain_error("angular_integral: row index out of range");
    const double dth = kTwoPi / static_cast<double>(nth);
    const double inv_2dth = 1.0 / (2.0 * dth);
    const double jump = static_cast<double>(f.winding) * kTwoPi;
    const RowStencil st = t_stencil(f.t, i);
    const double* th_m = &f.Theta[st.row_m * nth];
    const double* th_0 = &f.Theta[st.row_0 * nth];
    const double* th_p = &f.Theta[st.row_p * nth];
    const double* th_row = &f.Theta[i * nth];
    std::vector<double> th_th(nth);
    theta_derivative_row(th_row, nth, inv_2dth, jump, th_th.data());
    const double ti = f.t[i];
    const double inv_t2 = 1.0 / (ti * ti);
    double sum = 0.0;
    for (std::size_t j = 0; j < nth; ++j) {
        const double tt = st.cm * th_m[j] + st.c0 * th_0[j] + st.cp * th_p[j];
        sum += std::sqrt(tt * tt + th_th[j] * th_th[j] * inv_t2);
    }
    return sum * dth * ti;
}

double radial_integral(const LogField& f, std::size_t j) {
    const std::size_t nt = f.nt, nth = f.nth;
    if (nt < 3 || nth < 3) throw domain_error("radial_integral: grid too coarse");
    if (j >= nth) throw domain_error("radial_integral: column index out of range");
    const double dth = kTwoPi / static_cast<double>(nth);
    const double inv_2dth = 1.0 / (2.0 * dth);
    const std::size_t jl = (j == 0) ? nth - 1 : j - 1;
    const std::size_t jr = (j + 1 == nth) ? 0 : j + 1;
    double sum = 0.0;
    for (std::size_t i = 0; i < nt; ++i) {
        const RowStencil st = t_stencil(f.t, i);
        const double lt = st.cm * f.lam_at(st.row_m, j) + st.c0 * f.lam_at(st.row_0, j) +
                          st.cp * f.lam_at(st.row_p, j);
        const double lth = (f.lam_at(i, jr) - f.lam_at(i, jl)) * inv_2dth;
        sum += trapezoid_weight(f.t, i) *
               std::sqrt(lt * lt + lth * lth / (f.t[i] * f.t[i]));
    }
    return sum;
}

ProvoMinima provo_minima(const LogField& f) {
    const std::size_t nt = f.nt, nth = f.nth;
    if (nt < 3 || nth < 3) throw domain_error("provo_minima: grid too coarse");
    const double dth = kTwoPi / static_cast<double>(nth);
    const double inv_2dth = 1.0 / (2.0 * dth);
    const double jump = static_cast<double>(f.winding) * kTwoPi;

    std::vector<double> lam_th(nth), th_th(nth);
    std::vector<double> radial_acc(nth, 0.0);
    double min_angular = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nt; ++i) {
        const RowStencil st = t_stencil(f.t, i);
        const double* lam_m = &f.lam[st.row_m * nth];
        const double* lam_0 = &f.lam[st.row_0 * nth];
        const double* lam_p = &f.lam[st.row_p * nth];
        const double* th_m = &f.Theta[st.row_m * nth];
        const double* th_0 = &f.Theta[st.row_0 * nth];
        const double* th_p = &f.Theta[st.row_p * nth];
        theta_derivative_row(&f.lam[i * nth], nth, inv_2dth, 0.0, lam_th.data());
        theta_derivative_row(&f.Theta[i * nth], nth, inv_2dth, jump, th_th.data());
        const double ti = f.t[i];
        const double inv_t2 = 1.0 / (ti * ti);
        const double wt = trapezoid_weight(f.t, i);
        double ang = 0.0;
        for (std::size_t j = 0; j < nth; ++j) {
            const double lt = st.cm * lam_m[j] + st.c0 * lam_0[j] + st.cp * lam_p[j];
            const double tt = st.cm * th_m[j] + st.c0 * th_0[j] + st.cp * th_p[j];
            ang += std::sqrt(tt * tt + th_th[j] * th_th[j] * inv_t2);
            radial_acc[j] += wt * std::sqrt(lt * lt + lam_th[j] * lam_th[j] * inv_t2);
        }
        min_angular = std::min(min_angular, ang * dth * ti);
    }
    double min_radial = std::numeric_limits<double>::infinity();
    for (double v : radial_acc) min_radial = std::min(min_radial, v);
    return {min_angular, min_radial};
}

}  // namespace annulus::energy::detail
