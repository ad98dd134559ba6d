#ifndef ANNULUS_NUMERICS_HPP
#define ANNULUS_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "annulus/errors.hpp"

namespace annulus::num {

struct QuadOptions {
    double abs_tol = 1e-9;       // absolute tolerance on the integral value
    int max_subdiv = 1 << 15;    // interval subdivision cap
};

namespace detail {

// Gauss-Kronrod 7-15 abscissae and weights on [-1,1] (positive half).
inline constexpr double kKronrodX[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Embedded 7-point Gauss weights (for kKronrodX[1], [3], [5], [7]).
inline constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void kronrod15(F&& f, double a, double b, double& value, double& error) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kron = 0.0, gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kKronrodX[i];
        const double fl = f(c - dx);
        const double fr = (i == 7) ? 0.0 : f(c + dx);
        const double fsum = (i == 7) ? fl : fl + fr;
        kron += kKronrodW[i] * fsum;
        if (i % 2 == 1) gauss += kGaussW[i / 2] * fsum;
    }
    value = kron * h;
    error = std::abs((kron - gauss) * h);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b] to an absolute
/// tolerance. Bisects the worst interval until the summed error estimate
/// is below tolerance; throws numerical_error (with the running estimate)
/// if the subdivision cap is reached first.
template <class F>
double integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
    if (a == b) return 0.0;
    struct Interval {
        double a, b, value, error;
    };
    std::vector<Interval> segs;
    segs.reserve(64);
    double v, e;
    detail::kronrod15(f, a, b, v, e);
    segs.push_back({a, b, v, e});
    double total_err = e;
    int splits = 0;
    while (total_err > opt.abs_tol) {
        if (splits >= opt.max_subdiv) {
            double total = 0.0;
            for (const auto& s : segs) total += s.value;
            throw numerical_error(
                "quadrature did not converge: error estimate " + std::to_string(total_err) +
                    " above tolerance " + std::to_string(opt.abs_tol),
                total);
        }
        auto worst = std::max_element(
            segs.begin(), segs.end(),
            [](const Interval& x, const Interval& y) { return x.error < y.error; });
        Interval s = *worst;
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b) break;  // interval at double resolution
        Interval left, right;
        left.a = s.a;
        left.b = mid;
        right.a = mid;
        right.b = s.b;
        detail::kronrod15(f, left.a, left.b, left.value, left.error);
        detail::kronrod15(f, right.a, right.b, right.value, right.error);
        *worst = left;
        segs.push_back(right);
        total_err += left.error + right.error - s.error;
        ++splits;
    }
    double total = 0.0;
    for (const auto& s : segs) total += s.value;
    return total;
}

/// Composite fixed-order quadrature (15-point Kronrod rule per panel over a
/// uniform partition). Kept as an independent cross-check for the adaptive
/// scheme; no adaptivity, no error control.
template <class F>
double integrate_composite(F&& f, double a, double b, int panels) {
    double total = 0.0;
    const double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        double v, e;
        detail::kronrod15(f, a + i * h, a + (i + 1) * h, v, e);
        total += v;
    }
    return total;
}

/// Bisection for a root of f on [lo, hi]. Requires a sign change; runs the
/// bracket down to roughly double resolution (or xtol if larger). Returns
/// the midpoint of the final bracket.
template <class F>
double bisect(F&& f, double lo, double hi, double xtol = 0.0, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw internal_error("bisect: no sign change on bracket [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at double resolution
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        if (hi - lo <= xtol) break;
    }
    return 0.5 * (lo + hi);
}

/// Monotone cubic (Fritsch-Carlson) interpolant of strictly increasing x.
/// Preserves monotonicity of the data; evaluates value and derivative.
class MonotoneCubic {
  public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double operator()(double xq) const { return eval(xq).first; }
    std::pair<double, double> eval(double xq) const;  // (value, derivative)

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    bool empty() const { return x_.empty(); }

  private:
    std::vector<double> x_, y_, slope_;
    std::size_t locate(double xq) const;
};

}  // namespace annulus::num

#endif
