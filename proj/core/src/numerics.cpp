#include "annulus/numerics.hpp"

namespace annulus::num {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw internal_error("MonotoneCubic: need at least two nodes and matching arrays");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(x_[i] < x_[i + 1]))
            throw internal_error("MonotoneCubic: abscissae must be strictly increasing");

    // Fritsch-Carlson tangents: secants, then limiting to keep monotone data
    // monotone on every subinterval.
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);

    // one-sided parabolic end slopes, clamped to keep the end intervals
    // monotone (pchip end conditions)
    const auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) return 0.0;
        if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0)) return 3.0 * d0;
        return s;
    };
    slope_.assign(n, 0.0);
    if (n == 2) {
        slope_[0] = slope_[1] = d[0];
    } else {
        slope_[0] = end_slope(x_[1] - x_[0], x_[2] - x_[1], d[0], d[1]);
        slope_[n - 1] =
            end_slope(x_[n - 1] - x_[n - 2], x_[n - 2] - x_[n - 3], d[n - 2], d[n - 3]);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            slope_[i] = 0.0;
        } else {
            // weighted harmonic mean of adjacent secants
            const double h0 = x_[i] - x_[i - 1];
            const double h1 = x_[i + 1] - x_[i];
            const double w0 = 2.0 * h1 + h0;
            const double w1 = h1 + 2.0 * h0;
            slope_[i] = (w0 + w1) / (w0 / d[i - 1] + w1 / d[i]);
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            slope_[i] = slope_[i + 1] = 0.0;
            continue;
        }
        const double a = slope_[i] / d[i];
        const double b = slope_[i + 1] / d[i];
        const double s = a * a + b * b;
        if (s > 9.0) {
            const double t = 3.0 / std::sqrt(s);
            slope_[i] = t * a * d[i];
            slope_[i + 1] = t * b * d[i];
        }
    }
}

std::size_t MonotoneCubic::locate(double xq) const {
    // binary search for the interval containing xq
    std::size_t lo = 0, hi = x_.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (x_[mid] <= xq)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::pair<double, double> MonotoneCubic::eval(double xq) const {
    if (empty()) throw internal_error("MonotoneCubic: empty interpolant");
    if (xq < x_.front() || xq > x_.back())
        throw extrapolation_error("MonotoneCubic: query " + std::to_string(xq) +
                                  " outside tabulated range [" + std::to_string(x_.front()) +
                                  ", " + std::to_string(x_.back()) + "]");
    const std::size_t i = locate(xq);
    const double h = x_[i + 1] - x_[i];
    const double t = (xq - x_[i]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    const double value =
        h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] + h11 * h * slope_[i + 1];
    const double dh00 = (6 * t2 - 6 * t) / h;
    const double dh10 = 3 * t2 - 4 * t + 1;
    const double dh01 = (-6 * t2 + 6 * t) / h;
    const double dh11 = 3 * t2 - 2 * t;
    const double deriv =
        dh00 * y_[i] + dh10 * slope_[i] + dh01 * y_[i + 1] + dh11 * slope_[i + 1];
    return {value, deriv};
}

}  // namespace annulus::num
