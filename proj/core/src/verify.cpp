#include "annulus/verify.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include "grid_field.hpp"

namespace annulus::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxRetries = 100;

using energy::detail::LogField;

struct FourierDraw {
    std::vector<double> c, alpha;  // radial coefficients and phases
    std::vector<double> d, beta;   // angular coefficients and phases
};

FourierDraw draw_modes(const PerturbationSpec& spec) {
    std::mt19937_64 gen(spec.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    const std::size_t K = std::max<std::size_t>(spec.n_modes, 1);
    FourierDraw draw;
    draw.c.resize(K);
    draw.alpha.resize(K);
    draw.d.resize(K);
    draw.beta.resize(K);
    double c_norm = 0.0, d_norm = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        draw.c[k] = unit(gen);
        draw.alpha[k] = phase(gen);
        draw.d[k] = unit(gen);
        draw.beta[k] = phase(gen);
        c_norm += std::abs(draw.c[k]);
        d_norm += std::abs(draw.d[k]);
    }
    const bool use_radial = spec.mode != PerturbationSpec::Mode::angular;
    const bool use_angular = spec.mode != PerturbationSpec::Mode::radial;
    for (std::size_t k = 0; k < K; ++k) {
        draw.c[k] = use_radial && c_norm > 0.0 ? draw.c[k] / c_norm : 0.0;
        draw.d[k] = use_angular && d_norm > 0.0 ? draw.d[k] / d_norm : 0.0;
    }
    return draw;
}

bool admissible_sample(const LogField& f) {
    // rho strictly increasing along every ray
    for (std::size_t j = 0; j < f.nth; ++j)
        for (std::size_t i = 0; i + 1 < f.nt; ++i)
            if (!(f.lam_at(i, j) < f.lam_at(i + 1, j))) return false;
    // Theta strictly increasing around every circle (injective circle maps)
    for (std::size_t i = 0; i < f.nt; ++i) {
        for (std::size_t j = 0; j + 1 < f.nth; ++j)
            if (!(f.theta_at(i, j) < f.theta_at(i, j + 1))) return false;
        if (!(f.theta_at(i, f.nth - 1) < f.theta_at(i, 0) + kTwoPi)) return false;
    }
    return true;
}

/// Build the perturbed sample in log-polar form. Returns the amplitude
/// actually used and the number of halvings via out-parameters.
LogField build_perturbed_field(const minimizer::RadialMinimizer& m,
                               const PerturbationSpec& spec, std::size_t nt,
                               std::size_t ntheta, double& used_amplitude,
                               std::size_t& halvings) {
    if (nt < 3 || ntheta < 3) throw domain_error("perturbation: grid too coarse");
    if (!(spec.amplitude >= 0.0)) throw domain_error("perturbation: amplitude must be >= 0");

    const double r = m.r();
    const FourierDraw draw = draw_modes(spec);
    const std::size_t K = draw.c.size();

    LogField f;
    f.nt = nt;
    f.nth = ntheta;
    f.winding = 1;
    f.t.resize(nt);
    std::vector<double> log_H(nt), envelope(nt);
    for (std::size_t i = 0; i < nt; ++i) {
        const double t =
            1.0 + (r - 1.0) * static_cast<double>(i) / static_cast<double>(nt - 1);
        f.t[i] = t;
        log_H[i] = std::log(minimizer::H_eval(m, t).first);
        envelope[i] = std::sin(kPi * (t - 1.0) / (r - 1.0));
    }
    f.t.back() = r;

    // per-column Fourier sums are t-independent; precompute
    std::vector<double> rad_sum(ntheta, 0.0), ang_sum(ntheta, 0.0), theta(ntheta);
    for (std::size_t j = 0; j < ntheta; ++j) {
        theta[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(ntheta);
        for (std::size_t k = 0; k < K; ++k) {
            const double arg = static_cast<double>(k + 1) * theta[j];
            rad_sum[j] += draw.c[k] * std::cos(arg + draw.alpha[k]);
            ang_sum[j] += draw.d[k] * std::sin(arg + draw.beta[k]);
        }
    }

    f.lam.resize(nt * ntheta);
    f.Theta.resize(nt * ntheta);
    double eps = spec.amplitude;
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
        for (std::size_t i = 0; i < nt; ++i) {
            const double base = log_H[i];
            const double env = eps * envelope[i];
            double* lam_row = &f.lam[i * ntheta];
            double* th_row = &f.Theta[i * ntheta];
            for (std::size_t j = 0; j < ntheta; ++j) {
                lam_row[j] = base + env * rad_sum[j];
                th_row[j] = theta[j] + env * ang_sum[j];
            }
        }
        if (eps == 0.0 || admissible_sample(f)) {
            used_amplitude = eps;
            halvings = static_cast<std::size_t>(attempt);
            return f;
        }
        eps *= 0.5;
    }
    throw perturbation_error("perturbation: could not restore per-ray monotonicity within " +
                             std::to_string(kMaxRetries) + " halvings");
}

geometry::PolarGridMap field_to_map(const LogField& f) {
    geometry::PolarGridMap m;
    m.t_grid = f.t;
    m.theta_grid.resize(f.nth);
    for (std::size_t j = 0; j < f.nth; ++j)
        m.theta_grid[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(f.nth);
    m.rho.resize(f.lam.size());
    for (std::size_t k = 0; k < f.lam.size(); ++k) m.rho[k] = std::exp(f.lam[k]);
    m.theta_val = f.Theta;
    m.winding = f.winding;
    return m;
}

}  // namespace

const char* mode_name(PerturbationSpec::Mode mode) {
    switch (mode) {
        case PerturbationSpec::Mode::radial: return "radial";
        case PerturbationSpec::Mode::angular: return "angular";
        case PerturbationSpec::Mode::full: return "full";
    }
    return "unknown";
}

IneqCheck check_koski(double a, double bb, double s, double q) {
    if (!(a >= 0.0) || !(bb >= 0.0)) throw domain_error("check_koski: need a, bb >= 0");
    if (!(s >= 0.0 && s <= 1.0)) throw domain_error("check_koski: need s in [0, 1]");
    if (!(q >= 1.0 && q <= 2.0)) throw domain_error("check_koski: need q in [1, 2]");
    const double half_q = 0.5 * q;
    // std::pow(0, 0) = 1 covers the q = 2 endpoint convention
    const double lhs = std::pow(a + bb, half_q);
    const double rhs = std::pow(1.0 - s, 1.0 - half_q) * std::pow(a, half_q) +
                       std::pow(s, 1.0 - half_q) * std::pow(bb, half_q);
    return {lhs, rhs, lhs >= rhs - 1e-14};
}

IneqCheck check_preci(double a, double x, double p) {
    if (!(a >= 0.0)) throw domain_error("check_preci: need a >= 0");
    if (!(x > 0.0)) throw domain_error("check_preci: need x > 0");
    if (!(p >= 1.0 && p <= 2.0)) throw domain_error("check_preci: need p in [1, 2]");
    const double lhs = std::pow(a, p);
    const double rhs = p * std::pow(x, p - 1.0) * a - (p - 1.0) * std::pow(x, p);
    return {lhs, rhs, lhs >= rhs - 1e-14};
}

double angular_bound(const geometry::PolarGridMap& m, std::size_t t_index) {
    return energy::detail::angular_integral(energy::detail::to_log_field(m), t_index);
}

double radial_bound(const geometry::PolarGridMap& m, std::size_t theta_index) {
    return energy::detail::radial_integral(energy::detail::to_log_field(m), theta_index);
}

geometry::PolarGridMap make_perturbed_map(const minimizer::RadialMinimizer& m,
                                          const PerturbationSpec& spec, std::size_t nt,
                                          std::size_t ntheta) {
    double used = 0.0;
    std::size_t halvings = 0;
    return field_to_map(build_perturbed_field(m, spec, nt, ntheta, used, halvings));
}

energy::EnergyReport perturb_and_compare(const minimizer::RadialMinimizer& m,
                                         const PerturbationSpec& spec, std::size_t nt,
                                         std::size_t ntheta) {
    double used = 0.0;
    std::size_t halvings = 0;
    const LogField f = build_perturbed_field(m, spec, nt, ntheta, used, halvings);
    energy::EnergyReport rep;
    rep.energy = energy::detail::field_energy(f, m.p.value());
    rep.lower_bound = m.energy;
    rep.gap = rep.energy - rep.lower_bound;
    rep.p_const_dev = energy::p_const_deviation(m);
    rep.el_residual = energy::el_residual(m);
    rep.nt = nt;
    rep.ntheta = ntheta;
    return rep;
}

std::vector<TrialResult> run_trials(const minimizer::RadialMinimizer& m,
                                    std::size_t n_trials, std::uint64_t base_seed,
                                    std::size_t nt, std::size_t ntheta,
                                    double max_amplitude, unsigned n_threads) {
    std::vector<TrialResult> results(n_trials);
    if (n_trials == 0) return results;
    if (n_threads == 0)
        n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(n_trials));

    const double p = m.p.value();
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;

    const auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_trials || failed.load()) break;
            try {
                PerturbationSpec spec;
                spec.seed = base_seed + i;
                spec.mode = static_cast<PerturbationSpec::Mode>(i % 3);
                spec.n_modes = 1 + (i % 4);
                std::mt19937_64 gen(spec.seed ^ 0x9e3779b97f4a7c15ULL);
                std::uniform_real_distribution<double> unit(0.0, 1.0);
                spec.amplitude = max_amplitude * (0.1 + 0.9 * unit(gen));

                TrialResult& out = results[i];
                out.seed = spec.seed;
                out.mode = spec.mode;
                const LogField f = build_perturbed_field(m, spec, nt, ntheta,
                                                         out.amplitude, out.halvings);
                out.energy = energy::detail::field_energy(f, p);
                out.gap = out.energy - m.energy;
                const auto minima = energy::detail::provo_minima(f);
                out.min_angular = minima.min_angular;
                out.min_radial = minima.min_radial;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) first_error = e.what();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned w = 0; w < n_threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load()) throw perturbation_error("run_trials: " + first_error);
    return results;
}

double SymmetryReport::max_violation() const {
    return std::max(rotation, std::max(inversion, rescale));
}

SymmetryReport symmetry_suite(const minimizer::RadialMinimizer& m, std::size_t nt,
                              std::size_t ntheta) {
    const geometry::PolarGridMap base = minimizer::sample_map(m, nt, ntheta);
    const double E0 = energy::grid_energy(base, m.p);
    SymmetryReport rep;
    rep.rotation =
        std::abs(energy::grid_energy(geometry::rotate_map(base, 1.0), m.p) - E0) / E0;
    rep.inversion =
        std::abs(energy::grid_energy(geometry::invert_map(base), m.p) - E0) / E0;
    const double lambda = 2.0;
    const double expected = std::pow(lambda, m.p.value() - 2.0);
    const double ratio =
        energy::grid_energy(geometry::rescale_map(base, lambda, 1.0), m.p) / E0;
    rep.rescale = std::abs(ratio / expected - 1.0);
    return rep;
}

}  // namespace annulus::verify
