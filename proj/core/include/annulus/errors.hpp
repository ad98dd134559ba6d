#ifndef ANNULUS_ERRORS_HPP
#define ANNULUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace annulus {

/// Invalid argument outside the mathematical domain of an operation.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operation called with an exponent p outside the regime it implements.
struct regime_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Evaluation at a point where the formula is singular (log/csc blowup).
struct singularity_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A numerical routine failed to reach its tolerance; carries the best
/// estimate it achieved so callers can decide whether to proceed.
struct numerical_error : std::runtime_error {
    double achieved;
    numerical_error(const std::string& what, double achieved_estimate)
        : std::runtime_error(what), achieved(achieved_estimate) {}
};

/// A bracket or iteration hit the limits of double precision.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The p = 1 existence threshold is violated: no radial homeomorphism exists.
struct nonexistence_error : std::runtime_error {
    double threshold;  // largest admissible R for the given r
    nonexistence_error(const std::string& what, double largest_R)
        : std::runtime_error(what), threshold(largest_R) {}
};

/// A random perturbation could not be made admissible within the retry budget.
struct perturbation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or non-finite input data (NaN samples, bad CSV, ...).
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Interpolation queried outside the tabulated range.
struct extrapolation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violated internal assumption; indicates a bug or an unreachable regime.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace annulus

#endif
