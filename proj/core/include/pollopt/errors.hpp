#ifndef POLLOPT_ERRORS_HPP
#define POLLOPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pollopt {

/// Base class for all pollopt errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveRate : Error {
    using Error::Error;
};

struct NegativeCost : Error {
    using Error::Error;
};

/// rho = lambda/mu >= 1: the system has no steady state.
struct UnstableSystem : Error {
    using Error::Error;
};

/// A decision-table row is not upward closed in j and cannot be
/// represented by a per-row threshold.
struct NotThreshold : Error {
    NotThreshold(int i, int j)
        : Error("row i=" + std::to_string(i) +
                " is not upward closed: Busy at j=" + std::to_string(j) +
                " followed by Idle at j=" + std::to_string(j + 1)),
          i(i), j(j) {}
    int i;
    int j;
};

struct NotConverged : Error {
    NotConverged(const std::string& what, double residual, long iterations)
        : Error(what + ": residual " + std::to_string(residual) + " after " +
                std::to_string(iterations) + " iterations"),
          residual(residual), iterations(iterations) {}
    double residual;
    long iterations;
};

/// A computation needs grid cells outside the configured bounds and no
/// closure rule applies.
struct GridExhausted : Error {
    using Error::Error;
};

/// A simulation estimator was requested that the policy class cannot supply
/// (e.g. per-queue conditional means under a complete-information table).
struct InvalidPolicyForInfoLevel : Error {
    using Error::Error;
};

/// Defensive check tripped: a trajectory or chain stopped making progress.
struct NonTerminating : Error {
    using Error::Error;
};

/// Simulated state exceeded the defensive cap (should be impossible for
/// rho < 1; indicates a bug rather than a truncation).
struct StateCapExceeded : Error {
    using Error::Error;
};

}  // namespace pollopt

#endif
