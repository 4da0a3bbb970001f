#pragma once

#include <stdexcept>
#include <string>

namespace specbound {

// Violated mathematical precondition (names the inequality that failed).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Iteration budget exhausted; carries the best estimate reached so far.
struct convergence_error : std::runtime_error {
    convergence_error(const std::string& what, double best, double err_est)
        : std::runtime_error(what), best_estimate(best), error_estimate(err_est) {}
    double best_estimate;
    double error_estimate;
};

// Configured resource cap exceeded (grid size, iteration caps, ...).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix numerically singular where an inverse or solve was required.
struct singular_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Config / input validation failure; names the offending field.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace specbound
