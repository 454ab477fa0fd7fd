#pragma once

#include <stdexcept>
#include <string>

#include "tdwell/types.hpp"

namespace tdwell {

struct GammaPoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when adaptive quadrature cannot meet the requested tolerance.
/// Carries the best estimate obtained so far and its error estimate.
struct QuadratureError : std::runtime_error {
    Complex best;
    double err_est;
    QuadratureError(const std::string& msg, Complex best_, double err_)
        : std::runtime_error(msg), best(best_), err_est(err_) {}
};

struct GridMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InstabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoBoundStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleSearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateLifetimeError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace tdwell
