#pragma once

#include <stdexcept>
#include <string>

namespace tadpole {

// Input outside the mathematical domain of an operation.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A solver or quadrature could not reach the requested tolerance.
// `estimate` carries the best value obtained, `achieved` the error estimate.
struct numerical_error : std::runtime_error {
    double estimate = 0.0;
    double achieved = 0.0;

    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
    numerical_error(const std::string& what, double estimate_, double achieved_)
        : std::runtime_error(what), estimate(estimate_), achieved(achieved_) {}
};

// Raised where a formula degenerates at an isolated parameter value and the
// caller must switch to the dedicated fallback check.
struct exceptional_point : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tadpole
