#pragma once

#include <stdexcept>
#include <string>

namespace hermitewave {

/// Argument outside the mathematical domain of an operation (t_c <= 0, NaN input, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Adaptive routine ran out of budget. Carries the best estimate reached so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

/// Root finder was handed an interval without a sign change.
class BracketError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two fields that should share a grid do not.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The spectral propagator declined a grid that cannot hold the evolved state.
class GridRefusal : public std::runtime_error {
public:
    GridRefusal(const std::string& what, double required_half_width, double available_half_width)
        : std::runtime_error(what),
          required_half_width_(required_half_width),
          available_half_width_(available_half_width) {}

    double required_half_width() const noexcept { return required_half_width_; }
    double available_half_width() const noexcept { return available_half_width_; }

private:
    double required_half_width_;
    double available_half_width_;
};

}  // namespace hermitewave
