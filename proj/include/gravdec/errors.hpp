#pragma once

#include <stdexcept>
#include <string>

namespace gravdec {

// Argument outside the mathematical domain of an operation (x <= 0 for Ci,
// forward scattering angle, eta = 0 for the long-time channel, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input data: unsorted grids, unresolved presets, bad config fields.
class InputError : public std::invalid_argument {
 public:
  InputError(const std::string& field, const std::string& message)
      : std::invalid_argument(field.empty() ? message : field + ": " + message), field_(field) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Quadrature did not reach its tolerance; carries the best available estimate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& message, double best_estimate, double error_estimate)
      : std::runtime_error(message), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace gravdec
