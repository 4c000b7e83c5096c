#pragma once

#include <stdexcept>
#include <string>

namespace vacuumleap {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

// Config key not recognised; key() holds the offending token.
class UnknownKey : public InvalidArgument {
public:
  explicit UnknownKey(std::string key)
      : InvalidArgument("unknown configuration key '" + key + "'"), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

private:
  std::string key_;
};

class IoError : public Error {
public:
  using Error::Error;
};

// Input outside the mathematical domain of an operation (p = 0, E <= 0, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// Adaptive quadrature gave up; carries the best estimate reached so far.
class QuadratureError : public Error {
public:
  QuadratureError(std::string label, double best, double error_estimate, const std::string& why)
      : Error("integral '" + label + "' did not converge: " + why),
        label_(std::move(label)),
        best_(best),
        error_(error_estimate) {}

  const std::string& label() const noexcept { return label_; }
  double best_estimate() const noexcept { return best_; }
  double error_estimate() const noexcept { return error_; }

private:
  std::string label_;
  double best_;
  double error_;
};

// Monte Carlo chain would exceed its step cap.
class StepLimitError : public Error {
public:
  StepLimitError(const std::string& what, double max_path_length_m)
      : Error(what), max_path_length_m_(max_path_length_m) {}
  double max_path_length_m() const noexcept { return max_path_length_m_; }

private:
  double max_path_length_m_;
};

}  // namespace vacuumleap
