#pragma once

#include <stdexcept>
#include <string>

namespace spheregreen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// a = l(n+l-1) for the reported degree.
class ResonanceError : public Error {
 public:
  ResonanceError(const std::string& what, int degree) : Error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class SolvabilityError : public Error {
 public:
  SolvabilityError(const std::string& what, double mass) : Error(what), mass_(mass) {}
  double offending_mass() const { return mass_; }

 private:
  double mass_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved) : Error(what), achieved_(achieved) {}
  double achieved_error() const { return achieved_; }

 private:
  double achieved_;
};

// Scale grid too narrow for the requested accuracy.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double low_tail, double high_tail)
      : Error(what), low_(low_tail), high_(high_tail) {}
  double low_tail() const { return low_; }
  double high_tail() const { return high_; }

 private:
  double low_;
  double high_;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace spheregreen
