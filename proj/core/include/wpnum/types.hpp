#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wpnum {

using Complex = std::complex<double>;

/// A complex-valued function of one complex variable.
using Field = std::function<Complex(Complex)>;

inline constexpr double pi = std::numbers::pi;

// Error hierarchy. Every failure the library reports is a wpnum::Error.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid sizes, ranges or options passed to an operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A point outside the domain where a density, map or differential lives.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Non-finite sample or value met during a computation.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A differential of the wrong bidegree was supplied.
class BidegreeError : public Error {
 public:
  using Error::Error;
};

/// f'(0) == 0: pre-Schwarzian and Schwarzian are undefined.
class NotLocallyUnivalent : public Error {
 public:
  using Error::Error;
};

/// Sup norm >= 1, so the input cannot be the dilatation of a quasiconformal map.
class NotBeltramiError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Result of an integral that may fail to converge.
///
/// When diverged() is true, value holds the last partial sum and must not be
/// used as a norm.
template <typename T>
struct Estimate {
  T value{};
  bool divergent = false;

  bool diverged() const noexcept { return divergent; }
};

}  // namespace wpnum
