#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace expskew {

// Argument outside the mathematical domain of an operation (alpha outside
// (0,1), t <= 0, invalid family parameters, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// All observations equal, or a ratio measure whose denominator vanishes.
class degenerate_input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root not bracketable, quadrature failure, non-finite intermediate.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation not defined for the given family (e.g. derivative of a
// discrete expectile function).
class unsupported_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Omega ratio with vanishing lower partial moment.
class undefined_omega_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Malformed text input. Carries the 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline void require_probability(double p, const char* what) {
  if (!(p > 0.0 && p < 1.0)) {
    throw domain_error(std::string(what) + " must lie in (0,1), got " + std::to_string(p));
  }
}

inline void require_lower_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw domain_error("alpha must lie in (0,1/2), got " + std::to_string(alpha));
  }
}

inline void require_positive_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw domain_error("t must be positive and finite, got " + std::to_string(t));
  }
}

}  // namespace detail
}  // namespace expskew
