#pragma once

#include <stdexcept>
#include <string>

namespace fracdelay {

// Series or iteration failed to reach its stopping rule.  `achieved` carries
// the best error estimate at the point of failure so callers can report it.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved tolerance " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// Pointwise evaluation requested exactly at an algebraic singularity of a
// kernel term (base 0 with negative exponent).  Integrals over such points
// are fine; point values are not.
class singularity_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace fracdelay
