#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include "fracdelay/errors.hpp"

namespace fracdelay {

// Parameters (alpha, beta, gamma) of the three-parameter Mittag-Leffler
// function E^gamma_{alpha,beta}.  Restricted to positive reals.
struct PrabhakarParams {
  double alpha;
  double beta;
  double gamma;

  void validate() const {
    if (!(alpha > 0.0) || !(beta > 0.0) || !(gamma > 0.0))
      throw std::domain_error("PrabhakarParams: alpha, beta, gamma must all be > 0");
  }
};

// Largest argument for which Gamma(x) stays below the double overflow limit.
inline constexpr double kGammaOverflowX = 170.0;

// Gamma function with the contract this library needs: poles and overflow
// are hard errors, not infinities.  Backed by std::tgamma.
inline double gamma_fn(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("gamma_fn: pole at non-positive integer x=" + std::to_string(x));
  if (x > kGammaOverflowX)
    throw std::overflow_error("gamma_fn: overflow for x=" + std::to_string(x) + " > 170");
  return std::tgamma(x);
}

// Rising factorial (gamma)_k = gamma (gamma+1) ... (gamma+k-1), (gamma)_0 = 1.
// Iterated product; overflow is an error rather than inf.
inline double pochhammer(double gamma, std::size_t k) {
  if (!(gamma > 0.0)) throw std::domain_error("pochhammer: gamma must be > 0");
  double p = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    p *= gamma + static_cast<double>(i);
    if (std::isinf(p))
      throw std::overflow_error("pochhammer: overflow at k=" + std::to_string(i + 1));
  }
  return p;
}

namespace detail {

// Compensated accumulator; the series below add thousands of terms whose
// partial cancellation would otherwise eat digits.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace detail

struct PrabhakarResult {
  double value;
  double error_estimate;  // |last term| + eps*|value|
  int terms;              // number of terms actually summed
};

inline constexpr double kPrabhakarZMax = 50.0;
inline constexpr double kPrabhakarEpsAbs = 1e-16;
inline constexpr double kPrabhakarEpsRel = 1e-15;
inline constexpr int kPrabhakarKMax = 2000;

// E^gamma_{alpha,beta}(z) = sum_k (gamma)_k z^k / (Gamma(alpha k + beta) k!).
//
// Taylor series with compensated summation; terms advance by the recurrence
//   term_{k+1} = term_k * z * (gamma+k) / ((k+1) * Gamma-ratio),
// where the Gamma ratio uses gamma_fn directly while alpha k + beta stays
// below the overflow threshold and log-Gamma differencing above it.
// Stops once |term| <= eps_abs + eps_rel*|sum| for 3 consecutive terms
// (alternating series plateau guard).  Throws convergence_error past K_MAX.
//
// Valid for |z| <= 50; convergence within K_MAX additionally needs the
// argument scale appropriate to alpha (desk-scale use keeps |z| <= 20).
inline PrabhakarResult prabhakar_series(const PrabhakarParams& p, double z) {
  p.validate();
  if (std::abs(z) > kPrabhakarZMax)
    throw std::domain_error("prabhakar: |z| > Z_MAX = 50 (no global algorithm implemented)");

  detail::KahanSum acc;
  double term = 1.0 / gamma_fn(p.beta);  // k = 0
  acc.add(term);
  double gamma_prev = gamma_fn(p.beta);
  int small_streak = 0;
  for (int k = 0; k < kPrabhakarKMax; ++k) {
    const double expo_next = p.alpha * (k + 1) + p.beta;
    double ratio;  // Gamma(alpha k + beta) / Gamma(alpha(k+1) + beta)
    if (expo_next <= kGammaOverflowX) {
      const double gamma_next = gamma_fn(expo_next);
      ratio = gamma_prev / gamma_next;
      gamma_prev = gamma_next;
    } else {
      ratio = std::exp(std::lgamma(p.alpha * k + p.beta) - std::lgamma(expo_next));
      gamma_prev = std::numeric_limits<double>::quiet_NaN();  // unused past this point
    }
    term *= z * (p.gamma + k) / (k + 1) * ratio;
    if (!std::isfinite(term))
      throw convergence_error("prabhakar: term overflow before convergence", std::abs(term));
    acc.add(term);
    if (std::abs(term) <= kPrabhakarEpsAbs + kPrabhakarEpsRel * std::abs(acc.sum)) {
      if (++small_streak >= 3)
        return {acc.sum, std::abs(term) + 1e-16 * std::abs(acc.sum), k + 2};
    } else {
      small_streak = 0;
    }
  }
  throw convergence_error("prabhakar: series did not converge within K_MAX=2000 terms",
                          std::abs(term));
}

inline double prabhakar(const PrabhakarParams& p, double z) { return prabhakar_series(p, z).value; }

// Two-parameter Mittag-Leffler E_{alpha,beta}(z) = E^1_{alpha,beta}(z).
inline double ml_two(double alpha, double beta, double z) {
  return prabhakar({alpha, beta, 1.0}, z);
}

}  // namespace fracdelay
