#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fracdelay {

// Unit step: 1 for t >= 0 (inclusive at 0), else 0.
inline double heaviside(double t) { return t >= 0.0 ? 1.0 : 0.0; }

// Gate g multiplying history terms in the convolution integrals:
// 1 for t < 0, 0 for t >= 0.  Complement of the unit step.
inline double history_gate(double t) { return t < 0.0 ? 1.0 : 0.0; }

// Initial history psi on [-tau*, 0], extended by psi(t) = psi(0) for t >= 0.
// Either a polynomial in t or linearly interpolated samples.
class HistoryFunction {
 public:
  static HistoryFunction polynomial(std::vector<double> coeffs, double tau_star) {
    if (!(tau_star > 0.0)) throw std::domain_error("HistoryFunction: tau_star must be > 0");
    if (coeffs.empty()) throw std::invalid_argument("HistoryFunction: empty coefficient list");
    HistoryFunction h;
    h.tau_star_ = tau_star;
    h.coeffs_ = std::move(coeffs);
    return h;
  }

  // times must be strictly increasing from -tau* to 0.
  static HistoryFunction samples(std::vector<double> times, std::vector<double> values) {
    if (times.size() != values.size() || times.size() < 2)
      throw std::invalid_argument("HistoryFunction: need matching times/values, at least 2");
    for (std::size_t i = 0; i + 1 < times.size(); ++i)
      if (!(times[i] < times[i + 1]))
        throw std::invalid_argument("HistoryFunction: sample times must be strictly increasing");
    if (std::abs(times.back()) > 1e-12)
      throw std::invalid_argument("HistoryFunction: sample times must end at 0");
    if (!(times.front() < 0.0))
      throw std::invalid_argument("HistoryFunction: sample times must start at -tau* < 0");
    HistoryFunction h;
    h.tau_star_ = -times.front();
    h.times_ = std::move(times);
    h.values_ = std::move(values);
    return h;
  }

  double tau_star() const { return tau_star_; }
  bool is_sampled() const { return !times_.empty(); }
  double at_zero() const { return value(0.0); }

  double value(double t) const {
    if (t >= 0.0) t = 0.0;  // constant extension psi(t) = psi(0) for t >= 0
    if (t < -tau_star_ - 1e-9)
      throw std::domain_error("HistoryFunction: t=" + std::to_string(t) +
                              " below history domain [-" + std::to_string(tau_star_) + ", 0]");
    if (t < -tau_star_) t = -tau_star_;
    if (times_.empty()) {
      double v = 0.0;  // Horner
      for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * t + coeffs_[i];
      return v;
    }
    std::size_t lo = 0, hi = times_.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      (times_[mid] <= t ? lo : hi) = mid;
    }
    const double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
    return values_[lo] + w * (values_[hi] - values_[lo]);
  }

  double operator()(double t) const { return value(t); }

  // Interior sample nodes where the interpolant kinks; empty for polynomials.
  // Quadrature splits at these.
  std::vector<double> kink_times() const {
    if (times_.size() <= 2) return {};
    return {times_.begin() + 1, times_.end() - 1};
  }

 private:
  HistoryFunction() = default;
  double tau_star_ = 0.0;
  std::vector<double> coeffs_;
  std::vector<double> times_, values_;
};

}  // namespace fracdelay
