#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "fracdelay/grid.hpp"
#include "fracdelay/special_functions.hpp"

namespace fracdelay {

// Caputo fractional derivative of order alpha in (0,1] of sampled data on a
// uniform grid starting at 0, by the L1 product-integration scheme
// (piecewise-linear interpolant inside the memory integral, O(h^{2-alpha})
// for C^2 data).  d[0] is reported as 0 by convention in both branches;
// residual checks exclude the first nodes anyway.
//
// For alpha == 1 exactly, returns finite differences: centered in the
// interior, one-sided second order at the last node.
inline std::vector<double> caputo_l1(std::span<const double> samples, double alpha,
                                     const UniformGrid& grid) {
  grid.validate();
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::domain_error("caputo_l1: alpha must lie in (0, 1]");
  if (samples.size() != grid.count)
    throw std::invalid_argument("caputo_l1: samples.size() != grid.count");
  if (grid.start != 0.0)
    throw std::domain_error("caputo_l1: grid must start at t = 0 (Caputo lower terminal)");

  const std::size_t n = grid.count;
  const double h = grid.step;
  std::vector<double> d(n, 0.0);

  if (alpha == 1.0) {
    for (std::size_t j = 1; j + 1 < n; ++j) d[j] = (samples[j + 1] - samples[j - 1]) / (2.0 * h);
    if (n >= 3)
      d[n - 1] = (3.0 * samples[n - 1] - 4.0 * samples[n - 2] + samples[n - 3]) / (2.0 * h);
    else
      d[n - 1] = (samples[n - 1] - samples[n - 2]) / h;
    return d;
  }

  // b[m] = (m+1)^{1-alpha} - m^{1-alpha}
  std::vector<double> b(n - 1);
  for (std::size_t m = 0; m + 1 < n; ++m)
    b[m] = std::pow(static_cast<double>(m + 1), 1.0 - alpha) -
           std::pow(static_cast<double>(m), 1.0 - alpha);

  const double scale = std::pow(h, -alpha) / gamma_fn(2.0 - alpha);
  for (std::size_t j = 1; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < j; ++k) s += (samples[k + 1] - samples[k]) * b[j - 1 - k];
    d[j] = scale * s;
  }
  return d;
}

}  // namespace fracdelay
