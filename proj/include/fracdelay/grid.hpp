#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fracdelay {

// Uniform sample grid: points start + j*step, j = 0..count-1.
struct UniformGrid {
  double start;
  double step;
  std::size_t count;

  void validate() const {
    if (!(step > 0.0)) throw std::domain_error("UniformGrid: step must be > 0");
    if (count < 2) throw std::domain_error("UniformGrid: need at least 2 points");
  }
  double point(std::size_t j) const { return start + step * static_cast<double>(j); }
  double back() const { return point(count - 1); }
  std::vector<double> points() const {
    std::vector<double> p(count);
    for (std::size_t j = 0; j < count; ++j) p[j] = point(j);
    return p;
  }
};

}  // namespace fracdelay
