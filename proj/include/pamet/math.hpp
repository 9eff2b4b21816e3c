#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pamet/types.hpp"

namespace pamet {

/// -sum p_i log(p_i) in the given base, with 0 * log(0) taken as 0.
template <typename Derived>
Scalar shannon_entropy(const Eigen::MatrixBase<Derived>& probs,
                       Scalar log_base = std::numbers::e) {
  Scalar h = 0;
  for (Index i = 0; i < probs.size(); ++i) {
    const Scalar p = probs(i);
    if (p > 0) h -= p * std::log(p);
  }
  return h / std::log(log_base);
}

/// Variance with the 1/n convention.
template <typename Derived>
Scalar population_variance(const Eigen::MatrixBase<Derived>& y) {
  const Scalar mean = y.mean();
  return (y.array() - mean).square().mean();
}

template <typename Derived>
Scalar mean_absolute_deviation(const Eigen::MatrixBase<Derived>& y, Scalar center) {
  return (y.array() - center).abs().mean();
}

/// Even length: midpoint of the two middle order statistics.
inline Scalar median(VectorX values) {
  const Index n = values.size();
  if (n == 0) throw std::invalid_argument("median of empty sequence");
  Scalar* begin = values.data();
  Scalar* end = begin + n;
  Scalar* mid = begin + n / 2;
  std::nth_element(begin, mid, end);
  if (n % 2 == 1) return *mid;
  const Scalar upper = *mid;
  const Scalar lower = *std::max_element(begin, mid);
  return lower + (upper - lower) / 2;
}

}  // namespace pamet
