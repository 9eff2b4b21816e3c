#pragma once

#include <numbers>
#include <variant>

#include "pamet/label_distribution.hpp"
#include "pamet/types.hpp"

namespace pamet {

/// Best constant prediction given only the label marginal, together with
/// its risk. The payload mirrors the loss family: a class id, a real, or
/// a probability vector.
struct BmpSolution {
  std::variant<int, Scalar, VectorX> constant_prediction;
  Scalar bmp_risk = 0;

  int predicted_class() const;
  Scalar predicted_value() const;
  const VectorX& predicted_distribution() const;

  friend bool operator==(const BmpSolution& lhs, const BmpSolution& rhs) {
    if (lhs.bmp_risk != rhs.bmp_risk) return false;
    if (lhs.constant_prediction.index() != rhs.constant_prediction.index()) return false;
    if (const int* id = std::get_if<int>(&lhs.constant_prediction))
      return *id == std::get<int>(rhs.constant_prediction);
    if (const Scalar* v = std::get_if<Scalar>(&lhs.constant_prediction))
      return *v == std::get<Scalar>(rhs.constant_prediction);
    return exact_equal(std::get<VectorX>(lhs.constant_prediction),
                       std::get<VectorX>(rhs.constant_prediction));
  }
};

/// Most probable class; ties break toward the lowest class id.
/// Risk is 1 - max_i probs[i].
BmpSolution bmp_zero_one(const LabelDistribution& dist);

/// The marginal itself; risk is its Shannon entropy in the given base.
BmpSolution bmp_cross_entropy(const LabelDistribution& dist,
                              Scalar log_base = std::numbers::e);

/// Sample mean; risk is the population variance (1/n).
BmpSolution bmp_squared(const VectorX& y_values);

/// Median; risk is the mean absolute deviation around it. Any point
/// between the two middle order statistics minimizes the risk; the
/// midpoint is chosen for determinism.
BmpSolution bmp_absolute(const VectorX& y_values);

/// argmin_i sum_j cost(i, j) * probs[j]; ties break toward the lowest id.
BmpSolution bmp_cost_sensitive(const LabelDistribution& dist, const MatrixX& cost_matrix);

}  // namespace pamet
