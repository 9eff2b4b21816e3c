#pragma once

#include <vector>

#include "pamet/types.hpp"

namespace pamet {

/// Discrete marginal over k >= 2 classes. Entries are nonnegative and sum
/// to 1 within kSumTolerance; class ids are strictly increasing.
class LabelDistribution {
 public:
  static constexpr Scalar kSumTolerance = 1e-9;

  explicit LabelDistribution(VectorX probs);
  LabelDistribution(VectorX probs, std::vector<int> class_ids);

  Index size() const { return probs_.size(); }
  const VectorX& probs() const { return probs_; }
  const std::vector<int>& class_ids() const { return class_ids_; }
  Scalar prob(Index i) const { return probs_(i); }
  int class_id(Index i) const { return class_ids_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const LabelDistribution& lhs, const LabelDistribution& rhs) {
    return exact_equal(lhs.probs_, rhs.probs_) && lhs.class_ids_ == rhs.class_ids_;
  }

 private:
  VectorX probs_;
  std::vector<int> class_ids_;
};

/// Plug-in estimate from observed labels: probs[i] = count(i) / n.
LabelDistribution estimate_marginal(const VectorXi& labels, int class_count);

LabelDistribution uniform_distribution(int class_count);

}  // namespace pamet
