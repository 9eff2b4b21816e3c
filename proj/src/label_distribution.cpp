#include "pamet/label_distribution.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pamet {

namespace {

std::vector<int> default_ids(Index k) {
  std::vector<int> ids(static_cast<std::size_t>(k));
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

}  // namespace

LabelDistribution::LabelDistribution(VectorX probs)
    : LabelDistribution(std::move(probs), {}) {}

LabelDistribution::LabelDistribution(VectorX probs, std::vector<int> class_ids)
    : probs_(std::move(probs)),
      class_ids_(class_ids.empty() ? default_ids(probs_.size()) : std::move(class_ids)) {
  if (probs_.size() < 2) throw std::invalid_argument("label distribution needs k >= 2 classes");
  if (static_cast<Index>(class_ids_.size()) != probs_.size())
    throw std::invalid_argument("class id count does not match probability count");
  for (std::size_t i = 1; i < class_ids_.size(); ++i)
    if (class_ids_[i] <= class_ids_[i - 1])
      throw std::invalid_argument("class ids must be strictly increasing");
  for (Index i = 0; i < probs_.size(); ++i)
    if (!(probs_(i) >= 0))
      throw std::invalid_argument("negative probability at class index " + std::to_string(i));
  if (std::abs(probs_.sum() - 1.0) > kSumTolerance)
    throw std::invalid_argument("probabilities do not sum to 1");
}

LabelDistribution estimate_marginal(const VectorXi& labels, int class_count) {
  if (labels.size() == 0) throw std::invalid_argument("no labels");
  if (class_count < 2) throw std::invalid_argument("class count must be at least 2");
  VectorX counts = VectorX::Zero(class_count);
  for (Index i = 0; i < labels.size(); ++i) {
    const int y = labels(i);
    if (y < 0 || y >= class_count)
      throw std::invalid_argument("unknown class id " + std::to_string(y));
    counts(y) += 1;
  }
  return LabelDistribution(counts / static_cast<Scalar>(labels.size()));
}

LabelDistribution uniform_distribution(int class_count) {
  if (class_count < 2) throw std::invalid_argument("class count must be at least 2");
  return LabelDistribution(VectorX::Constant(class_count, 1.0 / class_count));
}

}  // namespace pamet
