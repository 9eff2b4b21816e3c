#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pamet/types.hpp"

namespace pamet {

/// Binary-labeled rows. Features stay behind opaque row handles that
/// point back into whatever produced the sample; degradation shuffles
/// and copies handles, never content.
struct LabeledSample {
  VectorXi labels;             // 0 or 1
  std::vector<Index> rows;     // one handle per label

  Index size() const { return labels.size(); }

  friend bool operator==(const LabeledSample& lhs, const LabeledSample& rhs) {
    return exact_equal(lhs.labels, rhs.labels) && lhs.rows == rhs.rows;
  }
};

/// Rows handles default to 0..n-1.
LabeledSample make_sample(VectorXi labels);

struct DegradationConfig {
  Scalar target_minority_fraction = 0.5;  // (0, 0.5]
  Scalar noise_level = 0;                 // [0, 0.5)
  std::uint64_t seed = 0;
  Index n_out = 0;                        // rows produced by inflate_imbalance
};

/// Raised when the requested flip count exceeds a class's size.
struct NoiseImbalanceError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Bootstrap to the target minority proportion: floor(target * n_out)
/// rows drawn with replacement from the minority pool, the remainder
/// from the majority pool. The input's rarer label is the minority
/// (label 1 on ties). Fully determined by cfg.seed.
LabeledSample inflate_imbalance(const LabeledSample& sample, const DegradationConfig& cfg);

/// Flip exactly floor(noise_level * n / 2) labels in each class, chosen
/// uniformly without replacement, so the class marginal is preserved
/// exactly. Fully determined by cfg.seed.
LabeledSample inject_label_noise(const LabeledSample& sample, const DegradationConfig& cfg);

}  // namespace pamet
