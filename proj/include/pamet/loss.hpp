#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "pamet/types.hpp"

namespace pamet {

enum class LossKind { ZeroOne, CrossEntropy, Squared, Absolute, CostSensitive };

std::string to_string(LossKind kind);
std::optional<LossKind> loss_kind_from_string(std::string_view name);

/// Tagged loss family. A cost matrix is carried exactly for the
/// cost-sensitive family; the log base and the optional epsilon clamp
/// apply to cross-entropy only.
class LossSpec {
 public:
  static LossSpec zero_one();
  static LossSpec cross_entropy(Scalar log_base = std::numbers::e);
  static LossSpec squared();
  static LossSpec absolute();
  // cost(i, j) is the price of predicting class i when the truth is j.
  static LossSpec cost_sensitive(MatrixX cost_matrix);

  // Cross-entropy only: probabilities below epsilon are clamped up to it
  // before the log, so the per-record loss stays finite.
  LossSpec with_epsilon_clamp(Scalar epsilon = kDefaultEpsilonClamp) const;

  LossKind kind() const { return kind_; }
  const MatrixX& cost_matrix() const;
  Scalar log_base() const { return log_base_; }
  std::optional<Scalar> epsilon_clamp() const { return epsilon_clamp_; }

  /// Width of the loss's value range when it is bounded, disengaged when
  /// it is not (squared, absolute, unclamped cross-entropy).
  std::optional<Scalar> value_range() const;

  static constexpr Scalar kDefaultEpsilonClamp = 1e-12;

  friend bool operator==(const LossSpec& lhs, const LossSpec& rhs) {
    return lhs.kind_ == rhs.kind_ && exact_equal(lhs.cost_matrix_, rhs.cost_matrix_) &&
           lhs.log_base_ == rhs.log_base_ && lhs.epsilon_clamp_ == rhs.epsilon_clamp_;
  }

 private:
  explicit LossSpec(LossKind kind) : kind_(kind) {}

  LossKind kind_;
  MatrixX cost_matrix_;
  Scalar log_base_ = std::numbers::e;
  std::optional<Scalar> epsilon_clamp_;
};

}  // namespace pamet
