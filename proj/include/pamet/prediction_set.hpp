#pragma once

#include "pamet/types.hpp"

namespace pamet {

enum class PayloadKind { ClassId, Probability, RealValue };

/// Immutable (truth, prediction) records with one payload shape shared by
/// every record. Features never enter: only what the model predicted and
/// what the label was.
class PredictionSet {
 public:
  static constexpr Scalar kRowSumTolerance = 1e-6;

  static PredictionSet from_classes(VectorXi y_true, VectorXi y_pred, int class_count);
  /// One probability row per record; columns are classes 0..k-1.
  static PredictionSet from_probabilities(VectorXi y_true, MatrixX probabilities);
  static PredictionSet from_reals(VectorX y_true, VectorX y_pred);

  PayloadKind payload() const { return payload_; }
  Index size() const { return n_; }
  int class_count() const { return class_count_; }

  const VectorXi& true_classes() const;
  const VectorXi& predicted_classes() const;
  const MatrixX& predicted_probabilities() const;
  const VectorX& true_values() const;
  const VectorX& predicted_values() const;

 private:
  PredictionSet() = default;

  PayloadKind payload_ = PayloadKind::ClassId;
  Index n_ = 0;
  int class_count_ = 0;
  VectorXi true_classes_;
  VectorXi predicted_classes_;
  MatrixX predicted_probabilities_;
  VectorX true_values_;
  VectorX predicted_values_;
};

}  // namespace pamet
