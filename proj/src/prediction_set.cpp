#include "pamet/prediction_set.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pamet {

namespace {

void check_class_range(const VectorXi& ids, int class_count, const char* what) {
  for (Index i = 0; i < ids.size(); ++i)
    if (ids(i) < 0 || ids(i) >= class_count)
      throw std::invalid_argument(std::string(what) + " class id " + std::to_string(ids(i)) +
                                  " out of range at record " + std::to_string(i));
}

}  // namespace

PredictionSet PredictionSet::from_classes(VectorXi y_true, VectorXi y_pred, int class_count) {
  if (y_true.size() == 0) throw std::invalid_argument("prediction set must be nonempty");
  if (y_true.size() != y_pred.size())
    throw std::invalid_argument("truth and prediction counts differ");
  if (class_count < 2) throw std::invalid_argument("class count must be at least 2");
  check_class_range(y_true, class_count, "true");
  check_class_range(y_pred, class_count, "predicted");
  PredictionSet set;
  set.payload_ = PayloadKind::ClassId;
  set.n_ = y_true.size();
  set.class_count_ = class_count;
  set.true_classes_ = std::move(y_true);
  set.predicted_classes_ = std::move(y_pred);
  return set;
}

PredictionSet PredictionSet::from_probabilities(VectorXi y_true, MatrixX probabilities) {
  if (y_true.size() == 0) throw std::invalid_argument("prediction set must be nonempty");
  if (y_true.size() != probabilities.rows())
    throw std::invalid_argument("truth and prediction counts differ");
  if (probabilities.cols() < 2) throw std::invalid_argument("class count must be at least 2");
  check_class_range(y_true, static_cast<int>(probabilities.cols()), "true");
  for (Index r = 0; r < probabilities.rows(); ++r) {
    if ((probabilities.row(r).array() < 0).any())
      throw std::invalid_argument("negative probability in record " + std::to_string(r));
    if (std::abs(probabilities.row(r).sum() - 1.0) > kRowSumTolerance)
      throw std::invalid_argument("probabilities in record " + std::to_string(r) +
                                  " do not sum to 1");
  }
  PredictionSet set;
  set.payload_ = PayloadKind::Probability;
  set.n_ = y_true.size();
  set.class_count_ = static_cast<int>(probabilities.cols());
  set.true_classes_ = std::move(y_true);
  set.predicted_probabilities_ = std::move(probabilities);
  return set;
}

PredictionSet PredictionSet::from_reals(VectorX y_true, VectorX y_pred) {
  if (y_true.size() == 0) throw std::invalid_argument("prediction set must be nonempty");
  if (y_true.size() != y_pred.size())
    throw std::invalid_argument("truth and prediction counts differ");
  PredictionSet set;
  set.payload_ = PayloadKind::RealValue;
  set.n_ = y_true.size();
  set.true_values_ = std::move(y_true);
  set.predicted_values_ = std::move(y_pred);
  return set;
}

const VectorXi& PredictionSet::true_classes() const {
  if (payload_ == PayloadKind::RealValue)
    throw std::logic_error("real-valued records carry no class labels");
  return true_classes_;
}

const VectorXi& PredictionSet::predicted_classes() const {
  if (payload_ != PayloadKind::ClassId)
    throw std::logic_error("payload is not a class id");
  return predicted_classes_;
}

const MatrixX& PredictionSet::predicted_probabilities() const {
  if (payload_ != PayloadKind::Probability)
    throw std::logic_error("payload is not a probability vector");
  return predicted_probabilities_;
}

const VectorX& PredictionSet::true_values() const {
  if (payload_ != PayloadKind::RealValue)
    throw std::logic_error("payload is not real-valued");
  return true_values_;
}

const VectorX& PredictionSet::predicted_values() const {
  if (payload_ != PayloadKind::RealValue)
    throw std::logic_error("payload is not real-valued");
  return predicted_values_;
}

}  // namespace pamet
