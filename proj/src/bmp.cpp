#include "pamet/bmp.hpp"

#include <stdexcept>

#include "pamet/math.hpp"

namespace pamet {

namespace {

// First index of the extremal value; class ids are increasing, so the
// first hit is the lowest id.
Index first_argmax(const VectorX& v) {
  Index best = 0;
  for (Index i = 1; i < v.size(); ++i)
    if (v(i) > v(best)) best = i;
  return best;
}

Index first_argmin(const VectorX& v) {
  Index best = 0;
  for (Index i = 1; i < v.size(); ++i)
    if (v(i) < v(best)) best = i;
  return best;
}

}  // namespace

int BmpSolution::predicted_class() const {
  if (const int* id = std::get_if<int>(&constant_prediction)) return *id;
  throw std::logic_error("constant prediction is not a class id");
}

Scalar BmpSolution::predicted_value() const {
  if (const Scalar* v = std::get_if<Scalar>(&constant_prediction)) return *v;
  throw std::logic_error("constant prediction is not a real value");
}

const VectorX& BmpSolution::predicted_distribution() const {
  if (const VectorX* p = std::get_if<VectorX>(&constant_prediction)) return *p;
  throw std::logic_error("constant prediction is not a distribution");
}

BmpSolution bmp_zero_one(const LabelDistribution& dist) {
  const Index best = first_argmax(dist.probs());
  return {dist.class_id(best), 1.0 - dist.prob(best)};
}

BmpSolution bmp_cross_entropy(const LabelDistribution& dist, Scalar log_base) {
  if (!(log_base > 0) || log_base == 1)
    throw std::invalid_argument("log base must be positive and != 1");
  return {dist.probs(), shannon_entropy(dist.probs(), log_base)};
}

BmpSolution bmp_squared(const VectorX& y_values) {
  if (y_values.size() == 0) throw std::invalid_argument("no outcome values");
  return {y_values.mean(), population_variance(y_values)};
}

BmpSolution bmp_absolute(const VectorX& y_values) {
  if (y_values.size() == 0) throw std::invalid_argument("no outcome values");
  const Scalar med = median(y_values);
  return {med, mean_absolute_deviation(y_values, med)};
}

BmpSolution bmp_cost_sensitive(const LabelDistribution& dist, const MatrixX& cost_matrix) {
  if (cost_matrix.rows() != dist.size() || cost_matrix.cols() != dist.size())
    throw std::invalid_argument("cost matrix does not match the class count");
  if ((cost_matrix.array() < 0).any())
    throw std::invalid_argument("cost matrix entries must be nonnegative");
  const VectorX expected_cost = cost_matrix * dist.probs();
  const Index best = first_argmin(expected_cost);
  return {dist.class_id(best), expected_cost(best)};
}

}  // namespace pamet
