#include "pamet/synthesis.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pamet/rng.hpp"

namespace pamet {

namespace {

void check_binary(const VectorXi& labels) {
  for (Index i = 0; i < labels.size(); ++i)
    if (labels(i) != 0 && labels(i) != 1)
      throw std::invalid_argument("labels must be 0 or 1, got " + std::to_string(labels(i)));
}

std::vector<Index> indices_of(const VectorXi& labels, int value) {
  std::vector<Index> out;
  for (Index i = 0; i < labels.size(); ++i)
    if (labels(i) == value) out.push_back(i);
  return out;
}

}  // namespace

LabeledSample make_sample(VectorXi labels) {
  check_binary(labels);
  LabeledSample sample;
  sample.rows.resize(static_cast<std::size_t>(labels.size()));
  std::iota(sample.rows.begin(), sample.rows.end(), Index{0});
  sample.labels = std::move(labels);
  return sample;
}

LabeledSample inflate_imbalance(const LabeledSample& sample, const DegradationConfig& cfg) {
  check_binary(sample.labels);
  if (sample.size() < 2 || static_cast<std::size_t>(sample.size()) != sample.rows.size())
    throw std::invalid_argument("sample needs n >= 2 rows with matching handles");
  if (!(cfg.target_minority_fraction > 0) || cfg.target_minority_fraction > 0.5)
    throw std::invalid_argument("target minority fraction must lie in (0, 0.5]");
  if (cfg.n_out < 2) throw std::invalid_argument("output size must be at least 2");

  const std::vector<Index> ones = indices_of(sample.labels, 1);
  const std::vector<Index> zeros = indices_of(sample.labels, 0);
  if (ones.empty() || zeros.empty()) throw std::invalid_argument("empty class pool");

  // The rarer input label becomes the minority pool; tie goes to label 1.
  const bool minority_is_one = ones.size() <= zeros.size();
  const std::vector<Index>& minority = minority_is_one ? ones : zeros;
  const std::vector<Index>& majority = minority_is_one ? zeros : ones;

  const Index minority_out =
      static_cast<Index>(std::floor(cfg.target_minority_fraction * static_cast<Scalar>(cfg.n_out)));
  if (minority_out < 1 || cfg.n_out - minority_out < 1)
    throw std::invalid_argument("target fraction unachievable at this output size");

  SplitMix64 rng(cfg.seed);
  LabeledSample out;
  out.labels.resize(cfg.n_out);
  out.rows.reserve(static_cast<std::size_t>(cfg.n_out));
  for (Index i = 0; i < cfg.n_out; ++i) {
    const bool from_minority = i < minority_out;
    const std::vector<Index>& pool = from_minority ? minority : majority;
    const Index pick = pool[static_cast<std::size_t>(rng.below(static_cast<Index>(pool.size())))];
    out.labels(i) = sample.labels(pick);
    out.rows.push_back(sample.rows[static_cast<std::size_t>(pick)]);
  }
  return out;
}

LabeledSample inject_label_noise(const LabeledSample& sample, const DegradationConfig& cfg) {
  check_binary(sample.labels);
  if (static_cast<std::size_t>(sample.size()) != sample.rows.size())
    throw std::invalid_argument("sample handles out of step with labels");
  if (!(cfg.noise_level >= 0) || cfg.noise_level >= 0.5)
    throw std::invalid_argument("noise level must lie in [0, 0.5)");

  const Index flips_per_class =
      static_cast<Index>(std::floor(cfg.noise_level * static_cast<Scalar>(sample.size()) / 2));
  LabeledSample out = sample;
  if (flips_per_class == 0) return out;

  const std::vector<Index> zeros = indices_of(sample.labels, 0);
  const std::vector<Index> ones = indices_of(sample.labels, 1);
  if (flips_per_class > static_cast<Index>(zeros.size()) ||
      flips_per_class > static_cast<Index>(ones.size()))
    throw NoiseImbalanceError("noise level incompatible with imbalance");

  SplitMix64 rng(cfg.seed);
  for (const std::vector<Index>* pool : {&zeros, &ones}) {
    const std::vector<Index> chosen =
        sample_without_replacement(rng, static_cast<Index>(pool->size()), flips_per_class);
    for (const Index k : chosen) {
      const Index row = (*pool)[static_cast<std::size_t>(k)];
      out.labels(row) = 1 - out.labels(row);
    }
  }
  return out;
}

}  // namespace pamet
