#include "pamet/sweep.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "pamet/bmp.hpp"
#include "pamet/label_distribution.hpp"
#include "pamet/rng.hpp"

namespace pamet {

PredictionSource synthetic_predictor(Scalar error_rate) {
  if (!(error_rate >= 0) || !(error_rate <= 1))
    throw std::invalid_argument("predictor error rate must lie in [0, 1]");
  return [error_rate](const SweepPointContext& ctx) {
    SplitMix64 rng(ctx.predictor_seed);
    VectorXi preds = ctx.pre_noise->labels;
    for (Index i = 0; i < preds.size(); ++i)
      if (rng.uniform01() < error_rate) preds(i) = 1 - preds(i);
    return preds;
  };
}

const SweepPoint& SweepGrid::at(Index noise_idx, Index imbalance_idx) const {
  if (noise_idx < 0 || noise_idx >= noise_axis.size() || imbalance_idx < 0 ||
      imbalance_idx >= imbalance_axis.size())
    throw std::out_of_range("grid index out of range");
  return points[static_cast<std::size_t>(noise_idx * imbalance_axis.size() + imbalance_idx)];
}

std::uint64_t sweep_point_seed(std::uint64_t base_seed, Scalar imbalance, Scalar noise) {
  const std::uint64_t ib = std::bit_cast<std::uint64_t>(imbalance);
  const std::uint64_t nb = std::bit_cast<std::uint64_t>(noise);
  return base_seed ^ derive_seed(ib, nb);
}

DegradedPoint degrade_point(const LabeledSample& sample, Scalar imbalance, Scalar noise,
                            std::uint64_t point_seed, Index n_out) {
  DegradationConfig inflate_cfg;
  inflate_cfg.target_minority_fraction = imbalance;
  inflate_cfg.n_out = n_out;
  inflate_cfg.seed = derive_seed(point_seed, 1);
  DegradedPoint out;
  out.pre_noise = inflate_imbalance(sample, inflate_cfg);

  DegradationConfig noise_cfg;
  noise_cfg.noise_level = noise;
  noise_cfg.seed = derive_seed(point_seed, 2);
  out.noisy = inject_label_noise(out.pre_noise, noise_cfg);
  return out;
}

namespace {

SweepPoint evaluate_point(const LabeledSample& sample, Scalar imbalance, Scalar noise,
                          const PredictionSource& predictions, std::uint64_t point_seed,
                          Index n_out) {
  SweepPoint point;
  point.imbalance = imbalance;
  point.noise = noise;
  point.seed = point_seed;

  DegradedPoint degraded;
  try {
    degraded = degrade_point(sample, imbalance, noise, point_seed, n_out);
  } catch (const NoiseImbalanceError& err) {
    point.feasible = false;
    point.infeasible_reason = err.what();
    return point;
  }
  const LabeledSample& inflated = degraded.pre_noise;
  const LabeledSample& noisy = degraded.noisy;

  SweepPointContext ctx;
  ctx.imbalance = imbalance;
  ctx.noise = noise;
  ctx.point_seed = point_seed;
  ctx.predictor_seed = derive_seed(point_seed, 3);
  ctx.pre_noise = &inflated;
  ctx.noisy = &noisy;
  const VectorXi preds = predictions(ctx);
  if (preds.size() != noisy.size())
    throw std::invalid_argument("prediction source returned the wrong record count");

  std::int64_t tp = 0, fp = 0, fn = 0, tn = 0;
  for (Index i = 0; i < noisy.size(); ++i) {
    if (preds(i) != 0 && preds(i) != 1)
      throw std::invalid_argument("prediction source returned a non-binary label");
    if (preds(i) == 1)
      (noisy.labels(i) == 1 ? tp : fp) += 1;
    else
      (noisy.labels(i) == 1 ? fn : tn) += 1;
  }

  point.feasible = true;
  point.cells = cells_from_counts(tp, fp, fn, tn);
  point.metrics = panel(point.cells);
  point.error = point.cells.error();
  const LabelDistribution marginal = estimate_marginal(noisy.labels, 2);
  point.pa = prediction_advantage(point.error, bmp_zero_one(marginal).bmp_risk);
  return point;
}

}  // namespace

SweepGrid run_sweep(const LabeledSample& sample, const VectorX& imbalance_axis,
                    const VectorX& noise_axis, const PredictionSource& predictions,
                    std::uint64_t base_seed, Index n_out) {
  if (imbalance_axis.size() == 0 || noise_axis.size() == 0)
    throw std::invalid_argument("sweep axes must be nonempty");
  SweepGrid grid;
  grid.imbalance_axis = imbalance_axis;
  grid.noise_axis = noise_axis;
  grid.points.reserve(
      static_cast<std::size_t>(imbalance_axis.size() * noise_axis.size()));
  for (Index j = 0; j < noise_axis.size(); ++j)
    for (Index i = 0; i < imbalance_axis.size(); ++i) {
      const std::uint64_t seed = sweep_point_seed(base_seed, imbalance_axis(i), noise_axis(j));
      grid.points.push_back(
          evaluate_point(sample, imbalance_axis(i), noise_axis(j), predictions, seed, n_out));
    }
  return grid;
}

std::vector<ZeroCrossing> zero_crossing(const SweepGrid& grid) {
  std::vector<ZeroCrossing> result;
  for (Index j = 0; j < grid.noise_axis.size(); ++j) {
    ZeroCrossing row;
    row.noise = grid.noise_axis(j);

    std::vector<std::pair<Scalar, Scalar>> pts;  // (imbalance, pa)
    for (Index i = 0; i < grid.imbalance_axis.size(); ++i) {
      const SweepPoint& p = grid.at(j, i);
      if (p.feasible) pts.emplace_back(p.imbalance, p.pa.pa);
    }

    bool up = true, down = true;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      if (pts[k].second < pts[k - 1].second) up = false;
      if (pts[k].second > pts[k - 1].second) down = false;
    }
    row.monotone = pts.size() < 2 || up || down;

    for (std::size_t k = 1; k < pts.size(); ++k) {
      const auto [x0, p0] = pts[k - 1];
      const auto [x1, p1] = pts[k];
      if (p0 == 0 && (k == 1 || pts[k - 2].second != 0)) row.crossings.push_back(x0);
      if (p0 * p1 < 0)
        row.crossings.push_back(x0 + (0 - p0) * (x1 - x0) / (p1 - p0));
      if (k + 1 == pts.size() && p1 == 0) row.crossings.push_back(x1);
    }
    if (pts.size() == 1 && pts[0].second == 0) row.crossings.push_back(pts[0].first);
    result.push_back(std::move(row));
  }
  return result;
}

}  // namespace pamet
