#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pamet/advantage.hpp"
#include "pamet/confusion.hpp"
#include "pamet/synthesis.hpp"
#include "pamet/types.hpp"

namespace pamet {

/// Everything a prediction source may look at for one grid point. The
/// pre-noise labels are what the built-in predictor imitates; the noisy
/// labels are what the predictions get scored against.
struct SweepPointContext {
  Scalar imbalance = 0;
  Scalar noise = 0;
  std::uint64_t point_seed = 0;
  std::uint64_t predictor_seed = 0;
  const LabeledSample* pre_noise = nullptr;
  const LabeledSample* noisy = nullptr;
};

using PredictionSource = std::function<VectorXi(const SweepPointContext&)>;

/// Predicts the pre-noise label, independently flipped with probability
/// error_rate. error_rate 0 is the oracle on the clean labels.
PredictionSource synthetic_predictor(Scalar error_rate);

struct SweepPoint {
  Scalar imbalance = 0;
  Scalar noise = 0;
  std::uint64_t seed = 0;
  bool feasible = false;
  std::string infeasible_reason;  // only when !feasible
  Scalar error = 0;
  ConfusionCells cells;
  MetricPanel metrics;
  PaResult pa;

  friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

/// Rectangular (noise x imbalance) grid; points where the requested noise
/// cannot be realized at the requested imbalance are kept in place and
/// marked infeasible.
struct SweepGrid {
  VectorX imbalance_axis;
  VectorX noise_axis;
  std::vector<SweepPoint> points;  // row-major, noise rows over imbalance columns

  const SweepPoint& at(Index noise_idx, Index imbalance_idx) const;

  friend bool operator==(const SweepGrid& lhs, const SweepGrid& rhs) {
    return exact_equal(lhs.imbalance_axis, rhs.imbalance_axis) &&
           exact_equal(lhs.noise_axis, rhs.noise_axis) && lhs.points == rhs.points;
  }
};

/// Per-point seed, independent of where the point sits in the grid.
std::uint64_t sweep_point_seed(std::uint64_t base_seed, Scalar imbalance, Scalar noise);

/// The two degradation stages for one grid point, on the same derived
/// seeds the sweep itself uses. Throws NoiseImbalanceError when the flip
/// quota exceeds a class.
struct DegradedPoint {
  LabeledSample pre_noise;
  LabeledSample noisy;
};
DegradedPoint degrade_point(const LabeledSample& sample, Scalar imbalance, Scalar noise,
                            std::uint64_t point_seed, Index n_out);

/// Degrade the sample to every (imbalance, noise) pair, score the
/// prediction source against the noisy labels, and collect the metric
/// panel plus the prediction advantage per point. Deterministic given
/// base_seed; grid points do not share random state.
SweepGrid run_sweep(const LabeledSample& sample, const VectorX& imbalance_axis,
                    const VectorX& noise_axis, const PredictionSource& predictions,
                    std::uint64_t base_seed, Index n_out);

struct ZeroCrossing {
  Scalar noise = 0;
  std::vector<Scalar> crossings;  // imbalance values where pa crosses 0
  bool monotone = true;           // pa moved one way along the row

  bool none() const { return crossings.empty(); }
};

/// Linear interpolation of pa = 0 along each noise row, adjacent feasible
/// points only. Non-monotone rows are flagged and reported per segment.
std::vector<ZeroCrossing> zero_crossing(const SweepGrid& grid);

}  // namespace pamet
