#pragma once

#include "pamet/loss.hpp"
#include "pamet/prediction_set.hpp"
#include "pamet/types.hpp"

namespace pamet {

/// Mean per-record loss. Cross-entropy on a zero probability for the true
/// class yields +infinity unless the loss carries an epsilon clamp.
/// Throws std::invalid_argument when the payload shape does not match the
/// loss family.
Scalar empirical_risk(const PredictionSet& preds, const LossSpec& loss);

}  // namespace pamet
