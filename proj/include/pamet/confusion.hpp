#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pamet/types.hpp"

namespace pamet {

/// Joint (prediction, truth) probabilities of a binary problem:
///   a = Pr{pred 1, truth 0}   b = Pr{pred 1, truth 1}
///   c = Pr{pred 0, truth 1}   d = Pr{pred 0, truth 0}
/// Canonical orientation keeps label 1 the minority class, b + c <= a + d;
/// construction swaps the class roles when needed. Exact balance is left
/// as given: both orientations agree on pa and kappa, tp and tn trade
/// places.
struct ConfusionCells {
  Scalar a = 0;
  Scalar b = 0;
  Scalar c = 0;
  Scalar d = 0;
  bool swapped = false;  // class roles were exchanged to restore b+c <= a+d

  static constexpr Scalar kSumTolerance = 1e-9;

  Scalar minority_mass() const { return b + c; }
  Scalar error() const { return a + c; }

  friend bool operator==(const ConfusionCells&, const ConfusionCells&) = default;
};

/// Counts laid out the usual way: tp = pred 1 & truth 1, fp = pred 1 &
/// truth 0, fn = pred 0 & truth 1, tn = pred 0 & truth 0.
ConfusionCells cells_from_counts(std::int64_t tp_count, std::int64_t fp_count,
                                 std::int64_t fn_count, std::int64_t tn_count);

ConfusionCells cells_from_probabilities(Scalar a, Scalar b, Scalar c, Scalar d);

/// All the binary rival metrics plus the prediction advantage, each
/// disengaged when its denominator carries no mass.
struct MetricPanel {
  std::optional<Scalar> pa;
  std::optional<Scalar> tp;
  std::optional<Scalar> tn;
  std::optional<Scalar> ba;
  std::optional<Scalar> pre;
  std::optional<Scalar> rec;
  std::optional<Scalar> f1;
  std::optional<Scalar> kappa;
  Scalar accuracy = 0;

  friend bool operator==(const MetricPanel&, const MetricPanel&) = default;
};

MetricPanel panel(const ConfusionCells& cells);

/// One inequality pa <= metric. `strictness_expected` is the side
/// condition under which the inequality is provably strict; `satisfied`
/// is false only when the bound fails or an expected-strict case came
/// out equal.
struct DominationEntry {
  std::string name;
  std::optional<Scalar> metric;
  bool holds = true;
  bool strict = false;
  bool strictness_expected = false;

  bool satisfied() const { return holds && (!strictness_expected || strict); }
};

struct DominationReport {
  static constexpr Scalar kTolerance = 1e-12;

  Scalar pa = 0;
  std::array<DominationEntry, 7> entries;  // tp, tn, ba, pre, rec, f1, kappa

  bool all_hold() const;
  bool all_satisfied() const;
  const DominationEntry& entry(std::string_view name) const;
};

/// Checks pa <= {tp, tn, ba, pre, rec, f1, kappa} on canonical cells with
/// minority mass present (b + c > 0; throws otherwise).
///
/// Side conditions for strictness: a > 0 for tp/pre/rec, c > 0 for tn,
/// a > 0 or c > 0 for ba, pre < 1 for f1, and imbalance b+c < a+d for
/// kappa. The kappa condition additionally requires a+b > 0 and a+c > 0:
/// a classifier that never predicts the minority has kappa equal to pa,
/// and a perfect classifier pins both at 1, whatever the imbalance.
DominationReport check_domination(const ConfusionCells& cells);

}  // namespace pamet
