#include "pamet/confusion.hpp"

#include <cmath>
#include <stdexcept>

namespace pamet {

namespace {

ConfusionCells canonicalize(Scalar a, Scalar b, Scalar c, Scalar d) {
  ConfusionCells cells;
  if (b + c > a + d) {
    cells = {c, d, a, b, true};
  } else {
    cells = {a, b, c, d, false};
  }
  return cells;
}

}  // namespace

ConfusionCells cells_from_counts(std::int64_t tp_count, std::int64_t fp_count,
                                 std::int64_t fn_count, std::int64_t tn_count) {
  if (tp_count < 0 || fp_count < 0 || fn_count < 0 || tn_count < 0)
    throw std::invalid_argument("confusion counts must be nonnegative");
  const std::int64_t total = tp_count + fp_count + fn_count + tn_count;
  if (total == 0) throw std::invalid_argument("zero total count");
  const Scalar n = static_cast<Scalar>(total);
  return canonicalize(static_cast<Scalar>(fp_count) / n, static_cast<Scalar>(tp_count) / n,
                      static_cast<Scalar>(fn_count) / n, static_cast<Scalar>(tn_count) / n);
}

ConfusionCells cells_from_probabilities(Scalar a, Scalar b, Scalar c, Scalar d) {
  if (!(a >= 0) || !(b >= 0) || !(c >= 0) || !(d >= 0))
    throw std::invalid_argument("cell probabilities must be nonnegative");
  if (std::abs(a + b + c + d - 1.0) > ConfusionCells::kSumTolerance)
    throw std::invalid_argument("cell probabilities do not sum to 1");
  return canonicalize(a, b, c, d);
}

MetricPanel panel(const ConfusionCells& cells) {
  const Scalar a = cells.a, b = cells.b, c = cells.c, d = cells.d;
  MetricPanel m;
  m.accuracy = b + d;
  if (b + c > 0) {
    m.pa = (b - a) / (b + c);
    m.tp = b / (b + c);
    m.rec = b / (b + c);
  }
  if (a + d > 0) m.tn = d / (a + d);
  if (m.tp && m.tn) m.ba = (*m.tp + *m.tn) / 2;
  if (a + b > 0) m.pre = b / (a + b);
  // Limit convention: a classifier with no true positives scores 0 as
  // long as either predicted-positive or actual-positive mass exists.
  if (2 * b + a + c > 0) m.f1 = 2 * b / (2 * b + a + c);
  const Scalar p0 = b + d;
  const Scalar pe = (a + b) * (b + c) + (a + d) * (c + d);
  if (pe < 1) m.kappa = 1 - (1 - p0) / (1 - pe);
  return m;
}

bool DominationReport::all_hold() const {
  for (const auto& e : entries)
    if (!e.holds) return false;
  return true;
}

bool DominationReport::all_satisfied() const {
  for (const auto& e : entries)
    if (!e.satisfied()) return false;
  return true;
}

const DominationEntry& DominationReport::entry(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw std::out_of_range("no such metric in the domination report");
}

DominationReport check_domination(const ConfusionCells& cells) {
  if (!(cells.minority_mass() > 0))
    throw std::invalid_argument("domination check needs minority mass (b + c > 0)");
  const MetricPanel m = panel(cells);
  const Scalar a = cells.a, b = cells.b, c = cells.c, d = cells.d;

  DominationReport report;
  report.pa = *m.pa;

  const auto compare = [&](std::string name, std::optional<Scalar> metric,
                           bool expected) {
    DominationEntry e;
    e.name = std::move(name);
    e.metric = metric;
    e.strictness_expected = expected;
    if (metric) {
      e.holds = report.pa <= *metric + DominationReport::kTolerance;
      e.strict = *metric - report.pa > DominationReport::kTolerance;
    }
    return e;
  };

  const bool pre_below_one = m.pre && *m.pre < 1;
  const bool kappa_strict =
      (b + c < a + d) && (a + b > 0) && (a + c > 0);

  report.entries = {
      compare("tp", m.tp, a > 0),
      compare("tn", m.tn, c > 0),
      compare("ba", m.ba, a > 0 || c > 0),
      compare("pre", m.pre, a > 0),
      compare("rec", m.rec, a > 0),
      compare("f1", m.f1, pre_below_one),
      compare("kappa", m.kappa, kappa_strict),
  };
  return report;
}

}  // namespace pamet
