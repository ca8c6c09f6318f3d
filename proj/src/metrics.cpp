#include "mwsp/metrics.hpp"

#include <cmath>
#include <unordered_map>

#include "mwsp/errors.hpp"

namespace mwsp {

LabeledPartition partition_from_clusters(
    ObservationId n_observations,
    const std::vector<std::vector<ObservationId>>& clusters) {
  LabeledPartition partition;
  partition.labels.assign(static_cast<std::size_t>(n_observations), -1);
  int label = 0;
  for (const auto& cluster : clusters) {
    for (ObservationId d : cluster) {
      partition.labels[static_cast<std::size_t>(d)] = label;
    }
    ++label;
  }
  return partition;
}

namespace {

// Contingency table between two labelings plus the marginals.
struct Contingency {
  std::vector<double> cells;  // n_ij counts
  std::vector<double> row_sums;
  std::vector<double> col_sums;
  double total = 0.0;
};

Contingency cross_tabulate(const LabeledPartition& pred,
                           const LabeledPartition& truth) {
  if (pred.labels.size() != truth.labels.size()) {
    throw UniverseMismatchError("partitions cover different universes");
  }
  std::unordered_map<int, int> pred_ids, truth_ids;
  std::vector<std::pair<int, int>> dense(pred.labels.size());
  for (std::size_t i = 0; i < pred.labels.size(); ++i) {
    auto [pit, p_new] = pred_ids.emplace(
        pred.labels[i], static_cast<int>(pred_ids.size()));
    (void)p_new;
    auto [tit, t_new] = truth_ids.emplace(
        truth.labels[i], static_cast<int>(truth_ids.size()));
    (void)t_new;
    dense[i] = {pit->second, tit->second};
  }
  Contingency table;
  auto rows = pred_ids.size();
  auto cols = truth_ids.size();
  table.cells.assign(rows * cols, 0.0);
  table.row_sums.assign(rows, 0.0);
  table.col_sums.assign(cols, 0.0);
  for (const auto& [p, t] : dense) {
    table.cells[static_cast<std::size_t>(p) * cols + static_cast<std::size_t>(t)] += 1.0;
    table.row_sums[static_cast<std::size_t>(p)] += 1.0;
    table.col_sums[static_cast<std::size_t>(t)] += 1.0;
    table.total += 1.0;
  }
  return table;
}

double choose2(double x) { return x * (x - 1.0) / 2.0; }

struct PairCounts {
  double pred_pairs = 0.0;   // co-clustered in pred
  double truth_pairs = 0.0;  // co-clustered in truth
  double both = 0.0;         // co-clustered in both
};

PairCounts pair_counts(const Contingency& table) {
  PairCounts counts;
  for (double cell : table.cells) counts.both += choose2(cell);
  for (double row : table.row_sums) counts.pred_pairs += choose2(row);
  for (double col : table.col_sums) counts.truth_pairs += choose2(col);
  return counts;
}

}  // namespace

PairwiseScores pairwise_prf(const LabeledPartition& pred,
                            const LabeledPartition& truth) {
  PairCounts counts = pair_counts(cross_tabulate(pred, truth));
  PairwiseScores scores;
  if (counts.pred_pairs == 0.0 && counts.truth_pairs == 0.0) {
    return {1.0, 1.0, 1.0};
  }
  scores.precision =
      counts.pred_pairs > 0.0 ? counts.both / counts.pred_pairs : 0.0;
  scores.recall =
      counts.truth_pairs > 0.0 ? counts.both / counts.truth_pairs : 0.0;
  double sum = scores.precision + scores.recall;
  scores.f1 = sum > 0.0 ? 2.0 * scores.precision * scores.recall / sum : 0.0;
  return scores;
}

VMeasureScores v_measure(const LabeledPartition& pred,
                         const LabeledPartition& truth) {
  Contingency table = cross_tabulate(pred, truth);
  double n = table.total;
  if (n == 0.0) return {1.0, 1.0, 1.0};
  auto cols = table.col_sums.size();
  double h_truth = 0.0, h_pred = 0.0;
  for (double col : table.col_sums) {
    if (col > 0.0) h_truth -= (col / n) * std::log(col / n);
  }
  for (double row : table.row_sums) {
    if (row > 0.0) h_pred -= (row / n) * std::log(row / n);
  }
  double h_truth_given_pred = 0.0, h_pred_given_truth = 0.0;
  for (std::size_t r = 0; r < table.row_sums.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      double cell = table.cells[r * cols + c];
      if (cell == 0.0) continue;
      h_truth_given_pred -= (cell / n) * std::log(cell / table.row_sums[r]);
      h_pred_given_truth -= (cell / n) * std::log(cell / table.col_sums[c]);
    }
  }
  VMeasureScores scores;
  scores.homogeneity = h_truth == 0.0 ? 1.0 : 1.0 - h_truth_given_pred / h_truth;
  scores.completeness = h_pred == 0.0 ? 1.0 : 1.0 - h_pred_given_truth / h_pred;
  double sum = scores.homogeneity + scores.completeness;
  scores.v = sum > 0.0
                 ? 2.0 * scores.homogeneity * scores.completeness / sum
                 : 0.0;
  return scores;
}

double adjusted_rand(const LabeledPartition& pred,
                     const LabeledPartition& truth) {
  Contingency table = cross_tabulate(pred, truth);
  if (table.total < 2.0) return 1.0;
  PairCounts counts = pair_counts(table);
  double all_pairs = choose2(table.total);
  double expected = counts.pred_pairs * counts.truth_pairs / all_pairs;
  double maximum = 0.5 * (counts.pred_pairs + counts.truth_pairs);
  double denom = maximum - expected;
  if (std::fabs(denom) < 1e-12) return 1.0;  // both partitions degenerate
  return (counts.both - expected) / denom;
}

double fowlkes_mallows(const LabeledPartition& pred,
                       const LabeledPartition& truth) {
  PairwiseScores scores = pairwise_prf(pred, truth);
  return std::sqrt(scores.precision * scores.recall);
}

}  // namespace mwsp
