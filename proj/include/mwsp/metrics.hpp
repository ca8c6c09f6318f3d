#pragma once

#include <vector>

#include "mwsp/core.hpp"

namespace mwsp {

// A labeling of the shared observation universe; label values are arbitrary,
// only the induced partition matters.
struct LabeledPartition {
  std::vector<int> labels;
};

LabeledPartition partition_from_clusters(
    ObservationId n_observations,
    const std::vector<std::vector<ObservationId>>& clusters);

struct PairwiseScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Over unordered co-clustered pairs. When one side has no pairs its score is
// 0 unless both are empty, which counts as perfect agreement.
PairwiseScores pairwise_prf(const LabeledPartition& pred,
                            const LabeledPartition& truth);

struct VMeasureScores {
  double homogeneity = 0.0;
  double completeness = 0.0;
  double v = 0.0;
};

VMeasureScores v_measure(const LabeledPartition& pred,
                         const LabeledPartition& truth);

double adjusted_rand(const LabeledPartition& pred,
                     const LabeledPartition& truth);

// Geometric mean of pairwise precision and recall.
double fowlkes_mallows(const LabeledPartition& pred,
                       const LabeledPartition& truth);

}  // namespace mwsp
