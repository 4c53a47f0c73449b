// Copyright 2026 The tgdiag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tgdiag/baselines.hpp"
#include "tgdiag/generators.hpp"
#include "tgdiag/sampling.hpp"

namespace tgdiag {

enum class Property {
  granularity,
  direction,
  density,
  persistence,
  periodicity,
  recency,
  homophily,
  preferential_attachment,
};

std::string_view to_string(Property property);
Property property_from_string(std::string_view name);
/// In the row order of the summary table.
std::span<const Property> all_properties();

using Series = std::vector<std::pair<double, double>>;

struct MetricReport {
  Property property = Property::granularity;
  std::string model_id;
  std::map<std::string, double> statistics;
  std::map<std::string, Series> series;  // each sorted by key

  /// Throws MetricError naming the statistic when it is absent.
  double stat(const std::string& name) const;
};

/// {"property", "model", "statistics", "series": {name: [[key, value], ...]}}
std::string report_to_json(const MetricReport& report);
MetricReport report_from_json(std::string_view text);
/// `key,value` rows, both printed with six decimals.
std::string series_to_csv(const Series& series);

/// Sum by recursive halving, so rounding error grows with log(n) and the
/// result does not depend on how callers chunk the data.
double pairwise_sum(std::span<const double> values);
double mean(std::span<const double> values);

struct ScoredLabels {
  std::vector<double> scores;
  std::vector<std::uint8_t> labels;  // 1 positive, 0 negative
};

/// Scores for every example, positives first. Throws MetricError when a
/// prediction is missing.
ScoredLabels join_labels(const PredictionSet& predictions, const LabeledExampleSet& examples);

/// Probability that a random positive outscores a random negative, ties
/// counted one half. Sorts once; exact integer pair counts.
double roc_auc(std::span<const double> scores, std::span<const std::uint8_t> labels);
double roc_auc(const PredictionSet& predictions, const LabeledExampleSet& examples);

/// (TPR + TNR) / 2 where score >= threshold predicts positive.
double balanced_accuracy(std::span<const double> scores, std::span<const std::uint8_t> labels,
                         double threshold = 0.5);
double balanced_accuracy(const PredictionSet& predictions, const LabeledExampleSet& examples,
                         double threshold = 0.5);

/// Spearman rank correlation with average ranks for ties; 0 when either side
/// is constant.
double spearman(std::span<const double> x, std::span<const double> y);

/// Gap |s(u,v,t) - s(v,u,t)| for every positive whose reverse is not itself a
/// positive at t. Statistics: median_gap, fraction_below_0.02, and mean scores
/// of the positive, bidirectional, reverse and other-negative groups.
MetricReport direction_symmetry(const PredictionSet& predictions,
                                const LabeledExampleSet& examples);

/// Fraction of the universe at timestep t scored >= threshold. The
/// predictions must cover every pair of the universe at t.
double predicted_density(const PredictionSet& predictions, std::size_t node_count,
                         PairUniverse universe, Timestamp t, double threshold = 0.5);

/// Mean and standard deviation of scores by group label, plus the same means
/// split by parity of the query timestamp (`mean.<g>.odd`, `mean.<g>.even`).
using PairLabeler = std::function<std::optional<std::string>(NodePair)>;
MetricReport group_mean_scores(const PredictionSet& predictions, const PairLabeler& label,
                               Property property = Property::persistence);

/// Predictions over the full universe of a persistence dataset; positives are
/// the snapshot's pairs.
MetricReport persistence_report(const PredictionSet& predictions,
                                std::span<const NodePair> snapshot_pairs);

/// Group means per parity, phase separations, and balanced accuracy against
/// phase activity.
MetricReport periodicity_report(const PredictionSet& predictions, const PeriodicityGroups& groups);

/// Mean score per last-seen timestep, Spearman(timestep, mean) and spread.
MetricReport recency_profile(const PredictionSet& predictions,
                             const std::unordered_map<std::uint64_t, Timestamp>& last_seen);

/// Group-pair composition of the k highest scores (ties by u, then v).
MetricReport topk_composition(const PredictionSet& predictions,
                              std::span<const std::uint32_t> node_groups, std::size_t k);

/// topk_composition at each k, statistics prefixed `k<k>.`, including
/// `k<k>.inter` (all between-group fractions).
MetricReport homophily_report(const PredictionSet& predictions,
                              std::span<const std::uint32_t> node_groups,
                              std::span<const std::size_t> ks);

/// Nodes are binned by floor(log2(degree) / bin_width); degree 0 gets its own
/// bin keyed 0, others are keyed by the bin's lower degree bound. Every query
/// adds its score to both endpoints' bins. `spearman` is computed over bins
/// holding at least min_bin_edges contributions.
MetricReport degree_binned_scores(const PredictionSet& predictions,
                                  std::span<const std::uint64_t> degrees, double bin_width = 1.0,
                                  std::size_t min_bin_edges = 30);

MetricReport density_report(std::string model_id,
                            std::span<const std::pair<double, double>> density_by_ratio,
                            double true_density);

MetricReport granularity_report(std::string model_id, double auc_continuous, double auc_discrete,
                                double auc_flattened);

}  // namespace tgdiag
