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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tgdiag/generators.hpp"
#include "tgdiag/graphdata.hpp"

namespace tgdiag {

struct ScoredEdge {
  NodeId u{};
  NodeId v{};
  Timestamp t{};
  double score{};

  TemporalEdge edge() const noexcept { return {u, v, t}; }

  friend bool operator==(const ScoredEdge&, const ScoredEdge&) = default;
};

struct PredictionSet {
  std::string model_id;
  std::vector<ScoredEdge> records;
};

/// Throws InputError unless every score is finite and in [0, 1] and no
/// (u, v, t) repeats.
void validate_predictions(const PredictionSet& predictions);

/// CSV `u,v,t,score`, six decimals, `\n` line endings.
std::string write_predictions(const PredictionSet& predictions);
/// Parses and validates a prediction file.
PredictionSet parse_predictions(std::string_view text, std::string model_id);

/// Throws InputError naming how many queries lack a score.
void check_coverage(const PredictionSet& predictions, std::span<const TemporalEdge> queries);

/// Hash lookup of scores by (u, v, t).
class ScoreIndex {
 public:
  explicit ScoreIndex(const PredictionSet& predictions);
  std::optional<double> find(const TemporalEdge& e) const;
  /// Throws MetricError if the edge has no score.
  double at(const TemporalEdge& e) const;

 private:
  std::unordered_map<TemporalEdge, double, TemporalEdgeHash> scores_;
};

/// Memorises the pairs seen in training; scores 1 for a seen pair, else 0.
class EdgeBank {
 public:
  /// Uses edges with t <= train_end. A directed bank distinguishes (u, v)
  /// from (v, u).
  static EdgeBank build(const EdgeStream& stream, Timestamp train_end,
                        PairUniverse mode = PairUniverse::directed);

  bool contains(NodePair pair) const;
  std::size_t seen_count() const { return seen_.size(); }
  PairUniverse mode() const { return mode_; }

  PredictionSet predict(std::span<const TemporalEdge> queries,
                        std::string model_id = "edgebank") const;

 private:
  PairUniverse mode_ = PairUniverse::directed;
  std::unordered_set<std::uint64_t> seen_;
};

struct RecencyOptions {
  double decay = 0.5;  // per unit of time
  PairUniverse mode = PairUniverse::directed;
};

/// exp(-decay * |t_query - last_seen|) with last_seen the latest training
/// occurrence of the pair; 0 for pairs never seen in training.
PredictionSet recency_score(const EdgeStream& stream, Timestamp train_end,
                            std::span<const TemporalEdge> queries, RecencyOptions options = {},
                            std::string model_id = "recency");

/// Training degree with multiplicity: every edge with t <= train_end adds one
/// to each endpoint.
std::vector<std::uint64_t> training_degrees(const EdgeStream& stream, Timestamp train_end);

/// deg(u) * deg(v) normalised by the largest product among the queries.
PredictionSet popularity_score(const EdgeStream& stream, Timestamp train_end,
                               std::span<const TemporalEdge> queries,
                               std::string model_id = "popularity");

// --- Calibration predictors ------------------------------------------------------
//
// Predictors with known behaviour, used to check that metrics and verdict
// rules separate success from failure.

PredictionSet constant_predictor(std::span<const TemporalEdge> queries, double value,
                                 std::string model_id = "constant");

/// Scores 1 for a pair active in the query's phase (both, or odd_only at odd
/// t, or even_only at even t) and 0 otherwise.
PredictionSet phase_oracle(const PeriodicityGroups& groups, std::span<const TemporalEdge> queries,
                           std::string model_id = "phase_oracle");

/// Intra-group pairs score in [0.6, 0.9), inter-group pairs in [0, 0.1), with
/// a seeded per-pair jitter so ranking among intra pairs is arbitrary.
PredictionSet intra_group_oracle(std::span<const std::uint32_t> node_groups,
                                 std::span<const TemporalEdge> queries, std::uint64_t seed,
                                 std::string model_id = "intra_group_oracle");

/// Symmetric in (u, v): scores 1 for a pair seen in either direction.
PredictionSet symmetric_edgebank(const EdgeStream& stream, Timestamp train_end,
                                 std::span<const TemporalEdge> queries,
                                 std::string model_id = "edgebank_undirected");

}  // namespace tgdiag
