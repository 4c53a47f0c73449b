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

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tgdiag/graphdata.hpp"
#include "tgdiag/rng.hpp"

namespace tgdiag {

struct SbmParams {
  std::size_t nodes_per_group = 500;
  std::size_t groups = 2;
  double p_intra = 0.005;
  double p_inter = 0.001;
  std::int64_t horizon = 100;
  std::uint64_t seed = 0;
};

struct BaParams {
  std::size_t nodes = 1000;
  std::size_t edges_per_step = 2000;
  std::int64_t train_steps = 100;
  std::int64_t val_steps = 21;
  std::uint64_t seed = 0;

  /// Attachment count of the initial Barabasi-Albert graph:
  /// round(edges_per_step / nodes), at least 1.
  std::size_t attachment() const;
};

struct RecencyParams {
  std::size_t nodes = 0;
  std::size_t edges_per_step = 0;
  std::int64_t steps = 10;
  std::uint64_t seed = 0;
};

/// Independent SBM draw at each t in 1..horizon. Node i belongs to group
/// i / nodes_per_group; edges are emitted as (min, max, t) in pair order.
/// Timestep t draws from derive_seed(seed, t).
EdgeStream gen_sbm_dynamic(const SbmParams& params, unsigned threads = 1);

/// Node selection proportional to accumulated degree. Each edge contributes
/// one unit of weight to each endpoint.
class DegreeProportionalSampler {
 public:
  explicit DegreeProportionalSampler(std::size_t node_count) : degrees_(node_count, 0) {}

  void add_edge(NodePair pair);
  NodeId draw(Rng& rng) const;

  std::uint64_t degree(NodeId node) const { return degrees_[node]; }
  std::uint64_t total_weight() const { return endpoints_.size(); }
  std::span<const std::uint64_t> degrees() const { return degrees_; }

 private:
  std::vector<NodeId> endpoints_;
  std::vector<std::uint64_t> degrees_;
};

/// t=1 is a static BA graph (star seed of attachment()+1 nodes, then each new
/// node attaches to attachment() distinct degree-weighted targets). Each later
/// timestep holds exactly edges_per_step distinct unordered pairs whose
/// endpoints are drawn independently in proportion to the degree accumulated
/// over all earlier timesteps; loops and repeats are redrawn. Produces
/// train_steps + val_steps timesteps.
EdgeStream gen_ba_dynamic(const BaParams& params);

/// Static BA graph edges (the t=1 layer of gen_ba_dynamic).
std::vector<NodePair> barabasi_albert_edges(std::size_t nodes, std::size_t attachment, Rng& rng);

/// `steps` timesteps of edges_per_step unordered pairs each, drawn uniformly
/// without replacement from C(nodes, 2) so no pair appears twice anywhere.
EdgeStream gen_recency(const RecencyParams& params);

/// A stream whose node ids were compacted; original_ids[new_id] is the id in
/// the source dataset.
struct ReindexedStream {
  EdgeStream stream;
  std::vector<NodeId> original_ids;
};

/// Repeats the snapshot at every t in 1..horizon over the snapshot's own
/// nodes, densely re-indexed in increasing original id order.
ReindexedStream gen_persistence(const Snapshot& snapshot, std::int64_t horizon);

enum class PhaseGroup { both, odd_only, even_only, never };

std::string_view to_string(PhaseGroup group);
PhaseGroup phase_group_from_string(std::string_view name);

/// Labels every pair of a candidate universe by the phases in which it is
/// active. Pairs not stored explicitly are `never`.
class PeriodicityGroups {
 public:
  PeriodicityGroups(std::size_t node_count, PairUniverse universe)
      : node_count_(node_count), universe_(universe) {}

  void assign(NodePair pair, PhaseGroup group);
  PhaseGroup label(NodePair pair) const;

  std::size_t node_count() const { return node_count_; }
  PairUniverse universe() const { return universe_; }
  std::uint64_t count(PhaseGroup group) const;

  /// CSV `u,v,group` over the whole universe in pair order.
  std::string to_csv() const;
  static PeriodicityGroups from_csv(std::string_view text, std::size_t node_count);

 private:
  std::size_t node_count_;
  PairUniverse universe_;
  std::unordered_map<std::uint64_t, PhaseGroup> labels_;
};

struct PeriodicityDataset {
  EdgeStream stream;
  std::vector<NodeId> original_ids;
  PeriodicityGroups groups;
};

/// snap_a at even t, snap_b at odd t, over the union of their nodes. With an
/// undirected universe the snapshot pairs are canonicalised to (min, max).
PeriodicityDataset gen_periodicity(const Snapshot& snap_a, const Snapshot& snap_b,
                                   std::int64_t horizon,
                                   PairUniverse universe = PairUniverse::directed);

}  // namespace tgdiag
