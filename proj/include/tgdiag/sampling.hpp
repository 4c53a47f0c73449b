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
#include <span>
#include <string_view>
#include <vector>

#include "tgdiag/graphdata.hpp"
#include "tgdiag/types.hpp"

namespace tgdiag {

enum class Exclusion {
  per_timestep,  // exclude pairs positive at the negative's own timestep
  any_timestep,  // exclude pairs positive anywhere in the stream
};

enum class Orientation {
  as_stored,         // ordered non-loop pairs
  single_direction,  // unordered pairs, emitted as (min, max)
};

struct NegativePolicy {
  double ratio = 1.0;
  Exclusion exclusion = Exclusion::per_timestep;
  Orientation orientation = Orientation::as_stored;
  std::uint64_t seed = 0;
};

struct LabeledExampleSet {
  std::vector<TemporalEdge> positives;
  std::vector<TemporalEdge> negatives;

  friend bool operator==(const LabeledExampleSet&, const LabeledExampleSet&) = default;
};

std::string_view to_string(Exclusion exclusion);
Exclusion exclusion_from_string(std::string_view name);
std::string_view to_string(Orientation orientation);
Orientation orientation_from_string(std::string_view name);

inline PairUniverse universe_of(Orientation orientation) {
  return orientation == Orientation::single_direction ? PairUniverse::undirected
                                                      : PairUniverse::directed;
}

/// Number of negatives owed to the i-th positive (0-based) of a timestep:
/// ceil((i+1) * ratio) - ceil(i * ratio). Integer ratios give exactly `ratio`
/// per positive; fractional ratios spread the ceil(n * ratio) total evenly.
std::size_t negatives_for_positive(std::size_t index, double ratio);

/// Draws negatives for the given positives. Each positive forms one batch:
/// its negatives share its timestamp, are distinct within the batch, and are
/// drawn uniformly from the eligible pool (universe minus exclusions). Batches
/// are independent. Timestep t uses the sub-seed derive_seed(policy.seed, t),
/// so output is independent of `threads`. Negatives within a batch are sorted.
///
/// Throws SamplingError when a batch needs more negatives than its pool holds.
LabeledExampleSet sample_for_positives(const EdgeStream& stream,
                                       std::span<const TemporalEdge> positives,
                                       const NegativePolicy& policy, unsigned threads = 1);

/// Positives are the stream's edges inside `part` of the split.
LabeledExampleSet sample_negatives(const EdgeStream& stream, const SplitSpec& split,
                                   SplitPart part, const NegativePolicy& policy,
                                   unsigned threads = 1);

/// Positives are every edge of the stream.
LabeledExampleSet sample_negatives(const EdgeStream& stream, const NegativePolicy& policy,
                                   unsigned threads = 1);

/// [1, 2, 4, ..., 2^doublings]
std::vector<double> ratio_schedule(unsigned doublings);

/// Keeps the positives and redraws negatives under the seed
/// derive_seed(policy.seed, epoch).
LabeledExampleSet redraw_negatives_per_epoch(const EdgeStream& stream,
                                             const LabeledExampleSet& set, std::uint64_t epoch,
                                             const NegativePolicy& policy, unsigned threads = 1);

}  // namespace tgdiag
