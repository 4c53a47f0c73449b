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
#include <string_view>

#include "tgdiag/graphdata.hpp"
#include "tgdiag/sampling.hpp"

namespace tgdiag {

enum class GranularityVariant { continuous, discrete, flattened };

std::string_view to_string(GranularityVariant variant);
GranularityVariant granularity_variant_from_string(std::string_view name);

/// Bins a continuous stream into fixed-width steps numbered from 1:
/// t' = floor((t - t_min) / bin_seconds) + 1. Repeated (u, v) pairs inside a
/// bin collapse to their first occurrence.
EdgeStream discretize(const EdgeStream& stream, std::int64_t bin_seconds,
                      std::optional<std::string> granularity_label = std::nullopt);

/// Maps every training edge to t=1, validation to t=2 and test to t=3.
EdgeStream flatten_timestamps(const EdgeStream& stream, const SplitSpec& split);

/// Adds (v, u, t) for every positive and every negative. Exact duplicates are
/// dropped (first occurrence kept), and negatives that coincide with an
/// augmented positive are removed so the two sides stay disjoint.
LabeledExampleSet augment_reverse(const LabeledExampleSet& examples);

/// One granularity variant of a continuous stream, with the split expressed in
/// the variant's own time units. Membership in train/val/test always follows
/// the discretized stream's chronological split.
struct GranularityDataset {
  GranularityVariant variant;
  EdgeStream stream;
  SplitSpec split;
  /// Timestamp at which a query for discrete step `step` is posed in this
  /// variant: the bin start for continuous, the step itself for discrete, and
  /// 1/2/3 by split membership for flattened.
  Timestamp query_time(Timestamp step) const;

  Timestamp origin = 0;          // continuous only: t_min of the raw stream
  std::int64_t bin_seconds = 1;  // continuous only
  SplitSpec discrete_split;
};

GranularityDataset make_granularity_variant(const EdgeStream& continuous_stream,
                                            GranularityVariant variant,
                                            std::int64_t bin_seconds, double train_frac,
                                            double val_frac);

}  // namespace tgdiag
