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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tgdiag/types.hpp"

namespace tgdiag {

struct StreamMetadata {
  std::size_t node_count = 0;
  TimeKind time_kind = TimeKind::discrete;
  std::optional<std::string> granularity;

  friend bool operator==(const StreamMetadata&, const StreamMetadata&) = default;
};

/// Chronologically ordered multiset of timestamped directed edges over the
/// node universe [0, node_count). Immutable once constructed; the constructor
/// validates every edge and stably sorts by timestamp, so edges sharing a
/// timestamp keep their input order.
class EdgeStream {
 public:
  EdgeStream(std::size_t node_count, std::vector<TemporalEdge> edges, TimeKind time_kind,
             std::optional<std::string> granularity = std::nullopt,
             std::optional<std::vector<std::uint32_t>> node_groups = std::nullopt);

  std::size_t node_count() const noexcept { return node_count_; }
  std::span<const TemporalEdge> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  TimeKind time_kind() const noexcept { return time_kind_; }
  const std::optional<std::string>& granularity() const noexcept { return granularity_; }
  const std::optional<std::vector<std::uint32_t>>& node_groups() const noexcept {
    return node_groups_;
  }
  StreamMetadata metadata() const { return {node_count_, time_kind_, granularity_}; }

  /// Distinct timestamps in increasing order.
  std::vector<Timestamp> timesteps() const;

  /// Edges with lo <= t <= hi, in stream order.
  std::span<const TemporalEdge> window(Timestamp lo, Timestamp hi) const;

  friend bool operator==(const EdgeStream&, const EdgeStream&) = default;

 private:
  std::size_t node_count_;
  std::vector<TemporalEdge> edges_;
  TimeKind time_kind_;
  std::optional<std::string> granularity_;
  std::optional<std::vector<std::uint32_t>> node_groups_;
};

/// Distinct (u, v) pairs present at one timestamp, sorted.
struct Snapshot {
  Timestamp t = 0;
  std::vector<NodePair> edges;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

enum class SplitPart { train, val, test };

/// Inclusive upper boundaries of the training and validation timesteps.
struct SplitSpec {
  Timestamp train_end = 0;
  Timestamp val_end = 0;

  SplitPart part_of(Timestamp t) const noexcept {
    if (t <= train_end) return SplitPart::train;
    if (t <= val_end) return SplitPart::val;
    return SplitPart::test;
  }

  friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

std::string_view to_string(TimeKind kind);
TimeKind time_kind_from_string(std::string_view name);
std::string_view to_string(SplitPart part);
SplitPart split_part_from_string(std::string_view name);

// --- Edge CSV ---------------------------------------------------------------

/// Parses `u,v,t` records. Every row is checked for format, non-negative
/// fields, self-loops, and (when node_count is given) node range; failures
/// report the 1-based line number, the header being line 1.
std::vector<TemporalEdge> parse_edge_records(std::string_view text,
                                             std::optional<std::size_t> node_count);
std::string write_edge_records(std::span<const TemporalEdge> edges);

EdgeStream parse_edge_stream(std::string_view text, std::size_t node_count, TimeKind time_kind);
std::string write_edge_stream(const EdgeStream& stream);

// --- Sidecars ---------------------------------------------------------------

std::vector<std::uint32_t> parse_node_groups(std::string_view text, std::size_t node_count);
std::string write_node_groups(std::span<const std::uint32_t> groups);

StreamMetadata parse_metadata(std::string_view json_text);
std::string write_metadata(const StreamMetadata& meta);

// --- Dataset directories ------------------------------------------------------
//
// A dataset directory holds edges.csv, meta.json and, when the stream carries
// node groups, node_groups.csv.

inline constexpr std::string_view kEdgesFile = "edges.csv";
inline constexpr std::string_view kMetadataFile = "meta.json";
inline constexpr std::string_view kNodeGroupsFile = "node_groups.csv";

EdgeStream load_dataset(const std::filesystem::path& dir);
/// Returns the paths written.
std::vector<std::filesystem::path> save_dataset(const std::filesystem::path& dir,
                                                const EdgeStream& stream);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// --- Structural operations -----------------------------------------------------

Snapshot snapshot_at(const EdgeStream& stream, Timestamp t);

/// Splits the distinct timesteps of a discrete stream: the earliest
/// floor(train_frac * T) go to training, the remainder is divided between
/// validation and test in proportion val_frac : (1 - train_frac - val_frac),
/// rounding down for validation so an odd remainder favours test. Each part
/// keeps at least one timestep.
SplitSpec chronological_split(const EdgeStream& stream, double train_frac, double val_frac);

}  // namespace tgdiag
