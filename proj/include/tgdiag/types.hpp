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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace tgdiag {

using NodeId = std::uint32_t;
using Timestamp = std::int64_t;

enum class TimeKind { continuous, discrete };

// Candidate universe for pair-level enumeration: all ordered non-loop pairs,
// or unordered pairs represented as (min, max).
enum class PairUniverse { directed, undirected };

struct NodePair {
  NodeId u{};
  NodeId v{};

  NodePair reversed() const noexcept { return {v, u}; }
  NodePair canonical() const noexcept { return u < v ? *this : reversed(); }

  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

constexpr std::uint64_t pair_key(NodePair p) noexcept {
  return (static_cast<std::uint64_t>(p.u) << 32) | p.v;
}

constexpr NodePair pair_from_key(std::uint64_t key) noexcept {
  return {static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffu)};
}

struct TemporalEdge {
  NodeId u{};
  NodeId v{};
  Timestamp t{};

  NodePair pair() const noexcept { return {u, v}; }
  TemporalEdge reversed() const noexcept { return {v, u, t}; }

  friend auto operator<=>(const TemporalEdge&, const TemporalEdge&) = default;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

struct NodePairHash {
  std::size_t operator()(NodePair p) const noexcept { return mix64(pair_key(p)); }
};

struct TemporalEdgeHash {
  std::size_t operator()(const TemporalEdge& e) const noexcept {
    return mix64(pair_key(e.pair()) ^ mix64(static_cast<std::uint64_t>(e.t)));
  }
};

inline NodePair canonical_for(NodePair p, PairUniverse universe) noexcept {
  return universe == PairUniverse::undirected ? p.canonical() : p;
}

std::uint64_t universe_size(std::size_t node_count, PairUniverse universe) noexcept;

// Bijection between [0, universe_size) and the pairs of the universe, in
// lexicographic (u, v) order.
NodePair pair_at(std::size_t node_count, PairUniverse universe, std::uint64_t index);
std::uint64_t index_of(std::size_t node_count, PairUniverse universe, NodePair pair);

template <typename F>
void for_each_pair(std::size_t node_count, PairUniverse universe, F&& f) {
  for (NodeId u = 0; u < node_count; ++u) {
    const NodeId first = universe == PairUniverse::undirected ? u + 1 : 0;
    for (NodeId v = first; v < node_count; ++v) {
      if (u != v) f(NodePair{u, v});
    }
  }
}

}  // namespace tgdiag
