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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tgdiag/diagnostics.hpp"

namespace tgdiag {

enum class VerdictLevel { learned, limited, not_learned };

std::string_view to_string(VerdictLevel level);
VerdictLevel verdict_level_from_string(std::string_view name);

struct Verdict {
  Property property = Property::granularity;
  std::string model_id;
  VerdictLevel level = VerdictLevel::not_learned;
  std::string rationale;
};

/// Decision thresholds for every property. Defaults match
/// config/verdict_thresholds.json (version 1).
struct VerdictThresholds {
  int version = 1;

  struct {
    double learned_median_gap = 0.1;
    double learned_reverse_margin = 0.2;
    double limited_median_gap = 0.05;
  } direction;

  struct {
    double learned_factor = 2.0;
    double limited_factor = 10.0;
  } density;

  struct {
    double learned_accuracy = 0.95;
    double learned_mean_gap = 0.5;
    double limited_accuracy = 0.8;
  } persistence;

  struct {
    double separation = 0.3;
    double learned_accuracy = 0.95;
    double limited_accuracy = 0.8;
  } periodicity;

  struct {
    double learned_spearman = 0.8;
    double learned_spread = 0.1;
    double limited_spearman = 0.5;
  } recency;

  struct {
    double max_inter = 0.05;
    double max_intra_imbalance = 0.2;
  } homophily;

  struct {
    double learned_spearman = 0.9;
    double limited_spearman = 0.6;
  } preferential_attachment;

  struct {
    double auc_margin = 0.1;
  } granularity;

  static VerdictThresholds from_json(std::string_view text);
  std::string to_json() const;
};

/// Pure function of the report's statistics. Throws MetricError when a
/// required statistic is absent.
Verdict assign_verdict(const MetricReport& report, const VerdictThresholds& thresholds = {});

/// CSV `property,model,level`.
std::string write_verdicts(std::span<const Verdict> verdicts);
std::vector<Verdict> parse_verdicts(std::string_view text);

/// One row per property (all eight, in table order), one column per model in
/// first-seen order; cells hold the level or are empty.
std::string verdict_matrix(std::span<const Verdict> verdicts);

}  // namespace tgdiag
