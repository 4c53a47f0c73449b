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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgdiag/diagnostics.hpp"
#include "tgdiag/error.hpp"
#include "tgdiag/generators.hpp"
#include "tgdiag/sampling.hpp"
#include "tgdiag/verdict.hpp"

namespace tgdiag {

inline constexpr int kManifestSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "1.0.0";

// Raised by run_manifest; `stage` names the step that failed.
class StageError : public Error {
 public:
  StageError(std::string stage, int exit_code, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)), exit_code_(exit_code) {}
  const std::string& stage() const noexcept { return stage_; }
  int exit_code() const noexcept { return exit_code_; }

 private:
  std::string stage_;
  int exit_code_;
};

enum class DatasetKind { path, sbm, ba, recency, persistence, periodicity };

struct DatasetSpec {
  DatasetKind kind = DatasetKind::path;
  std::filesystem::path path;  // dataset dir, or the source snapshot dir for persistence/periodicity
  SbmParams sbm;
  BaParams ba;
  RecencyParams recency;
  Timestamp timestep = 1;      // snapshot index for persistence/periodicity
  std::int64_t horizon = 100;
  PairUniverse universe = PairUniverse::directed;
};

enum class TransformOp { discretize, flatten, augment_reverse };

struct TransformSpec {
  TransformOp op = TransformOp::discretize;
  std::int64_t bin_seconds = 0;
  std::optional<std::string> label;
};

enum class ModelSource { builtin, predictions, bridge };

struct ModelSpec {
  std::string id;
  ModelSource source = ModelSource::builtin;
  std::string builtin;                   // edgebank, recency, popularity, ...
  double value = 0.5;                    // constant
  double decay = 0.5;                    // recency, feature_scorer
  double learning_rate = 0.1;            // feature_scorer
  int iterations = 500;                  // feature_scorer
  std::string predictions;               // path template; "{arm}" expands per arm
  std::vector<std::string> command;      // bridge argv prefix
  std::string bridge_model;
};

struct EvaluationSpec {
  std::vector<std::size_t> ks{1000, 10000, 100000};
  double bin_width = 1.0;
  std::size_t min_bin_edges = 30;
  double threshold = 0.5;
  unsigned doublings = 4;               // density
  std::int64_t bin_seconds = 0;         // granularity
};

struct ExperimentManifest {
  int schema_version = kManifestSchemaVersion;
  Property property = Property::persistence;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir;
  DatasetSpec dataset;
  std::vector<TransformSpec> transforms;
  double train_frac = 0.7;
  double val_frac = 0.15;
  NegativePolicy sampling;
  std::vector<ModelSpec> models;
  std::vector<std::string> metrics;
  EvaluationSpec evaluation;
  std::optional<std::filesystem::path> thresholds;
  std::string canonical_json;  // normalized source, hashed into provenance
};

std::vector<std::string> required_metrics(Property property);

// Relative paths inside the manifest resolve against `base_dir`.
ExperimentManifest parse_manifest(std::string_view json_text,
                                  const std::filesystem::path& base_dir = {});
ExperimentManifest load_manifest(const std::filesystem::path& path);

struct RunOptions {
  unsigned threads = 1;
};

struct RunResult {
  std::vector<Verdict> verdicts;
  std::vector<MetricReport> reports;
  std::vector<std::filesystem::path> artifacts;  // relative to output_dir
};

RunResult run_manifest(const ExperimentManifest& manifest, const RunOptions& options = {});

std::string sha256_hex(std::string_view bytes);

// argv-style subprocess call; returns the exit status.
int run_subprocess(const std::vector<std::string>& argv);

std::vector<std::string> bridge_argv(const std::vector<std::string>& command,
                                     const std::string& model,
                                     const std::filesystem::path& data_dir,
                                     const std::filesystem::path& queries,
                                     const std::filesystem::path& out, std::uint64_t seed);

// Edge CSV for query and example files.
std::vector<TemporalEdge> parse_queries(std::string_view text);

}  // namespace tgdiag
