// Copyright 2026 The recforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "recforge/manifest.hpp"

namespace recforge {

/// floor(p + 1/2). Throws EvaluationError for non-finite p.
std::int64_t round_prediction(double p);

struct LabeledPrediction {
  std::string page_id;
  int r = 0;
  double p = 0.0;
};

struct MetricsReport {
  /// Fraction of pages whose rounded prediction equals the label.
  double accuracy = 0.0;
  /// sum |round(p) - r| / sum r
  double error = 0.0;
  /// |sum r - sum p| / sum r, raw p.
  double score = 0.0;
  /// Same as score but with rounded p; reported alongside, never used.
  double score_rounded = 0.0;
  std::size_t n = 0;
  std::int64_t sum_r = 0;
  double sum_p = 0.0;
  std::int64_t sum_p_rounded = 0;
};

/// Throws EvaluationError on an empty input or when sum r = 0.
MetricsReport compute_metrics(std::span<const LabeledPrediction> items);

/// Pairs every manifest entry with its prediction by page_id. Throws
/// EvaluationError for a missing or duplicated prediction. Predictions
/// for pages outside the manifest are ignored.
std::vector<LabeledPrediction> join_predictions(const std::vector<ManifestEntry>& entries,
                                                const std::vector<Prediction>& preds);

enum class Grouping { automatic, fold, partition, none };

struct EvaluationRow {
  std::string label;
  MetricsReport metrics;
};

struct EvaluationReport {
  std::string grouping;  // "fold", "partition" or "none"
  std::vector<EvaluationRow> rows;
  /// Per-column mean of the fold rows; fold grouping only.
  bool has_average = false;
  MetricsReport average;
  MetricsReport overall;
};

/// automatic picks fold when every entry has one, then partition when
/// every entry has one, otherwise none.
EvaluationReport evaluate(const std::vector<ManifestEntry>& entries,
                          const std::vector<Prediction>& preds, Grouping grouping = Grouping::automatic);

std::string report_json(const EvaluationReport& report);
/// Plain-text table: one row per group, then Average (folds) and All.
std::string report_table(const EvaluationReport& report);

}  // namespace recforge
