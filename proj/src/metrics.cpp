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

#include "recforge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <unordered_map>

#include "json.hpp"
#include "recforge/error.hpp"

namespace recforge {

using Json = nlohmann::ordered_json;

std::int64_t round_prediction(double p) {
  if (!std::isfinite(p)) throw EvaluationError("prediction is not finite");
  return static_cast<std::int64_t>(std::floor(p + 0.5));
}

MetricsReport compute_metrics(std::span<const LabeledPrediction> items) {
  if (items.empty()) throw EvaluationError("no pages to evaluate");
  MetricsReport m;
  m.n = items.size();
  std::size_t hits = 0;
  std::int64_t abs_err = 0;
  for (const auto& it : items) {
    if (it.r < 0) throw EvaluationError("negative label for " + it.page_id);
    const std::int64_t q = round_prediction(it.p);
    hits += q == it.r;
    abs_err += std::llabs(q - it.r);
    m.sum_r += it.r;
    m.sum_p += it.p;
    m.sum_p_rounded += q;
  }
  if (m.sum_r == 0) throw EvaluationError("sum of labels is zero");
  const auto sr = static_cast<double>(m.sum_r);
  m.accuracy = static_cast<double>(hits) / static_cast<double>(m.n);
  m.error = static_cast<double>(abs_err) / sr;
  m.score = std::fabs(sr - m.sum_p) / sr;
  m.score_rounded = static_cast<double>(std::llabs(m.sum_r - m.sum_p_rounded)) / sr;
  return m;
}

std::vector<LabeledPrediction> join_predictions(const std::vector<ManifestEntry>& entries,
                                                const std::vector<Prediction>& preds) {
  std::unordered_map<std::string, double> by_id;
  by_id.reserve(preds.size());
  for (const auto& p : preds)
    if (!by_id.emplace(p.page_id, p.p).second)
      throw EvaluationError("duplicate prediction for " + p.page_id);
  std::vector<LabeledPrediction> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    auto it = by_id.find(e.page_id);
    if (it == by_id.end()) throw EvaluationError("no prediction for " + e.page_id);
    out.push_back({e.page_id, e.record_count, it->second});
  }
  return out;
}

namespace {

MetricsReport mean_of(const std::vector<EvaluationRow>& rows) {
  MetricsReport avg;
  for (const auto& row : rows) {
    avg.accuracy += row.metrics.accuracy;
    avg.error += row.metrics.error;
    avg.score += row.metrics.score;
    avg.score_rounded += row.metrics.score_rounded;
    avg.n += row.metrics.n;
    avg.sum_r += row.metrics.sum_r;
    avg.sum_p += row.metrics.sum_p;
    avg.sum_p_rounded += row.metrics.sum_p_rounded;
  }
  const auto k = static_cast<double>(rows.size());
  avg.accuracy /= k;
  avg.error /= k;
  avg.score /= k;
  avg.score_rounded /= k;
  return avg;
}

Json metrics_json(const MetricsReport& m) {
  return {{"accuracy", m.accuracy}, {"error", m.error},   {"score", m.score},
          {"score_rounded", m.score_rounded}, {"n", m.n}, {"sum_r", m.sum_r},
          {"sum_p", m.sum_p},       {"sum_p_rounded", m.sum_p_rounded}};
}

int partition_rank(const std::string& tag) {
  if (tag == "train") return 0;
  if (tag == "validation") return 1;
  if (tag == "test") return 2;
  return 3;
}

}  // namespace

EvaluationReport evaluate(const std::vector<ManifestEntry>& entries,
                          const std::vector<Prediction>& preds, Grouping grouping) {
  const auto joined = join_predictions(entries, preds);
  if (grouping == Grouping::automatic) {
    const bool folds = !entries.empty() &&
                       std::all_of(entries.begin(), entries.end(), [](auto& e) { return e.fold.has_value(); });
    const bool parts = !entries.empty() &&
                       std::all_of(entries.begin(), entries.end(), [](auto& e) { return !e.partition.empty(); });
    grouping = folds ? Grouping::fold : parts ? Grouping::partition : Grouping::none;
  }

  EvaluationReport report;
  report.overall = compute_metrics(joined);
  if (grouping == Grouping::fold) {
    report.grouping = "fold";
    std::map<int, std::vector<LabeledPrediction>> groups;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!entries[i].fold) throw EvaluationError("no fold for " + entries[i].page_id);
      groups[*entries[i].fold].push_back(joined[i]);
    }
    for (auto& [fold, items] : groups)
      report.rows.push_back({std::to_string(fold + 1), compute_metrics(items)});
    report.has_average = true;
    report.average = mean_of(report.rows);
  } else if (grouping == Grouping::partition) {
    report.grouping = "partition";
    std::map<std::pair<int, std::string>, std::vector<LabeledPrediction>> groups;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& tag = entries[i].partition;
      if (tag.empty()) throw EvaluationError("no partition for " + entries[i].page_id);
      groups[{partition_rank(tag), tag}].push_back(joined[i]);
    }
    for (auto& [key, items] : groups) report.rows.push_back({key.second, compute_metrics(items)});
  } else {
    report.grouping = "none";
  }
  return report;
}

std::string report_json(const EvaluationReport& report) {
  Json j;
  j["grouping"] = report.grouping;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r = metrics_json(row.metrics);
    r["label"] = row.label;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["average"] = report.has_average ? metrics_json(report.average) : Json(nullptr);
  j["overall"] = metrics_json(report.overall);
  return j.dump(2);
}

std::string report_table(const EvaluationReport& report) {
  std::string out;
  char line[160];
  const char* head = report.grouping == "fold" ? "Fold" : report.grouping == "partition" ? "Set" : "";
  std::snprintf(line, sizeof line, "%-12s %6s %9s %7s %7s\n", head, "Pages", "Accuracy", "Error", "Score");
  out += line;
  auto add = [&](const std::string& label, const MetricsReport& m, bool with_n) {
    if (with_n)
      std::snprintf(line, sizeof line, "%-12s %6zu %9.3f %7.3f %7.3f\n", label.c_str(), m.n, m.accuracy,
                    m.error, m.score);
    else
      std::snprintf(line, sizeof line, "%-12s %6s %9.3f %7.3f %7.3f\n", label.c_str(), "", m.accuracy,
                    m.error, m.score);
    out += line;
  };
  for (const auto& row : report.rows) add(row.label, row.metrics, true);
  if (report.has_average) add("Average", report.average, false);
  add("All", report.overall, true);
  return out;
}

}  // namespace recforge
