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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "recforge/error.hpp"
#include "recforge/rng.hpp"

namespace recforge {
namespace {

std::vector<LabeledPrediction> items(std::vector<int> r, std::vector<double> p) {
  std::vector<LabeledPrediction> out;
  for (std::size_t i = 0; i < r.size(); ++i) out.push_back({"p" + std::to_string(i), r[i], p[i]});
  return out;
}

TEST(RoundPrediction, HalfRoundsUp) {
  EXPECT_EQ(round_prediction(6.49), 6);
  EXPECT_EQ(round_prediction(6.51), 7);
  EXPECT_EQ(round_prediction(6.5), 7);
  EXPECT_EQ(round_prediction(-0.5), 0);
  EXPECT_EQ(round_prediction(-0.51), -1);
  EXPECT_THROW(round_prediction(std::numeric_limits<double>::quiet_NaN()), EvaluationError);
}

TEST(Metrics, PerfectPredictor) {
  const auto m = compute_metrics(items({3, 5, 9}, {3, 5, 9}));
  EXPECT_EQ(m.accuracy, 1.0);
  EXPECT_EQ(m.error, 0.0);
  EXPECT_EQ(m.score, 0.0);
  EXPECT_EQ(m.n, 3u);
  EXPECT_EQ(m.sum_r, 17);
}

TEST(Metrics, WorkedExamples) {
  auto m = compute_metrics(items({5, 6, 6, 7}, {5.3, 5.6, 6.2, 7.4}));
  EXPECT_EQ(m.accuracy, 1.0);
  EXPECT_EQ(m.error, 0.0);
  EXPECT_NEAR(m.score, 0.5 / 24, 1e-15);
  EXPECT_EQ(m.sum_p_rounded, 24);
  EXPECT_EQ(m.score_rounded, 0.0);

  m = compute_metrics(items({5, 6}, {5.6, 6.1}));
  EXPECT_EQ(m.accuracy, 0.5);
  EXPECT_NEAR(m.error, 1.0 / 11, 1e-15);
  EXPECT_NEAR(m.score, 0.7 / 11, 1e-15);
}

TEST(Metrics, EmptyOrZeroLabelsAreErrors) {
  EXPECT_THROW(compute_metrics(items({}, {})), EvaluationError);
  EXPECT_THROW(compute_metrics(items({0, 0}, {0.1, 0.2})), EvaluationError);
}

std::vector<LabeledPrediction> random_instance(Rng& rng) {
  const auto n = static_cast<std::size_t>(rng.uniform_int(1, 60));
  std::vector<LabeledPrediction> out;
  for (std::size_t i = 0; i < n; ++i) {
    const int r = static_cast<int>(rng.uniform_int(1, 12));
    const double p = rng.bernoulli(0.3) ? r : r + rng.uniform(-1.5, 1.5);
    out.push_back({"p" + std::to_string(i), r, p});
  }
  return out;
}

TEST(MetricsProperty, AccuracyOneIffErrorZero) {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const auto m = compute_metrics(random_instance(rng));
    ASSERT_EQ(m.accuracy == 1.0, m.error == 0.0);
    ASSERT_GE(m.accuracy, 0.0);
    ASSERT_LE(m.accuracy, 1.0);
  }
}

TEST(MetricsProperty, ErrorAndScoreArePermutationInvariant) {
  Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    auto inst = random_instance(rng);
    const auto a = compute_metrics(inst);
    recforge::shuffle(inst.begin(), inst.end(), rng);
    const auto b = compute_metrics(inst);
    EXPECT_EQ(a.error, b.error);
    EXPECT_NEAR(a.score, b.score, 1e-12);
    EXPECT_EQ(a.accuracy, b.accuracy);
  }
}

TEST(MetricsProperty, ConstantOffsetScore) {
  Rng rng(7);
  for (double c : {0.0, 0.1, -0.1}) {
    for (int i = 0; i < 100; ++i) {
      auto inst = random_instance(rng);
      std::int64_t sum_r = 0;
      for (auto& it : inst) {
        it.p = it.r + c;
        sum_r += it.r;
      }
      const auto m = compute_metrics(inst);
      const double expected = std::fabs(static_cast<double>(inst.size()) * c) / static_cast<double>(sum_r);
      EXPECT_NEAR(m.score, expected, 1e-12);
      EXPECT_EQ(m.accuracy, 1.0);
    }
  }
}

std::vector<ManifestEntry> entries_with(std::vector<int> labels) {
  std::vector<ManifestEntry> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ManifestEntry e;
    e.page_id = "p" + std::to_string(i);
    e.record_count = labels[i];
    out.push_back(e);
  }
  return out;
}

TEST(Evaluate, JoinByPageId) {
  const auto entries = entries_with({5, 6});
  const std::vector<Prediction> preds{{"p1", 6.1}, {"p0", 5.6}, {"other", 1}};
  const auto joined = join_predictions(entries, preds);
  ASSERT_EQ(joined.size(), 2u);
  EXPECT_EQ(joined[0].p, 5.6);
  EXPECT_EQ(joined[1].r, 6);
  EXPECT_THROW(join_predictions(entries, {{"p0", 5}}), EvaluationError);
  EXPECT_THROW(join_predictions(entries, {{"p0", 5}, {"p1", 6}, {"p0", 5}}), EvaluationError);
}

TEST(Evaluate, FoldRowsAndAverage) {
  auto entries = entries_with({5, 6, 6, 7, 5, 6});
  std::vector<Prediction> preds;
  const double p[] = {5, 6, 7, 7, 5.2, 6};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].fold = static_cast<int>(i % 2);
    preds.push_back({entries[i].page_id, p[i]});
  }
  const auto report = evaluate(entries, preds);
  EXPECT_EQ(report.grouping, "fold");
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[0].label, "1");
  EXPECT_EQ(report.rows[0].metrics.n, 3u);
  // fold 0: pages 0, 2, 4 -> rounded 5, 7, 5 vs 5, 6, 5
  EXPECT_NEAR(report.rows[0].metrics.accuracy, 2.0 / 3, 1e-15);
  EXPECT_EQ(report.rows[1].metrics.accuracy, 1.0);
  ASSERT_TRUE(report.has_average);
  EXPECT_NEAR(report.average.accuracy, (2.0 / 3 + 1.0) / 2, 1e-15);
  EXPECT_EQ(report.overall.n, 6u);
  const std::string table = report_table(report);
  EXPECT_NE(table.find("Average"), std::string::npos);
  EXPECT_NE(report_json(report).find("\"sum_p_rounded\""), std::string::npos);
}

TEST(Evaluate, PartitionRowsInCanonicalOrder) {
  auto entries = entries_with({5, 6, 7});
  const char* tags[] = {"test", "train", "validation"};
  for (std::size_t i = 0; i < 3; ++i) entries[i].partition = tags[i];
  const auto report = evaluate(entries, {{"p0", 5}, {"p1", 6}, {"p2", 7}});
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0].label, "train");
  EXPECT_EQ(report.rows[1].label, "validation");
  EXPECT_EQ(report.rows[2].label, "test");
  EXPECT_FALSE(report.has_average);
  EXPECT_EQ(evaluate(entries, {{"p0", 5}, {"p1", 6}, {"p2", 7}}, Grouping::none).rows.size(), 0u);
  EXPECT_THROW(evaluate(entries, {{"p0", 5}, {"p1", 6}, {"p2", 7}}, Grouping::fold), EvaluationError);
}

}  // namespace
}  // namespace recforge
