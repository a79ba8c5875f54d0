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

#include "recforge/split.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "recforge/error.hpp"
#include "recforge/rng.hpp"

namespace recforge {
namespace {

std::vector<ManifestEntry> pages_with(std::map<int, int> class_sizes) {
  std::vector<ManifestEntry> out;
  for (const auto& [label, n] : class_sizes)
    for (int i = 0; i < n; ++i) {
      ManifestEntry e;
      e.page_id = "c" + std::to_string(label) + "_" + std::to_string(i);
      e.record_count = label;
      out.push_back(e);
    }
  return out;
}

TEST(KFold, SkewedClassSizes) {
  const auto pages = pages_with({{5, 44}, {6, 152}, {7, 4}});
  const auto folds = stratified_kfold(pages, 5, 20170101);
  std::map<int, std::map<int, int>> per;  // fold -> class -> pages
  for (std::size_t i = 0; i < pages.size(); ++i) ++per[folds[i]][pages[i].record_count];
  ASSERT_EQ(per.size(), 5u);
  int without_sevens = 0;
  for (auto& [fold, classes] : per) {
    const int size = classes[5] + classes[6] + classes[7];
    EXPECT_GE(size, 39);
    EXPECT_LE(size, 41);
    EXPECT_GE(classes[6], 30);
    EXPECT_LE(classes[6], 31);
    without_sevens += classes[7] == 0;
  }
  EXPECT_EQ(without_sevens, 1);
}

TEST(KFold, SingleClassOfTen) {
  const auto folds = stratified_kfold(pages_with({{4, 10}}), 5, 1);
  std::map<int, int> sizes;
  for (int f : folds) ++sizes[f];
  for (int f = 0; f < 5; ++f) EXPECT_EQ(sizes[f], 2);
}

TEST(KFold, Errors) {
  EXPECT_THROW(stratified_kfold(pages_with({{4, 4}}), 5, 1), SplitError);
  EXPECT_THROW(stratified_kfold(pages_with({{4, 4}}), 1, 1), SplitError);
}

TEST(KFoldProperty, PartitionAndBalance) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<int, int> sizes;
    const int classes = static_cast<int>(rng.uniform_int(1, 7));
    for (int c = 0; c < classes; ++c) sizes[3 + c] = static_cast<int>(rng.uniform_int(0, 60));
    const auto pages = pages_with(sizes);
    const int k = static_cast<int>(rng.uniform_int(2, 10));
    if (pages.size() < static_cast<std::size_t>(k)) {
      EXPECT_THROW(stratified_kfold(pages, k, 1), SplitError);
      continue;
    }
    const auto folds = stratified_kfold(pages, k, static_cast<std::uint64_t>(trial));
    ASSERT_EQ(folds.size(), pages.size());
    std::map<int, std::vector<int>> per_class;  // class -> counts per fold
    std::vector<int> fold_size(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < pages.size(); ++i) {
      ASSERT_GE(folds[i], 0);
      ASSERT_LT(folds[i], k);
      auto& v = per_class[pages[i].record_count];
      v.resize(static_cast<std::size_t>(k), 0);
      ++v[static_cast<std::size_t>(folds[i])];
      ++fold_size[static_cast<std::size_t>(folds[i])];
    }
    for (auto& [label, counts] : per_class)
      EXPECT_LE(*std::max_element(counts.begin(), counts.end()) - *std::min_element(counts.begin(), counts.end()), 1);
    EXPECT_LE(*std::max_element(fold_size.begin(), fold_size.end()) -
                  *std::min_element(fold_size.begin(), fold_size.end()),
              1);
  }
}

TEST(KFold, SeedControlsAssignment) {
  const auto pages = pages_with({{5, 30}, {6, 30}});
  EXPECT_EQ(stratified_kfold(pages, 5, 9), stratified_kfold(pages, 5, 9));
  EXPECT_NE(stratified_kfold(pages, 5, 9), stratified_kfold(pages, 5, 10));
}

TEST(Benchmark, ExactSizesAndStratification) {
  const auto pages = pages_with({{5, 44}, {6, 152}, {7, 4}});
  const auto parts = benchmark_split(pages, 20170101);
  std::map<std::string, std::map<int, int>> per;
  for (std::size_t i = 0; i < pages.size(); ++i) ++per[parts[i]][pages[i].record_count];
  auto total = [&](const std::string& tag) {
    int n = 0;
    for (auto& [c, k] : per[tag]) n += k;
    return n;
  };
  EXPECT_EQ(total(kTrain), 150);
  EXPECT_EQ(total(kValidation), 10);
  EXPECT_EQ(total(kTest), 40);
  EXPECT_EQ(per.size(), 3u);
  // Each class follows the 150:10:40 proportions to within a page or two.
  EXPECT_NEAR(per[kTrain][6], 152 * 0.75, 2);
  EXPECT_NEAR(per[kTest][6], 152 * 0.2, 2);
  EXPECT_NEAR(per[kTest][5], 44 * 0.2, 2);
  EXPECT_EQ(benchmark_split(pages, 20170101), parts);
}

TEST(Benchmark, WrongTotalsAndOverrides) {
  EXPECT_THROW(benchmark_split(pages_with({{5, 199}}), 1), SplitError);
  const auto parts = benchmark_split(pages_with({{5, 100}, {6, 80}}), 1, PartitionSizes{120, 60, 0});
  EXPECT_EQ(std::count(parts.begin(), parts.end(), kTrain), 120);
  EXPECT_EQ(std::count(parts.begin(), parts.end(), kValidation), 60);
  EXPECT_THROW(benchmark_split(pages_with({{5, 10}}), 1, PartitionSizes{5, 5, 5}), SplitError);
}

TEST(Benchmark, ParseSizes) {
  const auto s = parse_partition_sizes("960,480,0");
  EXPECT_EQ(s.train, 960u);
  EXPECT_EQ(s.validation, 480u);
  EXPECT_EQ(s.test, 0u);
  for (const char* bad : {"", "1,2", "1,2,3,4", "a,b,c", "1, 2,3", "-1,2,3"})
    EXPECT_THROW(parse_partition_sizes(bad), SplitError) << bad;
}

}  // namespace
}  // namespace recforge
