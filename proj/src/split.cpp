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

#include <array>
#include <charconv>
#include <map>

#include "recforge/error.hpp"
#include "recforge/rng.hpp"

namespace recforge {

namespace {

// Entry indices ordered by class, shuffled inside each class.
std::vector<std::size_t> class_order(const std::vector<ManifestEntry>& entries, std::uint64_t seed) {
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < entries.size(); ++i) classes[entries[i].record_count].push_back(i);
  Rng rng(seed);
  std::vector<std::size_t> order;
  order.reserve(entries.size());
  for (auto& [label, members] : classes) {
    recforge::shuffle(members.begin(), members.end(), rng);
    order.insert(order.end(), members.begin(), members.end());
  }
  return order;
}

}  // namespace

FoldAssignment stratified_kfold(const std::vector<ManifestEntry>& entries, int k, std::uint64_t seed) {
  if (k < 2) throw SplitError("k must be at least 2");
  if (static_cast<std::size_t>(k) > entries.size())
    throw SplitError("k = " + std::to_string(k) + " exceeds the " + std::to_string(entries.size()) +
                     " pages");
  FoldAssignment fold(entries.size(), -1);
  const auto order = class_order(entries, seed);
  for (std::size_t j = 0; j < order.size(); ++j) fold[order[j]] = static_cast<int>(j % k);
  return fold;
}

std::vector<std::string> benchmark_split(const std::vector<ManifestEntry>& entries, std::uint64_t seed,
                                         std::optional<PartitionSizes> sizes) {
  const PartitionSizes s = sizes.value_or(PartitionSizes{});
  if (s.total() != entries.size())
    throw SplitError("partition sizes sum to " + std::to_string(s.total()) + " but the manifest has " +
                     std::to_string(entries.size()) + " pages");
  const std::array<std::size_t, 3> want{s.train, s.validation, s.test};
  const std::array<const char*, 3> tags{kTrain, kValidation, kTest};
  std::array<std::size_t, 3> have{};
  const std::size_t n = entries.size();

  std::vector<std::string> out(n);
  const auto order = class_order(entries, seed);
  for (std::size_t j = 0; j < n; ++j) {
    // deficit_p = want_p * (j + 1) / n - have_p, compared exactly over n.
    int best = -1;
    long double best_deficit = 0;
    for (int p = 0; p < 3; ++p) {
      if (have[p] == want[p]) continue;
      const long double deficit = static_cast<long double>(want[p]) * static_cast<long double>(j + 1) -
                                  static_cast<long double>(have[p]) * static_cast<long double>(n);
      if (best < 0 || deficit > best_deficit) {
        best = p;
        best_deficit = deficit;
      }
    }
    ++have[best];
    out[order[j]] = tags[best];
  }
  return out;
}

PartitionSizes parse_partition_sizes(const std::string& text) {
  std::array<std::size_t, 3> v{};
  const char* p = text.data();
  const char* end = p + text.size();
  for (int i = 0; i < 3; ++i) {
    auto [next, ec] = std::from_chars(p, end, v[i]);
    if (ec != std::errc{} || next == p) throw SplitError("bad partition sizes '" + text + "'");
    p = next;
    if (i < 2) {
      if (p == end || *p != ',') throw SplitError("bad partition sizes '" + text + "'");
      ++p;
    }
  }
  if (p != end) throw SplitError("bad partition sizes '" + text + "'");
  return {v[0], v[1], v[2]};
}

}  // namespace recforge
