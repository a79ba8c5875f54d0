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
#include <optional>
#include <string>
#include <vector>

#include "recforge/manifest.hpp"

namespace recforge {

/// Fold index in [0, k) per manifest entry.
using FoldAssignment = std::vector<int>;

/// Pages are grouped by record_count (ascending), each group is shuffled,
/// and the concatenation is dealt round-robin to the folds without
/// restarting at group boundaries. Fold sizes differ by at most one, and so
/// do the per-class counts. Throws SplitError if k < 2 or k > pages.
FoldAssignment stratified_kfold(const std::vector<ManifestEntry>& entries, int k, std::uint64_t seed);

inline constexpr const char* kTrain = "train";
inline constexpr const char* kValidation = "validation";
inline constexpr const char* kTest = "test";

struct PartitionSizes {
  std::size_t train = 150;
  std::size_t validation = 10;
  std::size_t test = 40;

  std::size_t total() const noexcept { return train + validation + test; }
};

/// Partition tag per manifest entry. Without `sizes` the manifest must hold
/// exactly 150 + 10 + 40 pages; with them, their sum must match. Pages are
/// ordered by class (shuffled inside each class) and each goes to the
/// partition furthest below its proportional share, which keeps every class
/// spread across partitions in proportion. Throws SplitError.
std::vector<std::string> benchmark_split(const std::vector<ManifestEntry>& entries, std::uint64_t seed,
                                         std::optional<PartitionSizes> sizes = std::nullopt);

/// Parses "150,10,40". Throws SplitError.
PartitionSizes parse_partition_sizes(const std::string& text);

}  // namespace recforge
