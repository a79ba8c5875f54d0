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
#include <filesystem>
#include <string>
#include <vector>

#include "recforge/image.hpp"
#include "recforge/manifest.hpp"
#include "recforge/rng.hpp"

namespace recforge {

struct AugmentationPlan {
  int variants_per_page = 8;
  /// Angles are uniform in [-rotation_range, +rotation_range] degrees.
  double rotation_range = 2.0;
  double salt_pepper_probability = 0.005;
  bool include_originals = true;
};

/// Throws ParameterError when the plan is out of range.
void validate_plan(const AugmentationPlan& plan);

/// One variant: rotate, then salt and pepper.
RasterPage augment_image(const RasterPage& img, const AugmentationPlan& plan, Rng& rng);

struct AugmentSummary {
  std::vector<ManifestEntry> entries;
  std::filesystem::path manifest_path;
  /// "page_id: reason" for every source that could not be processed.
  std::vector<std::string> failures;
};

/// Writes originals (copied byte for byte, when included) and
/// plan.variants_per_page variants of every readable page into
/// out_dir/pages, plus out_dir/manifest.jsonl. Variant k of source i is
/// pages/<stem>_aug<k>.png, seeded by derive_seed(derive_seed(seed, i), k),
/// and keeps the source's record_count. Unreadable sources are skipped and
/// listed in failures.
AugmentSummary augment_set(const Manifest& manifest, const AugmentationPlan& plan,
                           std::uint64_t seed, const std::filesystem::path& out_dir, int workers = 1);

}  // namespace recforge
