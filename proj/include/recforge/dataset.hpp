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
#include <map>
#include <string>
#include <vector>

#include "recforge/background.hpp"
#include "recforge/dictionary.hpp"
#include "recforge/font.hpp"
#include "recforge/manifest.hpp"
#include "recforge/render.hpp"
#include "recforge/template.hpp"

namespace recforge {

/// Seed used whenever the caller does not pick one.
inline constexpr std::uint64_t kDefaultSeed = 20170101;

/// Read-only inputs shared by all page workers.
struct SynthesisResources {
  PalimpsestSet backgrounds;
  std::vector<Font> fonts;
  Dictionary dictionary{""};

  /// Loads the template's fonts and dictionary. An empty background set is
  /// replaced by a single blank page of the template's size.
  static SynthesisResources load(const PageTemplate& t, const ResourcePaths& paths,
                                 PalimpsestSet backgrounds = {});
};

/// Everything about one page follows from `page_seed`: background and font
/// choice, layout, text and scan noise. Checks the ground-truth invariants
/// before returning and throws GenerationError if one fails.
PageRealization synthesize_page(const PageTemplate& t, const SynthesisResources& res,
                                std::uint64_t page_seed);

/// "page_000042"
std::string page_name(std::size_t index);

struct DatasetOptions {
  int workers = 1;
  bool write_groundtruth = true;
};

struct DatasetSummary {
  std::vector<ManifestEntry> entries;
  std::filesystem::path manifest_path;
  std::map<int, std::size_t> count_histogram;
};

/// Writes pages/page_<i>.png, groundtruth/page_<i>.json and manifest.jsonl
/// under out_dir. Page i uses derive_seed(master_seed, i), so the output
/// is the same for any worker count. Failures name the page index.
DatasetSummary generate_dataset(const PageTemplate& t, std::size_t n_pages,
                                const SynthesisResources& res, std::uint64_t master_seed,
                                const std::filesystem::path& out_dir, const DatasetOptions& options = {});

/// Ground truth as JSON: header and records with their lines, cells and
/// text.
std::string groundtruth_json(const PageRealization& page, const std::string& page_id);

/// Number of records stored in a ground-truth file.
int groundtruth_record_count(const std::filesystem::path& path);

}  // namespace recforge
