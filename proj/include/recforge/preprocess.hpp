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

#include <filesystem>
#include <string>
#include <vector>

#include "recforge/image.hpp"
#include "recforge/manifest.hpp"
#include "recforge/threshold.hpp"

namespace recforge {

/// Rescale to the model input size, then Sauvola. Ink is 0, paper 255.
RasterPage preprocess_page(const RasterPage& img, const SauvolaParams& params = {});

/// Maps a page-coordinate box into the rescaled frame.
Box map_box(const Box& b, int src_w, int src_h);

struct PreprocessSummary {
  std::vector<ManifestEntry> entries;
  std::filesystem::path manifest_path;
  std::vector<std::string> failures;
};

/// preprocess_page over a manifest into out_dir/pages/<stem>.png plus
/// out_dir/manifest.jsonl with boxes mapped into the new frame. Unreadable
/// pages are listed in failures and left out.
PreprocessSummary preprocess_set(const Manifest& manifest, const SauvolaParams& params,
                                 const std::filesystem::path& out_dir, int workers = 1);

}  // namespace recforge
