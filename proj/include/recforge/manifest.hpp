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

// JSON-lines files shared with the training side:
//
//   manifest.jsonl    one page per line
//     {"page_id", "path", "record_count", "seed", "background_id",
//      "font_id", "boxes": [[x0, y0, x1, y1], ...],
//      optional "source", "fold", "partition"}
//   predictions.jsonl one raw model output per line
//     {"page_id", "p"}
//
// "path" is relative to the directory holding the manifest.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "recforge/image.hpp"

namespace recforge {

struct ManifestEntry {
  std::string page_id;
  std::string path;
  int record_count = 0;
  std::uint64_t seed = 0;
  std::string background_id;
  std::string font_id;
  /// Record bounding boxes in page coordinates, before any rotation.
  std::vector<Box> boxes;
  /// Page this one was derived from (augmentation); empty otherwise.
  std::string source;
  std::optional<int> fold;
  std::string partition;

  bool operator==(const ManifestEntry&) const = default;
};

struct Manifest {
  std::filesystem::path dir;
  std::vector<ManifestEntry> entries;

  std::filesystem::path resolve(const ManifestEntry& e) const { return dir / e.path; }
  std::size_t size() const noexcept { return entries.size(); }
};

std::string to_json_line(const ManifestEntry& e);
/// Throws IoError naming the offending field.
ManifestEntry parse_manifest_line(const std::string& line);

/// Throws IoError with the 1-based line number of a bad record.
Manifest read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const std::vector<ManifestEntry>& entries);

struct Prediction {
  std::string page_id;
  double p = 0.0;

  bool operator==(const Prediction&) const = default;
};

/// Throws IoError on malformed lines or non-finite p.
std::vector<Prediction> read_predictions(const std::filesystem::path& path);
void write_predictions(const std::filesystem::path& path, const std::vector<Prediction>& preds);

}  // namespace recforge
