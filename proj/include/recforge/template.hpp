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

#include <optional>
#include <string>
#include <vector>

namespace recforge {

/// Closed pixel interval [lo, hi]; lo == hi means the value is fixed.
struct PixelRange {
  int lo = 0;
  int hi = 0;

  bool fixed() const noexcept { return lo == hi; }
  bool operator==(const PixelRange&) const = default;
};

struct CellTemplate {
  PixelRange x_start;
  PixelRange width;
  double presence_probability = 1.0;

  bool operator==(const CellTemplate&) const = default;
};

struct LineTemplate {
  PixelRange height;
  std::vector<CellTemplate> cells;

  bool operator==(const LineTemplate&) const = default;
};

/// A line position inside a record. Lines keep their document order; a slot
/// without an inclusion probability is mandatory.
struct LineSlot {
  LineTemplate line;
  std::optional<double> inclusion_probability;

  bool mandatory() const noexcept { return !inclusion_probability.has_value(); }
  bool operator==(const LineSlot&) const = default;
};

struct RecordTemplate {
  std::vector<LineSlot> lines;
  /// Blank space inserted above every record but the first on a page.
  PixelRange vertical_gap;

  std::size_t mandatory_count() const noexcept;
  /// Sum of mandatory line minimum heights.
  int min_height() const noexcept;
  /// Sum of every line's maximum height.
  int max_height() const noexcept;

  bool operator==(const RecordTemplate&) const = default;
};

enum class LineColor { black, white };

struct NoiseSpec {
  double salt_pepper_probability = 0.0;
  double line_artifact_rate = 0.0;
  LineColor line_artifact_color = LineColor::black;
  /// Pages are rotated by an angle drawn uniformly from [-a, +a] degrees.
  double rotation_range = 0.0;

  bool operator==(const NoiseSpec&) const = default;
};

/// Where dictionary words come from: a file (resolved against the config
/// directory, then the asset directory) or text inlined in the config.
struct DictionarySource {
  std::string path;
  std::string inline_text;

  bool operator==(const DictionarySource&) const = default;
};

struct PageTemplate {
  int page_width = 0;
  int page_height = 0;

  std::optional<RecordTemplate> header;
  int header_top = 0;

  int corpus_top = 0;
  int min_corpus_height = 0;
  int max_corpus_height = 0;
  /// Chance of writing one more record once min_corpus_height is reached.
  double continuation_probability = 0.5;
  RecordTemplate record;

  std::vector<std::string> fonts;
  DictionarySource dictionary;
  /// Ink intensity, drawn once per page.
  PixelRange ink{20, 60};
  NoiseSpec noise;

  /// Lowest y the header can reach (header_top when there is no header).
  int header_bottom() const noexcept;

  bool operator==(const PageTemplate&) const = default;
};

}  // namespace recforge
