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

// Page geometry sampling: which lines a record has, how tall they are,
// where their cells sit, and how many records fit on a page.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recforge/image.hpp"
#include "recforge/rng.hpp"
#include "recforge/template.hpp"

namespace recforge {

struct RealizedCell {
  Box box;
  /// Whether the cell receives text. Decided at sampling time.
  bool filled = false;
  /// UTF-8 words actually written, filled in by the renderer.
  std::string text;

  bool operator==(const RealizedCell&) const = default;
};

struct RealizedLine {
  Box box;
  std::vector<RealizedCell> cells;

  bool operator==(const RealizedLine&) const = default;
};

struct RecordInstance {
  int top_y = 0;
  int bottom_y = 0;
  std::vector<RealizedLine> lines;

  int height() const noexcept { return bottom_y - top_y; }
  /// Moves the record and everything inside it down by dy.
  void shift(int dy) noexcept;
  /// Bounding box across the full page width.
  Box box(int page_width) const noexcept { return {0, top_y, page_width, bottom_y}; }

  bool operator==(const RecordInstance&) const = default;
};

/// One realization of `t`, with top_y = 0. Mandatory lines are always
/// present; an optional line appears with its inclusion probability. Line
/// heights, cell offsets and widths are uniform over their ranges and a
/// cell is filled with its presence probability.
RecordInstance sample_record(const RecordTemplate& t, Rng& rng);

/// Stacks records downward from corpus_top. Records are added while the
/// last bottom is above min_corpus_height (resampling a record that would
/// cross max_corpus_height); after that, each further record is sampled
/// and kept only if it fits above max_corpus_height and a
/// continuation_probability draw succeeds. The first failure stops the page.
///
/// Throws GenerationError when even the smallest record cannot fit in the
/// corpus area, or when no fitting record turns up while the minimum
/// height is still unfilled.
std::vector<RecordInstance> fill_corpus(const PageTemplate& t, Rng& rng);

struct PageLayout {
  std::optional<RecordInstance> header;
  std::vector<RecordInstance> records;
};

/// Header (when configured, placed at header_top) plus fill_corpus.
PageLayout layout_page(const PageTemplate& t, Rng& rng);

}  // namespace recforge
