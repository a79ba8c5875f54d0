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

#include "recforge/layout.hpp"

#include <algorithm>
#include <string>

#include "recforge/error.hpp"

namespace recforge {

namespace {

constexpr int kMaxResample = 1000;

int draw(const PixelRange& r, Rng& rng) {
  return static_cast<int>(rng.uniform_int(r.lo, r.hi));
}

}  // namespace

void RecordInstance::shift(int dy) noexcept {
  top_y += dy;
  bottom_y += dy;
  for (auto& line : lines) {
    line.box.y0 += dy;
    line.box.y1 += dy;
    for (auto& cell : line.cells) {
      cell.box.y0 += dy;
      cell.box.y1 += dy;
    }
  }
}

RecordInstance sample_record(const RecordTemplate& t, Rng& rng) {
  RecordInstance record;
  int y = 0;
  for (const auto& slot : t.lines) {
    if (!slot.mandatory() && !rng.bernoulli(*slot.inclusion_probability)) continue;
    const int height = draw(slot.line.height, rng);
    RealizedLine line;
    line.box = {0, y, 0, y + height};
    int right = 0;
    for (const auto& cell : slot.line.cells) {
      const int x = draw(cell.x_start, rng);
      const int width = draw(cell.width, rng);
      RealizedCell realized;
      realized.box = {x, y, x + width, y + height};
      realized.filled = rng.bernoulli(cell.presence_probability);
      right = std::max(right, x + width);
      line.cells.push_back(std::move(realized));
    }
    // A line spans from the left edge to its rightmost cell.
    line.box.x1 = right;
    record.lines.push_back(std::move(line));
    y += height;
  }
  record.bottom_y = y;
  return record;
}

std::vector<RecordInstance> fill_corpus(const PageTemplate& t, Rng& rng) {
  const int area = t.max_corpus_height - t.corpus_top;
  if (t.record.min_height() > area)
    throw GenerationError("smallest record (" + std::to_string(t.record.min_height()) +
                          " px) exceeds the corpus area (" + std::to_string(area) + " px)");

  std::vector<RecordInstance> records;
  int bottom = t.corpus_top;

  auto candidate = [&](int& top) {
    const int gap = records.empty() ? 0 : draw(t.record.vertical_gap, rng);
    RecordInstance record = sample_record(t.record, rng);
    top = bottom + gap;
    return record;
  };

  while (bottom < t.min_corpus_height) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxResample && !placed; ++attempt) {
      int top = 0;
      RecordInstance record = candidate(top);
      if (top + record.height() > t.max_corpus_height) continue;
      record.shift(top);
      bottom = record.bottom_y;
      records.push_back(std::move(record));
      placed = true;
    }
    if (!placed)
      throw GenerationError("no sampled record fits between y=" + std::to_string(bottom) +
                            " and max_corpus_height=" + std::to_string(t.max_corpus_height));
  }

  for (;;) {
    int top = 0;
    RecordInstance record = candidate(top);
    if (top + record.height() > t.max_corpus_height) break;
    if (!rng.bernoulli(t.continuation_probability)) break;
    record.shift(top);
    bottom = record.bottom_y;
    records.push_back(std::move(record));
  }
  return records;
}

PageLayout layout_page(const PageTemplate& t, Rng& rng) {
  PageLayout layout;
  if (t.header) {
    Rng header_rng = rng.split(0);
    RecordInstance header = sample_record(*t.header, header_rng);
    header.shift(t.header_top);
    layout.header = std::move(header);
  }
  Rng corpus_rng = rng.split(1);
  layout.records = fill_corpus(t, corpus_rng);
  return layout;
}

}  // namespace recforge
