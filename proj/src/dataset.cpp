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

#include "recforge/dataset.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "recforge/error.hpp"
#include "recforge/noise.hpp"
#include "recforge/parallel.hpp"
#include "recforge/png_io.hpp"

namespace recforge {

using Json = nlohmann::ordered_json;

namespace {

void check_realization(const PageTemplate& t, const PageRealization& page) {
  if (page.record_count != static_cast<int>(page.records.size()))
    throw GenerationError("record_count disagrees with the placed records");
  int previous_bottom = t.corpus_top;
  for (const auto& r : page.records) {
    if (r.bottom_y <= r.top_y) throw GenerationError("record with non-positive height");
    if (r.top_y < previous_bottom) throw GenerationError("records overlap or are out of order");
    previous_bottom = r.bottom_y;
  }
  if (!page.records.empty()) {
    const int last = page.records.back().bottom_y;
    if (last < t.min_corpus_height || last > t.max_corpus_height)
      throw GenerationError("last record bottom " + std::to_string(last) +
                            " outside [min_corpus_height, max_corpus_height]");
  } else if (t.min_corpus_height > t.corpus_top) {
    throw GenerationError("no records placed although the corpus minimum is unfilled");
  }
}

Json box_json(const Box& b) { return Json::array({b.x0, b.y0, b.x1, b.y1}); }

Json record_json(const RecordInstance& r) {
  Json lines = Json::array();
  for (const auto& line : r.lines) {
    Json cells = Json::array();
    for (const auto& cell : line.cells)
      cells.push_back({{"box", box_json(cell.box)}, {"filled", cell.filled}, {"text", cell.text}});
    lines.push_back({{"box", box_json(line.box)}, {"cells", std::move(cells)}});
  }
  return {{"top_y", r.top_y}, {"bottom_y", r.bottom_y}, {"lines", std::move(lines)}};
}

}  // namespace

SynthesisResources SynthesisResources::load(const PageTemplate& t, const ResourcePaths& paths,
                                            PalimpsestSet backgrounds) {
  SynthesisResources res;
  for (const auto& name : t.fonts) res.fonts.push_back(Font::resolve(name, paths));
  res.dictionary = Dictionary::from_source(t.dictionary, paths);
  if (backgrounds.empty()) {
    backgrounds.backgrounds.push_back(blank_background(t.page_width, t.page_height));
    backgrounds.source_ids.emplace_back("blank");
  }
  res.backgrounds = std::move(backgrounds);
  return res;
}

PageRealization synthesize_page(const PageTemplate& t, const SynthesisResources& res,
                                std::uint64_t page_seed) {
  if (res.fonts.empty()) throw ResourceError("no fonts loaded");
  if (res.backgrounds.empty()) throw ResourceError("no backgrounds loaded");
  const Rng rng(page_seed);

  Rng pick = rng.split(0);
  const auto bg = static_cast<std::size_t>(
      pick.uniform_int(0, static_cast<std::int64_t>(res.backgrounds.size()) - 1));
  const auto font = static_cast<std::size_t>(
      pick.uniform_int(0, static_cast<std::int64_t>(res.fonts.size()) - 1));

  Rng layout_rng = rng.split(1);
  PageLayout layout = layout_page(t, layout_rng);

  Rng render_rng = rng.split(2);
  PageRealization page = render_page(t, std::move(layout), res.backgrounds.backgrounds[bg],
                                     res.fonts[font], res.dictionary, render_rng);
  page.image = apply_scan_noise(page.image, t.noise, rng.split(3));
  page.seed = page_seed;
  page.background_id = res.backgrounds.source_ids[bg];
  check_realization(t, page);
  return page;
}

std::string page_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "page_%06zu", index);
  return buf;
}

std::string groundtruth_json(const PageRealization& page, const std::string& page_id) {
  Json j;
  j["page_id"] = page_id;
  j["record_count"] = page.record_count;
  j["seed"] = page.seed;
  j["background_id"] = page.background_id;
  j["font_id"] = page.font_id;
  j["header"] = page.header ? record_json(*page.header) : Json(nullptr);
  Json records = Json::array();
  for (const auto& r : page.records) records.push_back(record_json(r));
  j["records"] = std::move(records);
  return j.dump();
}

int groundtruth_record_count(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    const Json j = Json::parse(in);
    return static_cast<int>(j.at("records").size());
  } catch (const Json::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

DatasetSummary generate_dataset(const PageTemplate& t, std::size_t n_pages,
                                const SynthesisResources& res, std::uint64_t master_seed,
                                const std::filesystem::path& out_dir, const DatasetOptions& options) {
  if (n_pages == 0) throw ParameterError("generate_dataset: n_pages must be >= 1");
  std::filesystem::create_directories(out_dir / "pages");
  if (options.write_groundtruth) std::filesystem::create_directories(out_dir / "groundtruth");

  std::vector<ManifestEntry> entries(n_pages);
  parallel_for(n_pages, options.workers, [&](std::size_t i) {
    const std::string id = page_name(i);
    try {
      const std::uint64_t seed = derive_seed(master_seed, i);
      const PageRealization page = synthesize_page(t, res, seed);
      ManifestEntry& e = entries[i];
      e.page_id = id;
      e.path = "pages/" + id + ".png";
      e.record_count = page.record_count;
      e.seed = seed;
      e.background_id = page.background_id;
      e.font_id = page.font_id;
      for (const auto& r : page.records) e.boxes.push_back(r.box(t.page_width));
      write_png(out_dir / e.path, page.image);
      if (options.write_groundtruth) {
        std::ofstream gt(out_dir / "groundtruth" / (id + ".json"), std::ios::trunc);
        gt << groundtruth_json(page, id) << '\n';
        if (!gt) throw IoError("cannot write ground truth");
      }
    } catch (const Error& e) {
      throw GenerationError("page " + std::to_string(i) + " (" + id + "): " + e.what());
    }
  });

  DatasetSummary summary;
  summary.manifest_path = out_dir / "manifest.jsonl";
  write_manifest(summary.manifest_path, entries);
  for (const auto& e : entries) ++summary.count_histogram[e.record_count];
  summary.entries = std::move(entries);
  return summary;
}

}  // namespace recforge
