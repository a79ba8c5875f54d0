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

#include "recforge/preprocess.hpp"

#include <optional>

#include "recforge/parallel.hpp"
#include "recforge/png_io.hpp"
#include "recforge/transform.hpp"

namespace recforge {

RasterPage preprocess_page(const RasterPage& img, const SauvolaParams& params) {
  return sauvola_binarize(rescale(img), params).to_raster();
}

Box map_box(const Box& b, int src_w, int src_h) {
  const Placement pl = fit_placement(src_w, src_h, kModelInputWidth, kModelInputHeight);
  auto lo = [](int v, int scaled, int src) {
    return static_cast<int>(static_cast<std::int64_t>(v) * scaled / src);
  };
  auto hi = [](int v, int scaled, int src) {
    return static_cast<int>((static_cast<std::int64_t>(v) * scaled + src - 1) / src);
  };
  return {pl.offset_x + lo(b.x0, pl.scaled_width, src_w), pl.offset_y + lo(b.y0, pl.scaled_height, src_h),
          pl.offset_x + hi(b.x1, pl.scaled_width, src_w), pl.offset_y + hi(b.y1, pl.scaled_height, src_h)};
}

PreprocessSummary preprocess_set(const Manifest& manifest, const SauvolaParams& params,
                                 const std::filesystem::path& out_dir, int workers) {
  sauvola_binarize(RasterPage(params.window, params.window), params);  // reject bad params up front
  std::filesystem::create_directories(out_dir / "pages");
  std::vector<std::optional<ManifestEntry>> produced(manifest.size());
  std::vector<std::string> errors(manifest.size());

  parallel_for(manifest.size(), workers, [&](std::size_t i) {
    const ManifestEntry& source = manifest.entries[i];
    try {
      const RasterPage img = read_png(manifest.resolve(source));
      ManifestEntry e = source;
      e.path = "pages/" + std::filesystem::path(source.path).filename().string();
      for (auto& b : e.boxes) b = map_box(b, img.width(), img.height());
      write_png(out_dir / e.path, preprocess_page(img, params));
      produced[i] = std::move(e);
    } catch (const std::exception& ex) {
      errors[i] = source.page_id + ": " + ex.what();
    }
  });

  PreprocessSummary summary;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    if (produced[i])
      summary.entries.push_back(std::move(*produced[i]));
    else
      summary.failures.push_back(errors[i]);
  }
  summary.manifest_path = out_dir / "manifest.jsonl";
  write_manifest(summary.manifest_path, summary.entries);
  return summary;
}

}  // namespace recforge
