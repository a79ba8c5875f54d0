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

#include "recforge/background.hpp"

#include <algorithm>

#include "recforge/error.hpp"
#include "recforge/parallel.hpp"
#include "recforge/png_io.hpp"
#include "recforge/threshold.hpp"

namespace recforge {

namespace {

/// Summed-area table over a per-pixel quantity.
class Integral {
 public:
  template <typename F>
  Integral(int w, int h, F value) : w_(w), h_(h), table_((w + 1) * static_cast<std::size_t>(h + 1), 0) {
    for (int y = 0; y < h; ++y) {
      std::int64_t row = 0;
      for (int x = 0; x < w; ++x) {
        row += value(x, y);
        table_[idx(x + 1, y + 1)] = table_[idx(x + 1, y)] + row;
      }
    }
  }

  /// Sum over [x0, x1] x [y0, y1], clipped to the image.
  std::int64_t sum(int x0, int y0, int x1, int y1) const {
    x0 = std::max(x0, 0);
    y0 = std::max(y0, 0);
    x1 = std::min(x1, w_ - 1);
    y1 = std::min(y1, h_ - 1);
    if (x0 > x1 || y0 > y1) return 0;
    return table_[idx(x1 + 1, y1 + 1)] - table_[idx(x0, y1 + 1)] - table_[idx(x1 + 1, y0)] +
           table_[idx(x0, y0)];
  }

 private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(w_ + 1) + static_cast<std::size_t>(x);
  }

  int w_;
  int h_;
  std::vector<std::int64_t> table_;
};

std::vector<std::filesystem::path> png_files(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".png") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

bool is_background_output(const std::filesystem::path& p) {
  return p.stem().extension() == ".bg";
}

}  // namespace

RasterPage extract_background(const RasterPage& img) {
  if (img.empty()) throw ParameterError("extract_background: empty image");
  const std::uint8_t t = otsu_threshold(img);
  if (t == 0) return img;

  const int w = img.width();
  const int h = img.height();
  const Integral bg_sum(w, h, [&](int x, int y) -> std::int64_t {
    const auto v = img.at(x, y);
    return v >= t ? v : 0;
  });
  const Integral bg_count(w, h, [&](int x, int y) -> std::int64_t { return img.at(x, y) >= t; });

  constexpr int before = kBackgroundWindow / 2 - 1;
  constexpr int after = kBackgroundWindow / 2;
  RasterPage out = img;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (img.at(x, y) >= t) continue;
      for (int grow = 0;; grow += kBackgroundWindowGrowth) {
        const int x0 = x - before - grow;
        const int y0 = y - before - grow;
        const int x1 = x + after + grow;
        const int y1 = y + after + grow;
        const std::int64_t n = bg_count.sum(x0, y0, x1, y1);
        if (n > 0) {
          const std::int64_t s = bg_sum.sum(x0, y0, x1, y1);
          out.at(x, y) = static_cast<std::uint8_t>((s + n / 2) / n);
          break;
        }
      }
    }
  }
  return out;
}

RasterPage blank_background(int width, int height, std::uint8_t paper) {
  return RasterPage(width, height, paper);
}

PalimpsestSet load_palimpsests(const std::filesystem::path& dir) {
  PalimpsestSet set;
  for (const auto& file : png_files(dir)) {
    set.backgrounds.push_back(read_png(file));
    set.source_ids.push_back(file.stem().string());
  }
  return set;
}

ExtractionSummary extract_backgrounds(const std::filesystem::path& in_dir,
                                      const std::filesystem::path& out_dir, int workers) {
  auto inputs = png_files(in_dir);
  std::erase_if(inputs, is_background_output);
  std::filesystem::create_directories(out_dir);

  std::vector<std::filesystem::path> outputs(inputs.size());
  std::vector<std::string> errors(inputs.size());
  parallel_for(inputs.size(), workers, [&](std::size_t i) {
    try {
      const auto target = out_dir / (inputs[i].stem().string() + ".bg.png");
      write_png(target, extract_background(read_png(inputs[i])));
      outputs[i] = target;
    } catch (const Error& e) {
      errors[i] = inputs[i].filename().string() + ": " + e.what();
    }
  });

  ExtractionSummary summary;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (errors[i].empty())
      summary.written.push_back(outputs[i]);
    else
      summary.failures.push_back(errors[i]);
  }
  return summary;
}

}  // namespace recforge
