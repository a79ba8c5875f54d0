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
#include <fstream>
#include <iterator>
#include <string>
#include <unistd.h>

#include "recforge/image.hpp"
#include "recforge/rng.hpp"

namespace recforge::testing {

inline std::filesystem::path source_dir() { return RECFORGE_SOURCE_DIR; }
inline std::filesystem::path benchmark_config() { return source_dir() / "configs" / "benchmark.xml"; }

class TempDir {
 public:
  TempDir() {
    std::string pattern = (std::filesystem::temp_directory_path() / "recforge-XXXXXX").string();
    path_ = ::mkdtemp(pattern.data());
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

inline RasterPage random_image(Rng& rng, int w, int h, int lo = 0, int hi = 255) {
  RasterPage img(w, h);
  for (auto& v : img.pixels()) v = static_cast<std::uint8_t>(rng.uniform_int(lo, hi));
  return img;
}

/// Dark strokes (value `ink`) on a uniform ground.
inline RasterPage stroke_image(int w, int h, std::uint8_t ground, std::uint8_t ink) {
  RasterPage img(w, h, ground);
  for (int y = h / 4; y < h / 4 + 3; ++y)
    for (int x = w / 8; x < w - w / 8; ++x) img.at(x, y) = ink;
  for (int x = w / 2; x < w / 2 + 3; ++x)
    for (int y = h / 8; y < h - h / 8; ++y) img.at(x, y) = ink;
  return img;
}

/// A small page with one record template; fonts and dictionary are inline
/// or bundled.
inline const char* kSmallConfig = R"(<?xml version="1.0"?>
<page width="300" height="400">
  <corpus top="20" min_corpus_height="200" max_corpus_height="380" continue="0.5">
    <record gap="4:8">
      <line height="24:30">
        <cell x="10:20" width="150:200" p="1"/>
      </line>
      <line height="20:24" p="0.5">
        <cell x="30:40" width="100:150" p="0.8"/>
      </line>
    </record>
  </corpus>
  <fonts><font>Caveat-Regular</font></fonts>
  <dictionary>uno due tre quattro cinque sei sette otto nove dieci</dictionary>
</page>
)";

}  // namespace recforge::testing
