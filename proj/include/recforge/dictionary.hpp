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
#include <string_view>
#include <vector>

#include "recforge/rng.hpp"
#include "recforge/template.hpp"

namespace recforge {

/// Where fonts and dictionaries are looked up.
struct ResourcePaths {
  std::filesystem::path font_dir;
  std::filesystem::path asset_dir;
};

/// asset_dir is the build-time asset directory; font_dir is
/// $RECFORGE_FONT_DIR when set, else asset_dir/fonts.
ResourcePaths default_resource_paths();

/// Decodes UTF-8; malformed sequences become U+FFFD.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);

/// Whitespace-separated words of a UTF-8 text. Content is irrelevant to the
/// layout, so punctuation stays attached to its word.
class Dictionary {
 public:
  explicit Dictionary(std::string_view text);

  /// Reads a plain-text file. Relative paths are tried as given, then under
  /// paths.asset_dir. Throws ResourceError if nothing is found or the file
  /// holds no word.
  static Dictionary load(const std::filesystem::path& path, const ResourcePaths& paths);
  /// Inline text or file, whichever the template names.
  static Dictionary from_source(const DictionarySource& source, const ResourcePaths& paths);

  std::size_t size() const noexcept { return words_.size(); }
  const std::u32string& word(std::size_t i) const { return words_[i]; }
  /// Uniform draw.
  const std::u32string& draw(Rng& rng) const;

 private:
  std::vector<std::u32string> words_;
};

}  // namespace recforge
