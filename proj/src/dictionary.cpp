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

#include "recforge/dictionary.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "recforge/error.hpp"

#ifndef RECFORGE_DEFAULT_ASSET_DIR
#define RECFORGE_DEFAULT_ASSET_DIR "assets"
#endif

namespace recforge {

ResourcePaths default_resource_paths() {
  ResourcePaths paths;
  paths.asset_dir = RECFORGE_DEFAULT_ASSET_DIR;
  if (const char* env = std::getenv("RECFORGE_FONT_DIR"); env != nullptr && *env != '\0')
    paths.font_dir = env;
  else
    paths.font_dir = paths.asset_dir / "fonts";
  return paths;
}

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    int extra = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      cp = lead & 0x07;
    } else {
      out.push_back(U'\uFFFD');
      ++i;
      continue;
    }
    if (i + static_cast<std::size_t>(extra) >= text.size()) {
      out.push_back(U'\uFFFD');
      break;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      const auto c = static_cast<unsigned char>(text[i + static_cast<std::size_t>(k)]);
      if ((c & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (c & 0x3F);
    }
    if (!ok) {
      out.push_back(U'\uFFFD');
      ++i;
      continue;
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

Dictionary::Dictionary(std::string_view text) {
  const std::u32string decoded = decode_utf8(text);
  std::u32string current;
  auto flush = [&] {
    if (!current.empty()) words_.push_back(std::move(current));
    current.clear();
  };
  for (char32_t c : decoded) {
    if (c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v' ||
        c == U'\u00A0')
      flush();
    else
      current.push_back(c);
  }
  flush();
}

Dictionary Dictionary::load(const std::filesystem::path& path, const ResourcePaths& paths) {
  std::filesystem::path resolved = path;
  if (!std::filesystem::exists(resolved) && path.is_relative() &&
      std::filesystem::exists(paths.asset_dir / path))
    resolved = paths.asset_dir / path;
  std::ifstream in(resolved, std::ios::binary);
  if (!in) throw ResourceError("cannot open dictionary " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Dictionary dict(buffer.str());
  if (dict.size() == 0) throw ResourceError("dictionary " + path.string() + " holds no words");
  return dict;
}

Dictionary Dictionary::from_source(const DictionarySource& source, const ResourcePaths& paths) {
  if (!source.path.empty()) return load(source.path, paths);
  Dictionary dict(source.inline_text);
  if (dict.size() == 0) throw ResourceError("inline dictionary holds no words");
  return dict;
}

const std::u32string& Dictionary::draw(Rng& rng) const {
  if (words_.empty()) throw ResourceError("dictionary is empty");
  return words_[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(words_.size()) - 1))];
}

}  // namespace recforge
