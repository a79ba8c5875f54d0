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

#include <cstdint>
#include <filesystem>
#include <vector>

#include "recforge/image.hpp"

namespace recforge {

/// Any PNG flavour is converted to 8-bit grayscale. Throws IoError.
RasterPage read_png(const std::filesystem::path& path);

/// zlib level used for every written page.
inline constexpr int kPngCompressionLevel = 1;

/// 8-bit grayscale PNG. Output bytes depend only on the pixels.
std::vector<std::uint8_t> encode_png(const RasterPage& img);
void write_png(const std::filesystem::path& path, const RasterPage& img);

}  // namespace recforge
