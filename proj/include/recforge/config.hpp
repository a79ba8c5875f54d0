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

// Layout description language. See docs/config-schema.md for the element
// and attribute reference; configs/benchmark.xml is the canonical sample.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "recforge/template.hpp"

namespace recforge {

struct Violation {
  std::string field;
  std::string constraint;

  bool operator==(const Violation&) const = default;
};

/// Parses and validates a layout file.
///
/// Throws ParseError (with line number) for malformed XML and for unknown
/// elements or attributes, and ValidationError naming the first offending
/// field when the document is well-formed but violates an invariant.
PageTemplate parse_config(std::string_view xml_text);

/// Reads `path` and parses it. A relative dictionary path is rewritten to
/// be relative to the config file's directory when such a file exists.
PageTemplate load_config(const std::filesystem::path& path);

/// Every broken invariant, in a stable order. Empty means valid.
std::vector<Violation> validate_template(const PageTemplate& t);

/// Writes `t` back in the same XML dialect parse_config accepts.
std::string serialize_config(const PageTemplate& t);

}  // namespace recforge
