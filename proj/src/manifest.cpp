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

#include "recforge/manifest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "recforge/error.hpp"

namespace recforge {

using Json = nlohmann::ordered_json;

namespace {

template <typename T>
T field(const Json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw IoError(std::string("missing field '") + name + "'");
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw IoError(std::string("field '") + name + "' has the wrong type");
  }
}

template <typename Fn>
void for_each_line(const std::filesystem::path& path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fn(line);
    } catch (const Error& e) {
      throw IoError(path.string() + ":" + std::to_string(number) + ": " + e.what());
    } catch (const Json::exception& e) {
      throw IoError(path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
  }
}

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const auto& line : lines) out << line << '\n';
  if (!out) throw IoError("short write to " + path.string());
}

}  // namespace

std::string to_json_line(const ManifestEntry& e) {
  Json j;
  j["page_id"] = e.page_id;
  j["path"] = e.path;
  j["record_count"] = e.record_count;
  j["seed"] = e.seed;
  j["background_id"] = e.background_id;
  j["font_id"] = e.font_id;
  Json boxes = Json::array();
  for (const auto& b : e.boxes) boxes.push_back({b.x0, b.y0, b.x1, b.y1});
  j["boxes"] = std::move(boxes);
  if (!e.source.empty()) j["source"] = e.source;
  if (e.fold) j["fold"] = *e.fold;
  if (!e.partition.empty()) j["partition"] = e.partition;
  return j.dump();
}

ManifestEntry parse_manifest_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::exception& e) {
    throw IoError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw IoError("manifest line is not a JSON object");
  ManifestEntry e;
  e.page_id = field<std::string>(j, "page_id");
  e.path = field<std::string>(j, "path");
  e.record_count = field<int>(j, "record_count");
  if (e.record_count < 0) throw IoError("record_count must be >= 0");
  if (j.contains("seed")) e.seed = field<std::uint64_t>(j, "seed");
  if (j.contains("background_id")) e.background_id = field<std::string>(j, "background_id");
  if (j.contains("font_id")) e.font_id = field<std::string>(j, "font_id");
  if (j.contains("boxes")) {
    for (const auto& b : j.at("boxes")) {
      if (!b.is_array() || b.size() != 4) throw IoError("boxes must be [x0, y0, x1, y1] arrays");
      if (!std::all_of(b.begin(), b.end(), [](const Json& v) { return v.is_number_integer(); }))
        throw IoError("box coordinates must be integers");
      e.boxes.push_back({b[0].get<int>(), b[1].get<int>(), b[2].get<int>(), b[3].get<int>()});
    }
  }
  if (j.contains("source")) e.source = field<std::string>(j, "source");
  if (j.contains("fold")) e.fold = field<int>(j, "fold");
  if (j.contains("partition")) e.partition = field<std::string>(j, "partition");
  return e;
}

Manifest read_manifest(const std::filesystem::path& path) {
  Manifest m;
  m.dir = path.parent_path();
  for_each_line(path, [&](const std::string& line) { m.entries.push_back(parse_manifest_line(line)); });
  return m;
}

void write_manifest(const std::filesystem::path& path, const std::vector<ManifestEntry>& entries) {
  std::vector<std::string> lines;
  lines.reserve(entries.size());
  for (const auto& e : entries) lines.push_back(to_json_line(e));
  write_lines(path, lines);
}

std::vector<Prediction> read_predictions(const std::filesystem::path& path) {
  std::vector<Prediction> preds;
  for_each_line(path, [&](const std::string& line) {
    const Json j = Json::parse(line);
    if (!j.is_object()) throw IoError("prediction line is not a JSON object");
    Prediction p{field<std::string>(j, "page_id"), field<double>(j, "p")};
    if (!std::isfinite(p.p)) throw IoError("prediction for " + p.page_id + " is not finite");
    preds.push_back(std::move(p));
  });
  return preds;
}

void write_predictions(const std::filesystem::path& path, const std::vector<Prediction>& preds) {
  std::vector<std::string> lines;
  lines.reserve(preds.size());
  for (const auto& p : preds) {
    Json j;
    j["page_id"] = p.page_id;
    j["p"] = p.p;
    lines.push_back(j.dump());
  }
  write_lines(path, lines);
}

}  // namespace recforge
