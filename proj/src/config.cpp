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

#include "recforge/config.hpp"

#include <expat.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <memory>
#include <sstream>

#include "recforge/error.hpp"

namespace recforge {

std::size_t RecordTemplate::mandatory_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [](const LineSlot& s) { return s.mandatory(); }));
}

int RecordTemplate::min_height() const noexcept {
  int h = 0;
  for (const auto& slot : lines)
    if (slot.mandatory()) h += slot.line.height.lo;
  return h;
}

int RecordTemplate::max_height() const noexcept {
  int h = 0;
  for (const auto& slot : lines) h += slot.line.height.hi;
  return h;
}

int PageTemplate::header_bottom() const noexcept {
  return header ? header_top + header->max_height() : header_top;
}

namespace {

// ---------------------------------------------------------------------------
// Minimal DOM on top of expat.

struct XmlNode {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlNode> children;
  std::string text;
  long line = 0;
};

struct DomBuilder {
  XML_Parser parser = nullptr;
  XmlNode root;
  std::vector<XmlNode*> stack;
  bool has_root = false;

  static void on_start(void* user, const XML_Char* name, const XML_Char** attrs) {
    auto* self = static_cast<DomBuilder*>(user);
    XmlNode node;
    node.name = name;
    node.line = static_cast<long>(XML_GetCurrentLineNumber(self->parser));
    for (auto a = attrs; *a != nullptr; a += 2) node.attributes.emplace_back(a[0], a[1]);
    XmlNode* target;
    if (self->stack.empty()) {
      self->root = std::move(node);
      self->has_root = true;
      target = &self->root;
    } else {
      auto& siblings = self->stack.back()->children;
      siblings.push_back(std::move(node));
      target = &siblings.back();
    }
    self->stack.push_back(target);
  }

  static void on_end(void* user, const XML_Char*) {
    static_cast<DomBuilder*>(user)->stack.pop_back();
  }

  static void on_text(void* user, const XML_Char* s, int len) {
    auto* self = static_cast<DomBuilder*>(user);
    if (!self->stack.empty()) self->stack.back()->text.append(s, static_cast<std::size_t>(len));
  }
};

XmlNode parse_xml(std::string_view text) {
  DomBuilder builder;
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
      XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (!parser) throw Error("cannot allocate XML parser");
  builder.parser = parser.get();
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(parser.get(), &DomBuilder::on_start, &DomBuilder::on_end);
  XML_SetCharacterDataHandler(parser.get(), &DomBuilder::on_text);
  if (XML_Parse(parser.get(), text.data(), static_cast<int>(text.size()), XML_TRUE) ==
      XML_STATUS_ERROR) {
    throw ParseError(XML_ErrorString(XML_GetErrorCode(parser.get())),
                     static_cast<long>(XML_GetCurrentLineNumber(parser.get())));
  }
  if (!builder.has_root) throw ParseError("no root element", 1);
  return std::move(builder.root);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// ---------------------------------------------------------------------------
// Typed attribute access. `field` is the dotted path used in diagnostics.

class Element {
 public:
  Element(const XmlNode& node, std::string field) : node_(node), field_(std::move(field)) {}

  const XmlNode& node() const { return node_; }
  const std::string& field() const { return field_; }

  void allow_attributes(std::initializer_list<std::string_view> names) const {
    for (const auto& [key, value] : node_.attributes) {
      if (std::find(names.begin(), names.end(), key) == names.end())
        throw ParseError("unknown attribute '" + key + "' on <" + node_.name + ">", node_.line);
    }
  }

  void allow_children(std::initializer_list<std::string_view> names) const {
    for (const auto& child : node_.children) {
      if (std::find(names.begin(), names.end(), child.name) == names.end())
        throw ParseError("unknown element <" + child.name + "> inside <" + node_.name + ">",
                         child.line);
    }
  }

  void forbid_text() const {
    if (!trim(node_.text).empty())
      throw ParseError("unexpected text inside <" + node_.name + ">", node_.line);
  }

  const std::string* find(std::string_view name) const {
    for (const auto& [key, value] : node_.attributes)
      if (key == name) return &value;
    return nullptr;
  }

  const std::string& require(std::string_view name) const {
    if (const auto* v = find(name)) return *v;
    throw ValidationError(sub(name), "required attribute is missing");
  }

  std::string sub(std::string_view name) const { return field_ + "." + std::string(name); }

  int integer(std::string_view name) const { return to_int(require(name), sub(name)); }

  int integer_or(std::string_view name, int fallback) const {
    const auto* v = find(name);
    return v ? to_int(*v, sub(name)) : fallback;
  }

  double real(std::string_view name) const { return to_real(require(name), sub(name)); }

  double real_or(std::string_view name, double fallback) const {
    const auto* v = find(name);
    return v ? to_real(*v, sub(name)) : fallback;
  }

  PixelRange range(std::string_view name) const { return to_range(require(name), sub(name)); }

  PixelRange range_or(std::string_view name, PixelRange fallback) const {
    const auto* v = find(name);
    return v ? to_range(*v, sub(name)) : fallback;
  }

  static int to_int(std::string_view text, const std::string& field) {
    text = trim(text);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
      throw ValidationError(field, "expected an integer, got '" + std::string(text) + "'");
    return value;
  }

  static double to_real(std::string_view text, const std::string& field) {
    text = trim(text);
    double value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() ||
        !std::isfinite(value))
      throw ValidationError(field, "expected a number, got '" + std::string(text) + "'");
    return value;
  }

  /// "lo:hi" or a single value.
  static PixelRange to_range(std::string_view text, const std::string& field) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      const int v = to_int(text, field);
      return {v, v};
    }
    return {to_int(text.substr(0, colon), field), to_int(text.substr(colon + 1), field)};
  }

 private:
  const XmlNode& node_;
  std::string field_;
};

std::string indexed(const std::string& base, std::string_view name, std::size_t i) {
  return base + "." + std::string(name) + "[" + std::to_string(i) + "]";
}

CellTemplate read_cell(const Element& e) {
  e.allow_attributes({"x", "width", "p"});
  e.allow_children({});
  e.forbid_text();
  CellTemplate cell;
  cell.x_start = e.range("x");
  cell.width = e.range("width");
  cell.presence_probability = e.real_or("p", 1.0);
  return cell;
}

LineSlot read_line(const Element& e) {
  e.allow_attributes({"height", "p"});
  e.allow_children({"cell"});
  e.forbid_text();
  LineSlot slot;
  slot.line.height = e.range("height");
  if (e.find("p") != nullptr) slot.inclusion_probability = e.real("p");
  std::size_t i = 0;
  for (const auto& child : e.node().children)
    slot.line.cells.push_back(read_cell(Element(child, indexed(e.field(), "cell", i++))));
  return slot;
}

RecordTemplate read_record_lines(const Element& e) {
  RecordTemplate record;
  std::size_t i = 0;
  for (const auto& child : e.node().children)
    record.lines.push_back(read_line(Element(child, indexed(e.field(), "line", i++))));
  return record;
}

void throw_first(const std::vector<Violation>& violations) {
  if (!violations.empty())
    throw ValidationError(violations.front().field, violations.front().constraint);
}

// ---------------------------------------------------------------------------
// Validation

class Checker {
 public:
  explicit Checker(std::vector<Violation>& out) : out_(out) {}

  void require(bool ok, std::string field, std::string constraint) {
    if (!ok) out_.push_back({std::move(field), std::move(constraint)});
  }

  void probability(double p, const std::string& field) {
    require(p >= 0.0 && p <= 1.0, field, "probability must lie in [0, 1]");
  }

  void range(const PixelRange& r, const std::string& field, int min_lo) {
    require(r.lo <= r.hi, field, "range must satisfy lo <= hi");
    require(r.lo >= min_lo, field, "range lower bound must be >= " + std::to_string(min_lo));
  }

 private:
  std::vector<Violation>& out_;
};

void check_record(Checker& c, const RecordTemplate& record, const std::string& base,
                  int page_width) {
  c.require(record.mandatory_count() >= 1, base + ".line", "at least one mandatory line");
  c.range(record.vertical_gap, base + ".gap", 0);
  for (std::size_t i = 0; i < record.lines.size(); ++i) {
    const auto& slot = record.lines[i];
    const auto field = indexed(base, "line", i);
    c.range(slot.line.height, field + ".height", 1);
    if (slot.inclusion_probability) c.probability(*slot.inclusion_probability, field + ".p");
    for (std::size_t j = 0; j < slot.line.cells.size(); ++j) {
      const auto& cell = slot.line.cells[j];
      const auto cf = indexed(field, "cell", j);
      c.range(cell.x_start, cf + ".x", 0);
      c.range(cell.width, cf + ".width", 1);
      c.require(cell.x_start.hi + cell.width.hi <= page_width, cf,
                "x + width must stay within the page width for every sample");
      c.probability(cell.presence_probability, cf + ".p");
    }
  }
}

bool has_word(std::string_view text) { return !trim(text).empty(); }

// ---------------------------------------------------------------------------
// Serialization helpers

std::string fmt_range(const PixelRange& r) {
  return r.fixed() ? std::to_string(r.lo) : std::to_string(r.lo) + ":" + std::to_string(r.hi);
}

std::string fmt_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

void write_lines(std::ostringstream& os, const RecordTemplate& record, const std::string& indent) {
  for (const auto& slot : record.lines) {
    os << indent << "<line height=\"" << fmt_range(slot.line.height) << '"';
    if (slot.inclusion_probability) os << " p=\"" << fmt_real(*slot.inclusion_probability) << '"';
    if (slot.line.cells.empty()) {
      os << "/>\n";
      continue;
    }
    os << ">\n";
    for (const auto& cell : slot.line.cells) {
      os << indent << "  <cell x=\"" << fmt_range(cell.x_start) << "\" width=\""
         << fmt_range(cell.width) << "\" p=\"" << fmt_real(cell.presence_probability) << "\"/>\n";
    }
    os << indent << "</line>\n";
  }
}

}  // namespace

std::vector<Violation> validate_template(const PageTemplate& t) {
  std::vector<Violation> out;
  Checker c(out);
  c.require(t.page_width > 0, "page.width", "must be > 0");
  c.require(t.page_height > 0, "page.height", "must be > 0");
  c.range(t.ink, "page.ink", 0);
  c.require(t.ink.hi <= 255, "page.ink", "ink intensity must be <= 255");

  if (t.header) {
    c.require(t.header_top >= 0, "header.top", "must be >= 0");
    check_record(c, *t.header, "header", t.page_width);
    c.require(t.header_bottom() < t.corpus_top, "corpus.top",
              "must lie below the lowest possible header line (header.top + header height)");
  } else {
    c.require(t.corpus_top >= 0, "corpus.top", "must be >= 0");
  }
  c.require(t.corpus_top <= t.min_corpus_height, "corpus.min_corpus_height",
            "must be >= corpus.top");
  c.require(t.min_corpus_height <= t.max_corpus_height, "corpus.max_corpus_height",
            "must be >= corpus.min_corpus_height");
  c.require(t.max_corpus_height <= t.page_height, "corpus.max_corpus_height",
            "must be <= page.height");
  c.probability(t.continuation_probability, "corpus.continue");
  check_record(c, t.record, "record", t.page_width);

  c.require(!t.fonts.empty(), "fonts", "at least one font");
  for (std::size_t i = 0; i < t.fonts.size(); ++i)
    c.require(has_word(t.fonts[i]), indexed("fonts", "font", i), "font name must not be empty");
  c.require(has_word(t.dictionary.path) || has_word(t.dictionary.inline_text), "dictionary",
            "needs a src file or at least one inline word");

  c.probability(t.noise.salt_pepper_probability, "noise.salt_pepper");
  c.require(t.noise.line_artifact_rate >= 0.0, "noise.lines", "expected count must be >= 0");
  c.require(t.noise.rotation_range >= 0.0 && t.noise.rotation_range <= 45.0, "noise.rotation",
            "rotation range must lie in [0, 45] degrees");
  return out;
}

PageTemplate parse_config(std::string_view xml_text) {
  const XmlNode root = parse_xml(xml_text);
  if (root.name != "page")
    throw ParseError("root element must be <page>, found <" + root.name + ">", root.line);

  const Element page(root, "page");
  page.allow_attributes({"width", "height", "ink"});
  page.allow_children({"header", "corpus", "fonts", "dictionary", "noise"});
  page.forbid_text();

  PageTemplate t;
  t.page_width = page.integer("width");
  t.page_height = page.integer("height");
  t.ink = page.range_or("ink", t.ink);

  auto single = [&](std::string_view name, bool required) -> const XmlNode* {
    const XmlNode* found = nullptr;
    for (const auto& child : root.children) {
      if (child.name != name) continue;
      if (found) throw ParseError("duplicate <" + child.name + ">", child.line);
      found = &child;
    }
    if (!found && required) throw ValidationError(std::string(name), "element is required");
    return found;
  };

  if (const auto* node = single("header", false)) {
    const Element header(*node, "header");
    header.allow_attributes({"top"});
    header.allow_children({"line"});
    header.forbid_text();
    t.header_top = header.integer_or("top", 0);
    t.header = read_record_lines(header);
  }

  {
    const Element corpus(*single("corpus", true), "corpus");
    corpus.allow_attributes({"top", "min_corpus_height", "max_corpus_height", "continue"});
    corpus.allow_children({"record"});
    corpus.forbid_text();
    t.corpus_top = corpus.integer("top");
    t.min_corpus_height = corpus.integer("min_corpus_height");
    t.max_corpus_height = corpus.integer("max_corpus_height");
    t.continuation_probability = corpus.real_or("continue", t.continuation_probability);
    if (corpus.node().children.size() != 1)
      throw ValidationError("corpus.record", "exactly one <record> is required");
    const Element record(corpus.node().children.front(), "record");
    record.allow_attributes({"gap"});
    record.allow_children({"line"});
    record.forbid_text();
    t.record = read_record_lines(record);
    t.record.vertical_gap = record.range_or("gap", {0, 0});
  }

  {
    const Element fonts(*single("fonts", true), "fonts");
    fonts.allow_attributes({});
    fonts.allow_children({"font"});
    fonts.forbid_text();
    std::size_t i = 0;
    for (const auto& child : fonts.node().children) {
      const Element font(child, indexed("fonts", "font", i++));
      font.allow_attributes({});
      font.allow_children({});
      t.fonts.emplace_back(trim(child.text));
    }
  }

  {
    const Element dict(*single("dictionary", true), "dictionary");
    dict.allow_attributes({"src"});
    dict.allow_children({});
    if (const auto* src = dict.find("src")) t.dictionary.path = *src;
    t.dictionary.inline_text = std::string(trim(dict.node().text));
    if (!t.dictionary.path.empty() && !t.dictionary.inline_text.empty())
      throw ValidationError("dictionary", "use either src or inline words, not both");
  }

  if (const auto* node = single("noise", false)) {
    const Element noise(*node, "noise");
    noise.allow_attributes({"salt_pepper", "lines", "line_color", "rotation"});
    noise.allow_children({});
    noise.forbid_text();
    t.noise.salt_pepper_probability = noise.real_or("salt_pepper", 0.0);
    t.noise.line_artifact_rate = noise.real_or("lines", 0.0);
    t.noise.rotation_range = noise.real_or("rotation", 0.0);
    if (const auto* color = noise.find("line_color")) {
      if (*color == "black")
        t.noise.line_artifact_color = LineColor::black;
      else if (*color == "white")
        t.noise.line_artifact_color = LineColor::white;
      else
        throw ValidationError("noise.line_color", "must be 'black' or 'white'");
    }
  }

  throw_first(validate_template(t));
  return t;
}

PageTemplate load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  PageTemplate t = parse_config(buffer.str());
  if (!t.dictionary.path.empty()) {
    const std::filesystem::path dict(t.dictionary.path);
    if (dict.is_relative()) {
      const auto local = path.parent_path() / dict;
      if (std::filesystem::exists(local)) t.dictionary.path = local.string();
    }
  }
  return t;
}

std::string serialize_config(const PageTemplate& t) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<page width=\"" << t.page_width << "\" height=\"" << t.page_height << "\" ink=\""
     << fmt_range(t.ink) << "\">\n";
  os << "  <fonts>\n";
  for (const auto& f : t.fonts) os << "    <font>" << escape(f) << "</font>\n";
  os << "  </fonts>\n";
  if (!t.dictionary.path.empty())
    os << "  <dictionary src=\"" << escape(t.dictionary.path) << "\"/>\n";
  else
    os << "  <dictionary>" << escape(t.dictionary.inline_text) << "</dictionary>\n";
  if (t.header) {
    os << "  <header top=\"" << t.header_top << "\">\n";
    write_lines(os, *t.header, "    ");
    os << "  </header>\n";
  }
  os << "  <corpus top=\"" << t.corpus_top << "\" min_corpus_height=\"" << t.min_corpus_height
     << "\" max_corpus_height=\"" << t.max_corpus_height << "\" continue=\""
     << fmt_real(t.continuation_probability) << "\">\n";
  os << "    <record gap=\"" << fmt_range(t.record.vertical_gap) << "\">\n";
  write_lines(os, t.record, "      ");
  os << "    </record>\n";
  os << "  </corpus>\n";
  os << "  <noise salt_pepper=\"" << fmt_real(t.noise.salt_pepper_probability) << "\" lines=\""
     << fmt_real(t.noise.line_artifact_rate) << "\" line_color=\""
     << (t.noise.line_artifact_color == LineColor::black ? "black" : "white") << "\" rotation=\""
     << fmt_real(t.noise.rotation_range) << "\"/>\n";
  os << "</page>\n";
  return os.str();
}

}  // namespace recforge
