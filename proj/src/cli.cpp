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

#include "recforge/cli.hpp"

#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "recforge/augment.hpp"
#include "recforge/background.hpp"
#include "recforge/config.hpp"
#include "recforge/dataset.hpp"
#include "recforge/error.hpp"
#include "recforge/metrics.hpp"
#include "recforge/preprocess.hpp"
#include "recforge/split.hpp"
#include "recforge/transform.hpp"

namespace recforge {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::trunc);
  f << text;
  if (!f) throw IoError("cannot write " + path.string());
}

void emit_summary(std::ostream& out, const fs::path& path, const Json& summary) {
  const std::string text = summary.dump(2) + "\n";
  write_text(path, text);
  out << text;
}

Json failures_json(const std::vector<std::string>& failures) {
  Json a = Json::array();
  for (const auto& f : failures) a.push_back(f);
  return a;
}

// Path of `p` (relative to from_dir) as seen from to_dir.
std::string rebase(const std::string& p, const fs::path& from_dir, const fs::path& to_dir) {
  const fs::path abs = fs::weakly_canonical(fs::absolute(from_dir / p));
  return fs::relative(abs, fs::weakly_canonical(fs::absolute(to_dir))).generic_string();
}

struct ExtractArgs {
  std::string in_dir;
  std::string out_dir;
  int workers = 1;
};

struct GenerateArgs {
  std::string config;
  std::size_t pages = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string out_dir = "dataset";
  std::string backgrounds;
  std::string font_dir;
  double p_cont = -1.0;
  int workers = 1;
  bool no_groundtruth = false;
};

struct AugmentArgs {
  std::string manifest;
  std::string out_dir = "augmented";
  std::uint64_t seed = kDefaultSeed;
  AugmentationPlan plan;
  bool no_originals = false;
  int workers = 1;
};

struct PreprocessArgs {
  std::string manifest;
  std::string out_dir = "preprocessed";
  SauvolaParams sauvola;
  int workers = 1;
};

struct SplitArgs {
  std::string manifest;
  std::string mode;
  std::string out_dir;
  std::uint64_t seed = kDefaultSeed;
  int folds = 5;
  std::string sizes;
};

struct EvaluateArgs {
  std::string manifest;
  std::string predictions;
  std::string report;
  std::string group = "auto";
};

int do_extract(const ExtractArgs& a, std::ostream& out) {
  const fs::path out_dir = a.out_dir.empty() ? fs::path(a.in_dir) : fs::path(a.out_dir);
  if (!fs::is_directory(a.in_dir)) throw IoError("not a directory: " + a.in_dir);
  const auto s = extract_backgrounds(a.in_dir, out_dir, a.workers);
  Json written = Json::array();
  for (const auto& p : s.written) written.push_back(p.generic_string());
  emit_summary(out, out_dir / "extract_bg_summary.json",
               {{"command", "extract-bg"}, {"written", written}, {"failures", failures_json(s.failures)}});
  return s.failures.empty() ? 0 : 1;
}

int do_generate(const GenerateArgs& a, std::ostream& out) {
  PageTemplate t = load_config(a.config);
  if (a.p_cont >= 0.0) {
    t.continuation_probability = a.p_cont;
    const auto v = validate_template(t);
    if (!v.empty()) throw ValidationError(v.front().field, v.front().constraint);
  }
  ResourcePaths paths = default_resource_paths();
  if (!a.font_dir.empty()) paths.font_dir = a.font_dir;
  PalimpsestSet bgs;
  if (!a.backgrounds.empty()) bgs = load_palimpsests(a.backgrounds);
  const auto res = SynthesisResources::load(t, paths, std::move(bgs));
  DatasetOptions opt;
  opt.workers = a.workers;
  opt.write_groundtruth = !a.no_groundtruth;
  const auto s = generate_dataset(t, a.pages, res, a.seed, a.out_dir, opt);

  Json hist = Json::object();
  for (const auto& [count, n] : s.count_histogram) hist[std::to_string(count)] = n;
  emit_summary(out, fs::path(a.out_dir) / "generate_summary.json",
               {{"command", "generate"},
                {"config", a.config},
                {"pages", s.entries.size()},
                {"seed", a.seed},
                {"manifest", s.manifest_path.generic_string()},
                {"record_count_histogram", hist}});
  return 0;
}

int do_augment(AugmentArgs a, std::ostream& out) {
  a.plan.include_originals = !a.no_originals;
  const Manifest m = read_manifest(a.manifest);
  const auto s = augment_set(m, a.plan, a.seed, a.out_dir, a.workers);
  emit_summary(out, fs::path(a.out_dir) / "augment_summary.json",
               {{"command", "augment"},
                {"input_pages", m.size()},
                {"variants_per_page", a.plan.variants_per_page},
                {"include_originals", a.plan.include_originals},
                {"seed", a.seed},
                {"output_pages", s.entries.size()},
                {"manifest", s.manifest_path.generic_string()},
                {"failures", failures_json(s.failures)}});
  return s.failures.empty() ? 0 : 1;
}

int do_preprocess(const PreprocessArgs& a, std::ostream& out) {
  const Manifest m = read_manifest(a.manifest);
  const auto s = preprocess_set(m, a.sauvola, a.out_dir, a.workers);
  emit_summary(out, fs::path(a.out_dir) / "preprocess_summary.json",
               {{"command", "preprocess"},
                {"input_pages", m.size()},
                {"output_pages", s.entries.size()},
                {"width", kModelInputWidth},
                {"height", kModelInputHeight},
                {"sauvola", {{"window", a.sauvola.window}, {"k", a.sauvola.k}, {"R", a.sauvola.dynamic_range}}},
                {"manifest", s.manifest_path.generic_string()},
                {"failures", failures_json(s.failures)}});
  return s.failures.empty() ? 0 : 1;
}

int do_split(const SplitArgs& a, std::ostream& out) {
  const Manifest m = read_manifest(a.manifest);
  const fs::path out_dir = a.out_dir.empty() ? m.dir : fs::path(a.out_dir);
  fs::create_directories(out_dir);
  std::vector<ManifestEntry> entries = m.entries;
  for (auto& e : entries) {
    e.path = rebase(e.path, m.dir, out_dir);
    e.fold.reset();
    e.partition.clear();
  }

  std::map<std::string, std::map<int, std::size_t>> table;  // group -> class -> pages
  if (a.mode == "cv5") {
    const auto folds = stratified_kfold(entries, a.folds, a.seed);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      entries[i].fold = folds[i];
      ++table[std::to_string(folds[i])][entries[i].record_count];
    }
  } else {
    std::optional<PartitionSizes> sizes;
    if (!a.sizes.empty()) sizes = parse_partition_sizes(a.sizes);
    const auto parts = benchmark_split(entries, a.seed, sizes);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      entries[i].partition = parts[i];
      ++table[parts[i]][entries[i].record_count];
    }
  }
  const fs::path split_path = out_dir / "split.jsonl";
  write_manifest(split_path, entries);

  Json groups = Json::object();
  for (const auto& [group, classes] : table) {
    Json c = Json::object();
    std::size_t total = 0;
    for (const auto& [label, n] : classes) {
      c[std::to_string(label)] = n;
      total += n;
    }
    groups[group] = {{"pages", total}, {"by_record_count", c}};
  }
  emit_summary(out, out_dir / "split_summary.json",
               {{"command", "split"},
                {"mode", a.mode},
                {"seed", a.seed},
                {"pages", entries.size()},
                {"manifest", split_path.generic_string()},
                {"groups", groups}});
  return 0;
}

int do_evaluate(const EvaluateArgs& a, std::ostream& out) {
  const Manifest m = read_manifest(a.manifest);
  const auto preds = read_predictions(a.predictions);
  Grouping g = Grouping::automatic;
  if (a.group == "fold") g = Grouping::fold;
  if (a.group == "partition") g = Grouping::partition;
  if (a.group == "none") g = Grouping::none;
  const auto report = evaluate(m.entries, preds, g);
  fs::path report_path = a.report;
  if (report_path.empty()) {
    report_path = a.predictions;
    report_path.replace_extension(".report.json");
  }
  write_text(report_path, report_json(report) + "\n");
  out << report_table(report);
  return 0;
}

void add_workers(CLI::App* cmd, int& workers) {
  cmd->add_option("--workers", workers, "Parallel workers; output does not depend on it")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthetic record-page forge and evaluation harness", "recforge"};
  app.require_subcommand(1);

  ExtractArgs ex;
  auto* extract = app.add_subcommand("extract-bg", "Erase ink from scanned pages: <dir>/*.png -> <name>.bg.png");
  extract->add_option("dir", ex.in_dir, "Directory of grayscale PNGs")->required()->check(CLI::ExistingDirectory);
  extract->add_option("--out", ex.out_dir, "Output directory (default: the input directory)");
  add_workers(extract, ex.workers);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Synthesize labeled pages from an XML template");
  generate->add_option("config", gen.config, "Template XML")->required()->check(CLI::ExistingFile);
  generate->add_option("--pages", gen.pages, "Number of pages")->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
  generate->add_option("--out", gen.out_dir, "Output directory")->capture_default_str();
  generate->add_option("--backgrounds", gen.backgrounds,
                       "Directory of background PNGs (default: blank paper)")
      ->check(CLI::ExistingDirectory);
  generate->add_option("--font-dir", gen.font_dir, "Font directory (default: $RECFORGE_FONT_DIR or bundled)");
  generate->add_option("--p-cont", gen.p_cont, "Override the record continuation probability")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_flag("--no-groundtruth", gen.no_groundtruth, "Skip groundtruth/*.json");
  add_workers(generate, gen.workers);

  AugmentArgs aug;
  auto* augment = app.add_subcommand("augment", "Add rotated, noisy variants of every page");
  augment->add_option("manifest", aug.manifest, "Input manifest.jsonl")->required()->check(CLI::ExistingFile);
  augment->add_option("--variants", aug.plan.variants_per_page, "Variants per page")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  augment->add_option("--rotation", aug.plan.rotation_range, "Maximum rotation in degrees")
      ->check(CLI::Range(0.0, 45.0))
      ->capture_default_str();
  augment->add_option("--salt-pepper", aug.plan.salt_pepper_probability, "Per-pixel flip probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  augment->add_flag("--no-originals", aug.no_originals, "Leave the source pages out of the output");
  augment->add_option("--seed", aug.seed, "Master seed")->capture_default_str();
  augment->add_option("--out", aug.out_dir, "Output directory")->capture_default_str();
  add_workers(augment, aug.workers);

  PreprocessArgs pre;
  auto* preprocess =
      app.add_subcommand("preprocess", "Rescale to 256x366 and binarize (Sauvola) for the model");
  preprocess->add_option("manifest", pre.manifest, "Input manifest.jsonl")->required()->check(CLI::ExistingFile);
  preprocess->add_option("--out", pre.out_dir, "Output directory")->capture_default_str();
  preprocess->add_option("--window", pre.sauvola.window, "Sauvola window (odd)")->capture_default_str();
  preprocess->add_option("--k", pre.sauvola.k, "Sauvola k")->capture_default_str();
  preprocess->add_option("--R", pre.sauvola.dynamic_range, "Sauvola dynamic range R")->capture_default_str();
  add_workers(preprocess, pre.workers);

  SplitArgs sp;
  auto* split = app.add_subcommand("split", "Assign folds (cv5) or train/validation/test partitions");
  split->add_option("manifest", sp.manifest, "Input manifest.jsonl")->required()->check(CLI::ExistingFile);
  split->add_option("--mode", sp.mode, "cv5 or benchmark")->required()->check(CLI::IsMember({"cv5", "benchmark"}));
  split->add_option("--folds", sp.folds, "Folds for cv5")->capture_default_str();
  split->add_option("--sizes", sp.sizes, "Partition sizes train,validation,test (default 150,10,40)");
  split->add_option("--seed", sp.seed, "Shuffle seed")->capture_default_str();
  split->add_option("--out", sp.out_dir, "Output directory (default: next to the manifest)");

  EvaluateArgs ev;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score predictions against a manifest");
  evaluate_cmd->add_option("manifest", ev.manifest, "Manifest with labels")->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("predictions", ev.predictions, "predictions.jsonl")->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--report", ev.report, "JSON report path (default: <predictions>.report.json)");
  evaluate_cmd->add_option("--group", ev.group, "auto, fold, partition or none")
      ->check(CLI::IsMember({"auto", "fold", "partition", "none"}))
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*extract) return do_extract(ex, out);
    if (*generate) return do_generate(gen, out);
    if (*augment) return do_augment(aug, out);
    if (*preprocess) return do_preprocess(pre, out);
    if (*split) return do_split(sp, out);
    if (*evaluate_cmd) return do_evaluate(ev, out);
  } catch (const std::exception& e) {
    err << "recforge: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace recforge
