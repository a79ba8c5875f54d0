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

// Acceptance suite. One PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "recforge/augment.hpp"
#include "recforge/background.hpp"
#include "recforge/config.hpp"
#include "recforge/dataset.hpp"
#include "recforge/layout.hpp"
#include "recforge/metrics.hpp"
#include "recforge/png_io.hpp"
#include "recforge/split.hpp"
#include "recforge/threshold.hpp"
#include "support.hpp"

namespace recforge {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;

constexpr double kMetricTolerance = 1e-12;
constexpr double kResidualLimit = 0.05;
constexpr std::size_t kBenchmarkPages = 1000;
constexpr std::uint64_t kSeed = kDefaultSeed;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

// Shared between the generation and determinism criteria.
TempDir workspace;
DatasetSummary first_run;
double first_run_seconds = 0.0;

std::vector<LabeledPrediction> make_items(const std::vector<int>& r, const std::vector<double>& p) {
  std::vector<LabeledPrediction> items;
  for (std::size_t i = 0; i < r.size(); ++i) items.push_back({"p" + std::to_string(i), r[i], p[i]});
  return items;
}

struct DirectMetrics {
  double accuracy, error, score;
};

DirectMetrics direct_metrics(const std::vector<LabeledPrediction>& items) {
  long double hits = 0, abs_err = 0, sum_r = 0, sum_p = 0;
  for (const auto& it : items) {
    const long double q = std::floor(static_cast<long double>(it.p) + 0.5L);
    if (q == it.r) hits += 1;
    abs_err += std::fabs(q - it.r);
    sum_r += it.r;
    sum_p += it.p;
  }
  return {static_cast<double>(hits / items.size()), static_cast<double>(abs_err / sum_r),
          static_cast<double>(std::fabs(sum_r - sum_p) / sum_r)};
}

std::vector<LabeledPrediction> random_instance(Rng& rng) {
  const auto n = rng.uniform_int(1, 300);
  std::vector<LabeledPrediction> items;
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const int r = static_cast<int>(rng.uniform_int(0, 12));
    double p = r + rng.uniform(-1.5, 1.5);
    if (rng.bernoulli(0.1)) p = r + 0.5;
    if (rng.bernoulli(0.1)) p = r;
    items.push_back({"p" + std::to_string(i), r, p});
    total += r;
  }
  if (total == 0) items.front().r = 3;
  return items;
}

bool close(double a, double b) { return std::fabs(a - b) <= kMetricTolerance; }

Outcome metrics_oracle() {
  Outcome o;
  Rng rng(1);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    const auto items = random_instance(rng);
    const MetricsReport m = compute_metrics(items);
    const DirectMetrics d = direct_metrics(items);
    if (!close(m.accuracy, d.accuracy) || !close(m.error, d.error) || !close(m.score, d.score))
      o.fail("instance " + std::to_string(i) + " disagrees with the direct formulas");
  }

  const std::vector<int> six(40, 6);
  std::vector<double> exact(six.begin(), six.end());
  MetricsReport m = compute_metrics(make_items(six, exact));
  if (m.accuracy != 1.0 || m.error != 0.0 || m.score != 0.0) o.fail("perfect predictor");

  std::vector<double> biased;
  for (int r : six) biased.push_back(r + 0.012);
  m = compute_metrics(make_items(six, biased));
  if (m.accuracy != 1.0 || m.error != 0.0 || !close(m.score, 0.002)) o.fail("biased perfect-rounding case");

  m = compute_metrics(make_items({5, 6, 6, 7}, {5.3, 5.6, 6.2, 7.4}));
  if (m.accuracy != 1.0 || m.error != 0.0 || !close(m.score, 0.5 / 24)) o.fail("[5,6,6,7] example");

  m = compute_metrics(make_items({5, 6}, {5.6, 6.1}));
  if (m.accuracy != 0.5 || !close(m.error, 1.0 / 11) || !close(m.score, 0.7 / 11)) o.fail("[5,6] example");

  if (o.ok) o.detail = "1000 random instances + 4 worked examples within 1e-12";
  return o;
}

Outcome metric_structure() {
  Outcome o;
  Rng rng(2);
  int perfect = 0;
  for (int i = 0; i < 2000 && o.ok; ++i) {
    auto items = random_instance(rng);
    if (i % 2) {
      for (auto& it : items) it.p = it.r + rng.uniform(-0.49, 0.49);
    }
    const MetricsReport m = compute_metrics(items);
    if ((m.accuracy == 1.0) != (m.error == 0.0)) o.fail("instance " + std::to_string(i));
    perfect += m.accuracy == 1.0;
  }
  std::vector<int> r(40);
  std::vector<double> p(40);
  for (int i = 0; i < 40; ++i) {
    r[i] = 5 + i % 3;
    p[i] = r[i] + 0.012;
  }
  const MetricsReport m = compute_metrics(make_items(r, p));
  if (m.accuracy != 1.0 || m.error != 0.0 || !(m.score > 0.0)) o.fail("biased case");
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d perfect-accuracy instances; biased case acc %.3f err %.3f score %.3f",
                  perfect, m.accuracy, m.error, m.score);
    o.detail = buf;
  }
  return o;
}

RasterPage mixed_image(Rng& rng, int w, int h) {
  RasterPage img(w, h);
  const bool two_modes = rng.bernoulli(0.5);
  const int a = static_cast<int>(rng.uniform_int(0, 120));
  const int b = static_cast<int>(rng.uniform_int(130, 255));
  const double share = rng.uniform(0.02, 0.6);
  for (auto& v : img.pixels()) {
    if (two_modes) {
      const int c = rng.bernoulli(share) ? a : b;
      v = static_cast<std::uint8_t>(std::clamp<std::int64_t>(c + rng.uniform_int(-25, 25), 0, 255));
    } else {
      v = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
    }
  }
  return img;
}

Outcome thresholding() {
  Outcome o;
  Rng rng(3);
  for (int i = 0; i < 100 && o.ok; ++i) {
    const RasterPage img =
        mixed_image(rng, static_cast<int>(rng.uniform_int(1, 64)), static_cast<int>(rng.uniform_int(1, 64)));
    if (otsu_threshold(img) != testing::otsu_oracle(img)) o.fail("Otsu image " + std::to_string(i));
  }
  for (int i = 0; i < 50 && o.ok; ++i) {
    const RasterPage img = mixed_image(rng, 64, 64);
    for (int window : {3, 15, 31}) {
      const SauvolaParams p{window, 0.2, 128.0};
      if (!(sauvola_binarize(img, p) == testing::sauvola_oracle(img, p)))
        o.fail("Sauvola image " + std::to_string(i) + " window " + std::to_string(window));
    }
  }
  if (o.ok) o.detail = "Otsu 100/100 images, Sauvola 50 images x 3 windows bit-identical";
  return o;
}

Outcome generation_soundness() {
  Outcome o;
  const PageTemplate t = load_config(testing::benchmark_config());
  const auto res = SynthesisResources::load(t, default_resource_paths());
  DatasetOptions opt;
  opt.workers = 1;
  const auto start = std::chrono::steady_clock::now();
  first_run = generate_dataset(t, kBenchmarkPages, res, kSeed, workspace / "run1", opt);
  first_run_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const Manifest m = read_manifest(first_run.manifest_path);
  if (m.size() != kBenchmarkPages) o.fail("manifest has " + std::to_string(m.size()) + " rows");
  std::map<int, int> histogram;
  for (std::size_t i = 0; i < m.size() && o.ok; ++i) {
    const ManifestEntry& e = m.entries[i];
    // Construction-time layout, replayed from the page seed.
    Rng layout_rng = Rng(derive_seed(kSeed, i)).split(1);
    const PageLayout layout = layout_page(t, layout_rng);
    const int built = static_cast<int>(layout.records.size());
    const int stored = groundtruth_record_count(workspace / "run1" / "groundtruth" / (e.page_id + ".json"));
    const std::string id = e.page_id + ": ";
    if (e.record_count != built) o.fail(id + "label " + std::to_string(e.record_count) + " vs built " + std::to_string(built));
    if (stored != built) o.fail(id + "ground truth disagrees");
    if (e.record_count < 3 || e.record_count > 9) o.fail(id + "label " + std::to_string(e.record_count) + " outside [3, 9]");
    if (built > 0) {
      const int last = layout.records.back().bottom_y;
      if (last < t.min_corpus_height || last > t.max_corpus_height)
        o.fail(id + "last bottom " + std::to_string(last));
      if (e.boxes.size() != layout.records.size() || e.boxes.back().y1 != last) o.fail(id + "boxes disagree");
    }
    ++histogram[e.record_count];
  }
  if (o.ok) {
    o.detail = "1000 pages, counts";
    for (const auto& [k, v] : histogram) o.detail += " " + std::to_string(k) + ":" + std::to_string(v);
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  if (first_run.entries.empty()) {
    o.fail("first run missing");
    return o;
  }
  const PageTemplate t = load_config(testing::benchmark_config());
  const auto res = SynthesisResources::load(t, default_resource_paths());
  DatasetOptions opt;
  opt.workers = 3;
  const auto second = generate_dataset(t, kBenchmarkPages, res, kSeed, workspace / "run2", opt);
  if (testing::read_file(first_run.manifest_path) != testing::read_file(second.manifest_path))
    o.fail("manifests differ");
  for (const auto& e : first_run.entries) {
    if (!o.ok) break;
    if (testing::read_file(workspace / "run1" / e.path) != testing::read_file(workspace / "run2" / e.path))
      o.fail(e.path + " differs");
    const fs::path gt = fs::path("groundtruth") / (e.page_id + ".json");
    if (testing::read_file(workspace / "run1" / gt) != testing::read_file(workspace / "run2" / gt))
      o.fail(gt.string() + " differs");
  }
  if (o.ok) o.detail = "1 worker vs 3 workers: 1000 PNGs, ground truth and manifest byte-identical";
  return o;
}

// Scanned-paper stand-in: slow shading plus grain.
RasterPage textured_paper(int w, int h, std::uint64_t seed) {
  Rng rng(seed);
  RasterPage img(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const double shade = 215 + 12 * std::sin(x / 90.0) * std::cos(y / 130.0);
      img.at(x, y) = static_cast<std::uint8_t>(std::clamp<double>(shade + rng.uniform_int(-6, 6), 0, 255));
    }
  return img;
}

Outcome background_extraction() {
  Outcome o;
  PageTemplate t = load_config(testing::benchmark_config());
  t.noise = NoiseSpec{};
  PalimpsestSet paper;
  paper.backgrounds.push_back(textured_paper(t.page_width, t.page_height, 4));
  paper.source_ids.emplace_back("paper");
  const auto res = SynthesisResources::load(t, default_resource_paths(), paper);

  std::uint64_t ink = 0, residual = 0;
  for (std::uint64_t i = 0; i < 20 && o.ok; ++i) {
    const RasterPage page = synthesize_page(t, res, derive_seed(kSeed + 1, i)).image;
    const std::uint8_t level = otsu_threshold(page);
    const RasterPage clean = extract_background(page);
    std::uint64_t page_ink = 0, page_left = 0;
    for (std::size_t k = 0; k < page.size(); ++k) {
      const auto before = page.pixels()[k];
      const auto after = clean.pixels()[k];
      if (before < level) {
        ++page_ink;
        page_left += after < level;
      } else if (after != before) {
        o.fail("page " + std::to_string(i) + ": background pixel changed");
        break;
      }
    }
    if (page_ink == 0) o.fail("page " + std::to_string(i) + " has no ink");
    if (page_left > kResidualLimit * page_ink) o.fail("page " + std::to_string(i) + " residual too high");
    ink += page_ink;
    residual += page_left;
  }
  if (o.ok) {
    char buf[120];
    std::snprintf(buf, sizeof buf, "20 pages, residual %llu of %llu ink pixels (%.4f%%)",
                  static_cast<unsigned long long>(residual), static_cast<unsigned long long>(ink),
                  100.0 * residual / ink);
    o.detail = buf;
  }
  return o;
}

Manifest subset(const Manifest& m, std::size_t from, std::size_t to) {
  Manifest out;
  out.dir = m.dir;
  out.entries.assign(m.entries.begin() + from, m.entries.begin() + to);
  return out;
}

Outcome check_augmented(const Manifest& source, const AugmentSummary& s, std::size_t expected) {
  Outcome o;
  if (!s.failures.empty()) o.fail(s.failures.front());
  if (s.entries.size() != expected)
    o.fail("expected " + std::to_string(expected) + " entries, got " + std::to_string(s.entries.size()));
  std::map<std::string, int> labels;
  for (const auto& e : source.entries) labels[e.page_id] = e.record_count;
  std::set<std::string> ids;
  for (const auto& e : s.entries) {
    const std::string origin = e.source.empty() ? e.page_id : e.source;
    const auto it = labels.find(origin);
    if (it == labels.end() || it->second != e.record_count) o.fail(e.page_id + ": label not preserved");
    if (!fs::exists(s.manifest_path.parent_path() / e.path)) o.fail(e.path + " missing");
    ids.insert(e.page_id);
  }
  if (ids.size() != s.entries.size()) o.fail("duplicate page ids");
  if (read_manifest(s.manifest_path).size() != expected) o.fail("manifest row count");
  return o;
}

Outcome augmentation() {
  Outcome o;
  const PageTemplate t = load_config(testing::benchmark_config());
  const auto res = SynthesisResources::load(t, default_resource_paths());
  const fs::path labeled = workspace / "labeled";
  generate_dataset(t, 160, res, kSeed + 2, labeled, DatasetOptions{1, false});
  const Manifest m = read_manifest(labeled / "manifest.jsonl");

  const AugmentationPlan plan;  // 8 variants plus the original
  auto s = augment_set(m, plan, kSeed, workspace / "aug160");
  Outcome all = check_augmented(m, s, 1440);
  if (!all.ok) o.fail("160 pages: " + all.detail);

  const Manifest train = subset(m, 0, 150);
  const Manifest validation = subset(m, 150, 160);
  s = augment_set(train, plan, kSeed, workspace / "aug_train");
  Outcome tr = check_augmented(train, s, 1350);
  if (!tr.ok) o.fail("150 pages: " + tr.detail);
  s = augment_set(validation, plan, kSeed, workspace / "aug_validation");
  Outcome va = check_augmented(validation, s, 90);
  if (!va.ok) o.fail("10 pages: " + va.detail);
  if (o.ok) o.detail = "160 -> 1440, 150 -> 1350, 10 -> 90, labels preserved";
  return o;
}

Outcome split_fidelity() {
  Outcome o;
  std::vector<ManifestEntry> entries;
  const std::vector<std::pair<int, int>> classes{{5, 44}, {6, 152}, {7, 4}};
  for (const auto& [label, n] : classes)
    for (int i = 0; i < n; ++i) {
      ManifestEntry e;
      e.page_id = "c" + std::to_string(label) + "_" + std::to_string(i);
      e.path = "pages/" + e.page_id + ".png";
      e.record_count = label;
      entries.push_back(e);
    }
  // Interleave so the input order carries no class structure.
  Rng rng(6);
  recforge::shuffle(entries.begin(), entries.end(), rng);

  const FoldAssignment folds = stratified_kfold(entries, 5, kSeed);
  std::map<int, int> size;
  std::map<int, std::map<int, int>> per_class;  // label -> fold -> pages
  for (std::size_t i = 0; i < entries.size(); ++i) {
    ++size[folds[i]];
    ++per_class[entries[i].record_count][folds[i]];
  }
  for (int f = 0; f < 5; ++f)
    if (size[f] < 39 || size[f] > 41) o.fail("fold " + std::to_string(f) + " has " + std::to_string(size[f]));
  for (auto& [label, counts] : per_class) {
    int lo = 1 << 30, hi = 0;
    for (int f = 0; f < 5; ++f) {
      lo = std::min(lo, counts[f]);
      hi = std::max(hi, counts[f]);
    }
    if (hi - lo > 1) o.fail("class " + std::to_string(label) + " imbalance " + std::to_string(hi - lo));
  }

  const auto parts = benchmark_split(entries, kSeed);
  std::map<std::string, int> psize;
  for (const auto& p : parts) ++psize[p];
  if (psize[kTrain] != 150 || psize[kValidation] != 10 || psize[kTest] != 40)
    o.fail("benchmark split " + std::to_string(psize[kTrain]) + "/" + std::to_string(psize[kValidation]) + "/" +
           std::to_string(psize[kTest]));
  if (o.ok) {
    o.detail = "folds";
    for (const auto& [f, n] : size) o.detail += " " + std::to_string(n);
    o.detail += "; benchmark 150/10/40";
  }
  return o;
}

}  // namespace
}  // namespace recforge

int main() {
  using namespace recforge;
  const std::vector<Criterion> criteria{
      {"metrics oracle equivalence", 5, metrics_oracle},
      {"metric structure", 1, metric_structure},
      {"thresholding oracles", 30, thresholding},
      {"generation label soundness", 300, generation_soundness},
      {"determinism", 600, determinism},
      {"background extraction efficacy", 60, background_extraction},
      {"augmentation arithmetic", 120, augmentation},
      {"split fidelity", 1, split_fidelity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // The determinism budget covers both generations.
    if (std::string(c.name) == "determinism") seconds += first_run_seconds;
    if (o.ok && seconds >= c.limit_seconds) o.fail("too slow");
    failed += !o.ok;
    std::printf("%s  %-32s %8.2f s (limit %g s)  %s\n", o.ok ? "PASS" : "FAIL", c.name, seconds, c.limit_seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
