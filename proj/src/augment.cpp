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

#include "recforge/augment.hpp"

#include "recforge/error.hpp"
#include "recforge/noise.hpp"
#include "recforge/parallel.hpp"
#include "recforge/png_io.hpp"
#include "recforge/transform.hpp"

namespace recforge {

void validate_plan(const AugmentationPlan& plan) {
  if (plan.variants_per_page < 0) throw ParameterError("variants_per_page must be >= 0");
  if (!(plan.rotation_range >= 0.0 && plan.rotation_range <= 45.0))
    throw ParameterError("rotation range must lie in [0, 45] degrees");
  if (!(plan.salt_pepper_probability >= 0.0 && plan.salt_pepper_probability <= 1.0))
    throw ParameterError("salt and pepper probability must lie in [0, 1]");
}

RasterPage augment_image(const RasterPage& img, const AugmentationPlan& plan, Rng& rng) {
  const double angle = rng.uniform(-plan.rotation_range, plan.rotation_range);
  RasterPage out = rotate(img, angle);
  return add_salt_pepper(out, plan.salt_pepper_probability, rng);
}

AugmentSummary augment_set(const Manifest& manifest, const AugmentationPlan& plan,
                           std::uint64_t seed, const std::filesystem::path& out_dir, int workers) {
  validate_plan(plan);
  std::filesystem::create_directories(out_dir / "pages");
  const std::size_t per_page =
      static_cast<std::size_t>(plan.variants_per_page) + (plan.include_originals ? 1 : 0);

  std::vector<std::vector<ManifestEntry>> produced(manifest.size());
  std::vector<std::string> errors(manifest.size());

  parallel_for(manifest.size(), workers, [&](std::size_t i) {
    const ManifestEntry& source = manifest.entries[i];
    try {
      const auto source_path = manifest.resolve(source);
      const RasterPage img = read_png(source_path);
      const std::string stem = std::filesystem::path(source.path).stem().string();
      std::vector<ManifestEntry> out;
      out.reserve(per_page);

      if (plan.include_originals) {
        ManifestEntry copy = source;
        copy.path = "pages/" + std::filesystem::path(source.path).filename().string();
        const auto target = out_dir / copy.path;
        if (!std::filesystem::exists(target) || !std::filesystem::equivalent(source_path, target))
          std::filesystem::copy_file(source_path, target,
                                     std::filesystem::copy_options::overwrite_existing);
        out.push_back(std::move(copy));
      }

      const std::uint64_t page_seed = derive_seed(seed, i);
      for (int k = 1; k <= plan.variants_per_page; ++k) {
        const std::uint64_t variant_seed = derive_seed(page_seed, static_cast<std::uint64_t>(k));
        Rng rng(variant_seed);
        ManifestEntry variant = source;
        variant.page_id = source.page_id + "_aug" + std::to_string(k);
        variant.path = "pages/" + stem + "_aug" + std::to_string(k) + ".png";
        variant.seed = variant_seed;
        variant.source = source.page_id;
        write_png(out_dir / variant.path, augment_image(img, plan, rng));
        out.push_back(std::move(variant));
      }
      produced[i] = std::move(out);
    } catch (const std::exception& e) {
      errors[i] = source.page_id + ": " + e.what();
    }
  });

  AugmentSummary summary;
  summary.entries.reserve(manifest.size() * per_page);
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    if (!errors[i].empty()) {
      summary.failures.push_back(errors[i]);
      continue;
    }
    for (auto& e : produced[i]) summary.entries.push_back(std::move(e));
  }
  summary.manifest_path = out_dir / "manifest.jsonl";
  write_manifest(summary.manifest_path, summary.entries);
  return summary;
}

}  // namespace recforge
