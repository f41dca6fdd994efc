/**
 * Copyright 2026 The medaugment-cpp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "medaug/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "medaug/codec.hpp"
#include "medaug/error.hpp"
#include "medaug/resize.hpp"
#include "medaug/version.hpp"

namespace medaug {
namespace {

namespace fs = std::filesystem;

std::string branch_suffix(int branch_index) {
  return branch_index < 0 ? "_orig"
                          : "_b" + std::to_string(branch_index);
}

nlohmann::json run_metadata(const AugConfig& config) {
  return nlohmann::json{
      {"seed", config.seed},
      {"level", config.level.value()},
      {"branches", config.branches},
      {"include_original", config.include_original},
      {"task",
       config.task == TaskKind::classification ? "classification"
                                               : "segmentation"},
      {"space_mode",
       config.space_mode == SpaceMode::split ? "split" : "merged"},
      {"tool_version", kVersion},
  };
}

}  // namespace

std::pair<Image, std::optional<Mask>> apply_plan(
    const BranchPlan& plan, const Image& image,
    const std::optional<Mask>& mask) {
  Image img = image;
  std::optional<Mask> msk = mask;
  for (const OpSpec& op : plan.ops) {
    if (!op.enabled) continue;
    if (is_pixel_op(op.kind)) {
      img = apply_pixel(op, img);  // the mask is never touched here
    } else {
      auto warped = apply_spatial(op, img, msk);
      img = std::move(warped.first);
      msk = std::move(warped.second);
    }
  }
  return {std::move(img), std::move(msk)};
}

std::vector<BranchOutput> augment_image(const Image& image,
                                        const std::optional<Mask>& mask,
                                        std::uint64_t image_index,
                                        const AugConfig& config) {
  if (config.task == TaskKind::segmentation && !mask)
    throw Error(Errc::unpaired_mask,
                "segmentation task needs a mask alongside the image");

  std::vector<BranchOutput> outputs;
  outputs.reserve(static_cast<std::size_t>(config.branches) + 1);
  for (BranchPlan& plan : plan_image_branches(config, image_index)) {
    auto [img, msk] = apply_plan(plan, image, mask);
    outputs.push_back(
        BranchOutput{std::move(img), std::move(msk), std::move(plan)});
  }
  if (config.include_original) {
    BranchPlan passthrough;
    passthrough.branch_index = -1;
    outputs.push_back(BranchOutput{image, mask, std::move(passthrough)});
  }
  return outputs;
}

std::vector<BranchOutput> augment_sample(const Sample& sample,
                                         const PipelineOptions& options) {
  Image image = load_image(sample.image_path);
  std::optional<Mask> mask;
  if (sample.mask_path) {
    mask = load_mask(*sample.mask_path);
    if (mask->width != image.width || mask->height != image.height)
      throw Error(Errc::dimension_mismatch,
                  sample.mask_path->string() + " does not match " +
                      sample.image_path.string());
  }
  if (options.resize_to > 0) {
    image = resize(image, options.resize_to, options.resize_to);
    if (mask) mask = resize_mask(*mask, options.resize_to, options.resize_to);
  }
  return augment_image(image, mask, sample.index, options.config);
}

RunSummary augment_dataset(const DatasetManifest& manifest,
                           const PipelineOptions& options,
                           const fs::path& out_root,
                           const std::function<void(std::size_t)>& progress) {
  if (manifest.samples.empty())
    throw Error(Errc::empty_dataset, "no samples to augment");

  std::error_code ec;
  fs::create_directories(out_root, ec);
  if (!fs::is_directory(out_root))
    throw Error(Errc::io_failure, "cannot create " + out_root.string());

  // resume support: stems journaled by an earlier partial run are skipped
  const fs::path journal_path = out_root / kJournalFile;
  std::set<std::string> done;
  if (fs::exists(journal_path)) {
    std::ifstream in(journal_path);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) done.insert(line);
  }
  std::ofstream journal(journal_path, std::ios::app);

  RunSummary summary;
  summary.outputs.task = manifest.task;
  summary.outputs.class_set = manifest.class_set;

  std::mutex mu;  // guards journal, summary counters, failure list
  std::atomic<std::size_t> cursor{0};
  std::atomic<std::size_t> completed{0};

  const auto out_paths = [&](const Sample& sample, int branch_index) {
    const std::string name =
        sample.image_path.stem().string() + branch_suffix(branch_index) +
        ".png";
    fs::path img_out, mask_out;
    if (manifest.task == TaskKind::classification) {
      img_out = out_root / sample.class_label.value_or("") / name;
    } else {
      img_out = out_root / "images" / name;
      mask_out = out_root / "masks" / name;
    }
    return std::pair{img_out, mask_out};
  };

  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= manifest.samples.size()) return;
      const Sample& sample = manifest.samples[i];
      const std::string key = sample.image_path.stem().string();
      {
        std::scoped_lock lock(mu);
        if (done.contains(key)) {
          ++summary.samples_skipped;
          continue;
        }
      }
      try {
        std::vector<BranchOutput> outputs = augment_sample(sample, options);
        std::size_t imgs = 0, msks = 0;
        std::vector<Sample> written;
        for (const BranchOutput& out : outputs) {
          const auto [img_path, mask_path] =
              out_paths(sample, out.plan.branch_index);
          save_image(out.image, img_path);
          ++imgs;
          Sample rec;
          rec.image_path = img_path;
          rec.class_label = sample.class_label;
          if (out.mask) {
            save_mask(*out.mask, mask_path);
            ++msks;
            rec.mask_path = mask_path;
          }
          written.push_back(std::move(rec));
        }
        std::scoped_lock lock(mu);
        journal << key << '\n';
        journal.flush();
        ++summary.samples_processed;
        summary.images_written += imgs;
        summary.masks_written += msks;
        for (Sample& rec : written)
          summary.outputs.samples.push_back(std::move(rec));
      } catch (const std::exception& e) {
        std::scoped_lock lock(mu);
        summary.failures.push_back(sample.image_path.string() + ": " +
                                   e.what());
      }
      const std::size_t finished = completed.fetch_add(1) + 1;
      if (progress && finished % 100 == 0) progress(finished);
    }
  };

  unsigned n_workers = options.workers > 0
                           ? static_cast<unsigned>(options.workers)
                           : std::thread::hardware_concurrency();
  if (n_workers == 0) n_workers = 1;
  if (n_workers > 1) {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  } else {
    worker();
  }

  std::sort(summary.outputs.samples.begin(), summary.outputs.samples.end(),
            [](const Sample& a, const Sample& b) {
              return a.image_path.string() < b.image_path.string();
            });
  for (std::size_t i = 0; i < summary.outputs.samples.size(); ++i)
    summary.outputs.samples[i].index = i;

  if (summary.failures.empty()) {
    std::ofstream meta(out_root / kRunMetadataFile);
    meta << run_metadata(options.config).dump(2) << '\n';
    journal.close();
    fs::remove(journal_path, ec);
  }
  return summary;
}

}  // namespace medaug
