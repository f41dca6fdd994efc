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
#ifndef MEDAUG_PIPELINE_HPP_
#define MEDAUG_PIPELINE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "medaug/dataset.hpp"
#include "medaug/image.hpp"
#include "medaug/sampler.hpp"

namespace medaug {

/// Execution knobs that sit outside the sampling contract.
struct PipelineOptions {
  AugConfig config;
  int resize_to = 224;  // working resolution (square); 0 keeps source size
  int workers = 0;      // 0 = hardware concurrency
};

struct BranchOutput {
  Image image;
  std::optional<Mask> mask;
  BranchPlan plan;  // branch_index -1 for the pass-through original
};

/// Applies one materialized plan in order. Pixel ops bypass the mask by
/// construction; gated-out ops are identities.
std::pair<Image, std::optional<Mask>> apply_plan(
    const BranchPlan& plan, const Image& image,
    const std::optional<Mask>& mask = std::nullopt);

/// All branch outputs for one already-preprocessed image, plus the
/// untouched original when configured. The image index selects the
/// deterministic streams.
std::vector<BranchOutput> augment_image(const Image& image,
                                        const std::optional<Mask>& mask,
                                        std::uint64_t image_index,
                                        const AugConfig& config);

/// Loads, resizes to the working resolution, and augments one sample.
std::vector<BranchOutput> augment_sample(const Sample& sample,
                                         const PipelineOptions& options);

struct RunSummary {
  std::size_t samples_processed = 0;
  std::size_t samples_skipped = 0;  // found complete in the resume journal
  std::size_t images_written = 0;
  std::size_t masks_written = 0;
  std::vector<std::string> failures;  // per-sample errors, with path context
  DatasetManifest outputs;            // manifest of written files
};

/// Batch augmentation: writes every branch output plus originals under
/// out_root mirroring the input layout (<stem>_b<k>.png, <stem>_orig.png;
/// masks mirror image names), emits the run-metadata JSON, and returns the
/// output manifest. Partial runs leave a resumable journal that a rerun
/// picks up; it is removed once the run completes cleanly. Worker count
/// never affects the produced bytes.
RunSummary augment_dataset(const DatasetManifest& manifest,
                           const PipelineOptions& options,
                           const std::filesystem::path& out_root,
                           const std::function<void(std::size_t)>& progress =
                               nullptr);

/// Relative path of the run-metadata record inside out_root.
inline constexpr const char* kRunMetadataFile = "medaugment_run.json";
/// Relative path of the resume journal inside out_root.
inline constexpr const char* kJournalFile = ".medaug_journal";

}  // namespace medaug

#endif  // MEDAUG_PIPELINE_HPP_
