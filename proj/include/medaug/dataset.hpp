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
#ifndef MEDAUG_DATASET_HPP_
#define MEDAUG_DATASET_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "medaug/sampler.hpp"

namespace medaug {

struct Sample {
  std::filesystem::path image_path;
  std::optional<std::filesystem::path> mask_path;  // segmentation only
  std::optional<std::string> class_label;          // classification only
  std::size_t index = 0;                           // ordinal within manifest
};

/// Enumeration of samples in lexicographic path order, stable across
/// platforms and repeated scans.
struct DatasetManifest {
  std::vector<Sample> samples;
  TaskKind task = TaskKind::classification;
  std::vector<std::string> class_set;  // sorted, classification only

  std::size_t size() const { return samples.size(); }
};

struct SplitAssignment {
  std::vector<Sample> train;
  std::vector<Sample> val;
  std::vector<Sample> test;
  std::array<double, 3> ratios{};
  std::vector<std::string> warnings;  // degenerate classes, one line each
};

/// Scans a dataset root. Classification layout: one subdirectory per class
/// holding image files. Segmentation layout: images/ and masks/
/// subdirectories paired by file stem.
DatasetManifest scan_dataset(const std::filesystem::path& root, TaskKind task);

/// Stratified split: each class is shuffled under a stream derived from
/// (seed, class name) and cut at the ratio boundaries with largest-remainder
/// rounding, so per-class counts deviate from the exact ratio by at most one
/// sample. Classes smaller than the number of nonzero splits go entirely to
/// train and are reported in warnings.
SplitAssignment split_dataset(const DatasetManifest& manifest,
                              const std::array<double, 3>& ratios,
                              std::uint64_t seed);

}  // namespace medaug

#endif  // MEDAUG_DATASET_HPP_
