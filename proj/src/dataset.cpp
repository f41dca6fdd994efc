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
#include "medaug/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "medaug/error.hpp"
#include "medaug/rng.hpp"

namespace medaug {
namespace {

namespace fs = std::filesystem;

bool is_image_file(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::vector<fs::path> list_image_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    if (p.filename().string().starts_with(".")) continue;
    if (is_image_file(p)) files.push_back(p);
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.string() < b.string();
            });
  return files;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = UINT64_C(0xCBF29CE484222325);
  for (unsigned char c : s) {
    h ^= c;
    h *= UINT64_C(0x100000001B3);
  }
  return h;
}

DatasetManifest scan_classification(const fs::path& root) {
  std::vector<fs::path> class_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory() &&
        !entry.path().filename().string().starts_with("."))
      class_dirs.push_back(entry.path());
    else if (entry.is_regular_file() && is_image_file(entry.path()))
      throw Error(Errc::mixed_layout,
                  "classification root holds loose image files; expected one "
                  "subdirectory per class: " +
                      entry.path().string());
  }
  std::sort(class_dirs.begin(), class_dirs.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.string() < b.string();
            });

  DatasetManifest manifest;
  manifest.task = TaskKind::classification;
  for (const fs::path& dir : class_dirs) {
    const std::string label = dir.filename().string();
    const std::vector<fs::path> files = list_image_files(dir);
    if (files.empty()) continue;
    manifest.class_set.push_back(label);
    std::set<std::string> stems;
    for (const fs::path& f : files) {
      // stems name the outputs, so they must be unique within a class
      if (!stems.insert(f.stem().string()).second)
        throw Error(Errc::mixed_layout,
                    "duplicate stem '" + f.stem().string() + "' in " +
                        dir.string());
      Sample s;
      s.image_path = f;
      s.class_label = label;
      manifest.samples.push_back(std::move(s));
    }
  }
  if (manifest.samples.empty())
    throw Error(Errc::empty_dataset, root.string());
  return manifest;
}

DatasetManifest scan_segmentation(const fs::path& root) {
  const fs::path images_dir = root / "images";
  const fs::path masks_dir = root / "masks";
  if (!fs::is_directory(images_dir) || !fs::is_directory(masks_dir))
    throw Error(Errc::mixed_layout,
                root.string() +
                    ": segmentation layout needs images/ and masks/");

  std::map<std::string, fs::path> masks;
  for (const fs::path& m : list_image_files(masks_dir)) {
    const std::string stem = m.stem().string();
    if (!masks.emplace(stem, m).second)
      throw Error(Errc::mixed_layout,
                  "duplicate mask stem '" + stem + "' in " +
                      masks_dir.string());
  }

  DatasetManifest manifest;
  manifest.task = TaskKind::segmentation;
  std::map<std::string, fs::path> images;
  for (const fs::path& f : list_image_files(images_dir)) {
    const std::string stem = f.stem().string();
    if (!images.emplace(stem, f).second)
      throw Error(Errc::mixed_layout,
                  "duplicate image stem '" + stem + "' in " +
                      images_dir.string());
    auto it = masks.find(stem);
    if (it == masks.end())
      throw Error(Errc::unpaired_mask,
                  f.string() + " has no mask counterpart");
    Sample s;
    s.image_path = f;
    s.mask_path = it->second;
    manifest.samples.push_back(std::move(s));
  }
  for (const auto& [stem, path] : masks)
    if (!images.contains(stem))
      throw Error(Errc::unpaired_mask,
                  path.string() + " has no image counterpart");
  if (manifest.samples.empty())
    throw Error(Errc::empty_dataset, root.string());
  return manifest;
}

}  // namespace

DatasetManifest scan_dataset(const fs::path& root, TaskKind task) {
  if (!fs::is_directory(root))
    throw Error(Errc::file_not_found, root.string() + " is not a directory");
  DatasetManifest manifest = task == TaskKind::classification
                                 ? scan_classification(root)
                                 : scan_segmentation(root);
  for (std::size_t i = 0; i < manifest.samples.size(); ++i)
    manifest.samples[i].index = i;
  return manifest;
}

SplitAssignment split_dataset(const DatasetManifest& manifest,
                              const std::array<double, 3>& ratios,
                              std::uint64_t seed) {
  double sum = 0.0;
  for (double r : ratios) {
    if (r < 0.0) throw std::invalid_argument("split ratios must be >= 0");
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("split ratios must sum to 1, got " +
                                std::to_string(sum));

  // group by class; segmentation degenerates to a single group
  std::map<std::string, std::vector<Sample>> groups;
  for (const Sample& s : manifest.samples)
    groups[s.class_label.value_or("")].push_back(s);

  int nonzero_splits = 0;
  for (double r : ratios)
    if (r > 0.0) ++nonzero_splits;

  SplitAssignment out;
  out.ratios = ratios;
  for (auto& [label, samples] : groups) {
    if (static_cast<int>(samples.size()) < nonzero_splits) {
      out.warnings.push_back("class '" + label + "' has only " +
                             std::to_string(samples.size()) +
                             " samples; assigned entirely to train");
      out.train.insert(out.train.end(), samples.begin(), samples.end());
      continue;
    }

    Rng rng = derive_stream(seed, fnv1a(label), 0);
    rng.shuffle(samples);

    // largest-remainder rounding of the per-split quotas
    const std::size_t n = samples.size();
    std::array<std::size_t, 3> counts{};
    std::array<double, 3> fractions{};
    std::size_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
      const double quota = static_cast<double>(n) * ratios[i];
      counts[i] = static_cast<std::size_t>(std::floor(quota));
      fractions[i] = quota - static_cast<double>(counts[i]);
      assigned += counts[i];
    }
    std::array<int, 3> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fractions[a] > fractions[b]; });
    for (std::size_t k = 0; k < n - assigned; ++k)
      ++counts[static_cast<std::size_t>(order[k % 3])];

    std::size_t pos = 0;
    for (auto* dst : {&out.train, &out.val, &out.test}) {
      const std::size_t take =
          counts[static_cast<std::size_t>(dst == &out.val
                                              ? 1
                                              : (dst == &out.test ? 2 : 0))];
      dst->insert(dst->end(), samples.begin() + static_cast<std::ptrdiff_t>(pos),
                  samples.begin() + static_cast<std::ptrdiff_t>(pos + take));
      pos += take;
    }
  }

  const auto by_index = [](const Sample& a, const Sample& b) {
    return a.index < b.index;
  };
  std::sort(out.train.begin(), out.train.end(), by_index);
  std::sort(out.val.begin(), out.val.end(), by_index);
  std::sort(out.test.begin(), out.test.end(), by_index);
  return out;
}

}  // namespace medaug
