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
#ifndef MEDAUG_TESTS_TEST_UTIL_HPP_
#define MEDAUG_TESTS_TEST_UTIL_HPP_

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "medaug/image.hpp"
#include "medaug/rng.hpp"

namespace medaug::testing {

namespace fs = std::filesystem;

/// Self-removing scratch directory under the system temp root.
class TempDir {
 public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    path_ = fs::temp_directory_path() /
            ("medaug_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter.fetch_add(1)));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& rel) const { return path_ / rel; }

 private:
  fs::path path_;
};

inline Image random_image(int w, int h, int channels, Rng& rng) {
  Image img(w, h, channels);
  for (auto& v : img.data)
    v = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
  return img;
}

/// Coarse block labels over a 0 background; a coordinate grid in mask form.
inline Mask grid_mask(int w, int h, int cellexp = 3) {
  Mask mask(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      mask.set(x, y,
               static_cast<std::uint8_t>(
                   (((y >> cellexp) * 5 + (x >> cellexp)) % 4) * 60));
  return mask;
}

/// Map of relative path -> file bytes for whole-tree comparisons, ignoring
/// dotfiles so a leftover journal never masks a real difference.
inline std::map<std::string, std::vector<char>> tree_contents(
    const fs::path& root) {
  std::map<std::string, std::vector<char>> out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().filename().string().starts_with(".")) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::vector<char> bytes((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
    out.emplace(fs::relative(entry.path(), root).generic_string(),
                std::move(bytes));
  }
  return out;
}

inline int max_abs_diff(const Image& a, const Image& b) {
  int worst = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const int d = std::abs(static_cast<int>(a.data[i]) -
                           static_cast<int>(b.data[i]));
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace medaug::testing

#endif  // MEDAUG_TESTS_TEST_UTIL_HPP_
