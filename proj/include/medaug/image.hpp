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
#ifndef MEDAUG_IMAGE_HPP_
#define MEDAUG_IMAGE_HPP_

#include <cstdint>
#include <set>
#include <vector>

namespace medaug {

/**
 * @brief An 8-bit image with interleaved channels in row-major order.
 *
 * The pixel at (x, y) in channel c lives at data[(y * width + x) * channels + c].
 * channels is 1 (grayscale) or 3 (RGB); intensities span [0, 255].
 */
struct Image {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> data;

  Image() = default;
  Image(int w, int h, int c, std::uint8_t fill = 0)
      : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * h * c, fill) {}

  std::uint8_t at(int x, int y, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  void set(int x, int y, int c, std::uint8_t v) {
    data[(static_cast<std::size_t>(y) * width + x) * channels + c] = v;
  }

  bool valid() const {
    return width > 0 && height > 0 && (channels == 1 || channels == 3) &&
           data.size() == static_cast<std::size_t>(width) * height * channels;
  }

  bool operator==(const Image&) const = default;
};

/**
 * @brief A single-channel label map paired with an Image of equal size.
 *
 * Each distinct intensity is a class label; 0 is background. Masks receive
 * spatial transforms only and are resampled with nearest-neighbor.
 */
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  Mask() = default;
  Mask(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t at(int x, int y) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  void set(int x, int y, std::uint8_t v) {
    data[static_cast<std::size_t>(y) * width + x] = v;
  }

  bool valid() const {
    return width > 0 && height > 0 &&
           data.size() == static_cast<std::size_t>(width) * height;
  }

  /// Set of distinct label values present.
  std::set<std::uint8_t> labels() const {
    return {data.begin(), data.end()};
  }

  bool operator==(const Mask&) const = default;
};

}  // namespace medaug

#endif  // MEDAUG_IMAGE_HPP_
