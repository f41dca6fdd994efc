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
#include "medaug/resize.hpp"

#include <cmath>

#include "medaug/error.hpp"
#include "medaug/ops.hpp"

namespace medaug {
namespace {

// src = (dst + 0.5) * (src_len / dst_len) - 0.5, clamped into the frame.
double src_coord(int dst, int src_len, int dst_len) {
  const double s =
      (dst + 0.5) * (static_cast<double>(src_len) / dst_len) - 0.5;
  if (s < 0.0) return 0.0;
  const double hi = static_cast<double>(src_len - 1);
  return s > hi ? hi : s;
}

// Nearest index with .5 ties rounding toward the lower index.
int nearest_index(double s) { return static_cast<int>(std::ceil(s - 0.5)); }

void check_target(int target_w, int target_h) {
  if (target_w < 1 || target_h < 1)
    throw Error(Errc::zero_dimension,
                "resize target must be at least 1x1, got " +
                    std::to_string(target_w) + "x" + std::to_string(target_h));
}

}  // namespace

Image resize(const Image& image, int target_w, int target_h) {
  check_target(target_w, target_h);
  if (target_w == image.width && target_h == image.height) return image;

  Image out(target_w, target_h, image.channels);
  for (int y = 0; y < target_h; ++y) {
    const double sy = src_coord(y, image.height, target_h);
    const int y0 = static_cast<int>(std::floor(sy));
    const int y1 = y0 + 1 < image.height ? y0 + 1 : image.height - 1;
    const double fy = sy - y0;
    for (int x = 0; x < target_w; ++x) {
      const double sx = src_coord(x, image.width, target_w);
      const int x0 = static_cast<int>(std::floor(sx));
      const int x1 = x0 + 1 < image.width ? x0 + 1 : image.width - 1;
      const double fx = sx - x0;
      for (int c = 0; c < image.channels; ++c) {
        const double v = (1.0 - fx) * (1.0 - fy) * image.at(x0, y0, c) +
                         fx * (1.0 - fy) * image.at(x1, y0, c) +
                         (1.0 - fx) * fy * image.at(x0, y1, c) +
                         fx * fy * image.at(x1, y1, c);
        out.set(x, y, c, quantize(v));
      }
    }
  }
  return out;
}

Mask resize_mask(const Mask& mask, int target_w, int target_h) {
  check_target(target_w, target_h);
  if (target_w == mask.width && target_h == mask.height) return mask;

  Mask out(target_w, target_h);
  for (int y = 0; y < target_h; ++y) {
    const int sy = nearest_index(src_coord(y, mask.height, target_h));
    for (int x = 0; x < target_w; ++x) {
      const int sx = nearest_index(src_coord(x, mask.width, target_w));
      out.set(x, y, mask.at(sx, sy));
    }
  }
  return out;
}

}  // namespace medaug
