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
#ifndef MEDAUG_OPS_HPP_
#define MEDAUG_OPS_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>

#include "medaug/image.hpp"

namespace medaug {

/// The fourteen transforms: six pixel-space, eight spatial-space.
enum class OpKind {
  // pixel space
  brightness,
  contrast,
  posterize,
  sharpness,
  gaussian_blur,
  gaussian_noise,
  // spatial space
  rotate,
  hflip,
  vflip,
  scale,
  translate_x,
  translate_y,
  shear_x,
  shear_y,
};

inline constexpr std::array<OpKind, 6> kPixelSpace = {
    OpKind::brightness,    OpKind::contrast,      OpKind::posterize,
    OpKind::sharpness,     OpKind::gaussian_blur, OpKind::gaussian_noise,
};

inline constexpr std::array<OpKind, 8> kSpatialSpace = {
    OpKind::rotate,      OpKind::hflip,       OpKind::vflip,   OpKind::scale,
    OpKind::translate_x, OpKind::translate_y, OpKind::shear_x, OpKind::shear_y,
};

inline constexpr std::array<OpKind, 14> kAllOps = {
    OpKind::brightness,  OpKind::contrast,      OpKind::posterize,
    OpKind::sharpness,   OpKind::gaussian_blur, OpKind::gaussian_noise,
    OpKind::rotate,      OpKind::hflip,         OpKind::vflip,
    OpKind::scale,       OpKind::translate_x,   OpKind::translate_y,
    OpKind::shear_x,     OpKind::shear_y,
};

inline constexpr bool is_pixel_op(OpKind k) {
  return k == OpKind::brightness || k == OpKind::contrast ||
         k == OpKind::posterize || k == OpKind::sharpness ||
         k == OpKind::gaussian_blur || k == OpKind::gaussian_noise;
}

inline constexpr bool has_magnitude(OpKind k) {
  return k != OpKind::hflip && k != OpKind::vflip;
}

std::string_view op_name(OpKind k);

/**
 * @brief One sampled operation with its concrete magnitude.
 *
 * The magnitude meaning is per-kind: brightness/contrast a signed factor
 * delta, posterize the bits kept, sharpness the blend alpha, blur the odd
 * kernel size, noise the variance, rotate/shear degrees, scale a factor and
 * translate a signed percentage of the image dimension. Flips carry none.
 * noise_seed identifies the dedicated stream gaussian_noise draws from, so
 * a materialized spec fully determines its output. enabled=false marks an
 * op replaced by the identity after probability gating.
 */
struct OpSpec {
  OpKind kind = OpKind::brightness;
  std::optional<double> magnitude;
  std::uint64_t noise_seed = 0;
  bool enabled = true;
};

/// Dest->source affine map: sx = a*x + b*y + c, sy = d*x + e*y + f.
struct AffineMap {
  double a = 1, b = 0, c = 0;
  double d = 0, e = 1, f = 0;
};

/// The inverse map a spatial OpSpec applies; image and mask both sample
/// through this exact matrix, which is what keeps their geometry in sync.
AffineMap spatial_map(const OpSpec& spec, int width, int height);

/// Applies a pixel-space op. Masks are never passed here by construction.
Image apply_pixel(const OpSpec& spec, const Image& image);

/// Applies a spatial-space op to image (bilinear) and mask (nearest) with
/// identical geometric parameters. Out-of-frame samples fill with 0 and
/// output dimensions are unchanged.
std::pair<Image, std::optional<Mask>> apply_spatial(
    const OpSpec& spec, const Image& image,
    const std::optional<Mask>& mask = std::nullopt);

/// Round half away from zero, clamp to [0, 255].
inline std::uint8_t quantize(double v) {
  long r = std::lround(v);
  if (r < 0) r = 0;
  if (r > 255) r = 255;
  return static_cast<std::uint8_t>(r);
}

}  // namespace medaug

#endif  // MEDAUG_OPS_HPP_
