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
#include "medaug/ops.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "medaug/error.hpp"
#include "medaug/rng.hpp"

namespace medaug {
namespace {

double require_magnitude(const OpSpec& spec) {
  if (!spec.magnitude)
    throw Error(Errc::missing_magnitude, std::string(op_name(spec.kind)));
  return *spec.magnitude;
}

Image map_intensities(const Image& image, const std::array<std::uint8_t, 256>& lut) {
  Image out = image;
  for (auto& v : out.data) v = lut[v];
  return out;
}

Image apply_brightness(const Image& image, double m) {
  std::array<std::uint8_t, 256> lut;
  for (int v = 0; v < 256; ++v) lut[v] = quantize(v * (1.0 + m));
  return map_intensities(image, lut);
}

Image apply_contrast(const Image& image, double m) {
  std::array<std::uint8_t, 256> lut;
  for (int v = 0; v < 256; ++v)
    lut[v] = quantize((v - 127.5) * (1.0 + m) + 127.5);
  return map_intensities(image, lut);
}

Image apply_posterize(const Image& image, int bits) {
  if (bits < 1 || bits > 8)
    throw Error(Errc::magnitude_out_of_bound,
                "posterize bits " + std::to_string(bits));
  const auto keep = static_cast<std::uint8_t>(0xFF << (8 - bits));
  std::array<std::uint8_t, 256> lut;
  for (int v = 0; v < 256; ++v) lut[v] = static_cast<std::uint8_t>(v & keep);
  return map_intensities(image, lut);
}

inline int clamp_idx(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

// 3x3 sharpening convolution [[-1,-1,-1],[-1,9,-1],[-1,-1,-1]], replicated
// borders, blended into the source by alpha before the single final rounding.
Image apply_sharpness(const Image& image, double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw Error(Errc::magnitude_out_of_bound,
                "sharpness alpha " + std::to_string(alpha));
  Image out(image.width, image.height, image.channels);
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      for (int c = 0; c < image.channels; ++c) {
        double acc = 0.0;
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx)
            acc -= image.at(clamp_idx(x + dx, image.width),
                            clamp_idx(y + dy, image.height), c);
        acc += 10.0 * image.at(x, y, c);  // center weight 9 = -1 + 10
        const double v = (1.0 - alpha) * image.at(x, y, c) + alpha * acc;
        out.set(x, y, c, quantize(v));
      }
    }
  }
  return out;
}

std::vector<double> gaussian_kernel(int ksize) {
  const double sigma = 0.3 * ((ksize - 1) * 0.5 - 1.0) + 0.8;
  const int r = ksize / 2;
  std::vector<double> w(static_cast<std::size_t>(ksize));
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    w[static_cast<std::size_t>(i + r)] =
        std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    sum += w[static_cast<std::size_t>(i + r)];
  }
  for (auto& v : w) v /= sum;
  return w;
}

// Separable pass structure; intensities stay floating until the final pass.
Image apply_gaussian_blur(const Image& image, int ksize) {
  if (ksize < 3 || ksize % 2 == 0)
    throw Error(Errc::magnitude_out_of_bound,
                "blur kernel " + std::to_string(ksize));
  const std::vector<double> w = gaussian_kernel(ksize);
  const int r = ksize / 2;
  const std::size_t plane =
      static_cast<std::size_t>(image.width) * image.height * image.channels;

  std::vector<double> tmp(plane, 0.0);
  const auto idx = [&](int x, int y, int c) {
    return (static_cast<std::size_t>(y) * image.width + x) * image.channels + c;
  };
  for (int y = 0; y < image.height; ++y)
    for (int x = 0; x < image.width; ++x)
      for (int c = 0; c < image.channels; ++c) {
        double acc = 0.0;
        for (int k = -r; k <= r; ++k)
          acc += w[static_cast<std::size_t>(k + r)] *
                 image.at(clamp_idx(x + k, image.width), y, c);
        tmp[idx(x, y, c)] = acc;
      }

  Image out(image.width, image.height, image.channels);
  for (int y = 0; y < image.height; ++y)
    for (int x = 0; x < image.width; ++x)
      for (int c = 0; c < image.channels; ++c) {
        double acc = 0.0;
        for (int k = -r; k <= r; ++k)
          acc += w[static_cast<std::size_t>(k + r)] *
                 tmp[idx(x, clamp_idx(y + k, image.height), c)];
        out.set(x, y, c, quantize(acc));
      }
  return out;
}

Image apply_gaussian_noise(const Image& image, double variance,
                           std::uint64_t noise_seed) {
  if (variance <= 0.0)
    throw Error(Errc::magnitude_out_of_bound,
                "noise variance " + std::to_string(variance));
  const double sigma = std::sqrt(variance);
  Rng rng(noise_seed);
  Image out = image;
  // draws follow data order: row-major, channel-minor, independent per channel
  for (auto& v : out.data) v = quantize(v + sigma * rng.normal());
  return out;
}

constexpr double kDegToRad = std::numbers::pi / 180.0;

}  // namespace

std::string_view op_name(OpKind k) {
  switch (k) {
    case OpKind::brightness: return "brightness";
    case OpKind::contrast: return "contrast";
    case OpKind::posterize: return "posterize";
    case OpKind::sharpness: return "sharpness";
    case OpKind::gaussian_blur: return "gaussian_blur";
    case OpKind::gaussian_noise: return "gaussian_noise";
    case OpKind::rotate: return "rotate";
    case OpKind::hflip: return "hflip";
    case OpKind::vflip: return "vflip";
    case OpKind::scale: return "scale";
    case OpKind::translate_x: return "translate_x";
    case OpKind::translate_y: return "translate_y";
    case OpKind::shear_x: return "shear_x";
    case OpKind::shear_y: return "shear_y";
  }
  return "unknown";
}

Image apply_pixel(const OpSpec& spec, const Image& image) {
  if (!is_pixel_op(spec.kind))
    throw Error(Errc::unknown_operation,
                std::string(op_name(spec.kind)) + " is not a pixel op");
  if (!spec.enabled) return image;
  switch (spec.kind) {
    case OpKind::brightness:
      return apply_brightness(image, require_magnitude(spec));
    case OpKind::contrast:
      return apply_contrast(image, require_magnitude(spec));
    case OpKind::posterize:
      return apply_posterize(image,
                             static_cast<int>(require_magnitude(spec)));
    case OpKind::sharpness:
      return apply_sharpness(image, require_magnitude(spec));
    case OpKind::gaussian_blur:
      return apply_gaussian_blur(image,
                                 static_cast<int>(require_magnitude(spec)));
    case OpKind::gaussian_noise:
      return apply_gaussian_noise(image, require_magnitude(spec),
                                  spec.noise_seed);
    default:
      throw Error(Errc::unknown_operation, std::string(op_name(spec.kind)));
  }
}

AffineMap spatial_map(const OpSpec& spec, int width, int height) {
  const double cx = (width - 1) / 2.0;
  const double cy = (height - 1) / 2.0;
  AffineMap m;
  switch (spec.kind) {
    case OpKind::rotate: {
      // positive angles rotate content clockwise in image coordinates
      const double t = require_magnitude(spec) * kDegToRad;
      const double ca = std::cos(t), sa = std::sin(t);
      m.a = ca;
      m.b = sa;
      m.c = cx - ca * cx - sa * cy;
      m.d = -sa;
      m.e = ca;
      m.f = cy + sa * cx - ca * cy;
      break;
    }
    case OpKind::hflip:
      m.a = -1.0;
      m.c = static_cast<double>(width - 1);
      break;
    case OpKind::vflip:
      m.e = -1.0;
      m.f = static_cast<double>(height - 1);
      break;
    case OpKind::scale: {
      const double f = require_magnitude(spec);
      if (f <= 0.0)
        throw Error(Errc::magnitude_out_of_bound,
                    "scale factor " + std::to_string(f));
      m.a = 1.0 / f;
      m.e = 1.0 / f;
      m.c = cx - cx / f;
      m.f = cy - cy / f;
      break;
    }
    case OpKind::translate_x:
      m.c = -(require_magnitude(spec) / 100.0) * width;
      break;
    case OpKind::translate_y:
      m.f = -(require_magnitude(spec) / 100.0) * height;
      break;
    case OpKind::shear_x: {
      const double t = std::tan(require_magnitude(spec) * kDegToRad);
      m.b = -t;
      m.c = t * cy;
      break;
    }
    case OpKind::shear_y: {
      const double t = std::tan(require_magnitude(spec) * kDegToRad);
      m.d = -t;
      m.f = t * cx;
      break;
    }
    default:
      throw Error(Errc::unknown_operation,
                  std::string(op_name(spec.kind)) + " is not a spatial op");
  }
  return m;
}

std::pair<Image, std::optional<Mask>> apply_spatial(
    const OpSpec& spec, const Image& image, const std::optional<Mask>& mask) {
  if (is_pixel_op(spec.kind))
    throw Error(Errc::unknown_operation,
                std::string(op_name(spec.kind)) + " is not a spatial op");
  if (mask && (mask->width != image.width || mask->height != image.height))
    throw Error(Errc::dimension_mismatch,
                "mask " + std::to_string(mask->width) + "x" +
                    std::to_string(mask->height) + " vs image " +
                    std::to_string(image.width) + "x" +
                    std::to_string(image.height));
  if (!spec.enabled) return {image, mask};

  const int w = image.width, h = image.height;
  // one matrix feeds both resamplers: identical geometry by construction
  const AffineMap m = spatial_map(spec, w, h);

  Image out_img(w, h, image.channels);
  const auto tap = [&](int x, int y, int c) -> double {
    if (x < 0 || x >= w || y < 0 || y >= h) return 0.0;
    return image.at(x, y, c);
  };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double sx = m.a * x + m.b * y + m.c;
      const double sy = m.d * x + m.e * y + m.f;
      const int x0 = static_cast<int>(std::floor(sx));
      const int y0 = static_cast<int>(std::floor(sy));
      const double fx = sx - x0;
      const double fy = sy - y0;
      for (int c = 0; c < image.channels; ++c) {
        const double v = (1.0 - fx) * (1.0 - fy) * tap(x0, y0, c) +
                         fx * (1.0 - fy) * tap(x0 + 1, y0, c) +
                         (1.0 - fx) * fy * tap(x0, y0 + 1, c) +
                         fx * fy * tap(x0 + 1, y0 + 1, c);
        out_img.set(x, y, c, quantize(v));
      }
    }
  }

  std::optional<Mask> out_mask;
  if (mask) {
    Mask warped(w, h);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double sx = m.a * x + m.b * y + m.c;
        const double sy = m.d * x + m.e * y + m.f;
        const int nx = static_cast<int>(std::ceil(sx - 0.5));
        const int ny = static_cast<int>(std::ceil(sy - 0.5));
        warped.set(x, y, (nx < 0 || nx >= w || ny < 0 || ny >= h)
                             ? 0
                             : mask->at(nx, ny));
      }
    }
    out_mask = std::move(warped);
  }
  return {std::move(out_img), std::move(out_mask)};
}

}  // namespace medaug
