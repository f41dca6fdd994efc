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
#include "medaug/level.hpp"

#include <cassert>
#include <cmath>

#include "medaug/error.hpp"

namespace medaug {

int odd_ceiling(double x) {
  assert(x > 0.0);
  const int c = static_cast<int>(std::ceil(x));
  return (c % 2 == 1) ? c : c + 1;
}

MagnitudeBound magnitude_bound(OpKind kind, Level level) {
  const double l = static_cast<double>(level.value());
  MagnitudeBound b;
  b.kind = kind;
  switch (kind) {
    case OpKind::brightness:
    case OpKind::contrast:
      // single limit read as a symmetric range, expectation stays at identity
      b.lower = -0.04 * l;
      b.upper = 0.04 * l;
      break;
    case OpKind::posterize: {
      const double bits = std::floor(8.0 - 0.8 * l);
      b.lower = bits;
      b.upper = bits;
      break;
    }
    case OpKind::sharpness:
      b.lower = 0.04 * l;
      b.upper = 0.1 * l;
      break;
    case OpKind::gaussian_blur:
      b.lower = 3.0;
      b.upper = static_cast<double>(odd_ceiling(3.0 + 0.8 * l));
      break;
    case OpKind::gaussian_noise:
      b.lower = 2.0 * l;
      b.upper = 10.0 * l;
      break;
    case OpKind::rotate:
      b.lower = -4.0 * l;
      b.upper = 4.0 * l;
      break;
    case OpKind::scale:
      b.lower = 1.0 - 0.04 * l;
      b.upper = 1.0 + 0.04 * l;
      break;
    case OpKind::translate_x:
    case OpKind::translate_y:
      // percent of the image dimension, sign drawn per application
      b.lower = 0.0;
      b.upper = 2.0 * l;
      b.is_signed = true;
      break;
    case OpKind::shear_x:
    case OpKind::shear_y:
      b.lower = 0.0;
      b.upper = 0.02 * l;
      b.is_signed = true;
      break;
    case OpKind::hflip:
    case OpKind::vflip:
      b.has_magnitude = false;
      break;
    default:
      throw Error(Errc::unknown_operation,
                  "no magnitude mapping for operation id " +
                      std::to_string(static_cast<int>(kind)));
  }
  return b;
}

double op_probability(Level level) { return 0.2 * level.value(); }

}  // namespace medaug
