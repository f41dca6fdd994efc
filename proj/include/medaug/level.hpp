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
#ifndef MEDAUG_LEVEL_HPP_
#define MEDAUG_LEVEL_HPP_

#include <stdexcept>

#include "medaug/ops.hpp"

namespace medaug {

/// The single augmentation-strength hyperparameter, l in {1..5}.
/// Every operation's maximum magnitude and the shared application
/// probability derive from it.
class Level {
 public:
  explicit Level(int l) : l_(l) {
    if (l < 1 || l > 5)
      throw std::invalid_argument("augmentation level must be in 1..5, got " +
                                  std::to_string(l));
  }
  int value() const { return l_; }

 private:
  int l_;
};

/**
 * @brief Level-dependent magnitude range for one operation.
 *
 * The concrete magnitude is drawn uniformly from [lower, upper]; when
 * is_signed is set a uniformly random sign is applied afterwards
 * (translate and shear). Flips carry no magnitude at all. For integer-valued
 * ops (posterize bits, blur kernel) lower/upper are exact integers and the
 * draw is integer-uniform; the blur kernel additionally ranges over odd
 * values only.
 */
struct MagnitudeBound {
  OpKind kind = OpKind::brightness;
  bool has_magnitude = true;
  double lower = 0.0;
  double upper = 0.0;
  bool is_signed = false;
};

/// Smallest odd integer >= ceil(x): returns ceil(x) when odd, else ceil(x)+1.
/// Defined for x > 0.
int odd_ceiling(double x);

/// The magnitude mapping for every operation at a given level:
///   brightness, contrast   +/- 0.04l          posterize   floor(8 - 0.8l) bits
///   sharpness              (0.04l, 0.1l)      blur kernel (3, odd_ceiling(3+0.8l))
///   noise variance         (2l, 10l)          rotate      +/- 4l degrees
///   scale                  (1-0.04l, 1+0.04l) translate   (0, 2l) percent, signed
///   shear                  (0, 0.02l) degrees, signed     flips  no magnitude
MagnitudeBound magnitude_bound(OpKind kind, Level level);

/// Shared per-operation application probability, 0.2 * l.
double op_probability(Level level);

}  // namespace medaug

#endif  // MEDAUG_LEVEL_HPP_
