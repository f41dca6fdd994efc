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
#include <cmath>

#include <doctest.h>

#include "medaug/error.hpp"
#include "medaug/level.hpp"
#include "medaug/rng.hpp"

using namespace medaug;

TEST_CASE("level domain is 1..5") {
  CHECK_THROWS_AS(Level(0), std::invalid_argument);
  CHECK_THROWS_AS(Level(6), std::invalid_argument);
  CHECK(Level(3).value() == 3);
}

TEST_CASE("odd ceiling fixed points") {
  CHECK(odd_ceiling(7.0) == 7);
  CHECK(odd_ceiling(3.8) == 5);
  CHECK(odd_ceiling(4.6) == 5);  // blur bound at l=2
  CHECK(odd_ceiling(1.0) == 1);
  CHECK(odd_ceiling(2.0) == 3);
}

TEST_CASE("odd ceiling is odd and within [ceil(x), ceil(x)+1]") {
  Rng rng(123);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform(0.0, 100.0) + 1e-9;
    const int f = odd_ceiling(x);
    const int c = static_cast<int>(std::ceil(x));
    CHECK(f % 2 == 1);
    CHECK(f >= c);
    CHECK(f <= c + 1);
  }
}

TEST_CASE("posterize bits table across levels") {
  const int expected[5] = {7, 6, 5, 4, 4};
  for (int l = 1; l <= 5; ++l) {
    const MagnitudeBound b = magnitude_bound(OpKind::posterize, Level(l));
    CHECK(b.lower == b.upper);
    CHECK(static_cast<int>(b.lower) == expected[l - 1]);
  }
}

TEST_CASE("blur kernel bound follows the odd-ceiling rule") {
  const int expected_upper[5] = {5, 5, 7, 7, 7};
  for (int l = 1; l <= 5; ++l) {
    const MagnitudeBound b = magnitude_bound(OpKind::gaussian_blur, Level(l));
    CHECK(static_cast<int>(b.lower) == 3);
    CHECK(static_cast<int>(b.upper) == expected_upper[l - 1]);
  }
}

TEST_CASE("spot values from the magnitude table") {
  CHECK(magnitude_bound(OpKind::gaussian_noise, Level(5)).lower ==
        doctest::Approx(10.0));
  CHECK(magnitude_bound(OpKind::gaussian_noise, Level(5)).upper ==
        doctest::Approx(50.0));
  CHECK(magnitude_bound(OpKind::rotate, Level(3)).upper ==
        doctest::Approx(12.0));
  CHECK(magnitude_bound(OpKind::rotate, Level(3)).lower ==
        doctest::Approx(-12.0));
  CHECK(magnitude_bound(OpKind::scale, Level(5)).lower ==
        doctest::Approx(0.8));
  CHECK(magnitude_bound(OpKind::scale, Level(5)).upper ==
        doctest::Approx(1.2));
  CHECK(magnitude_bound(OpKind::brightness, Level(2)).upper ==
        doctest::Approx(0.08));
  CHECK(magnitude_bound(OpKind::translate_x, Level(5)).upper ==
        doctest::Approx(10.0));
  CHECK(magnitude_bound(OpKind::translate_x, Level(5)).is_signed);
  CHECK(magnitude_bound(OpKind::shear_y, Level(5)).upper ==
        doctest::Approx(0.1));
}

TEST_CASE("unknown operation ids are rejected") {
  CHECK_THROWS_AS(magnitude_bound(static_cast<OpKind>(99), Level(3)), Error);
}

TEST_CASE("flips carry the no-magnitude sentinel") {
  for (OpKind k : {OpKind::hflip, OpKind::vflip}) {
    const MagnitudeBound b = magnitude_bound(k, Level(4));
    CHECK_FALSE(b.has_magnitude);
  }
}

TEST_CASE("bound widths never shrink as the level grows") {
  for (OpKind k : kAllOps) {
    double prev_width = -1.0;
    for (int l = 1; l <= 5; ++l) {
      const MagnitudeBound b = magnitude_bound(k, Level(l));
      const double width = b.has_magnitude ? b.upper - b.lower : 0.0;
      CHECK(width >= prev_width - 1e-12);
      prev_width = width;
    }
  }
}

TEST_CASE("application probability is 0.2l and stays in (0, 1]") {
  CHECK(op_probability(Level(5)) == doctest::Approx(1.0));
  CHECK(op_probability(Level(1)) == doctest::Approx(0.2));
  CHECK(op_probability(Level(3)) == doctest::Approx(0.6));
  for (int l = 1; l <= 5; ++l) {
    CHECK(op_probability(Level(l)) > 0.0);
    CHECK(op_probability(Level(l)) <= 1.0);
  }
}
