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
#ifndef MEDAUG_RESIZE_HPP_
#define MEDAUG_RESIZE_HPP_

#include "medaug/image.hpp"

namespace medaug {

// Coordinate convention for both modes: pixel centers sit at (i+0.5), the
// destination-to-source mapping is src = (dst + 0.5) * (src_len / dst_len)
// - 0.5, clamped to the valid range. Resizing to the source size is the
// identity. Nearest-neighbor ties at .5 round toward the lower index.

/// Bilinear resize for images.
Image resize(const Image& image, int target_w, int target_h);

/// Nearest-neighbor resize for masks; never introduces new label values.
Mask resize_mask(const Mask& mask, int target_w, int target_h);

}  // namespace medaug

#endif  // MEDAUG_RESIZE_HPP_
