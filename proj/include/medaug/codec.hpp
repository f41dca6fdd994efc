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
#ifndef MEDAUG_CODEC_HPP_
#define MEDAUG_CODEC_HPP_

#include <filesystem>

#include "medaug/image.hpp"

namespace medaug {

/// Decodes a PNG or JPEG file. Grayscale sources yield channels=1, color
/// sources channels=3; alpha channels are stripped, palette and sub-8-bit
/// depths expanded, 16-bit depths reduced.
Image load_image(const std::filesystem::path& path);

/// Encodes as PNG, creating parent directories as needed. Outputs are
/// always PNG so augmented pixels stay lossless.
void save_image(const Image& image, const std::filesystem::path& path);

/// Loads a single-channel PNG label map. Color or palette files are
/// rejected: each distinct intensity is a class label, 0 = background.
Mask load_mask(const std::filesystem::path& path);

void save_mask(const Mask& mask, const std::filesystem::path& path);

}  // namespace medaug

#endif  // MEDAUG_CODEC_HPP_
