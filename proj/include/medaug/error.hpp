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
#ifndef MEDAUG_ERROR_HPP_
#define MEDAUG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace medaug {

/// Failure categories surfaced by the library. The CLI maps these onto its
/// exit-code contract: layout/validation problems exit 2, I/O problems exit 3.
enum class Errc {
  file_not_found,
  unsupported_format,
  corrupt_stream,
  io_failure,
  zero_dimension,
  unknown_operation,
  magnitude_out_of_bound,
  missing_magnitude,
  dimension_mismatch,
  empty_dataset,
  unpaired_mask,
  mixed_layout,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::file_not_found: return "FileNotFound";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::corrupt_stream: return "CorruptStream";
    case Errc::io_failure: return "IoFailure";
    case Errc::zero_dimension: return "ZeroDimension";
    case Errc::unknown_operation: return "UnknownOperation";
    case Errc::magnitude_out_of_bound: return "MagnitudeOutOfBound";
    case Errc::missing_magnitude: return "MissingMagnitude";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::empty_dataset: return "EmptyDataset";
    case Errc::unpaired_mask: return "UnpairedMask";
    case Errc::mixed_layout: return "MixedLayout";
  }
  return "UnknownError";
}

/// True for errors caused by dataset structure rather than the I/O layer.
inline bool is_layout_error(Errc c) {
  return c == Errc::empty_dataset || c == Errc::unpaired_mask ||
         c == Errc::mixed_layout || c == Errc::dimension_mismatch;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace medaug

#endif  // MEDAUG_ERROR_HPP_
