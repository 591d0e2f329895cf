// Copyright 2026 The iqrdenoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IQRDENOISE_ERROR_H_
#define IQRDENOISE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace iqrdenoise {

enum class ErrorCode {
  // PGM decoding.
  kBadMagic,
  kBadHeader,
  kTruncatedData,
  kMaxvalOutOfRange,
  // Geometry and data shape.
  kOutOfBounds,
  kDimensionMismatch,
  kDegenerateImage,
  kEmptyData,
  kEmptyTile,
  // Filter parameters.
  kInvalidArgument,
  kEvenWindow,
  kWindowTooSmall,
  kNotFlagged,
  // Filesystem.
  kIo,
};

// Stable identifier for an error code, e.g. "BadMagic".
std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported by throwing Error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace iqrdenoise

#endif  // IQRDENOISE_ERROR_H_
