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

#include "iqrdenoise/error.h"

namespace iqrdenoise {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadMagic:
      return "BadMagic";
    case ErrorCode::kBadHeader:
      return "BadHeader";
    case ErrorCode::kTruncatedData:
      return "TruncatedData";
    case ErrorCode::kMaxvalOutOfRange:
      return "MaxvalOutOfRange";
    case ErrorCode::kOutOfBounds:
      return "OutOfBounds";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kDegenerateImage:
      return "DegenerateImage";
    case ErrorCode::kEmptyData:
      return "EmptyData";
    case ErrorCode::kEmptyTile:
      return "EmptyTile";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kEvenWindow:
      return "EvenWindow";
    case ErrorCode::kWindowTooSmall:
      return "WindowTooSmall";
    case ErrorCode::kNotFlagged:
      return "NotFlagged";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace iqrdenoise
