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

#ifndef IQRDENOISE_PGM_H_
#define IQRDENOISE_PGM_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "iqrdenoise/image.h"

namespace iqrdenoise {

// Decodes binary (P5) or ASCII (P2) PGM with maxval in [1, 255]. Header
// comments starting with '#' are skipped. Samples are kept as stored; a file
// with maxval < 255 is not rescaled.
//
// Throws Error with kBadMagic, kBadHeader, kTruncatedData or
// kMaxvalOutOfRange.
GrayImage ReadPgm(std::span<const std::uint8_t> bytes);

// Encodes canonical binary PGM: "P5\n<w> <h>\n255\n" followed by the raster.
std::vector<std::uint8_t> WritePgm(const GrayImage& img);

// File wrappers. I/O failures throw Error(kIo).
GrayImage ReadPgmFile(const std::filesystem::path& path);
void WritePgmFile(const std::filesystem::path& path, const GrayImage& img);

}  // namespace iqrdenoise

#endif  // IQRDENOISE_PGM_H_
