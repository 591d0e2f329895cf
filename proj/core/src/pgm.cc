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

#include "iqrdenoise/pgm.h"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <string>

#include "iqrdenoise/error.h"

namespace iqrdenoise {
namespace {

// Largest width * height accepted from a header.
constexpr std::uint64_t kMaxPixels = std::uint64_t{1} << 30;

bool IsSpace(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

class Cursor {
 public:
  explicit Cursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  bool AtEnd() const { return pos_ >= bytes_.size(); }
  std::size_t pos() const { return pos_; }
  std::uint8_t Peek() const { return bytes_[pos_]; }
  void Advance() { ++pos_; }
  std::span<const std::uint8_t> Rest() const { return bytes_.subspan(pos_); }

  // Skips whitespace and '#' comments that run to end of line.
  void SkipSpaceAndComments() {
    while (!AtEnd()) {
      if (IsSpace(Peek())) {
        Advance();
      } else if (Peek() == '#') {
        while (!AtEnd() && Peek() != '\n' && Peek() != '\r') Advance();
      } else {
        break;
      }
    }
  }

  // Reads an unsigned decimal integer; nullopt if no digits are present or the
  // value overflows.
  std::optional<std::uint64_t> ReadUnsigned() {
    SkipSpaceAndComments();
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (!AtEnd() && std::isdigit(Peek())) {
      value = value * 10 + (Peek() - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        return std::nullopt;
      }
      Advance();
      ++digits;
    }
    if (digits == 0) return std::nullopt;
    // A number must be terminated by whitespace, a comment, or end of input.
    if (!AtEnd() && !IsSpace(Peek()) && Peek() != '#') return std::nullopt;
    return value;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::uint64_t ReadHeaderField(Cursor& cursor, const char* name) {
  const auto value = cursor.ReadUnsigned();
  if (!value) {
    throw Error(ErrorCode::kBadHeader,
                std::string("missing or non-numeric ") + name);
  }
  return *value;
}

}  // namespace

GrayImage ReadPgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
    throw Error(ErrorCode::kBadMagic, "expected P5 or P2");
  }
  const bool binary = bytes[1] == '5';
  Cursor cursor(bytes.subspan(2));
  if (!cursor.AtEnd() && !IsSpace(cursor.Peek()) && cursor.Peek() != '#') {
    throw Error(ErrorCode::kBadMagic, "magic number not followed by whitespace");
  }

  const std::uint64_t width = ReadHeaderField(cursor, "width");
  const std::uint64_t height = ReadHeaderField(cursor, "height");
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::kBadHeader, "dimensions must be positive");
  }
  if (width * height > kMaxPixels) {
    throw Error(ErrorCode::kBadHeader, "image too large");
  }
  const std::uint64_t maxval = ReadHeaderField(cursor, "maxval");
  if (maxval < 1 || maxval > 255) {
    throw Error(ErrorCode::kMaxvalOutOfRange,
                "maxval " + std::to_string(maxval) + " not in [1, 255]");
  }

  const std::size_t count = static_cast<std::size_t>(width * height);
  std::vector<std::uint8_t> pixels;
  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (cursor.AtEnd()) {
      throw Error(ErrorCode::kTruncatedData, "no raster after header");
    }
    if (!IsSpace(cursor.Peek())) {
      throw Error(ErrorCode::kBadHeader, "maxval not followed by whitespace");
    }
    cursor.Advance();
    const auto raster = cursor.Rest();
    if (raster.size() < count) {
      throw Error(ErrorCode::kTruncatedData,
                  "expected " + std::to_string(count) + " samples, got " +
                      std::to_string(raster.size()));
    }
    pixels.assign(raster.begin(), raster.begin() + count);
  } else {
    pixels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto sample = cursor.ReadUnsigned();
      if (!sample) {
        throw Error(ErrorCode::kTruncatedData,
                    "expected " + std::to_string(count) + " samples, got " +
                        std::to_string(i));
      }
      if (*sample > maxval) {
        throw Error(ErrorCode::kMaxvalOutOfRange,
                    "sample " + std::to_string(*sample) + " exceeds maxval");
      }
      pixels.push_back(static_cast<std::uint8_t>(*sample));
    }
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::move(pixels));
}

std::vector<std::uint8_t> WritePgm(const GrayImage& img) {
  const std::string header = "P5\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + img.size());
  out.insert(out.end(), header.begin(), header.end());
  const auto pixels = img.pixels();
  out.insert(out.end(), pixels.begin(), pixels.end());
  return out;
}

GrayImage ReadPgmFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(ErrorCode::kIo, "read failed: " + path.string());
  }
  return ReadPgm(bytes);
}

void WritePgmFile(const std::filesystem::path& path, const GrayImage& img) {
  const auto bytes = WritePgm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed: " + path.string());
  }
}

}  // namespace iqrdenoise
