// Copyright 2026 The pssas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSSAS_ENCODING_H_
#define PSSAS_ENCODING_H_

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pssas {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// Raised when textual or binary input cannot be decoded.
class DecodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_hex(ByteView bytes);
Bytes from_hex(std::string_view hex);

std::string to_base64(ByteView bytes);
Bytes from_base64(std::string_view text);

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

inline std::array<std::uint8_t, 8> encode_u64_be(std::uint64_t v) {
  std::array<std::uint8_t, 8> out{};
  for (int i = 7; i >= 0; --i) {
    out[i] = static_cast<std::uint8_t>(v & 0xff);
    v >>= 8;
  }
  return out;
}

inline std::uint64_t decode_u64_be(ByteView in) {
  if (in.size() != 8) throw DecodeError("u64 field must be 8 bytes");
  std::uint64_t v = 0;
  for (auto b : in) v = (v << 8) | b;
  return v;
}

inline void append(Bytes& out, ByteView in) {
  out.insert(out.end(), in.begin(), in.end());
}

}  // namespace pssas

#endif  // PSSAS_ENCODING_H_
