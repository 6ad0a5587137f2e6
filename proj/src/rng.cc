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

#include "pssas/rng.h"

#include <sodium.h>

#include <algorithm>
#include <stdexcept>

#include "pssas/encoding.h"

namespace pssas {
namespace {

void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw std::runtime_error("libsodium initialisation failed");
}

}  // namespace

Rng Rng::from_os() {
  ensure_sodium();
  std::array<std::uint8_t, 32> key;
  randombytes_buf(key.data(), key.size());
  return Rng(key);
}

Rng Rng::from_seed(std::uint64_t seed) {
  ensure_sodium();
  static constexpr char kPersonal[] = "pssas-rng-seed-v1";
  const auto be = encode_u64_be(seed);
  std::array<std::uint8_t, 32> key;
  crypto_generichash(key.data(), key.size(), be.data(), be.size(),
                     reinterpret_cast<const unsigned char*>(kPersonal),
                     sizeof(kPersonal) - 1);
  return Rng(key);
}

Rng Rng::from_key(std::span<const std::uint8_t, 32> key) {
  ensure_sodium();
  std::array<std::uint8_t, 32> k;
  std::copy(key.begin(), key.end(), k.begin());
  return Rng(k);
}

void Rng::fill(std::span<std::uint8_t> out) {
  // One fresh ChaCha20 stream per call, keyed by the seed and a call counter.
  std::array<std::uint8_t, crypto_stream_chacha20_NONCEBYTES> nonce{};
  const auto be = encode_u64_be(block_nonce_++);
  std::copy(be.begin(), be.end(), nonce.begin());
  crypto_stream_chacha20(out.data(), out.size(), nonce.data(), key_.data());
}

Rng::result_type Rng::operator()() {
  std::array<std::uint8_t, 8> buf;
  fill(buf);
  return decode_u64_be(buf);
}

}  // namespace pssas
