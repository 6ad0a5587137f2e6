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

#ifndef PSSAS_RNG_H_
#define PSSAS_RNG_H_

#include <array>
#include <cstdint>
#include <limits>
#include <span>

namespace pssas {

// ChaCha20 keystream generator. Seeded instances are reproducible; instances
// from `from_os()` draw their key from the operating system.
class Rng {
 public:
  using result_type = std::uint64_t;

  static Rng from_os();
  static Rng from_seed(std::uint64_t seed);
  static Rng from_key(std::span<const std::uint8_t, 32> key);

  void fill(std::span<std::uint8_t> out);

  result_type operator()();
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

 private:
  explicit Rng(const std::array<std::uint8_t, 32>& key) : key_(key) {}

  std::array<std::uint8_t, 32> key_;
  std::uint64_t block_nonce_ = 0;
};

}  // namespace pssas

#endif  // PSSAS_RNG_H_
