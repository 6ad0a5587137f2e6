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

#include <set>
#include <string>

#include <gtest/gtest.h>

#include "pssas/encoding.h"
#include "pssas/rng.h"

namespace pssas {
namespace {

TEST(EncodingTest, HexRoundTrip) {
  const Bytes b = {0x00, 0x01, 0xab, 0xff};
  EXPECT_EQ(to_hex(b), "0001abff");
  EXPECT_EQ(from_hex("0001abff"), b);
  EXPECT_EQ(from_hex("0001ABFF"), b);
}

TEST(EncodingTest, HexRejectsMalformed) {
  EXPECT_THROW(from_hex("abc"), DecodeError);
  EXPECT_THROW(from_hex("zz"), DecodeError);
}

TEST(EncodingTest, Base64RoundTrip) {
  const Bytes b = to_bytes("hello, world");
  EXPECT_EQ(to_base64(b), "aGVsbG8sIHdvcmxk");
  EXPECT_EQ(from_base64("aGVsbG8sIHdvcmxk"), b);
  EXPECT_EQ(to_base64(Bytes{}), "");
  EXPECT_THROW(from_base64("not base64!"), DecodeError);
}

TEST(EncodingTest, U64BigEndian) {
  const auto e = encode_u64_be(0x0102030405060708ULL);
  EXPECT_EQ(to_hex(e), "0102030405060708");
  EXPECT_EQ(decode_u64_be(e), 0x0102030405060708ULL);
  EXPECT_THROW(decode_u64_be(Bytes(7)), DecodeError);
}

TEST(RngTest, SeededSequenceIsReproducible) {
  Rng a = Rng::from_seed(99);
  Rng b = Rng::from_seed(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(RngTest, DifferentSeedsDiverge) {
  Rng a = Rng::from_seed(1);
  Rng b = Rng::from_seed(2);
  EXPECT_NE(a(), b());
}

TEST(RngTest, NoCollisionsIn10kDraws) {
  Rng rng = Rng::from_os();
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 10000; ++i) seen.insert(rng());
  EXPECT_EQ(seen.size(), 10000u);
}

}  // namespace
}  // namespace pssas
