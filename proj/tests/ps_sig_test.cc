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
#include <tuple>

#include <gtest/gtest.h>

#include "pssas/ps_sig.h"
#include "support/oracle.h"

namespace pssas {
namespace {

using testing::ladder_pow;
using testing::mod_r;
using testing::to_mpz;

class PsSigTest : public ::testing::Test {
 protected:
  BilinearGroupContext ctx_ = generate_context(128);
  Rng rng_ = Rng::from_seed(77);
};

TEST_F(PsSigTest, KeygenIsConsistent) {
  auto [pk, sk] = ps_keygen(ctx_, rng_);
  EXPECT_FALSE(sk.x.is_zero());
  EXPECT_FALSE(sk.y.is_zero());
  EXPECT_FALSE(pk.g2.is_identity());
  EXPECT_EQ(pk.X, pk.g2.pow(sk.x));
  EXPECT_EQ(pk.Y, pk.g2.pow(sk.y));
}

TEST_F(PsSigTest, KeygenOutputsAreDistinct) {
  std::set<std::array<std::uint8_t, kG2Bytes>> xs;
  for (int i = 0; i < 100; ++i) xs.insert(ps_keygen(ctx_, rng_).first.X.encode());
  EXPECT_EQ(xs.size(), 100u);
}

TEST_F(PsSigTest, SignVerify) {
  auto [pk, sk] = ps_keygen(ctx_, rng_);
  const Scalar m = random_scalar(ctx_, rng_);
  const PsSignature sig = ps_sign(ctx_, sk, m, rng_);
  EXPECT_FALSE(sig.A.is_identity());
  pairing_counter_read_reset();
  EXPECT_TRUE(ps_verify(ctx_, pk, m, sig));
  EXPECT_EQ(pairing_counter_read_reset(), 2u);
  EXPECT_FALSE(ps_verify(ctx_, pk, m + Scalar::from_u64(1), sig));
}

TEST_F(PsSigTest, CompletenessOver1000Rounds) {
  auto [pk, sk] = ps_keygen(ctx_, rng_);
  for (int i = 0; i < 1000; ++i) {
    if (i % 100 == 0) std::tie(pk, sk) = ps_keygen(ctx_, rng_);
    const Scalar m = random_scalar(ctx_, rng_);
    ASSERT_TRUE(ps_verify(ctx_, pk, m, ps_sign(ctx_, sk, m, rng_))) << i;
  }
}

TEST_F(PsSigTest, ExponentOracle) {
  for (int i = 0; i < 100; ++i) {
    auto [pk, sk] = ps_keygen(ctx_, rng_);
    const Scalar m = random_scalar(ctx_, rng_);
    const PsSignature sig = ps_sign(ctx_, sk, m, rng_);
    const mpz_class e = mod_r(to_mpz(sk.x) + to_mpz(m) * to_mpz(sk.y));
    ASSERT_EQ(sig.B, ladder_pow(sig.A, e));
  }
}

TEST_F(PsSigTest, ZeroMessage) {
  auto [pk, sk] = ps_keygen(ctx_, rng_);
  const PsSignature sig = ps_sign(ctx_, sk, Scalar(), rng_);
  EXPECT_EQ(sig.B, sig.A.pow(sk.x));
  EXPECT_TRUE(ps_verify(ctx_, pk, Scalar(), sig));
}

TEST_F(PsSigTest, IdentityAIsRejected) {
  auto [pk, sk] = ps_keygen(ctx_, rng_);
  // (1, 1) satisfies the pairing equation; only the A != 1 clause stops it.
  EXPECT_FALSE(ps_verify(ctx_, pk, random_scalar(ctx_, rng_), PsSignature{}));
}

TEST_F(PsSigTest, SingleFieldReplacementRejects) {
  for (int i = 0; i < 100; ++i) {
    auto [pk, sk] = ps_keygen(ctx_, rng_);
    const Scalar m = random_scalar(ctx_, rng_);
    const PsSignature sig = ps_sign(ctx_, sk, m, rng_);

    PsPublicKey bad_pk = pk;
    bad_pk.X = random_g2_nonidentity(ctx_, rng_);
    EXPECT_FALSE(ps_verify(ctx_, bad_pk, m, sig));
    bad_pk = pk;
    bad_pk.Y = random_g2_nonidentity(ctx_, rng_);
    EXPECT_FALSE(ps_verify(ctx_, bad_pk, m, sig));
    bad_pk = pk;
    bad_pk.g2 = random_g2_nonidentity(ctx_, rng_);
    EXPECT_FALSE(ps_verify(ctx_, bad_pk, m, sig));

    EXPECT_FALSE(ps_verify(ctx_, pk, random_scalar(ctx_, rng_), sig));

    EXPECT_FALSE(ps_verify(
        ctx_, pk, m, PsSignature{random_g1_nonidentity(ctx_, rng_), sig.B}));
    EXPECT_FALSE(ps_verify(
        ctx_, pk, m, PsSignature{sig.A, random_g1_nonidentity(ctx_, rng_)}));
  }
}

TEST_F(PsSigTest, Randomize) {
  auto [pk, sk] = ps_keygen(ctx_, rng_);
  const Scalar m = random_scalar(ctx_, rng_);
  const PsSignature sig = ps_sign(ctx_, sk, m, rng_);
  for (int i = 0; i < 100; ++i) {
    const PsSignature fresh = ps_randomize(ctx_, sig, rng_);
    EXPECT_NE(fresh.A, sig.A);
    EXPECT_TRUE(ps_verify(ctx_, pk, m, fresh));
  }
  EXPECT_EQ(ps_randomize_with(sig, Scalar::from_u64(1)), sig);
  EXPECT_THROW(ps_randomize(ctx_, PsSignature{}, rng_), std::invalid_argument);
  EXPECT_THROW(ps_randomize_with(sig, Scalar()), std::invalid_argument);
}

TEST_F(PsSigTest, KeygenWithFixedGenerator) {
  auto [pk, sk] = ps_keygen_with_generator(ctx_, ctx_.g2_generator(), rng_);
  EXPECT_EQ(pk.g2, ctx_.g2_generator());
  EXPECT_EQ(pk.X, ctx_.g2_generator().pow(sk.x));
}

}  // namespace
}  // namespace pssas
