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

#include <array>
#include <set>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include "pssas/groups.h"
#include "support/oracle.h"

namespace pssas {
namespace {

using testing::group_order;
using testing::ladder_pow;
using testing::mod_r;
using testing::to_mpz;

class GroupsTest : public ::testing::Test {
 protected:
  BilinearGroupContext ctx_ = generate_context(128);
  Rng rng_ = Rng::from_seed(2024);
};

TEST_F(GroupsTest, ContextIsFixedCurve) {
  EXPECT_EQ(ctx_.curve_name(), "BLS12-381");
  EXPECT_EQ(ctx_.modulus_bits(), 255u);
  EXPECT_EQ(mpz_class(std::string(ctx_.modulus_hex()), 16), group_order());
  EXPECT_EQ(mpz_sizeinbase(group_order().get_mpz_t(), 2), 255u);
  const BilinearGroupContext again = generate_context(128);
  EXPECT_EQ(again.g1_generator().encode(), ctx_.g1_generator().encode());
  EXPECT_EQ(again.g2_generator().encode(), ctx_.g2_generator().encode());
}

TEST_F(GroupsTest, UnsupportedSecurityLevel) {
  EXPECT_THROW(generate_context(256), UnsupportedSecurityLevel);
  EXPECT_THROW(generate_context(80), UnsupportedSecurityLevel);
}

TEST_F(GroupsTest, GroupOrderIsPrimeAndAnnihilatesGenerators) {
  const mpz_class r = group_order();
  EXPECT_GT(mpz_probab_prime_p(r.get_mpz_t(), 50), 0);
  EXPECT_TRUE(ladder_pow(ctx_.g1_generator(), r).is_identity());
  EXPECT_TRUE(ladder_pow(ctx_.g2_generator(), r).is_identity());
  EXPECT_FALSE(ladder_pow(ctx_.g1_generator(), r - 1).is_identity());
  EXPECT_FALSE(ladder_pow(ctx_.g2_generator(), r - 1).is_identity());
  const GTElement gt = pair(ctx_, ctx_.g1_generator(), ctx_.g2_generator());
  EXPECT_TRUE(ladder_pow(gt, r).is_one());
  EXPECT_FALSE(ladder_pow(gt, r - 1).is_one());
}

TEST_F(GroupsTest, ScalarArithmeticMatchesBigIntegers) {
  for (int i = 0; i < 100; ++i) {
    const Scalar a = random_scalar(ctx_, rng_);
    const Scalar b = random_scalar_nonzero(ctx_, rng_);
    const mpz_class A = to_mpz(a), B = to_mpz(b);
    EXPECT_LT(A, group_order());
    EXPECT_EQ(to_mpz(a + b), mod_r(A + B));
    EXPECT_EQ(to_mpz(a - b), mod_r(A - B));
    EXPECT_EQ(to_mpz(a * b), mod_r(A * B));
    EXPECT_EQ(to_mpz(-a), mod_r(-A));
    EXPECT_EQ(to_mpz(b.inverse() * b), 1);
  }
  EXPECT_THROW(Scalar().inverse(), std::domain_error);
}

TEST_F(GroupsTest, ScalarDecodingIsCanonical) {
  std::array<std::uint8_t, 32> bytes{};
  EXPECT_TRUE(Scalar::from_bytes(bytes).has_value());
  const Bytes r = from_hex(ctx_.modulus_hex());
  EXPECT_FALSE(Scalar::from_bytes(r).has_value());
  EXPECT_FALSE(Scalar::from_bytes(Bytes(31)).has_value());
  Bytes r_minus_1 = r;
  r_minus_1.back() -= 1;
  EXPECT_EQ(to_mpz(*Scalar::from_bytes(r_minus_1)), group_order() - 1);
}

TEST_F(GroupsTest, PowMatchesLadder) {
  for (int i = 0; i < 20; ++i) {
    const Scalar e = random_scalar(ctx_, rng_);
    const G1Element g = random_g1_nonidentity(ctx_, rng_);
    const G2Element h = random_g2_nonidentity(ctx_, rng_);
    EXPECT_EQ(g.pow(e), ladder_pow(g, to_mpz(e)));
    EXPECT_EQ(h.pow(e), ladder_pow(h, to_mpz(e)));
  }
}

TEST_F(GroupsTest, PairingSmallExponents) {
  const G1Element g = ctx_.g1_generator();
  const G2Element h = ctx_.g2_generator();
  const GTElement lhs = pair(ctx_, g.pow(Scalar::from_u64(2)),
                             h.pow(Scalar::from_u64(3)));
  EXPECT_EQ(lhs, pair(ctx_, g, h).pow(Scalar::from_u64(6)));
}

TEST_F(GroupsTest, PairingIsBilinear) {
  for (int i = 0; i < 100; ++i) {
    const Scalar a = random_scalar(ctx_, rng_);
    const Scalar b = random_scalar(ctx_, rng_);
    const G1Element X = random_g1_nonidentity(ctx_, rng_);
    const G2Element Y = random_g2_nonidentity(ctx_, rng_);
    EXPECT_EQ(pair(ctx_, X.pow(a), Y.pow(b)), pair(ctx_, X, Y).pow(a * b));
  }
}

TEST_F(GroupsTest, PairingIdentityAndNonDegeneracy) {
  EXPECT_TRUE(pair(ctx_, G1Element::identity(), ctx_.g2_generator()).is_one());
  EXPECT_TRUE(pair(ctx_, ctx_.g1_generator(), G2Element::identity()).is_one());
  EXPECT_FALSE(pair(ctx_, ctx_.g1_generator(), ctx_.g2_generator()).is_one());
}

TEST_F(GroupsTest, PairingCounter) {
  pairing_counter_read_reset();
  EXPECT_EQ(pairing_counter_read_reset(), 0u);
  for (int i = 0; i < 3; ++i) {
    pair(ctx_, ctx_.g1_generator(), ctx_.g2_generator());
  }
  EXPECT_EQ(pairing_counter_peek(), 3u);
  EXPECT_EQ(pairing_counter_read_reset(), 3u);
  EXPECT_EQ(pairing_counter_read_reset(), 0u);
}

TEST_F(GroupsTest, HashToG1) {
  const G1Element a = hash_to_g1(ctx_, "SAS-H1", 1);
  EXPECT_EQ(a, hash_to_g1(ctx_, "SAS-H1", 1));
  EXPECT_NE(a, hash_to_g1(ctx_, "SAS-H1", 2));
  EXPECT_NE(a, hash_to_g1(ctx_, "SAS-H1-other", 1));
  EXPECT_FALSE(a.is_identity());
  EXPECT_THROW(hash_to_g1(ctx_, "SAS-H1", 0), std::invalid_argument);
}

TEST_F(GroupsTest, HashToG1NeverIdentityOver10kPeriods) {
  std::set<std::array<std::uint8_t, kG1Bytes>> seen;
  for (std::uint64_t t = 1; t <= 10000; ++t) {
    const G1Element h = hash_to_g1(ctx_, "SAS-PS-H1-v1", t);
    ASSERT_FALSE(h.is_identity()) << "t=" << t;
    seen.insert(h.encode());
  }
  EXPECT_EQ(seen.size(), 10000u);
}

TEST_F(GroupsTest, HashToScalar) {
  const Bytes a = to_bytes("a"), b = to_bytes("b");
  const Scalar s = hash_to_scalar(ctx_, "SAS-H2", 1, a);
  EXPECT_EQ(s, hash_to_scalar(ctx_, "SAS-H2", 1, a));
  EXPECT_NE(s, hash_to_scalar(ctx_, "SAS-H2", 1, b));
  EXPECT_NE(s, hash_to_scalar(ctx_, "SAS-H2", 2, a));
}

TEST_F(GroupsTest, HashToScalarLengthPrefixSeparatesInputs) {
  // Without the length prefix these two would hash the same byte string.
  const Bytes m1 = {0x00};
  const Bytes m2 = {};
  EXPECT_NE(hash_to_scalar(ctx_, "T", 1, m1), hash_to_scalar(ctx_, "T", 1, m2));
}

TEST_F(GroupsTest, HashToScalarLowByteIsUniform) {
  constexpr int kSamples = 10000;
  constexpr int kBins = 256;
  std::array<int, kBins> counts{};
  for (int i = 0; i < kSamples; ++i) {
    const auto bytes =
        hash_to_scalar(ctx_, "SAS-PS-H2-v1", 1, encode_u64_be(i)).to_bytes();
    ++counts[bytes.back()];
  }
  const double expected = static_cast<double>(kSamples) / kBins;
  double stat = 0;
  for (int c : counts) stat += (c - expected) * (c - expected) / expected;
  const boost::math::chi_squared dist(kBins - 1);
  const double p_value = boost::math::cdf(boost::math::complement(dist, stat));
  EXPECT_GT(p_value, 0.001) << "chi2=" << stat;
}

TEST_F(GroupsTest, RandomSamplersAvoidZeroAndIdentity) {
  std::set<std::array<std::uint8_t, kScalarBytes>> scalars;
  for (int i = 0; i < 10000; ++i) {
    const Scalar s = random_scalar_nonzero(ctx_, rng_);
    ASSERT_FALSE(s.is_zero());
    scalars.insert(s.to_bytes());
  }
  EXPECT_EQ(scalars.size(), 10000u);
  for (int i = 0; i < 100; ++i) {
    EXPECT_FALSE(random_g1_nonidentity(ctx_, rng_).is_identity());
    EXPECT_FALSE(random_g2_nonidentity(ctx_, rng_).is_identity());
  }
}

TEST_F(GroupsTest, SeededSamplingIsReproducible) {
  Rng a = Rng::from_seed(5), b = Rng::from_seed(5);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(random_scalar(ctx_, a), random_scalar(ctx_, b));
    EXPECT_EQ(random_g1_nonidentity(ctx_, a), random_g1_nonidentity(ctx_, b));
  }
}

TEST_F(GroupsTest, SerializationRoundTrip) {
  for (int i = 0; i < 1000; ++i) {
    const G1Element g = random_g1_nonidentity(ctx_, rng_);
    const G2Element h = random_g2_nonidentity(ctx_, rng_);
    const Scalar s = random_scalar(ctx_, rng_);
    ASSERT_EQ(G1Element::decode(g.encode()), g);
    ASSERT_EQ(G2Element::decode(h.encode()), h);
    ASSERT_EQ(Scalar::from_bytes(s.to_bytes()), s);
  }
  EXPECT_EQ(G1Element::decode(G1Element::identity().encode()),
            G1Element::identity());
  EXPECT_EQ(G2Element::decode(G2Element::identity().encode()),
            G2Element::identity());
}

TEST_F(GroupsTest, DecodeRejectsBadInput) {
  EXPECT_FALSE(G1Element::decode(Bytes(47)).has_value());
  EXPECT_FALSE(G2Element::decode(Bytes(95)).has_value());
  EXPECT_FALSE(G1Element::decode(Bytes(48, 0xff)).has_value());
  // A G1 encoding is not a G2 encoding.
  EXPECT_FALSE(G2Element::decode(ctx_.g1_generator().encode()).has_value());
}

TEST_F(GroupsTest, InverseCancels) {
  const G1Element g = random_g1_nonidentity(ctx_, rng_);
  const G2Element h = random_g2_nonidentity(ctx_, rng_);
  EXPECT_TRUE((g * g.inverse()).is_identity());
  EXPECT_TRUE((h * h.inverse()).is_identity());
}

}  // namespace
}  // namespace pssas
