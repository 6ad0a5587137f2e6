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

#include <algorithm>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "pssas/sas.h"
#include "support/oracle.h"

namespace pssas {
namespace {

using testing::ladder_pow;
using testing::mod_r;
using testing::to_mpz;

class SasTest : public ::testing::Test {
 protected:
  SasParams params_ = sas_setup(128, 1000);
  Rng rng_ = Rng::from_seed(11);

  struct Signer {
    SasPublicKey pk;
    SasSecretKey sk;
  };

  std::vector<Signer> signers(std::size_t n) {
    std::vector<Signer> out;
    for (std::size_t i = 0; i < n; ++i) {
      auto [pk, sk] = sas_keygen(params_, rng_);
      out.push_back({pk, sk});
    }
    return out;
  }

  std::vector<SignedEntry> honest_entries(std::size_t n, std::uint64_t t) {
    std::vector<SignedEntry> entries;
    std::size_t i = 0;
    for (const Signer& s : signers(n)) {
      SignerState state;
      const Bytes m = to_bytes("msg-" + std::to_string(i++));
      entries.push_back({s.pk, m, sas_sign(params_, s.sk, t, m, state)});
    }
    return entries;
  }

  static std::vector<PublicEntry> public_part(
      const std::vector<SignedEntry>& entries) {
    std::vector<PublicEntry> out;
    for (const SignedEntry& e : entries) out.push_back({e.pk, e.message});
    return out;
  }
};

TEST_F(SasTest, SetupIsDeterministic) {
  const SasParams again = sas_setup(128, 1000);
  EXPECT_EQ(params_.max_period, 1000u);
  EXPECT_EQ(again.g2, params_.g2);
  EXPECT_EQ(params_.g2, params_.ctx.g2_generator());
  EXPECT_EQ(params_.h1_tag, "SAS-PS-H1-v1");
  EXPECT_EQ(params_.h2_tag, "SAS-PS-H2-v1");
}

TEST_F(SasTest, SetupRejectsZeroPeriods) {
  try {
    sas_setup(128, 0);
    FAIL() << "expected SasError";
  } catch (const SasError& e) {
    EXPECT_EQ(e.reason(), reason::kInvalidPeriodBound);
  }
  EXPECT_THROW(sas_setup(256, 10), UnsupportedSecurityLevel);
}

TEST_F(SasTest, SampledSetupUsesFreshGenerator) {
  const SasParams p = sas_setup_sampled(128, 10, rng_);
  EXPECT_NE(p.g2, params_.g2);
  EXPECT_FALSE(p.g2.is_identity());
}

TEST_F(SasTest, KeygenShape) {
  std::set<std::array<std::uint8_t, kPublicKeyBytes>> seen;
  for (int i = 0; i < 100; ++i) {
    auto [pk, sk] = sas_keygen(params_, rng_);
    EXPECT_EQ(pk.X, params_.g2.pow(sk.x));
    EXPECT_EQ(pk.Y, params_.g2.pow(sk.y));
    seen.insert(pk.encode());
  }
  EXPECT_EQ(seen.size(), 100u);
  EXPECT_EQ(SasPublicKey::kComponents, 2u);
  EXPECT_EQ(kPublicKeyBytes, 2 * kG2Bytes);
}

TEST_F(SasTest, SignMatchesExponentOracle) {
  for (int i = 0; i < 100; ++i) {
    auto [pk, sk] = sas_keygen(params_, rng_);
    const std::uint64_t t = 1 + rng_() % params_.max_period;
    const Bytes m = to_bytes("oracle-" + std::to_string(i));
    SignerState state;
    const EpochSignature sig = sas_sign(params_, sk, t, m, state);
    const mpz_class m_prime =
        to_mpz(hash_to_scalar(params_.ctx, kH2Tag, t, m));
    const mpz_class e = mod_r(to_mpz(sk.x) + m_prime * to_mpz(sk.y));
    ASSERT_EQ(sig.B, ladder_pow(hash_to_g1(params_.ctx, kH1Tag, t), e));
    EXPECT_EQ(sig.period, t);
  }
}

TEST_F(SasTest, SignVerifyAndMutations) {
  auto [pk, sk] = sas_keygen(params_, rng_);
  SignerState state;
  const Bytes m = to_bytes("hello");
  const EpochSignature sig = sas_sign(params_, sk, 7, m, state);
  pairing_counter_read_reset();
  EXPECT_TRUE(sas_verify(params_, pk, m, sig));
  EXPECT_EQ(pairing_counter_read_reset(), 2u);

  EXPECT_EQ(sas_verify(params_, pk, to_bytes("hellp"), sig).reason,
            reason::kPairingMismatch);
  EXPECT_FALSE(sas_verify(params_, pk, m, EpochSignature{sig.B, 8}));
  EXPECT_EQ(sas_verify(params_, pk, m, EpochSignature{sig.B, 0}).reason,
            reason::kPeriodOutOfRange);
  EXPECT_EQ(sas_verify(params_, pk, m, EpochSignature{sig.B, 1001}).reason,
            reason::kPeriodOutOfRange);
  auto [other, other_sk] = sas_keygen(params_, rng_);
  EXPECT_FALSE(sas_verify(params_, other, m, sig));
}

TEST_F(SasTest, SigningIsDeterministic) {
  auto [pk, sk] = sas_keygen(params_, rng_);
  SignerState s1, s2;
  const Bytes m = to_bytes("same");
  EXPECT_EQ(sas_sign(params_, sk, 3, m, s1).encode(),
            sas_sign(params_, sk, 3, m, s2).encode());
}

TEST_F(SasTest, AtMostOneSignaturePerPeriod) {
  auto [pk, sk] = sas_keygen(params_, rng_);
  SignerState state;
  sas_sign(params_, sk, 5, to_bytes("a"), state);
  EXPECT_EQ(state.last_signed_period, 5u);
  try {
    sas_sign(params_, sk, 5, to_bytes("b"), state);
    FAIL();
  } catch (const SasError& e) {
    EXPECT_EQ(e.reason(), reason::kPeriodAlreadyUsed);
  }
  EXPECT_THROW(sas_sign(params_, sk, 4, to_bytes("c"), state), SasError);
  sas_sign(params_, sk, 6, to_bytes("d"), state);
  EXPECT_EQ(state.last_signed_period, 6u);
}

TEST_F(SasTest, SignRejectsPeriodOutOfRange) {
  auto [pk, sk] = sas_keygen(params_, rng_);
  SignerState state;
  EXPECT_THROW(sas_sign(params_, sk, 0, to_bytes("a"), state), SasError);
  EXPECT_THROW(sas_sign(params_, sk, 1001, to_bytes("a"), state), SasError);
  EXPECT_FALSE(state.last_signed_period.has_value());
  sas_sign(params_, sk, 1000, to_bytes("a"), state);
}

TEST_F(SasTest, SingleEntryAggregateIsTheSignature) {
  const auto entries = honest_entries(1, 4);
  const AggregateSignature agg = sas_aggregate(params_, entries);
  EXPECT_EQ(agg.Bp, entries[0].sig.B);
  EXPECT_EQ(agg.period, 4u);
  EXPECT_TRUE(sas_aggregate_verify(params_, public_part(entries), agg));
}

TEST_F(SasTest, AggregateVerifyUsesTwoPairings) {
  for (std::size_t ell : {2u, 10u, 100u}) {
    const auto entries = honest_entries(ell, 9);
    const AggregateSignature agg = sas_aggregate(params_, entries);
    pairing_counter_read_reset();
    EXPECT_TRUE(sas_aggregate_verify(params_, public_part(entries), agg));
    EXPECT_EQ(pairing_counter_read_reset(), 2u) << "ell=" << ell;
  }
}

TEST_F(SasTest, AggregateMatchesExponentOracle) {
  const SasParams& p = params_;
  std::vector<SignedEntry> entries;
  mpz_class exponent = 0;
  const std::uint64_t t = 12;
  for (int i = 0; i < 5; ++i) {
    auto [pk, sk] = sas_keygen(p, rng_);
    const Bytes m = to_bytes("agg-" + std::to_string(i));
    SignerState state;
    entries.push_back({pk, m, sas_sign(p, sk, t, m, state)});
    exponent += to_mpz(sk.x) +
                to_mpz(hash_to_scalar(p.ctx, kH2Tag, t, m)) * to_mpz(sk.y);
  }
  const AggregateSignature agg = sas_aggregate(p, entries);
  EXPECT_EQ(agg.Bp, ladder_pow(hash_to_g1(p.ctx, kH1Tag, t), mod_r(exponent)));
}

TEST_F(SasTest, AggregationIsOrderInsensitive) {
  auto entries = honest_entries(6, 2);
  const AggregateSignature a = sas_aggregate(params_, entries);
  std::reverse(entries.begin(), entries.end());
  std::rotate(entries.begin(), entries.begin() + 2, entries.end());
  const AggregateSignature b = sas_aggregate(params_, entries);
  EXPECT_EQ(a.encode(), b.encode());
  EXPECT_TRUE(sas_aggregate_verify(params_, public_part(entries), a));
}

TEST_F(SasTest, AggregateErrors) {
  auto expect_reason = [&](std::vector<SignedEntry> entries,
                           std::string_view why) {
    try {
      sas_aggregate(params_, entries);
      ADD_FAILURE() << "expected " << why;
    } catch (const SasError& e) {
      EXPECT_EQ(e.reason(), why);
    }
  };
  expect_reason({}, reason::kEmpty);

  auto mixed = honest_entries(1, 1);
  const auto second = honest_entries(1, 2);
  mixed.push_back(second[0]);
  expect_reason(mixed, reason::kPeriodMismatch);

  auto dup = honest_entries(2, 3);
  dup[1] = dup[0];
  expect_reason(dup, reason::kDuplicatePk);

  auto bad = honest_entries(3, 3);
  bad[1].message = to_bytes("not what was signed");
  expect_reason(bad, reason::kInvalidMember);
}

TEST_F(SasTest, AggregateVerifyRejections) {
  const auto entries = honest_entries(4, 20);
  const AggregateSignature agg = sas_aggregate(params_, entries);
  auto pairs = public_part(entries);

  auto dropped = pairs;
  dropped.pop_back();
  EXPECT_EQ(sas_aggregate_verify(params_, dropped, agg).reason,
            reason::kPairingMismatch);

  auto dup = pairs;
  dup.push_back(pairs[0]);
  EXPECT_EQ(sas_aggregate_verify(params_, dup, agg).reason,
            reason::kDuplicatePk);

  EXPECT_EQ(sas_aggregate_verify(params_, {}, agg).reason, reason::kEmpty);
  EXPECT_FALSE(sas_aggregate_verify(params_, pairs,
                                    AggregateSignature{agg.Bp, 21}));
  EXPECT_FALSE(sas_aggregate_verify(
      params_, pairs, AggregateSignature{agg.Bp * agg.Bp, agg.period}));
}

TEST_F(SasTest, SameMessageAggregationIsAllowed) {
  CorrectnessOptions opts;
  opts.same_message = true;
  const CorrectnessReport r = sas_correctness_check(params_, 2, rng_, opts);
  EXPECT_TRUE(r.passed) << r.failure;
  EXPECT_EQ(r.members[0].message, r.members[1].message);
}

TEST_F(SasTest, CorrectnessCheck) {
  for (std::size_t ell : {1u, 2u, 5u, 10u, 100u}) {
    const CorrectnessReport r = sas_correctness_check(params_, ell, rng_);
    EXPECT_TRUE(r.passed) << "ell=" << ell << ": " << r.failure;
    EXPECT_EQ(r.members.size(), ell);
    EXPECT_GE(r.period, 1u);
    EXPECT_LE(r.period, params_.max_period);
  }
}

TEST_F(SasTest, EncodingSizesAndRoundTrip) {
  const auto entries = honest_entries(3, 30);
  const AggregateSignature agg = sas_aggregate(params_, entries);
  EXPECT_EQ(agg.encode().size(), kG1Bytes + kPeriodBytes);
  EXPECT_EQ(entries[0].sig.encode().size(), agg.encode().size());
  EXPECT_EQ(AggregateSignature::kComponents, 2u);
  EXPECT_EQ(AggregateSignature::decode(agg.encode()), agg);
  EXPECT_EQ(EpochSignature::decode(entries[0].sig.encode()), entries[0].sig);
  EXPECT_EQ(SasPublicKey::decode(entries[0].pk.encode()), entries[0].pk);
  EXPECT_FALSE(AggregateSignature::decode(Bytes(55)).has_value());
  EXPECT_FALSE(SasPublicKey::decode(Bytes(191)).has_value());
}

TEST_F(SasTest, PublicKeyDecodeRejectsIdentity) {
  auto [pk, sk] = sas_keygen(params_, rng_);
  SasPublicKey bad{G2Element::identity(), pk.Y};
  EXPECT_FALSE(SasPublicKey::decode(bad.encode()).has_value());
}

TEST_F(SasTest, DuplicateKeyDetection) {
  auto [a, ask] = sas_keygen(params_, rng_);
  auto [b, bsk] = sas_keygen(params_, rng_);
  const std::vector<SasPublicKey> distinct{a, b};
  const std::vector<SasPublicKey> dup{a, b, a};
  EXPECT_FALSE(has_duplicate_keys(distinct));
  EXPECT_TRUE(has_duplicate_keys(dup));
}

}  // namespace
}  // namespace pssas
