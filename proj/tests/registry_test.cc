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

#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "pssas/registry.h"

namespace pssas {
namespace {

class RegistryTest : public ::testing::Test {
 protected:
  SasParams params_ = sas_setup(128, 100);
  Rng rng_ = Rng::from_seed(31);
};

TEST_F(RegistryTest, HonestKeysAreAccepted) {
  KeyRegistry registry(RegistryMode::kHarness);
  for (int i = 0; i < 100; ++i) {
    auto [pk, sk] = sas_keygen(params_, rng_);
    ASSERT_TRUE(registry.register_key(params_, pk, sk));
    EXPECT_TRUE(registry.is_certified(pk));
    EXPECT_TRUE(registry.is_certified(pk));
    ASSERT_TRUE(registry.escrowed_secret(pk).has_value());
    EXPECT_EQ(registry.escrowed_secret(pk)->x, sk.x);
  }
  EXPECT_EQ(registry.size(), 100u);
}

TEST_F(RegistryTest, MismatchedHalvesAreRejected) {
  KeyRegistry registry(RegistryMode::kHarness);
  for (int i = 0; i < 100; ++i) {
    auto [pk_a, sk_a] = sas_keygen(params_, rng_);
    auto [pk_b, sk_b] = sas_keygen(params_, rng_);
    EXPECT_FALSE(registry.register_key(params_, pk_a, sk_b));
    EXPECT_FALSE(registry.register_key(params_, pk_a, SasSecretKey{sk_a.x, sk_b.y}));
    EXPECT_FALSE(registry.register_key(params_, SasPublicKey{pk_a.X, pk_b.Y}, sk_a));
  }
  EXPECT_EQ(registry.size(), 0u);
}

TEST_F(RegistryTest, IdentityKeyIsRejected) {
  KeyRegistry registry(RegistryMode::kHarness);
  auto [pk, sk] = sas_keygen(params_, rng_);
  const SasPublicKey forged{G2Element::identity(), pk.Y};
  EXPECT_FALSE(registry.register_key(params_, forged, SasSecretKey{Scalar(), sk.y}));
  EXPECT_FALSE(registry.register_key(params_, forged, sk));
}

TEST_F(RegistryTest, RogueKeyCombinationsAreRejected) {
  KeyRegistry registry(RegistryMode::kHarness);
  auto [honest, honest_sk] = sas_keygen(params_, rng_);
  ASSERT_TRUE(registry.register_key(params_, honest, honest_sk));
  for (int i = 0; i < 100; ++i) {
    // pk2 = target * honest^-1, so that pk2 * honest = target. The attacker
    // knows the target's exponents but not the honest key's.
    auto [target, target_sk] = sas_keygen(params_, rng_);
    const SasPublicKey rogue{target.X * honest.X.inverse(),
                             target.Y * honest.Y.inverse()};
    EXPECT_FALSE(registry.register_key(params_, rogue, target_sk));
    EXPECT_FALSE(registry.register_key(
        params_, rogue,
        SasSecretKey{random_scalar_nonzero(params_.ctx, rng_),
                     random_scalar_nonzero(params_.ctx, rng_)}));
    Rng prover = Rng::from_seed(i);
    EXPECT_FALSE(registry.register_key_with_proof(
        params_, rogue, prove_possession(params_, rogue, target_sk, prover)));
    EXPECT_FALSE(registry.is_certified(rogue));
  }
  EXPECT_EQ(registry.size(), 1u);
}

TEST_F(RegistryTest, UnregisteredKeyIsNotCertified) {
  KeyRegistry registry(RegistryMode::kProduction);
  EXPECT_FALSE(registry.is_certified(sas_keygen(params_, rng_).first));
}

TEST_F(RegistryTest, ProductionModeUsesPossessionProofs) {
  KeyRegistry registry(RegistryMode::kProduction);
  auto [pk, sk] = sas_keygen(params_, rng_);
  const PossessionProof proof = prove_possession(params_, pk, sk, rng_);
  EXPECT_TRUE(verify_possession(params_, pk, proof));
  EXPECT_EQ(PossessionProof::decode(proof.encode())->challenge, proof.challenge);

  PossessionProof tampered = proof;
  tampered.response_y += Scalar::from_u64(1);
  EXPECT_FALSE(registry.register_key_with_proof(params_, pk, tampered));
  auto [other, other_sk] = sas_keygen(params_, rng_);
  EXPECT_FALSE(registry.register_key_with_proof(params_, other, proof));

  EXPECT_TRUE(registry.register_key_with_proof(params_, pk, proof));
  EXPECT_TRUE(registry.is_certified(pk));
  EXPECT_FALSE(registry.escrowed_secret(pk).has_value());

  // Submitting the secret in production mode certifies but never escrows.
  EXPECT_TRUE(registry.register_key(params_, other, other_sk));
  EXPECT_FALSE(registry.escrowed_secret(other).has_value());
  EXPECT_THROW(registry.restore_escrow(other, other_sk), std::logic_error);
}

TEST_F(RegistryTest, CertifiedAggregateVerify) {
  KeyRegistry registry(RegistryMode::kHarness);
  std::vector<SignedEntry> entries;
  std::vector<PublicEntry> pairs;
  for (int i = 0; i < 3; ++i) {
    auto [pk, sk] = sas_keygen(params_, rng_);
    registry.register_key(params_, pk, sk);
    const Bytes m = to_bytes("m" + std::to_string(i));
    SignerState state;
    entries.push_back({pk, m, sas_sign(params_, sk, 4, m, state)});
    pairs.push_back({pk, m});
  }
  const AggregateSignature agg = sas_aggregate(params_, entries);
  EXPECT_TRUE(certified_aggregate_verify(registry, params_, pairs, agg));

  const AggregateSignature tampered{agg.Bp * params_.ctx.g1_generator(),
                                    agg.period};
  EXPECT_EQ(certified_aggregate_verify(registry, params_, pairs, tampered).reason,
            reason::kPairingMismatch);

  auto [stranger, stranger_sk] = sas_keygen(params_, rng_);
  SignerState state;
  entries.push_back({stranger, to_bytes("s"),
                     sas_sign(params_, stranger_sk, 4, to_bytes("s"), state)});
  pairs.push_back({stranger, to_bytes("s")});
  const AggregateSignature with_stranger = sas_aggregate(params_, entries);
  EXPECT_TRUE(sas_aggregate_verify(params_, pairs, with_stranger));
  EXPECT_EQ(
      certified_aggregate_verify(registry, params_, pairs, with_stranger).reason,
      reason::kUncertifiedPk);
}

TEST_F(RegistryTest, ConcurrentRegistrationIsLinearizable) {
  KeyRegistry registry(RegistryMode::kHarness);
  constexpr int kThreads = 4;
  constexpr int kPerThread = 10;
  std::vector<std::vector<std::pair<SasPublicKey, SasSecretKey>>> keys(kThreads);
  for (auto& batch : keys) {
    for (int i = 0; i < kPerThread; ++i) batch.push_back(sas_keygen(params_, rng_));
  }
  std::vector<std::thread> threads;
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([&, t] {
      for (const auto& [pk, sk] : keys[t]) {
        registry.register_key(params_, pk, sk);
        registry.is_certified(pk);
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(registry.size(), static_cast<std::size_t>(kThreads * kPerThread));
  for (const auto& batch : keys) {
    for (const auto& [pk, sk] : batch) EXPECT_TRUE(registry.is_certified(pk));
  }
}

TEST_F(RegistryTest, ModeNames) {
  EXPECT_EQ(to_string(RegistryMode::kHarness), "harness");
  EXPECT_EQ(registry_mode_from_string("production"), RegistryMode::kProduction);
  EXPECT_FALSE(registry_mode_from_string("other").has_value());
}

}  // namespace
}  // namespace pssas
