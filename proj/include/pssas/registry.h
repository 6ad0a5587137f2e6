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

#ifndef PSSAS_REGISTRY_H_
#define PSSAS_REGISTRY_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string_view>
#include <vector>

#include "pssas/groups.h"
#include "pssas/rng.h"
#include "pssas/sas.h"

namespace pssas {

// kHarness escrows submitted secret keys, as the certification oracle of the
// security game does. kProduction never stores secrets.
enum class RegistryMode { kHarness, kProduction };

std::string_view to_string(RegistryMode mode);
std::optional<RegistryMode> registry_mode_from_string(std::string_view s);

inline constexpr std::string_view kPossessionTag = "SAS-PS-POP-v1";

// Fiat-Shamir proof of knowledge of (x, y) with X = G~^x and Y = G~^y.
struct PossessionProof {
  Scalar challenge;
  Scalar response_x;
  Scalar response_y;

  std::array<std::uint8_t, 3 * kScalarBytes> encode() const;
  static std::optional<PossessionProof> decode(ByteView bytes);
};

PossessionProof prove_possession(const SasParams& params,
                                 const SasPublicKey& pk,
                                 const SasSecretKey& sk, Rng& rng);
bool verify_possession(const SasParams& params, const SasPublicKey& pk,
                       const PossessionProof& proof);

// True iff X = G~^x and Y = G~^y with x, y nonzero.
bool key_pair_is_valid(const SasParams& params, const SasPublicKey& pk,
                       const SasSecretKey& sk);

// Set of certified keys. Registration and lookup are linearizable: writers
// take an exclusive lock, readers a shared one.
class KeyRegistry {
 public:
  explicit KeyRegistry(RegistryMode mode) : mode_(mode) {}
  KeyRegistry(const KeyRegistry&) = delete;
  KeyRegistry& operator=(const KeyRegistry&) = delete;

  RegistryMode mode() const { return mode_; }

  // Accepts and records pk iff the pair is consistent. In harness mode the
  // secret key is escrowed as well.
  bool register_key(const SasParams& params, const SasPublicKey& pk,
                    const SasSecretKey& sk);
  bool register_key_with_proof(const SasParams& params,
                               const SasPublicKey& pk,
                               const PossessionProof& proof);

  // Records a key that was validated before it was persisted.
  void restore_certified(const SasPublicKey& pk);
  void restore_escrow(const SasPublicKey& pk, const SasSecretKey& sk);

  bool is_certified(const SasPublicKey& pk) const;
  std::optional<SasSecretKey> escrowed_secret(const SasPublicKey& pk) const;
  std::vector<SasPublicKey> certified_keys() const;
  std::size_t size() const;

 private:
  using Fingerprint = std::array<std::uint8_t, kPublicKeyBytes>;

  RegistryMode mode_;
  mutable std::shared_mutex mu_;
  std::map<Fingerprint, SasPublicKey> certified_;
  std::map<Fingerprint, SasSecretKey> escrow_;
};

// Rejects with "uncertified-pk" unless every key is registered, then defers
// to sas_aggregate_verify.
Verdict certified_aggregate_verify(const KeyRegistry& registry,
                                   const SasParams& params,
                                   std::span<const PublicEntry> pairs,
                                   const AggregateSignature& agg);

}  // namespace pssas

#endif  // PSSAS_REGISTRY_H_
