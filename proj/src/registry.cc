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

#include "pssas/registry.h"

#include <algorithm>
#include <mutex>

namespace pssas {
namespace {

Scalar possession_challenge(const SasParams& params, const SasPublicKey& pk,
                            const G2Element& commit_x,
                            const G2Element& commit_y) {
  Bytes transcript;
  append(transcript, params.g2.encode());
  append(transcript, pk.encode());
  append(transcript, commit_x.encode());
  append(transcript, commit_y.encode());
  return hash_bytes_to_scalar(params.ctx, kPossessionTag, transcript);
}

}  // namespace

std::string_view to_string(RegistryMode mode) {
  return mode == RegistryMode::kHarness ? "harness" : "production";
}

std::optional<RegistryMode> registry_mode_from_string(std::string_view s) {
  if (s == "harness") return RegistryMode::kHarness;
  if (s == "production") return RegistryMode::kProduction;
  return std::nullopt;
}

std::array<std::uint8_t, 3 * kScalarBytes> PossessionProof::encode() const {
  std::array<std::uint8_t, 3 * kScalarBytes> out;
  const auto c = challenge.to_bytes();
  const auto sx = response_x.to_bytes();
  const auto sy = response_y.to_bytes();
  std::copy(c.begin(), c.end(), out.begin());
  std::copy(sx.begin(), sx.end(), out.begin() + kScalarBytes);
  std::copy(sy.begin(), sy.end(), out.begin() + 2 * kScalarBytes);
  return out;
}

std::optional<PossessionProof> PossessionProof::decode(ByteView bytes) {
  if (bytes.size() != 3 * kScalarBytes) return std::nullopt;
  auto c = Scalar::from_bytes(bytes.first(kScalarBytes));
  auto sx = Scalar::from_bytes(bytes.subspan(kScalarBytes, kScalarBytes));
  auto sy = Scalar::from_bytes(bytes.subspan(2 * kScalarBytes));
  if (!c || !sx || !sy) return std::nullopt;
  return PossessionProof{*c, *sx, *sy};
}

PossessionProof prove_possession(const SasParams& params,
                                 const SasPublicKey& pk,
                                 const SasSecretKey& sk, Rng& rng) {
  const Scalar kx = random_scalar_nonzero(params.ctx, rng);
  const Scalar ky = random_scalar_nonzero(params.ctx, rng);
  const Scalar c =
      possession_challenge(params, pk, params.g2.pow(kx), params.g2.pow(ky));
  return PossessionProof{c, kx + c * sk.x, ky + c * sk.y};
}

bool verify_possession(const SasParams& params, const SasPublicKey& pk,
                       const PossessionProof& proof) {
  if (pk.X.is_identity() || pk.Y.is_identity()) return false;
  // R = G~^s * P^-c recovers the prover's commitments.
  const Scalar neg_c = -proof.challenge;
  const G2Element commit_x = params.g2.pow(proof.response_x) * pk.X.pow(neg_c);
  const G2Element commit_y = params.g2.pow(proof.response_y) * pk.Y.pow(neg_c);
  return possession_challenge(params, pk, commit_x, commit_y) ==
         proof.challenge;
}

bool key_pair_is_valid(const SasParams& params, const SasPublicKey& pk,
                       const SasSecretKey& sk) {
  if (sk.x.is_zero() || sk.y.is_zero()) return false;
  return pk.X == params.g2.pow(sk.x) && pk.Y == params.g2.pow(sk.y);
}

bool KeyRegistry::register_key(const SasParams& params,
                               const SasPublicKey& pk,
                               const SasSecretKey& sk) {
  if (!key_pair_is_valid(params, pk, sk)) return false;
  const Fingerprint fp = pk.encode();
  std::unique_lock lock(mu_);
  certified_.insert_or_assign(fp, pk);
  if (mode_ == RegistryMode::kHarness) escrow_.insert_or_assign(fp, sk);
  return true;
}

bool KeyRegistry::register_key_with_proof(const SasParams& params,
                                          const SasPublicKey& pk,
                                          const PossessionProof& proof) {
  if (!verify_possession(params, pk, proof)) return false;
  std::unique_lock lock(mu_);
  certified_.insert_or_assign(pk.encode(), pk);
  return true;
}

void KeyRegistry::restore_certified(const SasPublicKey& pk) {
  std::unique_lock lock(mu_);
  certified_.insert_or_assign(pk.encode(), pk);
}

void KeyRegistry::restore_escrow(const SasPublicKey& pk,
                                 const SasSecretKey& sk) {
  if (mode_ != RegistryMode::kHarness) {
    throw std::logic_error("escrow is only kept in harness mode");
  }
  std::unique_lock lock(mu_);
  escrow_.insert_or_assign(pk.encode(), sk);
}

bool KeyRegistry::is_certified(const SasPublicKey& pk) const {
  const Fingerprint fp = pk.encode();
  std::shared_lock lock(mu_);
  return certified_.contains(fp);
}

std::optional<SasSecretKey> KeyRegistry::escrowed_secret(
    const SasPublicKey& pk) const {
  const Fingerprint fp = pk.encode();
  std::shared_lock lock(mu_);
  auto it = escrow_.find(fp);
  if (it == escrow_.end()) return std::nullopt;
  return it->second;
}

std::vector<SasPublicKey> KeyRegistry::certified_keys() const {
  std::shared_lock lock(mu_);
  std::vector<SasPublicKey> out;
  out.reserve(certified_.size());
  for (const auto& [fp, pk] : certified_) out.push_back(pk);
  return out;
}

std::size_t KeyRegistry::size() const {
  std::shared_lock lock(mu_);
  return certified_.size();
}

Verdict certified_aggregate_verify(const KeyRegistry& registry,
                                   const SasParams& params,
                                   std::span<const PublicEntry> pairs,
                                   const AggregateSignature& agg) {
  for (const PublicEntry& e : pairs) {
    if (!registry.is_certified(e.pk)) {
      return Verdict::reject(reason::kUncertifiedPk);
    }
  }
  return sas_aggregate_verify(params, pairs, agg);
}

}  // namespace pssas
