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

#include "pssas/bgls.h"

#include <algorithm>

namespace pssas {

std::array<std::uint8_t, kSignatureBytes> BglsAggregate::encode() const {
  return AggregateSignature{agg, period}.encode();
}

std::pair<BglsPublicKey, BglsSecretKey> bgls_keygen(const SasParams& params,
                                                    Rng& rng) {
  BglsSecretKey sk{random_scalar_nonzero(params.ctx, rng)};
  return {BglsPublicKey{params.g2.pow(sk.s)}, sk};
}

G1Element bgls_message_hash(const SasParams& params, const BglsPublicKey& pk,
                            std::uint64_t t, ByteView m) {
  Bytes msg;
  msg.reserve(8 + kG2Bytes + 8 + m.size());
  append(msg, encode_u64_be(t));
  append(msg, pk.encode());
  append(msg, encode_u64_be(m.size()));
  append(msg, m);
  return hash_bytes_to_g1(params.ctx, kBglsTag, msg);
}

BglsSignature bgls_sign(const SasParams& params, const BglsSecretKey& sk,
                        const BglsPublicKey& pk, std::uint64_t t,
                        ByteView m) {
  if (t < 1 || t > params.max_period) {
    throw SasError(reason::kPeriodOutOfRange, "period outside [1, T]");
  }
  return BglsSignature{bgls_message_hash(params, pk, t, m).pow(sk.s), t};
}

BglsAggregate bgls_aggregate(const SasParams&,
                             std::span<const BglsSignedEntry> entries) {
  if (entries.empty()) throw SasError(reason::kEmpty, "nothing to aggregate");
  const std::uint64_t t = entries.front().sig.period;
  std::set<Bytes> seen;
  G1Element product;
  for (const BglsSignedEntry& e : entries) {
    if (e.sig.period != t) {
      throw SasError(reason::kPeriodMismatch, "mixed periods");
    }
    const auto pk = e.pk.encode();
    Bytes key(pk.begin(), pk.end());
    append(key, e.message);
    if (!seen.insert(std::move(key)).second) {
      throw SasError(reason::kDuplicateMessage, "repeated (pk, m) pair");
    }
    product *= e.sig.sig;
  }
  return BglsAggregate{product, t};
}

Verdict bgls_aggregate_verify(const SasParams& params,
                              std::span<const BglsPublicEntry> pairs,
                              const BglsAggregate& agg) {
  if (pairs.empty()) return Verdict::reject(reason::kEmpty);
  if (agg.period < 1 || agg.period > params.max_period) {
    return Verdict::reject(reason::kPeriodOutOfRange);
  }
  std::set<Bytes> seen;
  for (const BglsPublicEntry& e : pairs) {
    const auto pk = e.pk.encode();
    Bytes key(pk.begin(), pk.end());
    append(key, e.message);
    if (!seen.insert(std::move(key)).second) {
      return Verdict::reject(reason::kDuplicateMessage);
    }
  }
  GTElement rhs;
  for (const BglsPublicEntry& e : pairs) {
    rhs *= pair(params.ctx,
                bgls_message_hash(params, e.pk, agg.period, e.message),
                e.pk.W);
  }
  const GTElement lhs = pair(params.ctx, agg.agg, params.g2);
  return lhs == rhs ? Verdict::accept()
                    : Verdict::reject(reason::kPairingMismatch);
}

bool BglsCertifiedKeys::register_key(const SasParams& params,
                                     const BglsPublicKey& pk,
                                     const BglsSecretKey& sk) {
  if (sk.s.is_zero() || pk.W != params.g2.pow(sk.s)) return false;
  keys_.insert(pk.encode());
  return true;
}

bool BglsCertifiedKeys::is_certified(const BglsPublicKey& pk) const {
  return keys_.contains(pk.encode());
}

Verdict bgls_certified_aggregate_verify(const BglsCertifiedKeys& certified,
                                        const SasParams& params,
                                        std::span<const BglsPublicEntry> pairs,
                                        const BglsAggregate& agg) {
  for (const BglsPublicEntry& e : pairs) {
    if (!certified.is_certified(e.pk)) {
      return Verdict::reject(reason::kUncertifiedPk);
    }
  }
  return bgls_aggregate_verify(params, pairs, agg);
}

}  // namespace pssas
