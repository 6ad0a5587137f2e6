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

#ifndef PSSAS_BGLS_H_
#define PSSAS_BGLS_H_

// BLS-style aggregate signatures turned into a synchronized scheme: the
// signed message is (m, t, pk) and only same-period signatures aggregate.
// Verification needs one pairing per signer plus one.

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <utility>

#include "pssas/groups.h"
#include "pssas/rng.h"
#include "pssas/sas.h"

namespace pssas {

inline constexpr std::string_view kBglsTag = "SAS-BGLS-H-v1";

struct BglsPublicKey {
  G2Element W;
  static constexpr std::size_t kComponents = 1;
  std::array<std::uint8_t, kG2Bytes> encode() const { return W.encode(); }
  friend bool operator==(const BglsPublicKey&, const BglsPublicKey&) = default;
};

struct BglsSecretKey {
  Scalar s;
};

struct BglsSignature {
  G1Element sig;
  std::uint64_t period = 0;
};

// One group element plus the period, counted as two components.
struct BglsAggregate {
  G1Element agg;
  std::uint64_t period = 0;
  static constexpr std::size_t kComponents = 2;
  std::array<std::uint8_t, kSignatureBytes> encode() const;
};

struct BglsSignedEntry {
  BglsPublicKey pk;
  Bytes message;
  BglsSignature sig;
};

struct BglsPublicEntry {
  BglsPublicKey pk;
  Bytes message;
};

std::pair<BglsPublicKey, BglsSecretKey> bgls_keygen(const SasParams& params,
                                                    Rng& rng);

// H(be64(t) || pk || be64(len(m)) || m) in G.
G1Element bgls_message_hash(const SasParams& params, const BglsPublicKey& pk,
                            std::uint64_t t, ByteView m);

BglsSignature bgls_sign(const SasParams& params, const BglsSecretKey& sk,
                        const BglsPublicKey& pk, std::uint64_t t, ByteView m);

// Throws SasError on an empty list, mixed periods or a repeated (pk, m).
BglsAggregate bgls_aggregate(const SasParams& params,
                             std::span<const BglsSignedEntry> entries);

// e(agg, G~) == prod e(H_i, W_i): l + 1 pairings.
Verdict bgls_aggregate_verify(const SasParams& params,
                              std::span<const BglsPublicEntry> pairs,
                              const BglsAggregate& agg);

// Certified-key gate for the baseline: W is accepted only with s, W = G~^s.
class BglsCertifiedKeys {
 public:
  bool register_key(const SasParams& params, const BglsPublicKey& pk,
                    const BglsSecretKey& sk);
  bool is_certified(const BglsPublicKey& pk) const;

 private:
  std::set<std::array<std::uint8_t, kG2Bytes>> keys_;
};

Verdict bgls_certified_aggregate_verify(const BglsCertifiedKeys& certified,
                                        const SasParams& params,
                                        std::span<const BglsPublicEntry> pairs,
                                        const BglsAggregate& agg);

}  // namespace pssas

#endif  // PSSAS_BGLS_H_
