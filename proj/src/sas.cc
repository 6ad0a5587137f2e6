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

#include "pssas/sas.h"

#include <algorithm>
#include <set>

namespace pssas {
namespace {

void check_period(const SasParams& params, std::uint64_t t) {
  if (t < 1 || t > params.max_period) {
    throw SasError(reason::kPeriodOutOfRange,
                   "period " + std::to_string(t) + " outside [1, " +
                       std::to_string(params.max_period) + "]");
  }
}

std::array<std::uint8_t, kSignatureBytes> encode_signature(
    const G1Element& b, std::uint64_t period) {
  std::array<std::uint8_t, kSignatureBytes> out;
  const auto point = b.encode();
  const auto t = encode_u64_be(period);
  std::copy(point.begin(), point.end(), out.begin());
  std::copy(t.begin(), t.end(), out.begin() + kG1Bytes);
  return out;
}

std::optional<std::pair<G1Element, std::uint64_t>> decode_signature(
    ByteView bytes) {
  if (bytes.size() != kSignatureBytes) return std::nullopt;
  auto b = G1Element::decode(bytes.first(kG1Bytes));
  if (!b) return std::nullopt;
  return std::make_pair(*b, decode_u64_be(bytes.subspan(kG1Bytes)));
}

SasParams make_params(int security_level, std::uint64_t max_period,
                      const G2Element& g2) {
  if (max_period == 0) {
    throw SasError(reason::kInvalidPeriodBound,
                   "maximum period T must be at least 1");
  }
  return SasParams{generate_context(security_level), g2, max_period,
                   std::string(kH1Tag), std::string(kH2Tag)};
}

}  // namespace

SasParams sas_setup(int security_level, std::uint64_t max_period) {
  return make_params(security_level, max_period, G2Element::generator());
}

SasParams sas_setup_sampled(int security_level, std::uint64_t max_period,
                            Rng& rng) {
  const BilinearGroupContext ctx = generate_context(security_level);
  return make_params(security_level, max_period,
                     random_g2_nonidentity(ctx, rng));
}

std::array<std::uint8_t, kPublicKeyBytes> SasPublicKey::encode() const {
  std::array<std::uint8_t, kPublicKeyBytes> out;
  const auto x = X.encode();
  const auto y = Y.encode();
  std::copy(x.begin(), x.end(), out.begin());
  std::copy(y.begin(), y.end(), out.begin() + kG2Bytes);
  return out;
}

std::optional<SasPublicKey> SasPublicKey::decode(ByteView bytes) {
  if (bytes.size() != kPublicKeyBytes) return std::nullopt;
  auto x = G2Element::decode(bytes.first(kG2Bytes));
  auto y = G2Element::decode(bytes.subspan(kG2Bytes));
  // x, y are nonzero, so neither half of an honest key is the identity.
  if (!x || !y || x->is_identity() || y->is_identity()) return std::nullopt;
  return SasPublicKey{*x, *y};
}

std::array<std::uint8_t, kSignatureBytes> EpochSignature::encode() const {
  return encode_signature(B, period);
}

std::optional<EpochSignature> EpochSignature::decode(ByteView bytes) {
  auto parsed = decode_signature(bytes);
  if (!parsed) return std::nullopt;
  return EpochSignature{parsed->first, parsed->second};
}

std::array<std::uint8_t, kSignatureBytes> AggregateSignature::encode() const {
  return encode_signature(Bp, period);
}

std::optional<AggregateSignature> AggregateSignature::decode(ByteView bytes) {
  auto parsed = decode_signature(bytes);
  if (!parsed) return std::nullopt;
  return AggregateSignature{parsed->first, parsed->second};
}

StandardHashOracle::StandardHashOracle(const SasParams& params)
    : ctx_(params.ctx), h1_tag_(params.h1_tag), h2_tag_(params.h2_tag) {}

G1Element StandardHashOracle::h1(std::uint64_t t) {
  return hash_to_g1(ctx_, h1_tag_, t);
}

Scalar StandardHashOracle::h2(std::uint64_t t, ByteView m) {
  return hash_to_scalar(ctx_, h2_tag_, t, m);
}

std::pair<SasPublicKey, SasSecretKey> sas_keygen(const SasParams& params,
                                                 Rng& rng) {
  SasSecretKey sk{random_scalar_nonzero(params.ctx, rng),
                  random_scalar_nonzero(params.ctx, rng)};
  SasPublicKey pk{params.g2.pow(sk.x), params.g2.pow(sk.y)};
  return {pk, sk};
}

EpochSignature sas_sign(const SasParams& params, const SasSecretKey& sk,
                        std::uint64_t t, ByteView m, SignerState& state) {
  check_period(params, t);
  if (state.last_signed_period && *state.last_signed_period >= t) {
    throw SasError(reason::kPeriodAlreadyUsed,
                   "signer already signed in period " +
                       std::to_string(*state.last_signed_period));
  }
  StandardHashOracle oracle(params);
  EpochSignature sig = sas_sign_with(params, oracle, sk, t, m);
  state.last_signed_period = t;
  return sig;
}

EpochSignature sas_sign_with(const SasParams& params, HashOracle& oracle,
                             const SasSecretKey& sk, std::uint64_t t,
                             ByteView m) {
  check_period(params, t);
  const Scalar m_prime = oracle.h2(t, m);
  return EpochSignature{oracle.h1(t).pow(sk.x + m_prime * sk.y), t};
}

Verdict sas_verify(const SasParams& params, const SasPublicKey& pk,
                   ByteView m, const EpochSignature& sig) {
  StandardHashOracle oracle(params);
  return sas_verify_with(params, oracle, pk, m, sig);
}

Verdict sas_verify_with(const SasParams& params, HashOracle& oracle,
                        const SasPublicKey& pk, ByteView m,
                        const EpochSignature& sig) {
  const std::uint64_t t = sig.period;
  if (t < 1 || t > params.max_period) {
    return Verdict::reject(reason::kPeriodOutOfRange);
  }
  const Scalar m_prime = oracle.h2(t, m);
  const GTElement lhs = pair(params.ctx, oracle.h1(t), pk.X * pk.Y.pow(m_prime));
  const GTElement rhs = pair(params.ctx, sig.B, params.g2);
  return lhs == rhs ? Verdict::accept()
                    : Verdict::reject(reason::kPairingMismatch);
}

AggregateSignature sas_aggregate(const SasParams& params,
                                 std::span<const SignedEntry> entries) {
  StandardHashOracle oracle(params);
  return sas_aggregate_with(params, oracle, entries);
}

AggregateSignature sas_aggregate_with(const SasParams& params,
                                      HashOracle& oracle,
                                      std::span<const SignedEntry> entries) {
  if (entries.empty()) {
    throw SasError(reason::kEmpty, "nothing to aggregate");
  }
  const std::uint64_t t = entries.front().sig.period;
  for (const SignedEntry& e : entries) {
    if (e.sig.period != t) {
      throw SasError(reason::kPeriodMismatch,
                     "signatures from periods " + std::to_string(t) +
                         " and " + std::to_string(e.sig.period));
    }
  }
  std::vector<SasPublicKey> keys;
  keys.reserve(entries.size());
  for (const SignedEntry& e : entries) keys.push_back(e.pk);
  if (has_duplicate_keys(keys)) {
    throw SasError(reason::kDuplicatePk, "a public key appears twice");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const SignedEntry& e = entries[i];
    if (!sas_verify_with(params, oracle, e.pk, e.message, e.sig)) {
      throw SasError(reason::kInvalidMember,
                     "member signature " + std::to_string(i) +
                         " does not verify");
    }
  }
  G1Element product;
  for (const SignedEntry& e : entries) product *= e.sig.B;
  return AggregateSignature{product, t};
}

Verdict sas_aggregate_verify(const SasParams& params,
                             std::span<const PublicEntry> pairs,
                             const AggregateSignature& agg) {
  StandardHashOracle oracle(params);
  return sas_aggregate_verify_with(params, oracle, pairs, agg);
}

Verdict sas_aggregate_verify_with(const SasParams& params, HashOracle& oracle,
                                  std::span<const PublicEntry> pairs,
                                  const AggregateSignature& agg) {
  if (pairs.empty()) return Verdict::reject(reason::kEmpty);
  std::vector<SasPublicKey> keys;
  keys.reserve(pairs.size());
  for (const PublicEntry& e : pairs) keys.push_back(e.pk);
  if (has_duplicate_keys(keys)) return Verdict::reject(reason::kDuplicatePk);

  const std::uint64_t t = agg.period;
  if (t < 1 || t > params.max_period) {
    return Verdict::reject(reason::kPeriodOutOfRange);
  }
  // l exponentiations and 2l - 1 multiplications in G~.
  std::optional<G2Element> key_product;
  for (const PublicEntry& e : pairs) {
    G2Element term = e.pk.X * e.pk.Y.pow(oracle.h2(t, e.message));
    if (key_product) {
      *key_product *= term;
    } else {
      key_product = term;
    }
  }
  const GTElement lhs = pair(params.ctx, oracle.h1(t), *key_product);
  const GTElement rhs = pair(params.ctx, agg.Bp, params.g2);
  return lhs == rhs ? Verdict::accept()
                    : Verdict::reject(reason::kPairingMismatch);
}

CorrectnessReport sas_correctness_check(const SasParams& params,
                                        std::size_t ell, Rng& rng,
                                        CorrectnessOptions options) {
  CorrectnessReport report;
  report.ell = ell;
  if (ell == 0) {
    report.failure = "ell must be at least 1";
    return report;
  }
  report.period = 1 + rng() % params.max_period;

  Bytes shared(16);
  rng.fill(shared);
  std::vector<SignedEntry> entries;
  entries.reserve(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    auto [pk, sk] = sas_keygen(params, rng);
    Bytes message = shared;
    if (!options.same_message) {
      // Index suffix keeps the random messages pairwise distinct.
      append(message, encode_u64_be(i));
    }
    SignerState state;
    EpochSignature sig = sas_sign(params, sk, report.period, message, state);
    entries.push_back(SignedEntry{pk, std::move(message), sig});
  }

  bool members_ok = true;
  for (const SignedEntry& e : entries) {
    const bool ok = sas_verify(params, e.pk, e.message, e.sig).accepted;
    members_ok = members_ok && ok;
    report.members.push_back(CorrectnessTranscriptEntry{
        e.pk.to_hex(), e.message, e.sig.B.to_hex(), ok});
  }
  if (!members_ok) {
    report.failure = "member signature rejected";
    return report;
  }

  AggregateSignature agg;
  try {
    agg = sas_aggregate(params, entries);
  } catch (const SasError& err) {
    report.failure = "aggregation refused: " + err.reason();
    return report;
  }
  report.aggregate_hex = agg.Bp.to_hex();

  std::vector<PublicEntry> pairs;
  pairs.reserve(ell);
  for (const SignedEntry& e : entries) pairs.push_back({e.pk, e.message});
  report.aggregate_verified =
      sas_aggregate_verify(params, pairs, agg).accepted;
  report.passed = report.aggregate_verified;
  if (!report.passed) report.failure = "aggregate rejected";
  return report;
}

bool has_duplicate_keys(std::span<const SasPublicKey> keys) {
  std::set<std::array<std::uint8_t, kPublicKeyBytes>> seen;
  for (const SasPublicKey& pk : keys) {
    if (!seen.insert(pk.encode()).second) return true;
  }
  return false;
}

}  // namespace pssas
