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

#ifndef PSSAS_SAS_H_
#define PSSAS_SAS_H_

// Synchronized aggregate signatures from Pointcheval-Sanders signatures.
//
// Every signer in period t uses the shared base H1(t), so a signature is a
// single G element B = H1(t)^(x + H2(t, m) * y). Signatures of distinct
// signers from the same period multiply into an aggregate of the same size,
// which is checked with two pairings regardless of the number of signers.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pssas/encoding.h"
#include "pssas/groups.h"
#include "pssas/rng.h"

namespace pssas {

inline constexpr std::string_view kH1Tag = "SAS-PS-H1-v1";
inline constexpr std::string_view kH2Tag = "SAS-PS-H2-v1";

inline constexpr std::size_t kPeriodBytes = 8;
inline constexpr std::size_t kPublicKeyBytes = 2 * kG2Bytes;
inline constexpr std::size_t kSignatureBytes = kG1Bytes + kPeriodBytes;

// Reason codes carried by verdicts and errors.
namespace reason {
inline constexpr std::string_view kOk = "ok";
inline constexpr std::string_view kPairingMismatch = "pairing-mismatch";
inline constexpr std::string_view kPeriodOutOfRange = "period-out-of-range";
inline constexpr std::string_view kPeriodAlreadyUsed = "period-already-used";
inline constexpr std::string_view kPeriodMismatch = "period-mismatch";
inline constexpr std::string_view kDuplicatePk = "duplicate-pk";
inline constexpr std::string_view kDuplicateMessage = "duplicate-message";
inline constexpr std::string_view kInvalidMember = "invalid-member-signature";
inline constexpr std::string_view kEmpty = "empty-input";
inline constexpr std::string_view kUncertifiedPk = "uncertified-pk";
inline constexpr std::string_view kInvalidPeriodBound = "invalid-period-bound";
inline constexpr std::string_view kDecodeFailure = "decode-failure";
}  // namespace reason

// Accept/reject decision with the reason that produced it.
struct Verdict {
  bool accepted = false;
  std::string reason;

  static Verdict accept() { return {true, std::string(reason::kOk)}; }
  static Verdict reject(std::string_view why) {
    return {false, std::string(why)};
  }
  explicit operator bool() const { return accepted; }
};

// Operational failures (bad period, reused period, aggregation refused).
class SasError : public std::runtime_error {
 public:
  SasError(std::string_view reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

struct SasParams {
  BilinearGroupContext ctx;
  G2Element g2;
  std::uint64_t max_period;
  std::string h1_tag;
  std::string h2_tag;
};

// Deterministic parameters: G~ is the curve's standard generator.
SasParams sas_setup(int security_level, std::uint64_t max_period);
// Parameters with G~ sampled uniformly from G~* (game-harness fidelity).
SasParams sas_setup_sampled(int security_level, std::uint64_t max_period,
                            Rng& rng);

struct SasPublicKey {
  G2Element X;
  G2Element Y;

  static constexpr std::size_t kComponents = 2;

  // X || Y, each in compressed form.
  std::array<std::uint8_t, kPublicKeyBytes> encode() const;
  static std::optional<SasPublicKey> decode(ByteView bytes);
  std::string to_hex() const { return pssas::to_hex(encode()); }

  friend bool operator==(const SasPublicKey&, const SasPublicKey&) = default;
};

struct SasSecretKey {
  Scalar x;
  Scalar y;
};

struct EpochSignature {
  G1Element B;
  std::uint64_t period = 0;

  static constexpr std::size_t kComponents = 2;

  // B || be64(period)
  std::array<std::uint8_t, kSignatureBytes> encode() const;
  static std::optional<EpochSignature> decode(ByteView bytes);

  friend bool operator==(const EpochSignature&,
                         const EpochSignature&) = default;
};

struct AggregateSignature {
  G1Element Bp;
  std::uint64_t period = 0;

  static constexpr std::size_t kComponents = 2;

  std::array<std::uint8_t, kSignatureBytes> encode() const;
  static std::optional<AggregateSignature> decode(ByteView bytes);

  friend bool operator==(const AggregateSignature&,
                         const AggregateSignature&) = default;
};

// Enforces the one-signature-per-period rule for a single signer. Callers
// must serialise access to a given signer's state.
struct SignerState {
  std::optional<std::uint64_t> last_signed_period;
};

struct SignedEntry {
  SasPublicKey pk;
  Bytes message;
  EpochSignature sig;
};

struct PublicEntry {
  SasPublicKey pk;
  Bytes message;
};

// The two random oracles of the scheme. The standard instance hashes with
// the parameter tags; the security harness substitutes programmed tables.
class HashOracle {
 public:
  virtual ~HashOracle() = default;
  virtual G1Element h1(std::uint64_t t) = 0;
  virtual Scalar h2(std::uint64_t t, ByteView m) = 0;
};

class StandardHashOracle final : public HashOracle {
 public:
  explicit StandardHashOracle(const SasParams& params);
  G1Element h1(std::uint64_t t) override;
  Scalar h2(std::uint64_t t, ByteView m) override;

 private:
  BilinearGroupContext ctx_;
  std::string h1_tag_;
  std::string h2_tag_;
};

std::pair<SasPublicKey, SasSecretKey> sas_keygen(const SasParams& params,
                                                 Rng& rng);

// Deterministic in (sk, t, m). Throws SasError on a period outside [1, T] or
// one not strictly after state.last_signed_period; updates `state`.
EpochSignature sas_sign(const SasParams& params, const SasSecretKey& sk,
                        std::uint64_t t, ByteView m, SignerState& state);
// Stateless signing core over an arbitrary oracle.
EpochSignature sas_sign_with(const SasParams& params, HashOracle& oracle,
                             const SasSecretKey& sk, std::uint64_t t,
                             ByteView m);

Verdict sas_verify(const SasParams& params, const SasPublicKey& pk,
                   ByteView m, const EpochSignature& sig);
Verdict sas_verify_with(const SasParams& params, HashOracle& oracle,
                        const SasPublicKey& pk, ByteView m,
                        const EpochSignature& sig);

// Multiplies same-period member signatures after checking periods, key
// distinctness and every member signature. Throws SasError otherwise.
AggregateSignature sas_aggregate(const SasParams& params,
                                 std::span<const SignedEntry> entries);
AggregateSignature sas_aggregate_with(const SasParams& params,
                                      HashOracle& oracle,
                                      std::span<const SignedEntry> entries);

// e(H1(t), prod X_i * Y_i^H2(t, m_i)) == e(B', G~). Two pairings for any l.
Verdict sas_aggregate_verify(const SasParams& params,
                             std::span<const PublicEntry> pairs,
                             const AggregateSignature& agg);
Verdict sas_aggregate_verify_with(const SasParams& params, HashOracle& oracle,
                                  std::span<const PublicEntry> pairs,
                                  const AggregateSignature& agg);

struct CorrectnessOptions {
  bool same_message = false;
};

struct CorrectnessTranscriptEntry {
  std::string pk_hex;
  Bytes message;
  std::string sig_hex;
  bool verified = false;
};

struct CorrectnessReport {
  bool passed = false;
  std::size_t ell = 0;
  std::uint64_t period = 0;
  std::vector<CorrectnessTranscriptEntry> members;
  std::string aggregate_hex;
  bool aggregate_verified = false;
  std::string failure;
};

// Fresh keys, random messages and a random period; checks that every member
// signature and the aggregate verify.
CorrectnessReport sas_correctness_check(const SasParams& params,
                                        std::size_t ell, Rng& rng,
                                        CorrectnessOptions options = {});

bool has_duplicate_keys(std::span<const SasPublicKey> keys);

}  // namespace pssas

#endif  // PSSAS_SAS_H_
