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

#ifndef PSSAS_GAMES_H_
#define PSSAS_GAMES_H_

// Executable security games: the PS and GPS assumption games, the EUF-CMA
// game for synchronized aggregate signatures in the certified-key model, and
// the reduction that turns an EUF-CMA forger into a GPS solver.
//
// Each game instance is single threaded; oracle call order matters.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pssas/groups.h"
#include "pssas/rng.h"
#include "pssas/sas.h"

namespace pssas {

class GpsChallenger;
class PsChallenger;

namespace whitebox {
struct ChallengerSecrets;
ChallengerSecrets reveal(const GpsChallenger& challenger);
ChallengerSecrets reveal(const PsChallenger& challenger);
}  // namespace whitebox

// (A*, B*, m*) as returned by an assumption-game adversary.
struct ForgeryOutput {
  G1Element A;
  G1Element B;
  Scalar m;
};

// Values handed to an adversary of the PS or GPS game.
struct AssumptionPublicValues {
  BilinearGroupContext ctx;
  G1Element G;
  G2Element g2;
  G2Element X;
  G2Element Y;
};

// What a reduction may touch: public values and the two GPS oracles.
class GpsOracles {
 public:
  virtual ~GpsOracles() = default;
  virtual const AssumptionPublicValues& public_values() const = 0;
  // Fresh uniform A in G*, recorded in Q0.
  virtual G1Element oracle0() = 0;
  // A^(x + m y), or nullopt when A was never issued or was already used.
  virtual std::optional<G1Element> oracle1(const G1Element& A,
                                           const Scalar& m) = 0;
};

class GpsChallenger final : public GpsOracles {
 public:
  GpsChallenger(const BilinearGroupContext& ctx, Rng rng);

  const AssumptionPublicValues& public_values() const override {
    return public_;
  }
  G1Element oracle0() override;
  std::optional<G1Element> oracle1(const G1Element& A,
                                   const Scalar& m) override;

  // Win iff m* was never answered by oracle1, A* != 1 and
  // B* = A*^(x + m* y).
  bool judge(const ForgeryOutput& out) const;

  std::size_t issued_count() const { return q0_.size(); }
  std::size_t answered_count() const { return q1_.size(); }
  bool was_issued(const G1Element& A) const;

 private:
  friend whitebox::ChallengerSecrets whitebox::reveal(const GpsChallenger&);
  using Key = std::array<std::uint8_t, kG1Bytes>;

  Rng rng_;
  Scalar x_;  // declared before public_, which is computed from them
  Scalar y_;
  AssumptionPublicValues public_;
  std::set<Key> q0_;
  std::map<Key, Scalar> q1_;  // A -> m, one entry per A
  std::set<std::array<std::uint8_t, kScalarBytes>> q1_messages_;
};

class PsChallenger {
 public:
  PsChallenger(const BilinearGroupContext& ctx, Rng rng);

  const AssumptionPublicValues& public_values() const { return public_; }
  // Records m and returns a fresh (A, A^(x + m y)).
  std::pair<G1Element, G1Element> oracle(const Scalar& m);
  bool judge(const ForgeryOutput& out) const;
  bool was_queried(const Scalar& m) const;

 private:
  friend whitebox::ChallengerSecrets whitebox::reveal(const PsChallenger&);

  Rng rng_;
  Scalar x_;  // declared before public_, which is computed from them
  Scalar y_;
  AssumptionPublicValues public_;
  std::set<std::array<std::uint8_t, kScalarBytes>> queried_;
};

// ---- EUF-CMA in the certified-key model -----------------------------------

enum class SignInstruction { kSkip, kSign };

// Oracle interface seen by an EUF-CMA adversary.
class EufCmaOracles {
 public:
  virtual ~EufCmaOracles() = default;
  virtual bool cert(const SasPublicKey& pk, const SasSecretKey& sk) = 0;
  virtual G1Element h1(std::uint64_t t) = 0;
  virtual Scalar h2(std::uint64_t t, ByteView m) = 0;
  // Signs under the challenge key in the current period, then advances the
  // period. kSkip only advances. nullopt once the period leaves [1, T].
  virtual std::optional<EpochSignature> sign(SignInstruction inst,
                                             ByteView m) = 0;
  virtual std::uint64_t current_period() const = 0;
};

struct Forgery {
  std::vector<PublicEntry> pairs;
  AggregateSignature agg;
};

class EufCmaAdversary {
 public:
  virtual ~EufCmaAdversary() = default;
  virtual Forgery run(const SasParams& params,
                      const SasPublicKey& challenge_pk,
                      EufCmaOracles& oracles) = 0;
};

enum class EufCmaOutcome {
  kWin,
  kAggregateInvalid,
  kUncertifiedKey,
  kNoFreshChallengeMessage,
};

std::string_view to_string(EufCmaOutcome outcome);

struct EufCmaTranscript {
  std::set<Bytes> queried_messages;          // Q
  std::vector<SasPublicKey> certified;       // L
  std::vector<std::pair<SasPublicKey, SasSecretKey>> escrow;  // K
  std::uint64_t current_period = 1;
  std::size_t sign_queries = 0;
  std::size_t h2_queries = 0;
  std::optional<bool> outcome;
};

struct EufCmaResult {
  bool win = false;
  EufCmaOutcome outcome = EufCmaOutcome::kAggregateInvalid;
  EufCmaTranscript transcript;
};

// Runs the game against a caller-generated challenge key pair. The secret key
// is used only by the signing oracle.
EufCmaResult eufcma_run(EufCmaAdversary& adversary, const SasParams& params,
                        const SasPublicKey& challenge_pk,
                        const SasSecretKey& challenge_sk);
EufCmaResult eufcma_run(EufCmaAdversary& adversary, const SasParams& params,
                        Rng& rng);

// ---- the reduction --------------------------------------------------------

enum class ReductionAbort {
  kNone,
  kNoValidForgery,
  kH2Collision,
  kOracle1Replay,
};

std::string_view to_string(ReductionAbort abort);

struct ReductionResult {
  std::optional<ForgeryOutput> output;
  ReductionAbort abort = ReductionAbort::kNone;
  std::string detail;
  std::size_t sign_queries = 0;
  std::size_t h1_queries = 0;
  std::size_t h2_queries = 0;
};

// Simulates the EUF-CMA game for `adversary` using only the GPS oracles:
// H1(t) is programmed to oracle0 outputs, H2 is a lazily sampled table keyed
// by (t, m), and signing queries are answered by oracle1. A valid forgery is
// turned into (A', B', m') with B' = A'^(x + m' y) by dividing out the
// certified co-signers' contributions.
ReductionResult reduction_b(EufCmaAdversary& adversary, GpsOracles& gps,
                            std::uint64_t max_period, Rng& rng);

// ---- loss terms -------------------------------------------------------------

struct AdvantageReport {
  std::size_t trials = 0;
  std::size_t successes = 0;
  double measured_success_rate = 0.0;
  double forger_advantage = 0.0;
  std::uint64_t sign_queries = 0;
  std::uint64_t h2_queries = 0;
  double log2_modulus = 0.0;
  // log2 of q_s^2 / (p - 1), q_H2 / p and q_H2^2 / p; -infinity when the
  // query count is zero.
  double log2_sign_loss = 0.0;
  double log2_h2_loss = 0.0;
  double log2_h2_birthday_loss = 0.0;
  double sign_loss = 0.0;
  double h2_loss = 0.0;
  double h2_birthday_loss = 0.0;
  // forger_advantage - sign_loss - h2_loss
  double predicted_lower_bound = 0.0;
  bool negligible = false;  // every loss term below 2^-128
};

AdvantageReport advantage_bound_report(const BilinearGroupContext& ctx,
                                       std::size_t trials,
                                       std::size_t successes,
                                       std::uint64_t sign_queries,
                                       std::uint64_t h2_queries,
                                       double forger_advantage = 1.0);

}  // namespace pssas

#endif  // PSSAS_GAMES_H_
