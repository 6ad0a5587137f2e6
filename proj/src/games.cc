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

#include "pssas/games.h"

#include <cmath>
#include <limits>

#include "pssas/registry.h"

namespace pssas {
namespace {

AssumptionPublicValues sample_public_values(const BilinearGroupContext& ctx,
                                            Rng& rng, Scalar& x, Scalar& y) {
  const G1Element G = random_g1_nonidentity(ctx, rng);
  const G2Element g2 = random_g2_nonidentity(ctx, rng);
  x = random_scalar_nonzero(ctx, rng);
  y = random_scalar_nonzero(ctx, rng);
  return AssumptionPublicValues{ctx, G, g2, g2.pow(x), g2.pow(y)};
}

bool contains_message(const std::set<Bytes>& q, ByteView m) {
  return q.contains(Bytes(m.begin(), m.end()));
}

// Index of the first pair that carries the challenge key on an unqueried
// message.
std::optional<std::size_t> find_fresh_challenge_entry(
    const Forgery& forgery, const SasPublicKey& challenge_pk,
    const std::set<Bytes>& queried) {
  for (std::size_t j = 0; j < forgery.pairs.size(); ++j) {
    const PublicEntry& e = forgery.pairs[j];
    if (e.pk == challenge_pk && !contains_message(queried, e.message)) {
      return j;
    }
  }
  return std::nullopt;
}

bool foreign_keys_certified(const Forgery& forgery,
                            const SasPublicKey& challenge_pk,
                            const KeyRegistry& registry) {
  for (const PublicEntry& e : forgery.pairs) {
    if (e.pk != challenge_pk && !registry.is_certified(e.pk)) return false;
  }
  return true;
}

class RealGame final : public EufCmaOracles {
 public:
  RealGame(const SasParams& params, const SasSecretKey& sk)
      : params_(params), sk_(sk), hashes_(params),
        registry_(RegistryMode::kHarness) {}

  bool cert(const SasPublicKey& pk, const SasSecretKey& sk) override {
    const bool ok = registry_.register_key(params_, pk, sk);
    if (ok) escrow_.emplace_back(pk, sk);
    return ok;
  }
  G1Element h1(std::uint64_t t) override { return hashes_.h1(t); }
  Scalar h2(std::uint64_t t, ByteView m) override {
    ++h2_queries_;
    return hashes_.h2(t, m);
  }
  std::optional<EpochSignature> sign(SignInstruction inst,
                                     ByteView m) override {
    if (t_ < 1 || t_ > params_.max_period) return std::nullopt;
    if (inst == SignInstruction::kSkip) {
      ++t_;
      return std::nullopt;
    }
    ++sign_queries_;
    queried_.insert(Bytes(m.begin(), m.end()));
    EpochSignature sig = sas_sign_with(params_, hashes_, sk_, t_, m);
    ++t_;
    return sig;
  }
  std::uint64_t current_period() const override { return t_; }

  const KeyRegistry& registry() const { return registry_; }

  EufCmaTranscript transcript() const {
    EufCmaTranscript tr;
    tr.queried_messages = queried_;
    tr.certified = registry_.certified_keys();
    tr.escrow = escrow_;
    tr.current_period = t_;
    tr.sign_queries = sign_queries_;
    tr.h2_queries = h2_queries_;
    return tr;
  }

  const std::set<Bytes>& queried() const { return queried_; }

 private:
  const SasParams& params_;
  SasSecretKey sk_;
  StandardHashOracle hashes_;
  KeyRegistry registry_;
  std::vector<std::pair<SasPublicKey, SasSecretKey>> escrow_;
  std::set<Bytes> queried_;
  std::uint64_t t_ = 1;
  std::size_t sign_queries_ = 0;
  std::size_t h2_queries_ = 0;
};

struct SimulationAbort {
  std::string detail;
};

// The reduction's view of the EUF-CMA game. Doubles as the hash oracle used
// to check the forgery, so verification sees the programmed tables.
class SimulatedGame final : public EufCmaOracles, public HashOracle {
 public:
  SimulatedGame(const SasParams& params, GpsOracles& gps, Rng& rng)
      : params_(params), gps_(gps), rng_(rng),
        registry_(RegistryMode::kHarness) {}

  bool cert(const SasPublicKey& pk, const SasSecretKey& sk) override {
    return registry_.register_key(params_, pk, sk);
  }

  G1Element h1(std::uint64_t t) override {
    ++h1_queries_;
    auto it = t1_.find(t);
    if (it != t1_.end()) return it->second;
    const G1Element a = gps_.oracle0();
    t1_.emplace(t, a);
    return a;
  }

  Scalar h2(std::uint64_t t, ByteView m) override {
    ++h2_queries_;
    auto key = std::make_pair(t, Bytes(m.begin(), m.end()));
    auto it = t2_.find(key);
    if (it != t2_.end()) return it->second;
    const Scalar m_prime = random_scalar(params_.ctx, rng_);
    t2_.emplace(std::move(key), m_prime);
    return m_prime;
  }

  std::optional<EpochSignature> sign(SignInstruction inst,
                                     ByteView m) override {
    if (t_ < 1 || t_ > params_.max_period) return std::nullopt;
    if (inst == SignInstruction::kSkip) {
      ++t_;
      return std::nullopt;
    }
    ++sign_queries_;
    const G1Element a = h1(t_);
    const Scalar m_prime = h2(t_, m);
    std::optional<G1Element> b = gps_.oracle1(a, m_prime);
    if (!b) {
      throw SimulationAbort{"oracle1 refused H1(" + std::to_string(t_) + ")"};
    }
    queried_.insert(Bytes(m.begin(), m.end()));
    answered_.insert(m_prime.to_bytes());
    EpochSignature sig{*b, t_};
    ++t_;
    return sig;
  }

  std::uint64_t current_period() const override { return t_; }

  const KeyRegistry& registry() const { return registry_; }
  const std::set<Bytes>& queried() const { return queried_; }
  bool was_answered(const Scalar& m_prime) const {
    return answered_.contains(m_prime.to_bytes());
  }
  std::size_t sign_queries() const { return sign_queries_; }
  std::size_t h1_queries() const { return h1_queries_; }
  std::size_t h2_queries() const { return h2_queries_; }

 private:
  const SasParams& params_;
  GpsOracles& gps_;
  Rng& rng_;
  KeyRegistry registry_;
  std::map<std::uint64_t, G1Element> t1_;
  std::map<std::pair<std::uint64_t, Bytes>, Scalar> t2_;
  std::set<Bytes> queried_;                                 // Q
  std::set<std::array<std::uint8_t, kScalarBytes>> answered_;  // C
  std::uint64_t t_ = 1;
  std::size_t sign_queries_ = 0;
  std::size_t h1_queries_ = 0;
  std::size_t h2_queries_ = 0;
};

double log2_or_neg_inf(double v) {
  return v == 0.0 ? -std::numeric_limits<double>::infinity() : std::log2(v);
}

double log2_of_hex(std::string_view hex) {
  // Leading 16 hex digits carry far more precision than a double keeps.
  const std::size_t head = std::min<std::size_t>(16, hex.size());
  const std::uint64_t top = std::stoull(std::string(hex.substr(0, head)),
                                        nullptr, 16);
  return std::log2(static_cast<double>(top)) +
         4.0 * static_cast<double>(hex.size() - head);
}

}  // namespace

// ---- GPS ------------------------------------------------------------------

GpsChallenger::GpsChallenger(const BilinearGroupContext& ctx, Rng rng)
    : rng_(std::move(rng)),
      public_(sample_public_values(ctx, rng_, x_, y_)) {}

G1Element GpsChallenger::oracle0() {
  const G1Element a = random_g1_nonidentity(public_.ctx, rng_);
  q0_.insert(a.encode());
  return a;
}

std::optional<G1Element> GpsChallenger::oracle1(const G1Element& A,
                                                const Scalar& m) {
  const Key key = A.encode();
  if (!q0_.contains(key) || q1_.contains(key)) return std::nullopt;
  q1_.emplace(key, m);
  q1_messages_.insert(m.to_bytes());
  return A.pow(x_ + m * y_);
}

bool GpsChallenger::judge(const ForgeryOutput& out) const {
  if (q1_messages_.contains(out.m.to_bytes())) return false;
  if (out.A.is_identity()) return false;
  return out.B == out.A.pow(x_ + out.m * y_);
}

bool GpsChallenger::was_issued(const G1Element& A) const {
  return q0_.contains(A.encode());
}

// ---- PS -------------------------------------------------------------------

PsChallenger::PsChallenger(const BilinearGroupContext& ctx, Rng rng)
    : rng_(std::move(rng)),
      public_(sample_public_values(ctx, rng_, x_, y_)) {}

std::pair<G1Element, G1Element> PsChallenger::oracle(const Scalar& m) {
  queried_.insert(m.to_bytes());
  const G1Element a = random_g1_nonidentity(public_.ctx, rng_);
  return {a, a.pow(x_ + m * y_)};
}

bool PsChallenger::judge(const ForgeryOutput& out) const {
  if (was_queried(out.m)) return false;
  if (out.A.is_identity()) return false;
  return out.B == out.A.pow(x_ + out.m * y_);
}

bool PsChallenger::was_queried(const Scalar& m) const {
  return queried_.contains(m.to_bytes());
}

// ---- EUF-CMA --------------------------------------------------------------

std::string_view to_string(EufCmaOutcome outcome) {
  switch (outcome) {
    case EufCmaOutcome::kWin:
      return "win";
    case EufCmaOutcome::kAggregateInvalid:
      return "aggregate-invalid";
    case EufCmaOutcome::kUncertifiedKey:
      return "uncertified-key";
    case EufCmaOutcome::kNoFreshChallengeMessage:
      return "no-fresh-challenge-message";
  }
  return "unknown";
}

EufCmaResult eufcma_run(EufCmaAdversary& adversary, const SasParams& params,
                        const SasPublicKey& challenge_pk,
                        const SasSecretKey& challenge_sk) {
  RealGame game(params, challenge_sk);
  const Forgery forgery = adversary.run(params, challenge_pk, game);

  EufCmaResult result;
  StandardHashOracle hashes(params);
  if (!sas_aggregate_verify_with(params, hashes, forgery.pairs,
                                 forgery.agg)) {
    result.outcome = EufCmaOutcome::kAggregateInvalid;
  } else if (!foreign_keys_certified(forgery, challenge_pk,
                                     game.registry())) {
    result.outcome = EufCmaOutcome::kUncertifiedKey;
  } else if (!find_fresh_challenge_entry(forgery, challenge_pk,
                                         game.queried())) {
    result.outcome = EufCmaOutcome::kNoFreshChallengeMessage;
  } else {
    result.outcome = EufCmaOutcome::kWin;
  }
  result.win = result.outcome == EufCmaOutcome::kWin;
  result.transcript = game.transcript();
  result.transcript.outcome = result.win;
  return result;
}

EufCmaResult eufcma_run(EufCmaAdversary& adversary, const SasParams& params,
                        Rng& rng) {
  auto [pk, sk] = sas_keygen(params, rng);
  return eufcma_run(adversary, params, pk, sk);
}

// ---- reduction --------------------------------------------------------------

std::string_view to_string(ReductionAbort abort) {
  switch (abort) {
    case ReductionAbort::kNone:
      return "none";
    case ReductionAbort::kNoValidForgery:
      return "no-valid-forgery";
    case ReductionAbort::kH2Collision:
      return "h2-collision";
    case ReductionAbort::kOracle1Replay:
      return "oracle1-replay";
  }
  return "unknown";
}

ReductionResult reduction_b(EufCmaAdversary& adversary, GpsOracles& gps,
                            std::uint64_t max_period, Rng& rng) {
  const AssumptionPublicValues& pub = gps.public_values();
  if (max_period == 0) {
    throw SasError(reason::kInvalidPeriodBound, "T must be at least 1");
  }
  const SasParams params{pub.ctx, pub.g2, max_period, std::string(kH1Tag),
                         std::string(kH2Tag)};
  const SasPublicKey challenge_pk{pub.X, pub.Y};

  SimulatedGame game(params, gps, rng);
  ReductionResult result;
  auto finish = [&](ReductionAbort abort, std::string detail) {
    result.abort = abort;
    result.detail = std::move(detail);
    result.sign_queries = game.sign_queries();
    result.h1_queries = game.h1_queries();
    result.h2_queries = game.h2_queries();
    return result;
  };

  Forgery forgery;
  try {
    forgery = adversary.run(params, challenge_pk, game);
  } catch (const SimulationAbort& abort) {
    return finish(ReductionAbort::kOracle1Replay, abort.detail);
  }

  const Verdict valid =
      sas_aggregate_verify_with(params, game, forgery.pairs, forgery.agg);
  if (!valid) {
    return finish(ReductionAbort::kNoValidForgery,
                  "aggregate rejected: " + valid.reason);
  }
  if (!foreign_keys_certified(forgery, challenge_pk, game.registry())) {
    return finish(ReductionAbort::kNoValidForgery, "uncertified key");
  }
  const std::optional<std::size_t> j_star =
      find_fresh_challenge_entry(forgery, challenge_pk, game.queried());
  if (!j_star) {
    return finish(ReductionAbort::kNoValidForgery,
                  "no challenge-key entry on a fresh message");
  }

  const std::uint64_t t_star = forgery.agg.period;
  const Scalar m_star_prime =
      game.h2(t_star, forgery.pairs[*j_star].message);
  if (game.was_answered(m_star_prime)) {
    return finish(ReductionAbort::kH2Collision,
                  "H2 value of the forged message was signed before");
  }

  const G1Element a_prime = game.h1(t_star);
  Scalar cosigner_exponent;
  for (std::size_t i = 0; i < forgery.pairs.size(); ++i) {
    if (i == *j_star) continue;
    const PublicEntry& e = forgery.pairs[i];
    const std::optional<SasSecretKey> sk =
        game.registry().escrowed_secret(e.pk);
    if (!sk) {
      return finish(ReductionAbort::kNoValidForgery,
                    "co-signer key without escrowed secret");
    }
    cosigner_exponent += sk->x + game.h2(t_star, e.message) * sk->y;
  }
  const G1Element b_prime =
      forgery.agg.Bp * a_prime.pow(cosigner_exponent).inverse();

  result.output = ForgeryOutput{a_prime, b_prime, m_star_prime};
  return finish(ReductionAbort::kNone, "");
}

// ---- loss terms -------------------------------------------------------------

AdvantageReport advantage_bound_report(const BilinearGroupContext& ctx,
                                       std::size_t trials,
                                       std::size_t successes,
                                       std::uint64_t sign_queries,
                                       std::uint64_t h2_queries,
                                       double forger_advantage) {
  AdvantageReport r;
  r.trials = trials;
  r.successes = successes;
  r.measured_success_rate =
      trials == 0 ? 0.0 : static_cast<double>(successes) / trials;
  r.forger_advantage = forger_advantage;
  r.sign_queries = sign_queries;
  r.h2_queries = h2_queries;
  r.log2_modulus = log2_of_hex(ctx.modulus_hex());

  const double qs = static_cast<double>(sign_queries);
  const double qh = static_cast<double>(h2_queries);
  // p - 1 and p agree to ~2^-255 relative precision.
  r.log2_sign_loss = log2_or_neg_inf(qs * qs) - r.log2_modulus;
  r.log2_h2_loss = log2_or_neg_inf(qh) - r.log2_modulus;
  r.log2_h2_birthday_loss = log2_or_neg_inf(qh * qh) - r.log2_modulus;
  r.sign_loss = std::exp2(r.log2_sign_loss);
  r.h2_loss = std::exp2(r.log2_h2_loss);
  r.h2_birthday_loss = std::exp2(r.log2_h2_birthday_loss);
  r.predicted_lower_bound = forger_advantage - r.sign_loss - r.h2_loss;
  r.negligible = r.log2_sign_loss < -128 && r.log2_h2_loss < -128 &&
                 r.log2_h2_birthday_loss < -128;
  return r;
}

}  // namespace pssas
