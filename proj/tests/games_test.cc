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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "pssas/games.h"
#include "pssas/harness.h"
#include "pssas/whitebox.h"

namespace pssas {
namespace {

class GamesTest : public ::testing::Test {
 protected:
  BilinearGroupContext ctx_ = generate_context(128);
  Rng rng_ = Rng::from_seed(404);

  bool pairing_relation(const AssumptionPublicValues& pub, const G1Element& A,
                        const G1Element& B, const Scalar& m) {
    return pair(ctx_, A, pub.X * pub.Y.pow(m)) == pair(ctx_, B, pub.g2);
  }
};

// ---- GPS ------------------------------------------------------------------

TEST_F(GamesTest, GpsOracle0) {
  GpsChallenger gps(ctx_, Rng::from_seed(1));
  std::set<std::array<std::uint8_t, kG1Bytes>> seen;
  for (int i = 0; i < 1000; ++i) {
    const G1Element a = gps.oracle0();
    ASSERT_FALSE(a.is_identity());
    ASSERT_TRUE(gps.was_issued(a));
    seen.insert(a.encode());
  }
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(gps.issued_count(), 1000u);
}

TEST_F(GamesTest, GpsPublicValuesAreConsistent) {
  GpsChallenger gps(ctx_, Rng::from_seed(2));
  const auto& pub = gps.public_values();
  const auto s = whitebox::reveal(gps);
  EXPECT_EQ(pub.X, pub.g2.pow(s.x));
  EXPECT_EQ(pub.Y, pub.g2.pow(s.y));
  EXPECT_FALSE(pub.G.is_identity());
}

TEST_F(GamesTest, GpsOracle1AnswersOncePerIssuedElement) {
  GpsChallenger gps(ctx_, Rng::from_seed(3));
  const G1Element a = gps.oracle0();
  const Scalar m = random_scalar(ctx_, rng_);
  const auto b = gps.oracle1(a, m);
  ASSERT_TRUE(b.has_value());
  EXPECT_TRUE(pairing_relation(gps.public_values(), a, *b, m));

  EXPECT_FALSE(gps.oracle1(a, m).has_value());
  EXPECT_FALSE(gps.oracle1(a, random_scalar(ctx_, rng_)).has_value());
  EXPECT_FALSE(
      gps.oracle1(random_g1_nonidentity(ctx_, rng_), m).has_value());
  EXPECT_EQ(gps.answered_count(), 1u);
}

TEST_F(GamesTest, GpsJudge) {
  GpsChallenger gps(ctx_, Rng::from_seed(4));
  const ForgeryOutput win = whitebox::solve_gps(gps, rng_, 5);
  EXPECT_TRUE(gps.judge(win));

  ForgeryOutput identity = win;
  identity.A = G1Element::identity();
  identity.B = G1Element::identity();
  EXPECT_FALSE(gps.judge(identity));

  ForgeryOutput wrong = win;
  wrong.B = win.B * win.A;
  EXPECT_FALSE(gps.judge(wrong));

  // A correct tuple on a message oracle1 already answered does not count.
  const auto s = whitebox::reveal(gps);
  const G1Element a = gps.oracle0();
  const Scalar m = random_scalar(ctx_, rng_);
  ASSERT_TRUE(gps.oracle1(a, m).has_value());
  const G1Element a2 = gps.oracle0();
  EXPECT_FALSE(gps.judge(ForgeryOutput{a2, a2.pow(s.x + m * s.y), m}));
}

// ---- PS -------------------------------------------------------------------

TEST_F(GamesTest, PsOracle) {
  PsChallenger ps(ctx_, Rng::from_seed(5));
  const Scalar m = random_scalar(ctx_, rng_);
  const auto [a1, b1] = ps.oracle(m);
  const auto [a2, b2] = ps.oracle(m);
  EXPECT_TRUE(pairing_relation(ps.public_values(), a1, b1, m));
  EXPECT_TRUE(pairing_relation(ps.public_values(), a2, b2, m));
  EXPECT_NE(a1, a2);
  EXPECT_TRUE(ps.was_queried(m));
  EXPECT_FALSE(ps.was_queried(m + Scalar::from_u64(1)));
}

TEST_F(GamesTest, PsJudge) {
  PsChallenger ps(ctx_, Rng::from_seed(6));
  EXPECT_TRUE(ps.judge(whitebox::solve_ps(ps, rng_, 5)));
  const Scalar m = random_scalar(ctx_, rng_);
  const auto [a, b] = ps.oracle(m);
  EXPECT_FALSE(ps.judge(ForgeryOutput{a, b, m}));
  EXPECT_FALSE(ps.judge(ForgeryOutput{G1Element(), G1Element(),
                                      random_scalar(ctx_, rng_)}));
}

// ---- EUF-CMA ----------------------------------------------------------------

class GameEufCmaTest : public GamesTest {
 protected:
  SasParams params_ = sas_setup(128, 50);
};

TEST_F(GameEufCmaTest, WhiteBoxForgerWins) {
  auto [pk, sk] = sas_keygen(params_, rng_);
  whitebox::WhiteBoxForger forger(sk, Rng::from_seed(7));
  const EufCmaResult r = eufcma_run(forger, params_, pk, sk);
  EXPECT_TRUE(r.win);
  EXPECT_EQ(r.outcome, EufCmaOutcome::kWin);
  EXPECT_EQ(r.transcript.outcome, true);
  EXPECT_EQ(r.transcript.sign_queries, 10u);
  EXPECT_EQ(r.transcript.current_period, 11u);
  EXPECT_EQ(r.transcript.certified.size(), 2u);
  EXPECT_EQ(r.transcript.escrow.size(), 2u);
  EXPECT_EQ(r.transcript.queried_messages.size(), 10u);
}

TEST_F(GameEufCmaTest, ReplayAdversaryLosesOnQueriedMessage) {
  whitebox::ReplayAdversary replay;
  const EufCmaResult r = eufcma_run(replay, params_, rng_);
  EXPECT_FALSE(r.win);
  EXPECT_EQ(r.outcome, EufCmaOutcome::kNoFreshChallengeMessage);
  EXPECT_EQ(r.transcript.outcome, false);
}

TEST_F(GameEufCmaTest, UncertifiedCosignerLoses) {
  auto [pk, sk] = sas_keygen(params_, rng_);
  whitebox::ForgerConfig cfg;
  cfg.certify_cosigners = false;
  whitebox::WhiteBoxForger forger(sk, Rng::from_seed(8), cfg);
  const EufCmaResult r = eufcma_run(forger, params_, pk, sk);
  EXPECT_FALSE(r.win);
  EXPECT_EQ(r.outcome, EufCmaOutcome::kUncertifiedKey);
  EXPECT_TRUE(r.transcript.certified.empty());
}

TEST_F(GameEufCmaTest, ChallengeKeyNeedNotBeCertified) {
  auto [pk, sk] = sas_keygen(params_, rng_);
  whitebox::ForgerConfig cfg;
  cfg.cosigners = 0;
  whitebox::WhiteBoxForger forger(sk, Rng::from_seed(9), cfg);
  EXPECT_TRUE(eufcma_run(forger, params_, pk, sk).win);
}

class SigningProbe final : public EufCmaAdversary {
 public:
  explicit SigningProbe(std::size_t skips, std::size_t signs)
      : skips_(skips), signs_(signs) {}
  Forgery run(const SasParams&, const SasPublicKey&,
              EufCmaOracles& oracles) override {
    for (std::size_t i = 0; i < skips_; ++i) {
      skip_results.push_back(oracles.sign(SignInstruction::kSkip, {}));
    }
    for (std::size_t i = 0; i < signs_; ++i) {
      sign_results.push_back(oracles.sign(SignInstruction::kSign, to_bytes("m")));
    }
    final_period = oracles.current_period();
    return {};
  }
  std::vector<std::optional<EpochSignature>> skip_results;
  std::vector<std::optional<EpochSignature>> sign_results;
  std::uint64_t final_period = 0;

 private:
  std::size_t skips_;
  std::size_t signs_;
};

TEST_F(GameEufCmaTest, SignOracleAdvancesPeriodAndStopsAfterBound) {
  const SasParams small = sas_setup(128, 5);
  auto [pk, sk] = sas_keygen(small, rng_);
  SigningProbe probe(2, 5);
  const EufCmaResult r = eufcma_run(probe, small, pk, sk);
  EXPECT_FALSE(r.win);
  for (const auto& s : probe.skip_results) EXPECT_FALSE(s.has_value());
  ASSERT_EQ(probe.sign_results.size(), 5u);
  EXPECT_EQ(probe.sign_results[0]->period, 3u);
  EXPECT_EQ(probe.sign_results[2]->period, 5u);
  EXPECT_FALSE(probe.sign_results[3].has_value());
  EXPECT_FALSE(probe.sign_results[4].has_value());
  EXPECT_EQ(probe.final_period, 6u);
  EXPECT_EQ(r.outcome, EufCmaOutcome::kAggregateInvalid);
}

// ---- reduction --------------------------------------------------------------

TEST_F(GamesTest, ReductionExtractsGpsSolution) {
  for (int trial = 0; trial < 10; ++trial) {
    GpsChallenger gps(ctx_, Rng::from_seed(100 + trial));
    const auto s = whitebox::reveal(gps);
    whitebox::ForgerConfig cfg;
    cfg.sign_queries = 20;
    cfg.skips = trial;
    cfg.cosigners = trial % 4;
    whitebox::WhiteBoxForger forger(SasSecretKey{s.x, s.y},
                                    Rng::from_seed(200 + trial), cfg);
    const ReductionResult r = reduction_b(forger, gps, 1000, rng_);
    ASSERT_TRUE(r.output.has_value()) << r.detail;
    EXPECT_EQ(r.abort, ReductionAbort::kNone);
    EXPECT_TRUE(gps.judge(*r.output));
    EXPECT_EQ(r.sign_queries, 20u);
  }
}

TEST_F(GamesTest, ReductionWithChallengeKeyOnly) {
  GpsChallenger gps(ctx_, Rng::from_seed(300));
  const auto s = whitebox::reveal(gps);
  whitebox::ForgerConfig cfg;
  cfg.cosigners = 0;
  whitebox::WhiteBoxForger forger(SasSecretKey{s.x, s.y}, Rng::from_seed(301),
                                  cfg);
  const ReductionResult r = reduction_b(forger, gps, 100, rng_);
  ASSERT_TRUE(r.output.has_value());
  // The correction product is empty: B' is the forged aggregate itself,
  // which equals A'^(x + m' y).
  EXPECT_EQ(r.output->B, r.output->A.pow(s.x + r.output->m * s.y));
  EXPECT_TRUE(gps.judge(*r.output));
}

TEST_F(GamesTest, ReductionAbortsOnReplayAdversary) {
  GpsChallenger gps(ctx_, Rng::from_seed(302));
  whitebox::ReplayAdversary replay;
  const ReductionResult r = reduction_b(replay, gps, 100, rng_);
  EXPECT_FALSE(r.output.has_value());
  EXPECT_EQ(r.abort, ReductionAbort::kNoValidForgery);
}

TEST_F(GamesTest, ReductionAbortsOnUncertifiedCosigner) {
  GpsChallenger gps(ctx_, Rng::from_seed(303));
  const auto s = whitebox::reveal(gps);
  whitebox::ForgerConfig cfg;
  cfg.certify_cosigners = false;
  whitebox::WhiteBoxForger forger(SasSecretKey{s.x, s.y}, Rng::from_seed(304),
                                  cfg);
  EXPECT_EQ(reduction_b(forger, gps, 100, rng_).abort,
            ReductionAbort::kNoValidForgery);
}

// A GPS front end whose oracle1 has already consumed everything.
class ExhaustedGps final : public GpsOracles {
 public:
  explicit ExhaustedGps(GpsChallenger& inner) : inner_(inner) {}
  const AssumptionPublicValues& public_values() const override {
    return inner_.public_values();
  }
  G1Element oracle0() override {
    const G1Element a = inner_.oracle0();
    inner_.oracle1(a, Scalar());
    return a;
  }
  std::optional<G1Element> oracle1(const G1Element& A,
                                   const Scalar& m) override {
    return inner_.oracle1(A, m);
  }

 private:
  GpsChallenger& inner_;
};

TEST_F(GamesTest, ReductionAbortsWhenOracle1Refuses) {
  GpsChallenger gps(ctx_, Rng::from_seed(305));
  ExhaustedGps exhausted(gps);
  const auto s = whitebox::reveal(gps);
  whitebox::WhiteBoxForger forger(SasSecretKey{s.x, s.y}, Rng::from_seed(306));
  const ReductionResult r = reduction_b(forger, exhausted, 100, rng_);
  EXPECT_EQ(r.abort, ReductionAbort::kOracle1Replay);
  EXPECT_FALSE(r.output.has_value());
}

// Checks every simulated signature against the challenger's secrets.
class FaithfulnessProbe final : public EufCmaAdversary {
 public:
  FaithfulnessProbe(const whitebox::ChallengerSecrets& s, std::size_t queries)
      : s_(s), queries_(queries) {}
  Forgery run(const SasParams&, const SasPublicKey&,
              EufCmaOracles& oracles) override {
    for (std::size_t i = 0; i < queries_; ++i) {
      const Bytes m = to_bytes("probe-" + std::to_string(i));
      const std::uint64_t t = oracles.current_period();
      const auto sig = oracles.sign(SignInstruction::kSign, m);
      if (!sig || sig->period != t) continue;
      const G1Element expected =
          oracles.h1(t).pow(s_.x + oracles.h2(t, m) * s_.y);
      if (sig->B == expected) ++matches;
    }
    return {};
  }
  std::size_t matches = 0;

 private:
  whitebox::ChallengerSecrets s_;
  std::size_t queries_;
};

TEST_F(GamesTest, SimulatedSigningMatchesRealSignatures) {
  GpsChallenger gps(ctx_, Rng::from_seed(307));
  FaithfulnessProbe probe(whitebox::reveal(gps), 100);
  reduction_b(probe, gps, 1000, rng_);
  EXPECT_EQ(probe.matches, 100u);
  // oracle1 consumed one H1 value per signature and never answered twice.
  EXPECT_EQ(gps.answered_count(), 100u);
}

TEST_F(GamesTest, ReductionRejectsZeroPeriodBound) {
  GpsChallenger gps(ctx_, Rng::from_seed(308));
  whitebox::ReplayAdversary replay;
  EXPECT_THROW(reduction_b(replay, gps, 0, rng_), SasError);
}

// ---- loss terms and harness --------------------------------------------------

TEST_F(GamesTest, AdvantageBoundAtThousandQueries) {
  const AdvantageReport r = advantage_bound_report(ctx_, 100, 100, 1000, 1000);
  EXPECT_LT(r.log2_sign_loss, -200);
  EXPECT_LT(r.log2_h2_loss, -200);
  EXPECT_LT(r.log2_h2_birthday_loss, -200);
  EXPECT_TRUE(r.negligible);
  EXPECT_NEAR(r.log2_modulus, 254.857, 0.001);
  // q_s^2 / p = 2^(2 log2 1000 - log2 p).
  EXPECT_NEAR(r.log2_sign_loss, 2 * std::log2(1000.0) - r.log2_modulus, 1e-9);
  EXPECT_GE(r.measured_success_rate, r.predicted_lower_bound);
}

TEST_F(GamesTest, AdvantageBoundWithoutSignQueries) {
  const AdvantageReport r = advantage_bound_report(ctx_, 10, 10, 0, 5);
  EXPECT_EQ(r.sign_loss, 0.0);
  EXPECT_TRUE(std::isinf(r.log2_sign_loss));
  EXPECT_DOUBLE_EQ(r.measured_success_rate, 1.0);
}

TEST_F(GamesTest, HarnessReports) {
  HarnessConfig cfg;
  cfg.trials = 3;
  cfg.forger.sign_queries = 5;
  for (GameKind kind : {GameKind::kReduction, GameKind::kEufCma,
                        GameKind::kGps, GameKind::kPs}) {
    cfg.game = kind;
    const GameReport r = run_game_trials(cfg);
    EXPECT_EQ(r.wins, 3u) << to_string(kind);
    EXPECT_TRUE(r.aborts_by_reason.empty());
  }
  cfg.game = GameKind::kEufCmaReplay;
  EXPECT_EQ(run_game_trials(cfg).aborts_by_reason.at("no-fresh-challenge-message"), 3u);
  cfg.game = GameKind::kEufCmaUncertified;
  EXPECT_EQ(run_game_trials(cfg).aborts_by_reason.at("uncertified-key"), 3u);
  EXPECT_EQ(game_kind_from_string("eufcma-replay"), GameKind::kEufCmaReplay);
  EXPECT_FALSE(game_kind_from_string("nope").has_value());
}

}  // namespace
}  // namespace pssas
