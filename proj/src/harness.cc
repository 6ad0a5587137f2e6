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

#include "pssas/harness.h"

#include <algorithm>
#include <array>

namespace pssas {
namespace {

Rng next_trial_rng(Rng& master) {
  std::array<std::uint8_t, 32> key;
  master.fill(key);
  return Rng::from_key(key);
}

}  // namespace

std::string_view to_string(GameKind kind) {
  switch (kind) {
    case GameKind::kReduction:
      return "reduction";
    case GameKind::kEufCma:
      return "eufcma";
    case GameKind::kEufCmaReplay:
      return "eufcma-replay";
    case GameKind::kEufCmaUncertified:
      return "eufcma-uncertified";
    case GameKind::kGps:
      return "gps";
    case GameKind::kPs:
      return "ps";
  }
  return "unknown";
}

std::optional<GameKind> game_kind_from_string(std::string_view s) {
  for (GameKind k : {GameKind::kReduction, GameKind::kEufCma,
                     GameKind::kEufCmaReplay, GameKind::kEufCmaUncertified,
                     GameKind::kGps, GameKind::kPs}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

GameReport run_game_trials(const HarnessConfig& config) {
  const BilinearGroupContext ctx = generate_context(128);
  Rng master = Rng::from_seed(config.seed);
  GameReport report;
  report.game = std::string(to_string(config.game));
  report.trials = config.trials;

  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    Rng rng = next_trial_rng(master);
    switch (config.game) {
      case GameKind::kReduction: {
        GpsChallenger gps(ctx, next_trial_rng(rng));
        const whitebox::ChallengerSecrets s = whitebox::reveal(gps);
        whitebox::WhiteBoxForger forger(SasSecretKey{s.x, s.y},
                                        next_trial_rng(rng), config.forger);
        const ReductionResult r =
            reduction_b(forger, gps, config.max_period, rng);
        report.max_sign_queries =
            std::max(report.max_sign_queries, r.sign_queries);
        report.max_h2_queries = std::max(report.max_h2_queries, r.h2_queries);
        if (!r.output) {
          ++report.aborts_by_reason[std::string(to_string(r.abort))];
        } else if (gps.judge(*r.output)) {
          ++report.wins;
        } else {
          ++report.aborts_by_reason["judge-rejected"];
        }
        break;
      }
      case GameKind::kEufCma:
      case GameKind::kEufCmaReplay:
      case GameKind::kEufCmaUncertified: {
        const SasParams params = sas_setup(128, config.max_period);
        auto [pk, sk] = sas_keygen(params, rng);
        whitebox::ForgerConfig fc = config.forger;
        if (config.game == GameKind::kEufCmaUncertified) {
          fc.certify_cosigners = false;
          fc.cosigners = std::max<std::size_t>(fc.cosigners, 1);
        }
        whitebox::WhiteBoxForger forger(sk, next_trial_rng(rng), fc);
        whitebox::ReplayAdversary replay;
        EufCmaAdversary& adversary =
            config.game == GameKind::kEufCmaReplay
                ? static_cast<EufCmaAdversary&>(replay)
                : static_cast<EufCmaAdversary&>(forger);
        const EufCmaResult r = eufcma_run(adversary, params, pk, sk);
        report.max_sign_queries =
            std::max(report.max_sign_queries, r.transcript.sign_queries);
        report.max_h2_queries =
            std::max(report.max_h2_queries, r.transcript.h2_queries);
        if (r.win) {
          ++report.wins;
        } else {
          ++report.aborts_by_reason[std::string(to_string(r.outcome))];
        }
        break;
      }
      case GameKind::kGps: {
        GpsChallenger gps(ctx, next_trial_rng(rng));
        const ForgeryOutput out =
            whitebox::solve_gps(gps, rng, config.forger.sign_queries);
        report.max_sign_queries =
            std::max(report.max_sign_queries, gps.answered_count());
        if (gps.judge(out)) {
          ++report.wins;
        } else {
          ++report.aborts_by_reason["judge-rejected"];
        }
        break;
      }
      case GameKind::kPs: {
        PsChallenger ps(ctx, next_trial_rng(rng));
        const ForgeryOutput out =
            whitebox::solve_ps(ps, rng, config.forger.sign_queries);
        report.max_sign_queries =
            std::max(report.max_sign_queries, config.forger.sign_queries);
        if (ps.judge(out)) {
          ++report.wins;
        } else {
          ++report.aborts_by_reason["judge-rejected"];
        }
        break;
      }
    }
  }

  report.loss_terms =
      advantage_bound_report(ctx, report.trials, report.wins,
                             report.max_sign_queries, report.max_h2_queries);
  return report;
}

}  // namespace pssas
