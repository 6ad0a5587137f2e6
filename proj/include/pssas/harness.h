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

#ifndef PSSAS_HARNESS_H_
#define PSSAS_HARNESS_H_

// Repeated game runs with white-box adversaries, summarised for reporting.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "pssas/games.h"
#include "pssas/whitebox.h"

namespace pssas {

enum class GameKind {
  kReduction,           // white-box forger run through reduction_b
  kEufCma,              // white-box forger in the real game
  kEufCmaReplay,        // replay adversary in the real game
  kEufCmaUncertified,   // forger with uncertified co-signers
  kGps,                 // white-box GPS solver
  kPs,                  // white-box PS solver
};

std::string_view to_string(GameKind kind);
std::optional<GameKind> game_kind_from_string(std::string_view s);

struct HarnessConfig {
  GameKind game = GameKind::kReduction;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t max_period = 1000;
  whitebox::ForgerConfig forger;
};

struct GameReport {
  std::string game;
  std::size_t trials = 0;
  std::size_t wins = 0;
  std::map<std::string, std::size_t> aborts_by_reason;
  std::size_t max_sign_queries = 0;
  std::size_t max_h2_queries = 0;
  AdvantageReport loss_terms;
};

GameReport run_game_trials(const HarnessConfig& config);

}  // namespace pssas

#endif  // PSSAS_HARNESS_H_
