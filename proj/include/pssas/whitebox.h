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

#ifndef PSSAS_WHITEBOX_H_
#define PSSAS_WHITEBOX_H_

// Test-only channel. Adversaries here are handed secret keys out of band so
// that winning transcripts can be constructed; none of this goes through the
// game interfaces.

#include <cstddef>
#include <string>
#include <utility>

#include "pssas/games.h"
#include "pssas/rng.h"
#include "pssas/sas.h"

namespace pssas::whitebox {

struct ChallengerSecrets {
  Scalar x;
  Scalar y;
};

ChallengerSecrets reveal(const GpsChallenger& challenger);
ChallengerSecrets reveal(const PsChallenger& challenger);

struct ForgerConfig {
  std::size_t sign_queries = 10;
  // Skip instructions interleaved before the signing queries.
  std::size_t skips = 0;
  std::size_t cosigners = 2;
  // When false, co-signer keys are never submitted for certification.
  bool certify_cosigners = true;
};

// Knows the challenge secret key, so it can sign any fresh message. All
// hashing goes through the oracle interface, so the forgery is valid in the
// real game and in the reduction's simulation alike.
class WhiteBoxForger final : public EufCmaAdversary {
 public:
  WhiteBoxForger(const SasSecretKey& challenge_sk, Rng rng,
                 ForgerConfig config = {});
  Forgery run(const SasParams& params, const SasPublicKey& challenge_pk,
              EufCmaOracles& oracles) override;

 private:
  SasSecretKey challenge_sk_;
  Rng rng_;
  ForgerConfig config_;
};

// Asks for a signature on one message and hands it back as its forgery.
class ReplayAdversary final : public EufCmaAdversary {
 public:
  explicit ReplayAdversary(std::string message = "replayed message")
      : message_(std::move(message)) {}
  Forgery run(const SasParams& params, const SasPublicKey& challenge_pk,
              EufCmaOracles& oracles) override;

 private:
  std::string message_;
};

// Solves the GPS game with the challenger's secrets: consumes `queries`
// oracle1 answers, then outputs a tuple on a fresh message.
ForgeryOutput solve_gps(GpsChallenger& challenger, Rng& rng,
                        std::size_t queries);
ForgeryOutput solve_ps(PsChallenger& challenger, Rng& rng,
                       std::size_t queries);

}  // namespace pssas::whitebox

#endif  // PSSAS_WHITEBOX_H_
