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

#include "pssas/whitebox.h"

#include <algorithm>
#include <utility>
#include <vector>

namespace pssas::whitebox {

ChallengerSecrets reveal(const GpsChallenger& challenger) {
  return ChallengerSecrets{challenger.x_, challenger.y_};
}

ChallengerSecrets reveal(const PsChallenger& challenger) {
  return ChallengerSecrets{challenger.x_, challenger.y_};
}

WhiteBoxForger::WhiteBoxForger(const SasSecretKey& challenge_sk, Rng rng,
                               ForgerConfig config)
    : challenge_sk_(challenge_sk), rng_(std::move(rng)), config_(config) {}

Forgery WhiteBoxForger::run(const SasParams& params,
                            const SasPublicKey& challenge_pk,
                            EufCmaOracles& oracles) {
  struct Cosigner {
    SasPublicKey pk;
    SasSecretKey sk;
  };
  std::vector<Cosigner> cosigners;
  for (std::size_t i = 0; i < config_.cosigners; ++i) {
    auto [pk, sk] = sas_keygen(params, rng_);
    if (config_.certify_cosigners) oracles.cert(pk, sk);
    cosigners.push_back({pk, sk});
  }

  for (std::size_t i = 0; i < config_.skips; ++i) {
    oracles.sign(SignInstruction::kSkip, {});
  }
  for (std::size_t i = 0; i < config_.sign_queries; ++i) {
    const Bytes m = to_bytes("query-" + std::to_string(i));
    oracles.sign(SignInstruction::kSign, m);
  }

  const std::uint64_t t_star =
      std::min(oracles.current_period(), params.max_period);
  Bytes nonce(16);
  rng_.fill(nonce);
  const Bytes forged = to_bytes("forged-" + to_hex(nonce));

  const G1Element base = oracles.h1(t_star);
  auto contribution = [&](const SasSecretKey& sk, ByteView m) {
    return base.pow(sk.x + oracles.h2(t_star, m) * sk.y);
  };

  Forgery forgery;
  G1Element product = contribution(challenge_sk_, forged);
  forgery.pairs.push_back({challenge_pk, forged});
  for (std::size_t i = 0; i < cosigners.size(); ++i) {
    const Bytes m = to_bytes("cosigner-" + std::to_string(i));
    product *= contribution(cosigners[i].sk, m);
    forgery.pairs.push_back({cosigners[i].pk, m});
  }
  // Challenge entry at a random position.
  if (!forgery.pairs.empty()) {
    const std::size_t pos = rng_() % forgery.pairs.size();
    std::swap(forgery.pairs.front(), forgery.pairs[pos]);
  }
  forgery.agg = AggregateSignature{product, t_star};
  return forgery;
}

Forgery ReplayAdversary::run(const SasParams&, const SasPublicKey& challenge_pk,
                             EufCmaOracles& oracles) {
  const Bytes m = to_bytes(message_);
  const std::optional<EpochSignature> sig =
      oracles.sign(SignInstruction::kSign, m);
  Forgery forgery;
  forgery.pairs.push_back({challenge_pk, m});
  if (sig) forgery.agg = AggregateSignature{sig->B, sig->period};
  return forgery;
}

ForgeryOutput solve_gps(GpsChallenger& challenger, Rng& rng,
                        std::size_t queries) {
  const BilinearGroupContext& ctx = challenger.public_values().ctx;
  for (std::size_t i = 0; i < queries; ++i) {
    challenger.oracle1(challenger.oracle0(), random_scalar(ctx, rng));
  }
  const ChallengerSecrets s = reveal(challenger);
  const G1Element a = challenger.oracle0();
  const Scalar m = random_scalar(ctx, rng);
  return ForgeryOutput{a, a.pow(s.x + m * s.y), m};
}

ForgeryOutput solve_ps(PsChallenger& challenger, Rng& rng,
                       std::size_t queries) {
  const BilinearGroupContext& ctx = challenger.public_values().ctx;
  for (std::size_t i = 0; i < queries; ++i) {
    challenger.oracle(random_scalar(ctx, rng));
  }
  const ChallengerSecrets s = reveal(challenger);
  const G1Element a = random_g1_nonidentity(ctx, rng);
  const Scalar m = random_scalar(ctx, rng);
  return ForgeryOutput{a, a.pow(s.x + m * s.y), m};
}

}  // namespace pssas::whitebox
