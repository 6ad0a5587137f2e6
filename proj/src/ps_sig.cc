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

#include "pssas/ps_sig.h"

#include <stdexcept>

namespace pssas {

std::pair<PsPublicKey, PsSecretKey> ps_keygen(const BilinearGroupContext& ctx,
                                              Rng& rng) {
  const G2Element g2 = random_g2_nonidentity(ctx, rng);
  return ps_keygen_with_generator(ctx, g2, rng);
}

std::pair<PsPublicKey, PsSecretKey> ps_keygen_with_generator(
    const BilinearGroupContext& ctx, const G2Element& g2, Rng& rng) {
  if (g2.is_identity()) throw std::invalid_argument("G~ must not be identity");
  PsSecretKey sk{random_scalar_nonzero(ctx, rng),
                 random_scalar_nonzero(ctx, rng)};
  PsPublicKey pk{g2, g2.pow(sk.x), g2.pow(sk.y)};
  return {pk, sk};
}

PsSignature ps_sign(const BilinearGroupContext& ctx, const PsSecretKey& sk,
                    const Scalar& m, Rng& rng) {
  const G1Element a = random_g1_nonidentity(ctx, rng);
  return PsSignature{a, a.pow(sk.x + m * sk.y)};
}

bool ps_verify(const BilinearGroupContext& ctx, const PsPublicKey& pk,
               const Scalar& m, const PsSignature& sig) {
  if (sig.A.is_identity()) return false;
  const GTElement lhs = pair(ctx, sig.A, pk.X * pk.Y.pow(m));
  const GTElement rhs = pair(ctx, sig.B, pk.g2);
  return lhs == rhs;
}

PsSignature ps_randomize(const BilinearGroupContext& ctx,
                         const PsSignature& sig, Rng& rng) {
  return ps_randomize_with(sig, random_scalar_nonzero(ctx, rng));
}

PsSignature ps_randomize_with(const PsSignature& sig, const Scalar& r) {
  if (sig.A.is_identity()) {
    throw std::invalid_argument("cannot randomize a signature with A = 1");
  }
  if (r.is_zero()) throw std::invalid_argument("randomizer must be nonzero");
  return PsSignature{sig.A.pow(r), sig.B.pow(r)};
}

}  // namespace pssas
