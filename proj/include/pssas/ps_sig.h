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

#ifndef PSSAS_PS_SIG_H_
#define PSSAS_PS_SIG_H_

// Single-message Pointcheval-Sanders signatures. Messages are scalars;
// hashing byte strings into Z_p is left to the caller.

#include <utility>

#include "pssas/groups.h"
#include "pssas/rng.h"

namespace pssas {

struct PsPublicKey {
  G2Element g2;
  G2Element X;
  G2Element Y;
  friend bool operator==(const PsPublicKey&, const PsPublicKey&) = default;
};

struct PsSecretKey {
  Scalar x;
  Scalar y;
};

struct PsSignature {
  G1Element A;
  G1Element B;
  friend bool operator==(const PsSignature&, const PsSignature&) = default;
};

// Samples a fresh G~ generator per key, as the original scheme does.
std::pair<PsPublicKey, PsSecretKey> ps_keygen(const BilinearGroupContext& ctx,
                                              Rng& rng);
// Same, but with a caller-chosen G~ (used for reproducible test vectors).
std::pair<PsPublicKey, PsSecretKey> ps_keygen_with_generator(
    const BilinearGroupContext& ctx, const G2Element& g2, Rng& rng);

PsSignature ps_sign(const BilinearGroupContext& ctx, const PsSecretKey& sk,
                    const Scalar& m, Rng& rng);

// Accepts iff A != 1 and e(A, X * Y^m) == e(B, G~). Evaluates two pairings.
bool ps_verify(const BilinearGroupContext& ctx, const PsPublicKey& pk,
               const Scalar& m, const PsSignature& sig);

// (A^r, B^r) for a fresh r in Z_p^*. Throws std::invalid_argument when A is
// the identity.
PsSignature ps_randomize(const BilinearGroupContext& ctx,
                         const PsSignature& sig, Rng& rng);
PsSignature ps_randomize_with(const PsSignature& sig, const Scalar& r);

}  // namespace pssas

#endif  // PSSAS_PS_SIG_H_
