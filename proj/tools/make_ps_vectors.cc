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

// Writes Pointcheval-Sanders test vectors as JSON lines.
//
//   make_ps_vectors <out.jsonl> [count] [seed]
//
// Every third vector is corrupted and marked invalid.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "pssas/formats.h"
#include "pssas/ps_sig.h"

int main(int argc, char** argv) {
  using namespace pssas;
  if (argc < 2) {
    std::cerr << "usage: make_ps_vectors <out.jsonl> [count] [seed]\n";
    return 2;
  }
  const int count = argc > 2 ? std::atoi(argv[2]) : 12;
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;
  const BilinearGroupContext ctx = generate_context(128);
  Rng rng = Rng::from_seed(seed);

  std::ofstream out(argv[1]);
  for (int i = 0; i < count; ++i) {
    auto [pk, sk] = ps_keygen_with_generator(ctx, ctx.g2_generator(), rng);
    PsTestVector v{pk, sk, random_scalar(ctx, rng), {}, true};
    v.sig = ps_sign(ctx, sk, v.m, rng);
    if (i % 3 == 2) {
      v.sig.B = v.sig.B * ctx.g1_generator();
      v.valid = false;
    }
    out << ps_vector_to_json(v).dump() << '\n';
  }
  return out ? 0 : 1;
}
