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

// Independent reference arithmetic for tests. Exponents are computed with GMP
// and applied by plain double-and-add over the group operation, so nothing
// here goes through Scalar arithmetic or the library's pow().

#ifndef PSSAS_TESTS_SUPPORT_ORACLE_H_
#define PSSAS_TESTS_SUPPORT_ORACLE_H_

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "pssas/encoding.h"
#include "pssas/groups.h"

namespace pssas::testing {

inline mpz_class group_order() {
  return mpz_class(
      "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001", 16);
}

inline mpz_class to_mpz(const Scalar& s) {
  return mpz_class(s.to_hex(), 16);
}

inline mpz_class mod_r(const mpz_class& v) {
  mpz_class out = v % group_order();
  if (out < 0) out += group_order();
  return out;
}

template <typename Element>
Element ladder_pow(const Element& base, const mpz_class& e) {
  Element acc;  // identity
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = acc * acc;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc * base;
  }
  return acc;
}

}  // namespace pssas::testing

#endif  // PSSAS_TESTS_SUPPORT_ORACLE_H_
