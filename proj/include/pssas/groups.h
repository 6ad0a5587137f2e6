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

#ifndef PSSAS_GROUPS_H_
#define PSSAS_GROUPS_H_

// Type-3 bilinear group over BLS12-381 backed by blst. G (signatures) is the
// 48-byte group, G~ (keys) the 96-byte group. All element types are
// immutable-by-convention values and safe to share between threads.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "blst.h"
#include "pssas/encoding.h"
#include "pssas/rng.h"

namespace pssas {

inline constexpr std::size_t kScalarBytes = 32;
inline constexpr std::size_t kG1Bytes = 48;
inline constexpr std::size_t kG2Bytes = 96;

class Scalar {
 public:
  Scalar() = default;  // zero

  static Scalar from_u64(std::uint64_t v);
  // Canonical 32-byte big-endian encoding; nullopt when the value is >= p.
  static std::optional<Scalar> from_bytes(ByteView bytes);
  // Reduces an arbitrary-length big-endian integer modulo p.
  static Scalar reduce(ByteView bytes);

  std::array<std::uint8_t, kScalarBytes> to_bytes() const;
  std::string to_hex() const;

  bool is_zero() const;
  // Throws std::domain_error for zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Little-endian scalar in the layout blst point multiplication expects.
  blst_scalar to_blst_scalar() const;

 private:
  blst_fr value_{};
};

class G1Element {
 public:
  G1Element() = default;  // identity

  static G1Element identity() { return G1Element(); }
  static G1Element generator();
  // Compressed 48-byte encoding. Rejects points off the curve or outside the
  // prime-order subgroup.
  static std::optional<G1Element> decode(ByteView bytes);

  std::array<std::uint8_t, kG1Bytes> encode() const;
  std::string to_hex() const;

  bool is_identity() const;
  G1Element pow(const Scalar& e) const;
  G1Element inverse() const;

  G1Element& operator*=(const G1Element& rhs);
  friend G1Element operator*(G1Element lhs, const G1Element& rhs) {
    return lhs *= rhs;
  }
  friend bool operator==(const G1Element& a, const G1Element& b);

  blst_p1_affine to_affine() const;
  explicit G1Element(const blst_p1& p) : point_(p) {}

 private:
  blst_p1 point_{};
};

class G2Element {
 public:
  G2Element() = default;  // identity

  static G2Element identity() { return G2Element(); }
  static G2Element generator();
  static std::optional<G2Element> decode(ByteView bytes);

  std::array<std::uint8_t, kG2Bytes> encode() const;
  std::string to_hex() const;

  bool is_identity() const;
  G2Element pow(const Scalar& e) const;
  G2Element inverse() const;

  G2Element& operator*=(const G2Element& rhs);
  friend G2Element operator*(G2Element lhs, const G2Element& rhs) {
    return lhs *= rhs;
  }
  friend bool operator==(const G2Element& a, const G2Element& b);

  blst_p2_affine to_affine() const;
  explicit G2Element(const blst_p2& p) : point_(p) {}

 private:
  blst_p2 point_{};
};

// Element of the order-p subgroup of Fp12 that pairings land in.
class GTElement {
 public:
  GTElement();  // one

  static GTElement one() { return GTElement(); }

  bool is_one() const;
  GTElement pow(const Scalar& e) const;
  GTElement& operator*=(const GTElement& rhs);
  friend GTElement operator*(GTElement lhs, const GTElement& rhs) {
    return lhs *= rhs;
  }
  friend bool operator==(const GTElement& a, const GTElement& b);

  explicit GTElement(const blst_fp12& v) : value_(v) {}

 private:
  blst_fp12 value_{};
};

class UnsupportedSecurityLevel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The ambient algebra (p, G, G~, GT, e) plus fixed public generators.
class BilinearGroupContext {
 public:
  int security_level() const { return security_level_; }
  std::string_view curve_name() const { return "BLS12-381"; }
  // Prime group order as lowercase hex without prefix.
  std::string_view modulus_hex() const;
  std::size_t modulus_bits() const { return 255; }

  G1Element g1_generator() const { return G1Element::generator(); }
  G2Element g2_generator() const { return G2Element::generator(); }

  friend bool operator==(const BilinearGroupContext&,
                         const BilinearGroupContext&) = default;

 private:
  friend BilinearGroupContext generate_context(int security_level);
  explicit BilinearGroupContext(int level) : security_level_(level) {}

  int security_level_;
};

// Only the 128-bit level is supported; anything else throws
// UnsupportedSecurityLevel.
BilinearGroupContext generate_context(int security_level = 128);

// Hash-to-curve (RFC 9380 BLS12381G1_XMD:SHA-256_SSWU_RO_) of the 8-byte
// big-endian encoding of `t`, with `domain_tag` as the DST. Requires t >= 1.
G1Element hash_to_g1(const BilinearGroupContext& ctx,
                     std::string_view domain_tag, std::uint64_t t);
G1Element hash_bytes_to_g1(const BilinearGroupContext& ctx,
                           std::string_view domain_tag, ByteView msg);

// expand_message_xmd(SHA-256) to 48 bytes, reduced mod p. The message is
// be64(t) || be64(len(m)) || m and `domain_tag` is the DST.
Scalar hash_to_scalar(const BilinearGroupContext& ctx,
                      std::string_view domain_tag, std::uint64_t t,
                      ByteView m);
Scalar hash_bytes_to_scalar(const BilinearGroupContext& ctx,
                            std::string_view domain_tag, ByteView msg);

// Optimal ate pairing followed by final exponentiation. Every call counts
// once toward the process-wide pairing counter.
GTElement pair(const BilinearGroupContext& ctx, const G1Element& a,
               const G2Element& b);

// Returns the number of pair() calls since the last reset and resets to 0.
// A measurement aid only; concurrent pairings from other threads are
// included in the count.
std::uint64_t pairing_counter_read_reset();
std::uint64_t pairing_counter_peek();

Scalar random_scalar(const BilinearGroupContext& ctx, Rng& rng);
Scalar random_scalar_nonzero(const BilinearGroupContext& ctx, Rng& rng);
G1Element random_g1_nonidentity(const BilinearGroupContext& ctx, Rng& rng);
G2Element random_g2_nonidentity(const BilinearGroupContext& ctx, Rng& rng);

}  // namespace pssas

#endif  // PSSAS_GROUPS_H_
