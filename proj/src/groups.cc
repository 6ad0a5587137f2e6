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

#include "pssas/groups.h"

#include <atomic>
#include <cstring>

#include "blst_aux.h"

namespace pssas {
namespace {

constexpr std::string_view kModulusHex =
    "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001";
constexpr std::size_t kScalarBits = 255;
// 255 bits of modulus + 128 bits of margin, rounded up to whole bytes.
constexpr std::size_t kWideHashBytes = 48;

std::atomic<std::uint64_t> g_pairing_count{0};

const std::uint8_t* as_bytes(std::string_view s) {
  return reinterpret_cast<const std::uint8_t*>(s.data());
}

}  // namespace

// ---- Scalar ---------------------------------------------------------------

Scalar Scalar::from_u64(std::uint64_t v) {
  const std::uint64_t limbs[4] = {v, 0, 0, 0};
  Scalar s;
  blst_fr_from_uint64(&s.value_, limbs);
  return s;
}

std::optional<Scalar> Scalar::from_bytes(ByteView bytes) {
  if (bytes.size() != kScalarBytes) return std::nullopt;
  blst_scalar raw;
  blst_scalar_from_bendian(&raw, bytes.data());
  if (!blst_scalar_fr_check(&raw)) return std::nullopt;
  Scalar s;
  blst_fr_from_scalar(&s.value_, &raw);
  return s;
}

Scalar Scalar::reduce(ByteView bytes) {
  blst_scalar raw;
  blst_scalar_from_be_bytes(&raw, bytes.data(), bytes.size());
  Scalar s;
  blst_fr_from_scalar(&s.value_, &raw);
  return s;
}

std::array<std::uint8_t, kScalarBytes> Scalar::to_bytes() const {
  blst_scalar raw = to_blst_scalar();
  std::array<std::uint8_t, kScalarBytes> out;
  blst_bendian_from_scalar(out.data(), &raw);
  return out;
}

std::string Scalar::to_hex() const { return pssas::to_hex(to_bytes()); }

bool Scalar::is_zero() const { return *this == Scalar(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  Scalar r;
  blst_fr_inverse(&r.value_, &value_);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  blst_fr_cneg(&r.value_, &value_, true);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  blst_fr_add(&value_, &value_, &rhs.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  blst_fr_sub(&value_, &value_, &rhs.value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  blst_fr_mul(&value_, &value_, &rhs.value_);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.to_bytes() == b.to_bytes();
}

blst_scalar Scalar::to_blst_scalar() const {
  blst_scalar raw;
  blst_scalar_from_fr(&raw, &value_);
  return raw;
}

// ---- G1 -------------------------------------------------------------------

G1Element G1Element::generator() { return G1Element(*blst_p1_generator()); }

std::optional<G1Element> G1Element::decode(ByteView bytes) {
  if (bytes.size() != kG1Bytes) return std::nullopt;
  blst_p1_affine aff;
  if (blst_p1_uncompress(&aff, bytes.data()) != BLST_SUCCESS) {
    return std::nullopt;
  }
  if (!blst_p1_affine_in_g1(&aff)) return std::nullopt;
  blst_p1 p;
  blst_p1_from_affine(&p, &aff);
  return G1Element(p);
}

std::array<std::uint8_t, kG1Bytes> G1Element::encode() const {
  std::array<std::uint8_t, kG1Bytes> out;
  blst_p1_compress(out.data(), &point_);
  return out;
}

std::string G1Element::to_hex() const { return pssas::to_hex(encode()); }

bool G1Element::is_identity() const { return blst_p1_is_inf(&point_); }

G1Element G1Element::pow(const Scalar& e) const {
  const blst_scalar raw = e.to_blst_scalar();
  blst_p1 out;
  blst_p1_mult(&out, &point_, raw.b, kScalarBits);
  return G1Element(out);
}

G1Element G1Element::inverse() const {
  G1Element r = *this;
  blst_p1_cneg(&r.point_, true);
  return r;
}

G1Element& G1Element::operator*=(const G1Element& rhs) {
  blst_p1_add_or_double(&point_, &point_, &rhs.point_);
  return *this;
}

bool operator==(const G1Element& a, const G1Element& b) {
  return blst_p1_is_equal(&a.point_, &b.point_);
}

blst_p1_affine G1Element::to_affine() const {
  blst_p1_affine aff;
  blst_p1_to_affine(&aff, &point_);
  return aff;
}

// ---- G2 -------------------------------------------------------------------

G2Element G2Element::generator() { return G2Element(*blst_p2_generator()); }

std::optional<G2Element> G2Element::decode(ByteView bytes) {
  if (bytes.size() != kG2Bytes) return std::nullopt;
  blst_p2_affine aff;
  if (blst_p2_uncompress(&aff, bytes.data()) != BLST_SUCCESS) {
    return std::nullopt;
  }
  if (!blst_p2_affine_in_g2(&aff)) return std::nullopt;
  blst_p2 p;
  blst_p2_from_affine(&p, &aff);
  return G2Element(p);
}

std::array<std::uint8_t, kG2Bytes> G2Element::encode() const {
  std::array<std::uint8_t, kG2Bytes> out;
  blst_p2_compress(out.data(), &point_);
  return out;
}

std::string G2Element::to_hex() const { return pssas::to_hex(encode()); }

bool G2Element::is_identity() const { return blst_p2_is_inf(&point_); }

G2Element G2Element::pow(const Scalar& e) const {
  const blst_scalar raw = e.to_blst_scalar();
  blst_p2 out;
  blst_p2_mult(&out, &point_, raw.b, kScalarBits);
  return G2Element(out);
}

G2Element G2Element::inverse() const {
  G2Element r = *this;
  blst_p2_cneg(&r.point_, true);
  return r;
}

G2Element& G2Element::operator*=(const G2Element& rhs) {
  blst_p2_add_or_double(&point_, &point_, &rhs.point_);
  return *this;
}

bool operator==(const G2Element& a, const G2Element& b) {
  return blst_p2_is_equal(&a.point_, &b.point_);
}

blst_p2_affine G2Element::to_affine() const {
  blst_p2_affine aff;
  blst_p2_to_affine(&aff, &point_);
  return aff;
}

// ---- GT -------------------------------------------------------------------

GTElement::GTElement() : value_(*blst_fp12_one()) {}

bool GTElement::is_one() const { return blst_fp12_is_one(&value_); }

GTElement GTElement::pow(const Scalar& e) const {
  // Left-to-right square-and-multiply; not constant time.
  const auto bytes = e.to_bytes();
  blst_fp12 acc = *blst_fp12_one();
  for (std::uint8_t byte : bytes) {
    for (int bit = 7; bit >= 0; --bit) {
      blst_fp12_sqr(&acc, &acc);
      if ((byte >> bit) & 1) blst_fp12_mul(&acc, &acc, &value_);
    }
  }
  return GTElement(acc);
}

GTElement& GTElement::operator*=(const GTElement& rhs) {
  blst_fp12_mul(&value_, &value_, &rhs.value_);
  return *this;
}

bool operator==(const GTElement& a, const GTElement& b) {
  return blst_fp12_is_equal(&a.value_, &b.value_);
}

// ---- context, hashing, pairing ---------------------------------------------

std::string_view BilinearGroupContext::modulus_hex() const {
  return kModulusHex;
}

BilinearGroupContext generate_context(int security_level) {
  if (security_level != 128) {
    throw UnsupportedSecurityLevel("unsupported security level: " +
                                   std::to_string(security_level));
  }
  return BilinearGroupContext(security_level);
}

G1Element hash_to_g1(const BilinearGroupContext& ctx,
                     std::string_view domain_tag, std::uint64_t t) {
  if (t == 0) throw std::invalid_argument("period index must be >= 1");
  const auto msg = encode_u64_be(t);
  return hash_bytes_to_g1(ctx, domain_tag, msg);
}

G1Element hash_bytes_to_g1(const BilinearGroupContext&,
                           std::string_view domain_tag, ByteView msg) {
  blst_p1 out;
  blst_hash_to_g1(&out, msg.data(), msg.size(), as_bytes(domain_tag),
                  domain_tag.size(), nullptr, 0);
  G1Element h(out);
  // Identity output would need a preimage of a specific field element pair.
  if (h.is_identity()) throw std::logic_error("hash_to_g1 produced identity");
  return h;
}

Scalar hash_to_scalar(const BilinearGroupContext& ctx,
                      std::string_view domain_tag, std::uint64_t t,
                      ByteView m) {
  if (t == 0) throw std::invalid_argument("period index must be >= 1");
  Bytes msg;
  msg.reserve(16 + m.size());
  append(msg, encode_u64_be(t));
  append(msg, encode_u64_be(m.size()));
  append(msg, m);
  return hash_bytes_to_scalar(ctx, domain_tag, msg);
}

Scalar hash_bytes_to_scalar(const BilinearGroupContext&,
                            std::string_view domain_tag, ByteView msg) {
  std::array<std::uint8_t, kWideHashBytes> wide;
  blst_expand_message_xmd(wide.data(), wide.size(), msg.data(), msg.size(),
                          as_bytes(domain_tag), domain_tag.size());
  return Scalar::reduce(wide);
}

GTElement pair(const BilinearGroupContext&, const G1Element& a,
               const G2Element& b) {
  g_pairing_count.fetch_add(1, std::memory_order_relaxed);
  if (a.is_identity() || b.is_identity()) return GTElement::one();
  const blst_p1_affine pa = a.to_affine();
  const blst_p2_affine pb = b.to_affine();
  blst_fp12 ml;
  blst_miller_loop(&ml, &pb, &pa);
  blst_fp12 out;
  blst_final_exp(&out, &ml);
  return GTElement(out);
}

std::uint64_t pairing_counter_read_reset() {
  return g_pairing_count.exchange(0, std::memory_order_relaxed);
}

std::uint64_t pairing_counter_peek() {
  return g_pairing_count.load(std::memory_order_relaxed);
}

Scalar random_scalar(const BilinearGroupContext&, Rng& rng) {
  std::array<std::uint8_t, kWideHashBytes> wide;
  rng.fill(wide);
  return Scalar::reduce(wide);
}

Scalar random_scalar_nonzero(const BilinearGroupContext& ctx, Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(ctx, rng);
    if (!s.is_zero()) return s;
  }
}

G1Element random_g1_nonidentity(const BilinearGroupContext& ctx, Rng& rng) {
  return ctx.g1_generator().pow(random_scalar_nonzero(ctx, rng));
}

G2Element random_g2_nonidentity(const BilinearGroupContext& ctx, Rng& rng) {
  return ctx.g2_generator().pow(random_scalar_nonzero(ctx, rng));
}

}  // namespace pssas
