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

#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "pssas/bench.h"
#include "pssas/bgls.h"

namespace pssas {
namespace {

class BglsTest : public ::testing::Test {
 protected:
  SasParams params_ = sas_setup(128, 100);
  Rng rng_ = Rng::from_seed(55);

  std::vector<BglsSignedEntry> signed_entries(std::size_t n, std::uint64_t t,
                                              BglsCertifiedKeys* certify = nullptr) {
    std::vector<BglsSignedEntry> out;
    for (std::size_t i = 0; i < n; ++i) {
      auto [pk, sk] = bgls_keygen(params_, rng_);
      if (certify) certify->register_key(params_, pk, sk);
      const Bytes m = to_bytes("bgls-" + std::to_string(i));
      out.push_back({pk, m, bgls_sign(params_, sk, pk, t, m)});
    }
    return out;
  }

  static std::vector<BglsPublicEntry> public_part(
      const std::vector<BglsSignedEntry>& entries) {
    std::vector<BglsPublicEntry> out;
    for (const auto& e : entries) out.push_back({e.pk, e.message});
    return out;
  }
};

TEST_F(BglsTest, PairingCountIsEllPlusOne) {
  for (std::size_t ell : {1u, 10u, 100u}) {
    const auto entries = signed_entries(ell, 3);
    const BglsAggregate agg = bgls_aggregate(params_, entries);
    pairing_counter_read_reset();
    EXPECT_TRUE(bgls_aggregate_verify(params_, public_part(entries), agg));
    EXPECT_EQ(pairing_counter_read_reset(), ell + 1) << "ell=" << ell;
  }
}

TEST_F(BglsTest, Sizes) {
  EXPECT_EQ(BglsPublicKey::kComponents, 1u);
  const auto entries = signed_entries(1, 1);
  EXPECT_EQ(entries[0].pk.encode().size(), kG2Bytes);
  EXPECT_EQ(bgls_aggregate(params_, entries).encode().size(), kSignatureBytes);
}

TEST_F(BglsTest, TamperedAggregateIsRejected) {
  const auto entries = signed_entries(4, 8);
  BglsAggregate agg = bgls_aggregate(params_, entries);
  agg.agg = agg.agg * params_.ctx.g1_generator();
  EXPECT_EQ(bgls_aggregate_verify(params_, public_part(entries), agg).reason,
            reason::kPairingMismatch);
  auto pairs = public_part(entries);
  pairs[2].message = to_bytes("changed");
  EXPECT_FALSE(bgls_aggregate_verify(params_, pairs,
                                     bgls_aggregate(params_, entries)));
}

TEST_F(BglsTest, MessageHashBindsKeyAndPeriod) {
  auto [a, ask] = bgls_keygen(params_, rng_);
  auto [b, bsk] = bgls_keygen(params_, rng_);
  const Bytes m = to_bytes("m");
  EXPECT_NE(bgls_message_hash(params_, a, 1, m), bgls_message_hash(params_, b, 1, m));
  EXPECT_NE(bgls_message_hash(params_, a, 1, m), bgls_message_hash(params_, a, 2, m));
}

TEST_F(BglsTest, AggregationErrors) {
  auto mixed = signed_entries(1, 1);
  mixed.push_back(signed_entries(1, 2)[0]);
  EXPECT_THROW(bgls_aggregate(params_, mixed), SasError);

  auto dup = signed_entries(2, 1);
  dup.push_back(dup[0]);
  try {
    bgls_aggregate(params_, dup);
    FAIL();
  } catch (const SasError& e) {
    EXPECT_EQ(e.reason(), reason::kDuplicateMessage);
  }
  EXPECT_THROW(bgls_aggregate(params_, {}), SasError);
}

TEST_F(BglsTest, CertifiedKeyGate) {
  BglsCertifiedKeys certified;
  auto entries = signed_entries(3, 5, &certified);
  const BglsAggregate agg = bgls_aggregate(params_, entries);
  EXPECT_TRUE(bgls_certified_aggregate_verify(certified, params_,
                                              public_part(entries), agg));
  auto more = entries;
  more.push_back(signed_entries(1, 5)[0]);
  EXPECT_EQ(bgls_certified_aggregate_verify(certified, params_, public_part(more),
                                            bgls_aggregate(params_, more))
                .reason,
            reason::kUncertifiedPk);
  auto [pk, sk] = bgls_keygen(params_, rng_);
  auto [other, other_sk] = bgls_keygen(params_, rng_);
  EXPECT_FALSE(certified.register_key(params_, pk, other_sk));
}

TEST(BenchTest, ComparisonMatchesExpectedCounts) {
  const SasParams params = sas_setup(128, 1000);
  Rng rng = Rng::from_seed(1);
  const std::vector<std::size_t> ells = {1, 2, 5, 10, 50, 100};
  const std::vector<BenchScheme> schemes = {BenchScheme::kSas,
                                            BenchScheme::kBgls};
  const auto reports = run_comparison(params, ells, schemes, rng);
  ASSERT_EQ(reports.size(), 12u);
  for (const BenchReport& r : reports) {
    EXPECT_TRUE(r.matches_expected()) << r.scheme << " ell=" << r.ell;
    if (r.scheme == "sas") {
      EXPECT_EQ(r.pairing_count, 2u);
      EXPECT_EQ(r.pk_components, 2u);
      EXPECT_EQ(r.pk_bytes, 192u);
    } else {
      EXPECT_EQ(r.pairing_count, r.ell + 1);
      EXPECT_EQ(r.pk_components, 1u);
      EXPECT_EQ(r.pk_bytes, 96u);
    }
    EXPECT_EQ(r.agg_sig_components, 2u);
    EXPECT_EQ(r.agg_sig_bytes, 56u);
  }

  std::ostringstream csv;
  write_bench_csv(csv, reports);
  EXPECT_NE(csv.str().find("scheme,ell,pairing_count,expected_pairings,"
                           "agg_sig_components,pk_components,agg_sig_bytes,"
                           "pk_bytes,sign_ms,agg_ms,aver_ms,accepted\n"),
            std::string::npos);
  EXPECT_NE(csv.str().find("type-3"), std::string::npos);
  EXPECT_NE(csv.str().find("SAS_LLY"), std::string::npos);

  std::ostringstream dat;
  write_gnuplot_data(dat, reports);
  EXPECT_NE(dat.str().find("\n10 2 11 "), std::string::npos);
}

TEST(BenchTest, SchemeNames) {
  EXPECT_EQ(bench_scheme_from_string("bgls"), BenchScheme::kBgls);
  EXPECT_EQ(to_string(BenchScheme::kSas), "sas");
  EXPECT_FALSE(bench_scheme_from_string("agh1").has_value());
  EXPECT_EQ(reference_rows().size(), 3u);
}

}  // namespace
}  // namespace pssas
