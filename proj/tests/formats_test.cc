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

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "pssas/formats.h"

namespace pssas {
namespace {

namespace fs = std::filesystem;

class FormatsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pssas_formats_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  SasParams params_ = sas_setup(128, 64);
  Rng rng_ = Rng::from_seed(8);
  fs::path dir_;
};

TEST_F(FormatsTest, ParamsRoundTripIsByteExact) {
  const std::string text = dump_json(params_to_json(params_));
  const SasParams back = params_from_json(Json::parse(text));
  EXPECT_EQ(back.max_period, 64u);
  EXPECT_EQ(back.g2, params_.g2);
  EXPECT_EQ(back.h1_tag, params_.h1_tag);
  EXPECT_EQ(dump_json(params_to_json(back)), text);
  EXPECT_EQ(dump_json(params_to_json(sas_setup(128, 64))), text);
}

TEST_F(FormatsTest, ParamsValidation) {
  Json j = params_to_json(params_);
  j["max_period"] = 0;
  EXPECT_THROW(params_from_json(j), FormatError);
  j = params_to_json(params_);
  j["version"] = 2;
  EXPECT_THROW(params_from_json(j), FormatError);
  j = params_to_json(params_);
  j.erase("g2_hex");
  EXPECT_THROW(params_from_json(j), FormatError);
  j = params_to_json(params_);
  j["g2_hex"] = "zz";
  EXPECT_THROW(params_from_json(j), DecodeError);
  j = params_to_json(params_);
  j["security_level"] = 256;
  EXPECT_THROW(params_from_json(j), UnsupportedSecurityLevel);
}

TEST_F(FormatsTest, KeyFileRoundTrip) {
  auto [pk, sk] = sas_keygen(params_, rng_);
  KeyFile key{pk, sk, {}};
  const Json fresh = key_file_to_json(key);
  EXPECT_TRUE(fresh["last_signed_period"].is_null());
  key.state.last_signed_period = 17;
  const KeyFile back = key_file_from_json(key_file_to_json(key));
  EXPECT_EQ(back.pk, pk);
  EXPECT_EQ(back.sk.x, sk.x);
  EXPECT_EQ(back.sk.y, sk.y);
  EXPECT_EQ(back.state.last_signed_period, 17u);
  EXPECT_FALSE(public_key_to_json(pk).contains("x_hex"));
}

TEST_F(FormatsTest, BundleAndAggregateRoundTrip) {
  SignatureBundle bundle{9, {}};
  for (int i = 0; i < 3; ++i) {
    auto [pk, sk] = sas_keygen(params_, rng_);
    SignerState state;
    const Bytes m = {static_cast<std::uint8_t>(i), 0x00, 0xff};
    bundle.entries.push_back({pk, m, sas_sign(params_, sk, 9, m, state)});
  }
  const Json bj = bundle_to_json(bundle);
  EXPECT_EQ(bj["entries"][0]["message_b64"], to_base64(bundle.entries[0].message));
  const SignatureBundle back = bundle_from_json(bj);
  ASSERT_EQ(back.entries.size(), 3u);
  EXPECT_EQ(back.entries[1].sig, bundle.entries[1].sig);
  EXPECT_EQ(back.entries[2].message, bundle.entries[2].message);
  EXPECT_EQ(bundle_to_json(back), bj);

  AggregateFile file{sas_aggregate(params_, bundle.entries), {}};
  for (const auto& e : bundle.entries) file.pairs.push_back({e.pk, e.message});
  const Json aj = aggregate_file_to_json(file);
  for (const char* k : {"version", "period", "bprime_hex", "pairs"}) {
    EXPECT_TRUE(aj.contains(k)) << k;
  }
  const AggregateFile aback = aggregate_file_from_json(aj);
  EXPECT_EQ(aback.agg, file.agg);
  EXPECT_EQ(aggregate_file_to_json(aback), aj);
  EXPECT_TRUE(sas_aggregate_verify(params_, aback.pairs, aback.agg));
}

TEST_F(FormatsTest, BundleRejectsInconsistentPeriods) {
  auto [pk, sk] = sas_keygen(params_, rng_);
  SignerState state;
  const Bytes m = to_bytes("x");
  SignatureBundle bundle{2, {{pk, m, sas_sign(params_, sk, 3, m, state)}}};
  EXPECT_THROW(bundle_to_json(bundle), FormatError);
}

TEST_F(FormatsTest, PsVectorsRoundTrip) {
  const fs::path path = dir_ / "ps.jsonl";
  std::ofstream out(path);
  std::vector<PsTestVector> written;
  for (int i = 0; i < 20; ++i) {
    auto [pk, sk] = i % 2 ? ps_keygen(params_.ctx, rng_)
                          : ps_keygen_with_generator(
                                params_.ctx, params_.ctx.g2_generator(), rng_);
    PsTestVector v{pk, sk, random_scalar(params_.ctx, rng_), {}, true};
    v.sig = ps_sign(params_.ctx, sk, v.m, rng_);
    written.push_back(v);
    out << ps_vector_to_json(v).dump() << '\n';
  }
  out.close();
  const auto lines = read_json_lines(path);
  ASSERT_EQ(lines.size(), written.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const PsTestVector v = ps_vector_from_json(lines[i]);
    EXPECT_EQ(v.pk, written[i].pk);
    EXPECT_EQ(v.sig, written[i].sig);
    EXPECT_EQ(v.m, written[i].m);
    EXPECT_EQ(ps_vector_to_json(v), lines[i]);
    EXPECT_EQ(lines[i].contains("g2"), i % 2 == 1);
  }
}

TEST_F(FormatsTest, CheckedInPsVectorsVerify) {
  const auto lines = read_json_lines("data/ps_vectors.jsonl");
  ASSERT_FALSE(lines.empty());
  int valid = 0, invalid = 0;
  for (const Json& j : lines) {
    for (const char* k : {"x", "y", "X", "Y", "m", "A", "B", "valid"}) {
      ASSERT_TRUE(j.contains(k)) << k;
    }
    const PsTestVector v = ps_vector_from_json(j);
    EXPECT_EQ(ps_verify(params_.ctx, v.pk, v.m, v.sig), v.valid) << j.dump();
    EXPECT_EQ(v.pk.X, v.pk.g2.pow(v.sk.x));
    (v.valid ? valid : invalid)++;
  }
  EXPECT_GT(valid, 0);
  EXPECT_GT(invalid, 0);
}

TEST_F(FormatsTest, RegistryPersistence) {
  const fs::path reg = dir_ / "registry.jsonl";
  const fs::path escrow = dir_ / "escrow.jsonl";
  auto [a, ask] = sas_keygen(params_, rng_);
  auto [b, bsk] = sas_keygen(params_, rng_);
  append_registry_record(reg, {a, 1700000000, RegistryMode::kHarness});
  append_registry_record(reg, {b, 1700000001, RegistryMode::kProduction});
  append_escrow_record(escrow, a, ask);

  const auto records = read_registry_records(reg);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].pk, a);
  EXPECT_EQ(records[1].registered_at, 1700000001);
  EXPECT_EQ(records[1].mode, RegistryMode::kProduction);

  const auto escrow_lines = read_json_lines(escrow);
  ASSERT_EQ(escrow_lines.size(), 2u);
  EXPECT_TRUE(escrow_lines[0].contains("warning"));

  KeyRegistry registry(RegistryMode::kHarness);
  load_registry(registry, reg, escrow);
  EXPECT_TRUE(registry.is_certified(a));
  EXPECT_TRUE(registry.is_certified(b));
  ASSERT_TRUE(registry.escrowed_secret(a).has_value());
  EXPECT_EQ(registry.escrowed_secret(a)->y, ask.y);
  EXPECT_FALSE(registry.escrowed_secret(b).has_value());
  EXPECT_TRUE(read_registry_records(dir_ / "missing.jsonl").empty());
}

TEST_F(FormatsTest, GameReportSchema) {
  GameReport report;
  report.game = "reduction";
  report.trials = 2;
  report.wins = 1;
  report.aborts_by_reason["h2-collision"] = 1;
  report.loss_terms = advantage_bound_report(params_.ctx, 2, 1, 0, 4);
  const Json j = game_report_to_json(report);
  for (const char* k : {"game", "trials", "wins", "aborts_by_reason", "loss_terms"}) {
    EXPECT_TRUE(j.contains(k)) << k;
  }
  EXPECT_EQ(j["aborts_by_reason"]["h2-collision"], 1);
  EXPECT_TRUE(j["loss_terms"]["log2_sign_loss"].is_null());
  EXPECT_EQ(j["loss_terms"]["q_h2"], 4);
}

TEST_F(FormatsTest, ReadErrors) {
  EXPECT_THROW(read_json_file(dir_ / "nope.json"), std::runtime_error);
  write_text_file(dir_ / "bad.json", "{not json");
  EXPECT_THROW(read_json_file(dir_ / "bad.json"), FormatError);
  EXPECT_THROW(public_key_from_hex("00"), FormatError);
  EXPECT_THROW(g1_from_hex(std::string(96, 'f')), FormatError);
}

}  // namespace
}  // namespace pssas
