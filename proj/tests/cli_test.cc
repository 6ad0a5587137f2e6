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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.h"
#include "pssas/formats.h"

namespace pssas::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

std::vector<std::string> keys_of(const Json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("SAS_PARAMS");
    dir_ = fs::temp_directory_path() /
           ("pssas_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    schema_ = read_json_file("data/cli_schema.json");
  }
  void TearDown() override {
    unsetenv("SAS_PARAMS");
    fs::remove_all(dir_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  void expect_schema(const CliRun& r, const std::string& name) {
    ASSERT_FALSE(r.out.empty()) << r.err;
    EXPECT_EQ(keys_of(r.json()), schema_.at(name).get<std::vector<std::string>>())
        << name;
  }

  // setup + two seeded keys, both signing `period`.
  void two_signers(std::uint64_t period) {
    ASSERT_EQ(run({"setup", "--periods", "100", "--out", path("params.json")}).code, 0);
    for (const char* k : {"a", "b"}) {
      ASSERT_EQ(run({"keygen", "--params", path("params.json"), "--out",
                     path(std::string(k) + ".key"), "--seed",
                     std::string(k) == "a" ? "1" : "2"})
                    .code,
                0);
      ASSERT_EQ(run({"sign", "--params", path("params.json"), "--key",
                     path(std::string(k) + ".key"), "--period",
                     std::to_string(period), "--message", std::string("msg-") + k,
                     "--out", path(std::string(k) + ".sig")})
                    .code,
                0);
    }
  }

  fs::path dir_;
  Json schema_;
};

TEST_F(CliTest, SetupIsIdempotent) {
  const CliRun r = run({"setup", "--periods", "1000", "--out", path("p1.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  expect_schema(r, "setup");
  run({"setup", "--periods", "1000", "--out", path("p2.json")});
  EXPECT_EQ(slurp(path("p1.json")), slurp(path("p2.json")));
  EXPECT_EQ(read_json_file(path("p1.json"))["max_period"], 1000);
}

TEST_F(CliTest, SetupRejectsZeroPeriods) {
  const CliRun r = run({"setup", "--periods", "0", "--out", path("p.json")});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_FALSE(r.err.empty());
  EXPECT_FALSE(fs::exists(path("p.json")));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitError);
  EXPECT_EQ(run({"setup", "--out", path("p.json")}).code, kExitError);
  EXPECT_EQ(run({"verify", "--params", path("missing.json"), "--bundle",
                 path("missing.sig")})
                .code,
            kExitError);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, KeygenKeepsSecretsOffStdoutUnlessRevealed) {
  run({"setup", "--periods", "10", "--out", path("params.json")});
  const CliRun quiet = run({"keygen", "--params", path("params.json"), "--out",
                         path("k.json"), "--seed", "3"});
  ASSERT_EQ(quiet.code, 0) << quiet.err;
  expect_schema(quiet, "keygen");
  const Json key = read_json_file(path("k.json"));
  EXPECT_EQ(quiet.out.find(key["x_hex"].get<std::string>()), std::string::npos);
  EXPECT_EQ(quiet.out.find(key["y_hex"].get<std::string>()), std::string::npos);

  const CliRun loud = run({"keygen", "--params", path("params.json"), "--out",
                        path("k2.json"), "--seed", "3", "--reveal"});
  expect_schema(loud, "keygen --reveal");
  EXPECT_EQ(loud.json()["x_hex"], key["x_hex"]);
}

TEST_F(CliTest, SignVerifyRoundTrip) {
  two_signers(4);
  const CliRun r = run({"verify", "--params", path("params.json"), "--bundle",
                     path("a.sig")});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  expect_schema(r, "verify");
  EXPECT_EQ(r.json()["reason"], "ok");
  EXPECT_EQ(read_json_file(path("a.key"))["last_signed_period"], 4);
}

TEST_F(CliTest, SignOutputSchemaAndReuseRejection) {
  run({"setup", "--periods", "10", "--out", path("params.json")});
  run({"keygen", "--params", path("params.json"), "--out", path("k.json"), "--seed", "5"});
  const CliRun ok = run({"sign", "--params", path("params.json"), "--key", path("k.json"),
                      "--period", "2", "--message", "one", "--out", path("s1.json")});
  expect_schema(ok, "sign");
  const CliRun again = run({"sign", "--params", path("params.json"), "--key",
                         path("k.json"), "--period", "2", "--message", "two",
                         "--out", path("s2.json")});
  EXPECT_EQ(again.code, kExitReject);
  expect_schema(again, "sign (rejected)");
  EXPECT_EQ(again.json()["reason"], "period-already-used");
  EXPECT_FALSE(fs::exists(path("s2.json")));
  const CliRun late = run({"sign", "--params", path("params.json"), "--key",
                        path("k.json"), "--period", "11", "--message", "x",
                        "--out", path("s3.json")});
  EXPECT_EQ(late.json()["reason"], "period-out-of-range");
}

TEST_F(CliTest, TamperedSignatureIsRejected) {
  two_signers(4);
  Json bundle = read_json_file(path("a.sig"));
  bundle["entries"][0]["message_b64"] = to_base64(to_bytes("msg-x"));
  write_text_file(path("t1.sig"), dump_json(bundle));
  const CliRun r = run({"verify", "--params", path("params.json"), "--bundle", path("t1.sig")});
  EXPECT_EQ(r.code, kExitReject);
  EXPECT_EQ(r.json()["reason"], "pairing-mismatch");

  bundle = read_json_file(path("a.sig"));
  const Json other = read_json_file(path("b.sig"));
  bundle["entries"][0]["sig_hex"] = other["entries"][0]["sig_hex"];
  write_text_file(path("t2.sig"), dump_json(bundle));
  EXPECT_EQ(run({"verify", "--params", path("params.json"), "--bundle", path("t2.sig")}).code,
            kExitReject);

  // A corrupted point encoding is an input error, not a verdict.
  bundle = read_json_file(path("a.sig"));
  std::string hex = bundle["entries"][0]["sig_hex"];
  hex[10] = hex[10] == '0' ? '1' : '0';
  bundle["entries"][0]["sig_hex"] = hex;
  write_text_file(path("t3.sig"), dump_json(bundle));
  const int code =
      run({"verify", "--params", path("params.json"), "--bundle", path("t3.sig")}).code;
  EXPECT_TRUE(code == kExitReject || code == kExitError);
}

TEST_F(CliTest, AggregateAndAver) {
  two_signers(6);
  const CliRun agg = run({"aggregate", "--params", path("params.json"), "--bundle",
                       path("a.sig"), "--bundle", path("b.sig"), "--out",
                       path("agg.json")});
  ASSERT_EQ(agg.code, kExitOk) << agg.out << agg.err;
  expect_schema(agg, "aggregate");
  const CliRun av = run({"aver", "--params", path("params.json"), "--aggregate",
                      path("agg.json")});
  EXPECT_EQ(av.code, kExitOk);
  expect_schema(av, "aver");
  EXPECT_EQ(av.json()["pairings"], 2);

  Json file = read_json_file(path("agg.json"));
  file["pairs"].erase(1);
  write_text_file(path("dropped.json"), dump_json(file));
  EXPECT_EQ(run({"aver", "--params", path("params.json"), "--aggregate",
                 path("dropped.json")})
                .code,
            kExitReject);
}

TEST_F(CliTest, AggregateMixedPeriods) {
  run({"setup", "--periods", "100", "--out", path("params.json")});
  run({"keygen", "--params", path("params.json"), "--out", path("a.key"), "--seed", "1"});
  run({"keygen", "--params", path("params.json"), "--out", path("b.key"), "--seed", "2"});
  run({"sign", "--params", path("params.json"), "--key", path("a.key"), "--period", "1",
       "--message", "x", "--out", path("a.sig")});
  run({"sign", "--params", path("params.json"), "--key", path("b.key"), "--period", "2",
       "--message", "y", "--out", path("b.sig")});
  const CliRun r = run({"aggregate", "--params", path("params.json"), "--bundle",
                     path("a.sig"), "--bundle", path("b.sig"), "--out",
                     path("agg.json")});
  EXPECT_EQ(r.code, kExitReject);
  expect_schema(r, "aggregate (rejected)");
  EXPECT_EQ(r.json()["reason"], "period-mismatch");
  EXPECT_FALSE(fs::exists(path("agg.json")));
}

TEST_F(CliTest, AggregateDuplicateKey) {
  two_signers(3);
  const CliRun r = run({"aggregate", "--params", path("params.json"), "--bundle",
                     path("a.sig"), "--bundle", path("a.sig"), "--out",
                     path("agg.json")});
  EXPECT_EQ(r.code, kExitReject);
  EXPECT_EQ(r.json()["reason"], "duplicate-pk");
}

TEST_F(CliTest, RegisterAndCertifiedAver) {
  two_signers(5);
  const CliRun reg = run({"register", "--params", path("params.json"), "--registry",
                       path("reg.jsonl"), "--key", path("a.key"), "--mode",
                       "harness", "--at", "1700000000"});
  ASSERT_EQ(reg.code, kExitOk) << reg.err;
  expect_schema(reg, "register");
  EXPECT_TRUE(fs::exists(path("reg.jsonl.escrow")));

  run({"aggregate", "--params", path("params.json"), "--bundle", path("a.sig"),
       "--bundle", path("b.sig"), "--out", path("agg.json")});
  const CliRun partial = run({"aver", "--params", path("params.json"), "--aggregate",
                           path("agg.json"), "--registry", path("reg.jsonl")});
  EXPECT_EQ(partial.code, kExitReject);
  EXPECT_EQ(partial.json()["reason"], "uncertified-pk");

  const CliRun prod = run({"register", "--params", path("params.json"), "--registry",
                        path("reg.jsonl"), "--key", path("b.key")});
  ASSERT_EQ(prod.code, kExitOk) << prod.err;
  EXPECT_EQ(prod.json()["mode"], "production");
  const CliRun full = run({"aver", "--params", path("params.json"), "--aggregate",
                        path("agg.json"), "--registry", path("reg.jsonl")});
  EXPECT_EQ(full.code, kExitOk) << full.out;
  EXPECT_EQ(full.json()["certified_check"], true);

  const CliRun again = run({"register", "--params", path("params.json"), "--registry",
                         path("reg.jsonl"), "--key", path("b.key")});
  EXPECT_EQ(again.json()["already_registered"], true);
  EXPECT_EQ(read_registry_records(path("reg.jsonl")).size(), 2u);
  // The registry file itself holds no secrets.
  const Json key = read_json_file(path("a.key"));
  EXPECT_EQ(slurp(path("reg.jsonl")).find(key["x_hex"].get<std::string>()),
            std::string::npos);
}

TEST_F(CliTest, RegisterRejectsInconsistentKey) {
  two_signers(1);
  Json a = read_json_file(path("a.key"));
  const Json b = read_json_file(path("b.key"));
  a["x_hex"] = b["x_hex"];
  write_text_file(path("bad.key"), dump_json(a));
  const CliRun r = run({"register", "--params", path("params.json"), "--registry",
                     path("reg.jsonl"), "--key", path("bad.key"), "--mode", "harness"});
  EXPECT_EQ(r.code, kExitReject);
  EXPECT_EQ(r.json()["reason"], "invalid-key-pair");
  EXPECT_FALSE(fs::exists(path("reg.jsonl")));
}

TEST_F(CliTest, ParamsFromEnvironment) {
  run({"setup", "--periods", "7", "--out", path("env.json")});
  setenv("SAS_PARAMS", path("env.json").c_str(), 1);
  const CliRun k = run({"keygen", "--params", path("does-not-exist.json"), "--out",
                     path("k.json"), "--seed", "1"});
  ASSERT_EQ(k.code, kExitOk) << k.err;
  const CliRun s = run({"sign", "--key", path("k.json"), "--period", "8",
                     "--message", "m", "--out", path("s.json")});
  EXPECT_EQ(s.json()["reason"], "period-out-of-range");
}

TEST_F(CliTest, PeriodFromUnixEpoch) {
  run({"setup", "--periods", "100", "--out", path("params.json")});
  run({"keygen", "--params", path("params.json"), "--out", path("k.json"), "--seed", "1"});
  const CliRun r = run({"sign", "--params", path("params.json"), "--key", path("k.json"),
                     "--period-from-unix-epoch", "60", "--epoch-start", "1000",
                     "--now", "1000"
                     , "--message", "m", "--out", path("s.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["period"], 1);
  const CliRun r2 = run({"sign", "--params", path("params.json"), "--key", path("k.json"),
                      "--period-from-unix-epoch", "60", "--epoch-start", "1000",
                      "--now", "1179", "--message", "m", "--out", path("s2.json")});
  EXPECT_EQ(r2.json()["period"], 3);
  EXPECT_EQ(run({"sign", "--params", path("params.json"), "--key", path("k.json"),
                 "--period", "4", "--period-from-unix-epoch", "60", "--message",
                 "m", "--out", path("s3.json")})
                .code,
            kExitError);
}

TEST_F(CliTest, MessageFile) {
  run({"setup", "--periods", "10", "--out", path("params.json")});
  run({"keygen", "--params", path("params.json"), "--out", path("k.json"), "--seed", "1"});
  write_text_file(path("msg.bin"), std::string("\x00\x01\x02", 3));
  ASSERT_EQ(run({"sign", "--params", path("params.json"), "--key", path("k.json"),
                 "--period", "1", "--message-file", path("msg.bin"), "--out",
                 path("s.json")})
                .code,
            kExitOk);
  EXPECT_EQ(read_json_file(path("s.json"))["entries"][0]["message_b64"], "AAEC");
}

TEST_F(CliTest, GameReport) {
  const CliRun r = run({"game", "--game", "reduction", "--trials", "2",
                     "--sign-queries", "3", "--seed", "9"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  expect_schema(r, "game");
  EXPECT_EQ(r.json()["wins"], 2);
  EXPECT_EQ(run({"game", "--game", "bogus"}).code, kExitError);
}

TEST_F(CliTest, BenchWritesCsv) {
  const CliRun r = run({"bench", "--schemes", "sas,bgls", "--ell", "1,3", "--out",
                     path("r.csv"), "--gnuplot", path("r.dat")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  expect_schema(r, "bench");
  EXPECT_EQ(r.json()["all_match_expected"], true);
  EXPECT_NE(slurp(path("r.csv")).find("\nbgls,3,4,4,"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("r.dat")));
  EXPECT_EQ(run({"bench", "--schemes", "agh1", "--out", path("x.csv")}).code,
            kExitError);
}

}  // namespace
}  // namespace pssas::cli
