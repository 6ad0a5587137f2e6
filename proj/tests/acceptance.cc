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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "pssas/bgls.h"
#include "pssas/formats.h"
#include "pssas/games.h"
#include "pssas/ps_sig.h"
#include "pssas/sas.h"
#include "pssas/whitebox.h"
#include "support/oracle.h"

namespace pssas {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Tolerances. Everything else is exact equality.
constexpr double kCorrectnessSeconds = 60.0;
constexpr double kReductionSeconds = 120.0;
constexpr std::size_t kMaxSignQueries = 100;
constexpr std::size_t kMaxH2Queries = 100;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

// 1 -------------------------------------------------------------------------

Outcome correctness() {
  Outcome o;
  const SasParams params = sas_setup(128, 1000);
  Rng rng = Rng::from_seed(1);
  const auto start = Clock::now();
  int runs = 0;
  for (std::size_t ell : {1u, 2u, 5u, 10u, 100u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CorrectnessReport r = sas_correctness_check(params, ell, rng);
      ++runs;
      bool members_ok = r.members.size() == ell;
      for (const auto& m : r.members) members_ok = members_ok && m.verified;
      require(o, r.passed && members_ok && r.aggregate_verified,
              "ell=" + std::to_string(ell) + " trial " + std::to_string(trial) +
                  ": " + r.failure);
    }
  }
  const double secs = seconds_since(start);
  require(o, secs < kCorrectnessSeconds, "took " + fmt_seconds(secs));
  if (o.pass) {
    o.detail = std::to_string(runs) + "/100 trials over ell in {1,2,5,10,100}, " +
               fmt_seconds(secs);
  }
  return o;
}

// 2 -------------------------------------------------------------------------

Outcome pairing_counts() {
  Outcome o;
  const SasParams params = sas_setup(128, 1000);
  Rng rng = Rng::from_seed(2);
  std::ostringstream seen;

  for (std::size_t ell : {1u, 2u, 5u, 10u, 50u, 100u}) {
    std::vector<SignedEntry> entries;
    std::vector<PublicEntry> pairs;
    for (std::size_t i = 0; i < ell; ++i) {
      auto [pk, sk] = sas_keygen(params, rng);
      const Bytes m = to_bytes("pc-" + std::to_string(i));
      SignerState state;
      entries.push_back({pk, m, sas_sign(params, sk, 77, m, state)});
      pairs.push_back({pk, m});
    }
    const AggregateSignature agg = sas_aggregate(params, entries);
    pairing_counter_read_reset();
    const bool ok = sas_aggregate_verify(params, pairs, agg).accepted;
    const std::uint64_t n = pairing_counter_read_reset();
    require(o, ok && n == 2,
            "sas aver ell=" + std::to_string(ell) + " used " + std::to_string(n));
    if (ell == 1) {
      pairing_counter_read_reset();
      const bool v = sas_verify(params, entries[0].pk, entries[0].message,
                                entries[0].sig).accepted;
      const std::uint64_t nv = pairing_counter_read_reset();
      require(o, v && nv == 2, "sas_verify used " + std::to_string(nv));
    }
  }
  seen << "sas aver=2 at ell 1..100, sas_verify=2";

  auto [ppk, psk] = ps_keygen(params.ctx, rng);
  const Scalar m = random_scalar(params.ctx, rng);
  const PsSignature psig = ps_sign(params.ctx, psk, m, rng);
  pairing_counter_read_reset();
  const bool pv = ps_verify(params.ctx, ppk, m, psig);
  const std::uint64_t np = pairing_counter_read_reset();
  require(o, pv && np == 2, "ps_verify used " + std::to_string(np));
  seen << ", ps_verify=2";

  for (std::size_t ell : {1u, 10u, 100u}) {
    std::vector<BglsSignedEntry> entries;
    std::vector<BglsPublicEntry> pairs;
    for (std::size_t i = 0; i < ell; ++i) {
      auto [pk, sk] = bgls_keygen(params, rng);
      const Bytes msg = to_bytes("b-" + std::to_string(i));
      entries.push_back({pk, msg, bgls_sign(params, sk, pk, 77, msg)});
      pairs.push_back({pk, msg});
    }
    const BglsAggregate agg = bgls_aggregate(params, entries);
    pairing_counter_read_reset();
    const bool ok = bgls_aggregate_verify(params, pairs, agg).accepted;
    const std::uint64_t n = pairing_counter_read_reset();
    require(o, ok && n == ell + 1,
            "bgls ell=" + std::to_string(ell) + " used " + std::to_string(n));
    seen << ", bgls(" << ell << ")=" << n;
  }
  if (o.pass) o.detail = seen.str();
  return o;
}

// 3 -------------------------------------------------------------------------

Outcome sizes() {
  Outcome o;
  const SasParams params = sas_setup(128, 10);
  Rng rng = Rng::from_seed(3);
  auto [pk, sk] = sas_keygen(params, rng);
  SignerState state;
  const Bytes m = to_bytes("size");
  const EpochSignature sig = sas_sign(params, sk, 1, m, state);
  const AggregateSignature agg = sas_aggregate(params, {{SignedEntry{pk, m, sig}}});

  const auto pk_bytes = pk.encode();
  require(o, pk_bytes.size() == 2 * kG2Bytes, "pk is not 2 G~ encodings");
  require(o,
          G2Element::decode(ByteView(pk_bytes).first(kG2Bytes)) == pk.X &&
              G2Element::decode(ByteView(pk_bytes).subspan(kG2Bytes)) == pk.Y,
          "pk halves do not decode to X, Y");
  require(o, SasPublicKey::kComponents == 2, "pk component count");

  const auto agg_bytes = agg.encode();
  require(o, agg_bytes.size() == kG1Bytes + kPeriodBytes,
          "aggregate is not 1 G encoding + period");
  require(o,
          G1Element::decode(ByteView(agg_bytes).first(kG1Bytes)) == agg.Bp &&
              decode_u64_be(ByteView(agg_bytes).subspan(kG1Bytes)) == agg.period,
          "aggregate fields do not decode");
  require(o, AggregateSignature::kComponents == 2, "aggregate component count");
  require(o, sig.encode().size() == agg_bytes.size(),
          "aggregate larger than a single signature");

  auto [bpk, bsk] = bgls_keygen(params, rng);
  require(o, bpk.encode().size() == kG2Bytes && BglsPublicKey::kComponents == 1,
          "baseline pk is not 1 element");
  if (o.pass) {
    o.detail = "pk 2x96 B, aggregate 48+8 B, baseline pk 1x96 B";
  }
  return o;
}

// 4 -------------------------------------------------------------------------

Outcome exponent_oracle() {
  using testing::ladder_pow;
  using testing::mod_r;
  using testing::to_mpz;
  Outcome o;
  const SasParams params = sas_setup(128, 1000);
  Rng rng = Rng::from_seed(4);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t t = 1 + rng() % params.max_period;
    const std::size_t ell = 1 + rng() % 5;
    const G1Element h1 = hash_to_g1(params.ctx, kH1Tag, t);
    std::vector<SignedEntry> entries;
    mpz_class total = 0;
    for (std::size_t j = 0; j < ell; ++j) {
      auto [pk, sk] = sas_keygen(params, rng);
      const Bytes m = to_bytes("eo-" + std::to_string(i) + "-" + std::to_string(j));
      SignerState state;
      const EpochSignature sig = sas_sign(params, sk, t, m, state);
      const mpz_class e =
          to_mpz(sk.x) + to_mpz(hash_to_scalar(params.ctx, kH2Tag, t, m)) *
                             to_mpz(sk.y);
      require(o, sig.B.encode() == ladder_pow(h1, mod_r(e)).encode(),
              "signature mismatch at instance " + std::to_string(i));
      total += e;
      entries.push_back({pk, m, sig});
    }
    const AggregateSignature agg = sas_aggregate(params, entries);
    require(o, agg.Bp.encode() == ladder_pow(h1, mod_r(total)).encode(),
            "aggregate mismatch at instance " + std::to_string(i));
    ++checked;
  }
  if (o.pass) {
    o.detail = std::to_string(checked) +
               "/100 instances bit-exact against GMP exponents";
  }
  return o;
}

// 5 -------------------------------------------------------------------------

Outcome reduction() {
  Outcome o;
  const BilinearGroupContext ctx = generate_context(128);
  Rng rng = Rng::from_seed(5);
  const auto start = Clock::now();
  int wins = 0;
  std::size_t max_qs = 0, max_qh = 0;
  for (int trial = 0; trial < 100; ++trial) {
    GpsChallenger gps(ctx, Rng::from_seed(1000 + trial));
    const auto s = whitebox::reveal(gps);
    whitebox::ForgerConfig cfg;
    // Every forgery entry is looked up in H2 three times: by the forger, by
    // the verification, and during extraction. Signing takes the rest.
    cfg.cosigners = rng() % 6;
    cfg.skips = rng() % 5;
    cfg.sign_queries = 1 + rng() % (kMaxH2Queries - 3 * (cfg.cosigners + 1));
    whitebox::WhiteBoxForger forger(SasSecretKey{s.x, s.y},
                                    Rng::from_seed(2000 + trial), cfg);
    const ReductionResult r = reduction_b(forger, gps, 1000, rng);
    max_qs = std::max(max_qs, r.sign_queries);
    max_qh = std::max(max_qh, r.h2_queries);
    if (r.output && gps.judge(*r.output)) {
      ++wins;
    } else {
      require(o, false,
              "trial " + std::to_string(trial) + ": " +
                  std::string(to_string(r.abort)) + " " + r.detail);
    }
  }
  const double secs = seconds_since(start);
  require(o, wins == 100, std::to_string(wins) + "/100 judged wins");
  require(o, max_qs <= kMaxSignQueries && max_qh <= kMaxH2Queries,
          "query budget exceeded: q_s=" + std::to_string(max_qs) +
              " q_H2=" + std::to_string(max_qh));
  require(o, secs < kReductionSeconds, "took " + fmt_seconds(secs));
  if (o.pass) {
    const AdvantageReport a =
        advantage_bound_report(ctx, 100, wins, max_qs, max_qh);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "100/100 judged wins, max q_s=%zu q_H2=%zu, log2 loss "
                  "%.1f/%.1f, %s",
                  max_qs, max_qh, a.log2_sign_loss, a.log2_h2_loss,
                  fmt_seconds(secs).c_str());
    o.detail = buf;
  }
  return o;
}

// 6 -------------------------------------------------------------------------

Outcome game_clauses() {
  Outcome o;
  const SasParams params = sas_setup(128, 100);
  Rng rng = Rng::from_seed(6);

  whitebox::ReplayAdversary replay;
  const EufCmaResult r1 = eufcma_run(replay, params, rng);
  require(o, !r1.win && r1.outcome == EufCmaOutcome::kNoFreshChallengeMessage,
          "replay adversary: " + std::string(to_string(r1.outcome)));

  auto [pk, sk] = sas_keygen(params, rng);
  whitebox::ForgerConfig cfg;
  cfg.certify_cosigners = false;
  whitebox::WhiteBoxForger forger(sk, Rng::from_seed(60), cfg);
  const EufCmaResult r2 = eufcma_run(forger, params, pk, sk);
  require(o, !r2.win && r2.outcome == EufCmaOutcome::kUncertifiedKey,
          "uncertified adversary: " + std::string(to_string(r2.outcome)));

  // Control: the same forger with certified co-signers wins.
  whitebox::WhiteBoxForger honest(sk, Rng::from_seed(61));
  require(o, eufcma_run(honest, params, pk, sk).win, "control forger lost");

  GpsChallenger gps(params.ctx, Rng::from_seed(62));
  const G1Element a = gps.oracle0();
  const bool first = gps.oracle1(a, Scalar::from_u64(1)).has_value();
  const bool second = gps.oracle1(a, Scalar::from_u64(2)).has_value();
  require(o, first && !second, "oracle1 answered a consumed A");

  if (o.pass) {
    o.detail =
        "replay -> no-fresh-challenge-message, uncertified -> uncertified-key, "
        "oracle1 replay -> bottom";
  }
  return o;
}

// 7 -------------------------------------------------------------------------

Outcome tamper() {
  Outcome o;
  const SasParams params = sas_setup(128, 1000);
  Rng rng = Rng::from_seed(7);
  std::vector<SignedEntry> entries;
  std::vector<PublicEntry> pairs;
  for (int i = 0; i < 4; ++i) {
    auto [pk, sk] = sas_keygen(params, rng);
    const Bytes m = to_bytes("tamper-" + std::to_string(i));
    SignerState state;
    entries.push_back({pk, m, sas_sign(params, sk, 500, m, state)});
    pairs.push_back({pk, m});
  }
  const AggregateSignature agg = sas_aggregate(params, entries);

  int rejects = 0, decode_failures = 0, false_accepts = 0;
  for (int i = 0; i < 100; ++i) {
    const bool on_aggregate = i % 2 == 1;
    auto bytes = on_aggregate ? agg.encode() : entries[0].sig.encode();
    const std::size_t bit = rng() % (bytes.size() * 8);
    bytes[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    bool accepted = false;
    if (on_aggregate) {
      const auto d = AggregateSignature::decode(bytes);
      if (!d) {
        ++decode_failures;
        continue;
      }
      accepted = sas_aggregate_verify(params, pairs, *d).accepted;
    } else {
      const auto d = EpochSignature::decode(bytes);
      if (!d) {
        ++decode_failures;
        continue;
      }
      accepted =
          sas_verify(params, entries[0].pk, entries[0].message, *d).accepted;
    }
    accepted ? ++false_accepts : ++rejects;
  }
  require(o, false_accepts == 0,
          std::to_string(false_accepts) + " false accepts");
  if (o.pass) {
    o.detail = "100 bit flips: " + std::to_string(rejects) + " rejected, " +
               std::to_string(decode_failures) + " decode failures, 0 accepted";
  }
  return o;
}

// 8 -------------------------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool run_pipeline(const fs::path& dir, std::string& error) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto p = [&](const char* name) { return (dir / name).string(); };
  const std::vector<std::vector<std::string>> steps = {
      {"setup", "--periods", "1000", "--out", p("params.json")},
      {"keygen", "--params", p("params.json"), "--out", p("alice.key"), "--seed", "11"},
      {"keygen", "--params", p("params.json"), "--out", p("bob.key"), "--seed", "12"},
      {"keygen", "--params", p("params.json"), "--out", p("carol.key"), "--seed", "13"},
      {"sign", "--params", p("params.json"), "--key", p("alice.key"), "--period", "42",
       "--message", "alpha", "--out", p("alice.sig")},
      {"sign", "--params", p("params.json"), "--key", p("bob.key"), "--period", "42",
       "--message", "beta", "--out", p("bob.sig")},
      {"sign", "--params", p("params.json"), "--key", p("carol.key"), "--period", "42",
       "--message", "alpha", "--out", p("carol.sig")},
      {"aggregate", "--params", p("params.json"), "--bundle", p("alice.sig"), "--bundle",
       p("bob.sig"), "--bundle", p("carol.sig"), "--out", p("aggregate.json")},
      {"aver", "--params", p("params.json"), "--aggregate", p("aggregate.json")},
  };
  for (const auto& args : steps) {
    std::ostringstream out, err;
    if (cli::run_cli(args, out, err) != cli::kExitOk) {
      error = args[0] + " failed: " + out.str() + err.str();
      return false;
    }
  }
  return true;
}

Outcome determinism() {
  Outcome o;
  const fs::path base = fs::temp_directory_path() / "pssas_acceptance";
  std::string error;
  require(o, run_pipeline(base / "run1", error), error);
  require(o, run_pipeline(base / "run2", error), error);
  std::size_t files = 0;
  if (o.pass) {
    for (const auto& entry : fs::directory_iterator(base / "run1")) {
      const fs::path other = base / "run2" / entry.path().filename();
      require(o, fs::exists(other) && slurp(entry.path()) == slurp(other),
              entry.path().filename().string() + " differs between runs");
      ++files;
    }
  }

  // Parse every artifact and re-serialize: the bytes must not move.
  if (o.pass) {
    const fs::path d = base / "run1";
    const auto same = [&](const fs::path& path, const Json& again) {
      require(o, dump_json(again) == slurp(path),
              path.filename().string() + " does not round-trip");
    };
    same(d / "params.json", params_to_json(params_from_json(read_json_file(d / "params.json"))));
    for (const char* k : {"alice.key", "bob.key", "carol.key"}) {
      same(d / k, key_file_to_json(key_file_from_json(read_json_file(d / k))));
    }
    for (const char* s : {"alice.sig", "bob.sig", "carol.sig"}) {
      same(d / s, bundle_to_json(bundle_from_json(read_json_file(d / s))));
    }
    same(d / "aggregate.json",
         aggregate_file_to_json(aggregate_file_from_json(read_json_file(d / "aggregate.json"))));
  }

  // PS test vectors through the JSON-lines format.
  if (o.pass) {
    const BilinearGroupContext ctx = generate_context(128);
    Rng rng = Rng::from_seed(8);
    int vectors = 0;
    for (int i = 0; i < 20; ++i) {
      auto [pk, sk] = ps_keygen(ctx, rng);
      PsTestVector v{pk, sk, random_scalar(ctx, rng), {}, true};
      v.sig = ps_sign(ctx, sk, v.m, rng);
      const std::string line = ps_vector_to_json(v).dump();
      const PsTestVector back = ps_vector_from_json(Json::parse(line));
      require(o,
              back.pk == v.pk && back.sig == v.sig && back.m == v.m &&
                  back.sk.x == v.sk.x && back.sk.y == v.sk.y &&
                  ps_vector_to_json(back).dump() == line &&
                  ps_verify(ctx, back.pk, back.m, back.sig),
              "PS vector " + std::to_string(i) + " does not round-trip");
      ++vectors;
    }
    if (o.pass) {
      o.detail = std::to_string(files) +
                 " artifacts byte-identical across runs, all re-serialize "
                 "exactly, " +
                 std::to_string(vectors) + " PS vectors round-trip";
    }
  }
  fs::remove_all(base);
  return o;
}

}  // namespace
}  // namespace pssas

int main() {
  using namespace pssas;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "correctness", correctness},
      {2, "pairing counts", pairing_counts},
      {3, "sizes", sizes},
      {4, "exponent oracle", exponent_oracle},
      {5, "reduction", reduction},
      {6, "game clauses", game_clauses},
      {7, "tamper", tamper},
      {8, "determinism", determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name
              << ": " << o.detail << std::endl;
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: " +
                                                            std::to_string(failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
