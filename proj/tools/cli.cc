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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "pssas/bench.h"
#include "pssas/formats.h"
#include "pssas/harness.h"
#include "pssas/registry.h"
#include "pssas/sas.h"

namespace pssas::cli {
namespace {

namespace fs = std::filesystem;

// Operational failure: bad input file, missing flag combination, IO.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamsFlag {
  std::string path;

  // SAS_PARAMS wins over --params.
  SasParams load() const {
    std::string chosen = path;
    if (const char* env = std::getenv("SAS_PARAMS"); env && *env) {
      chosen = env;
    }
    if (chosen.empty()) {
      throw UsageError("no parameters: pass --params or set SAS_PARAMS");
    }
    return params_from_json(read_json_file(chosen));
  }
};

int emit_verdict(std::ostream& out, Json j, const Verdict& v) {
  j["accepted"] = v.accepted;
  j["reason"] = v.reason;
  out << dump_json(j);
  return v.accepted ? kExitOk : kExitReject;
}

int emit_reject(std::ostream& out, Json j, std::string_view reason) {
  return emit_verdict(out, std::move(j), Verdict::reject(reason));
}

std::int64_t unix_now() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

// ---- setup ------------------------------------------------------------------

struct SetupArgs {
  std::uint64_t periods = 0;
  int security = 128;
  std::string out;
};

int cmd_setup(const SetupArgs& a, std::ostream& out) {
  const SasParams params = sas_setup(a.security, a.periods);
  const Json j = params_to_json(params);
  write_text_file(a.out, dump_json(j));
  out << dump_json(Json{{"params", a.out},
                        {"max_period", params.max_period},
                        {"curve", j["curve"]}});
  return kExitOk;
}

// ---- keygen -----------------------------------------------------------------

struct KeygenArgs {
  ParamsFlag params;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string pub_out;
  bool reveal = false;
};

int cmd_keygen(const KeygenArgs& a, std::ostream& out) {
  const SasParams params = a.params.load();
  Rng rng = a.seed ? Rng::from_seed(*a.seed) : Rng::from_os();
  auto [pk, sk] = sas_keygen(params, rng);
  write_text_file(a.out, dump_json(key_file_to_json(KeyFile{pk, sk, {}})));
  if (!a.pub_out.empty()) {
    write_text_file(a.pub_out, dump_json(public_key_to_json(pk)));
  }
  Json j{{"key", a.out}, {"pk_hex", pk.to_hex()}};
  if (a.reveal) {
    j["x_hex"] = sk.x.to_hex();
    j["y_hex"] = sk.y.to_hex();
  }
  out << dump_json(j);
  return kExitOk;
}

// ---- register ---------------------------------------------------------------

struct RegisterArgs {
  ParamsFlag params;
  std::string registry;
  std::string key;
  std::string mode = "production";
  std::string escrow;
  std::optional<std::int64_t> at;
};

int cmd_register(const RegisterArgs& a, std::ostream& out) {
  const SasParams params = a.params.load();
  const auto mode = registry_mode_from_string(a.mode);
  if (!mode) throw UsageError("--mode must be harness or production");
  const KeyFile key = key_file_from_json(read_json_file(a.key));
  const std::string escrow =
      a.escrow.empty() ? a.registry + ".escrow" : a.escrow;

  KeyRegistry registry(*mode);
  load_registry(registry, a.registry, std::nullopt);
  Json j{{"pk_hex", key.pk.to_hex()}, {"mode", a.mode}};
  if (registry.is_certified(key.pk)) {
    j["already_registered"] = true;
    return emit_verdict(out, j, Verdict::accept());
  }

  bool ok = false;
  if (*mode == RegistryMode::kHarness) {
    ok = registry.register_key(params, key.pk, key.sk);
  } else {
    Rng rng = Rng::from_os();
    ok = registry.register_key_with_proof(
        params, key.pk, prove_possession(params, key.pk, key.sk, rng));
  }
  if (!ok) return emit_reject(out, j, "invalid-key-pair");

  append_registry_record(a.registry,
                         RegistryRecord{key.pk, a.at.value_or(unix_now()),
                                        *mode});
  if (*mode == RegistryMode::kHarness) {
    append_escrow_record(escrow, key.pk, key.sk);
    j["escrow"] = escrow;
  }
  j["already_registered"] = false;
  return emit_verdict(out, j, Verdict::accept());
}

// ---- sign -------------------------------------------------------------------

struct SignArgs {
  ParamsFlag params;
  std::string key;
  std::optional<std::uint64_t> period;
  std::optional<std::uint64_t> seconds_per_period;
  std::int64_t epoch_start = 0;
  std::optional<std::int64_t> now;
  std::optional<std::string> message;
  std::string message_file;
  std::string out;
};

std::uint64_t resolve_period(const SignArgs& a) {
  if (a.period) return *a.period;
  if (!a.seconds_per_period || *a.seconds_per_period == 0) {
    throw UsageError(
        "pass --period N or --period-from-unix-epoch <seconds-per-period>");
  }
  const std::int64_t now = a.now.value_or(unix_now());
  if (now < a.epoch_start) throw UsageError("clock is before --epoch-start");
  return static_cast<std::uint64_t>(now - a.epoch_start) /
             *a.seconds_per_period +
         1;
}

Bytes read_message(const SignArgs& a) {
  if (a.message) return to_bytes(*a.message);
  if (a.message_file.empty()) {
    throw UsageError("pass --message or --message-file");
  }
  std::ifstream in(a.message_file, std::ios::binary);
  if (!in) throw UsageError("cannot open " + a.message_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return to_bytes(ss.str());
}

int cmd_sign(const SignArgs& a, std::ostream& out) {
  const SasParams params = a.params.load();
  KeyFile key = key_file_from_json(read_json_file(a.key));
  if (!key_pair_is_valid(params, key.pk, key.sk)) {
    throw UsageError(a.key + ": secret key does not match public key");
  }
  const std::uint64_t t = resolve_period(a);
  const Bytes m = read_message(a);
  Json j{{"pk_hex", key.pk.to_hex()}, {"period", t}};

  EpochSignature sig;
  try {
    sig = sas_sign(params, key.sk, t, m, key.state);
  } catch (const SasError& e) {
    return emit_reject(out, j, e.reason());
  }
  // Persist the consumed period before releasing the signature.
  write_text_file(a.key, dump_json(key_file_to_json(key)));
  write_text_file(a.out, dump_json(bundle_to_json(
                             SignatureBundle{t, {SignedEntry{key.pk, m, sig}}})));
  j["bundle"] = a.out;
  j["sig_hex"] = sig.B.to_hex();
  return emit_verdict(out, j, Verdict::accept());
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  ParamsFlag params;
  std::string bundle;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const SasParams params = a.params.load();
  const SignatureBundle bundle = bundle_from_json(read_json_file(a.bundle));
  Json results = Json::array();
  Verdict overall = bundle.entries.empty() ? Verdict::reject(reason::kEmpty)
                                           : Verdict::accept();
  for (const SignedEntry& e : bundle.entries) {
    const Verdict v = sas_verify(params, e.pk, e.message, e.sig);
    results.push_back(Json{{"pk_hex", e.pk.to_hex()},
                           {"accepted", v.accepted},
                           {"reason", v.reason}});
    if (!v && overall) overall = v;
  }
  return emit_verdict(out,
                      Json{{"period", bundle.period}, {"entries", results}},
                      overall);
}

// ---- aggregate --------------------------------------------------------------

struct AggregateArgs {
  ParamsFlag params;
  std::vector<std::string> bundles;
  std::string out;
};

int cmd_aggregate(const AggregateArgs& a, std::ostream& out) {
  const SasParams params = a.params.load();
  std::vector<SignedEntry> entries;
  std::optional<std::uint64_t> period;
  bool mixed = false;
  for (const std::string& path : a.bundles) {
    SignatureBundle b = bundle_from_json(read_json_file(path));
    if (period && *period != b.period) mixed = true;
    period = b.period;
    std::move(b.entries.begin(), b.entries.end(), std::back_inserter(entries));
  }
  Json j{{"inputs", a.bundles.size()}, {"members", entries.size()}};
  if (mixed) return emit_reject(out, j, reason::kPeriodMismatch);

  AggregateSignature agg;
  try {
    agg = sas_aggregate(params, entries);
  } catch (const SasError& e) {
    return emit_reject(out, j, e.reason());
  }
  AggregateFile file{agg, {}};
  for (const SignedEntry& e : entries) {
    file.pairs.push_back(PublicEntry{e.pk, e.message});
  }
  write_text_file(a.out, dump_json(aggregate_file_to_json(file)));
  j["aggregate"] = a.out;
  j["period"] = agg.period;
  j["bprime_hex"] = agg.Bp.to_hex();
  return emit_verdict(out, j, Verdict::accept());
}

// ---- aver -------------------------------------------------------------------

struct AverArgs {
  ParamsFlag params;
  std::string aggregate;
  std::string registry;
};

int cmd_aver(const AverArgs& a, std::ostream& out) {
  const SasParams params = a.params.load();
  const AggregateFile file = aggregate_file_from_json(read_json_file(a.aggregate));
  Json j{{"period", file.agg.period}, {"members", file.pairs.size()}};
  pairing_counter_read_reset();
  Verdict v;
  if (a.registry.empty()) {
    v = sas_aggregate_verify(params, file.pairs, file.agg);
    j["certified_check"] = false;
  } else {
    if (!fs::exists(a.registry)) throw UsageError("no such registry " + a.registry);
    KeyRegistry registry(RegistryMode::kProduction);
    load_registry(registry, a.registry, std::nullopt);
    v = certified_aggregate_verify(registry, params, file.pairs, file.agg);
    j["certified_check"] = true;
  }
  j["pairings"] = pairing_counter_read_reset();
  return emit_verdict(out, j, v);
}

// ---- game -------------------------------------------------------------------

struct GameArgs {
  std::string game = "reduction";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t periods = 1000;
  std::size_t sign_queries = 10;
  std::size_t skips = 0;
  std::size_t cosigners = 2;
};

int cmd_game(const GameArgs& a, std::ostream& out) {
  const auto kind = game_kind_from_string(a.game);
  if (!kind) throw UsageError("unknown game '" + a.game + "'");
  if (a.periods == 0) throw UsageError("--periods must be at least 1");
  HarnessConfig config;
  config.game = *kind;
  config.trials = a.trials;
  config.seed = a.seed;
  config.max_period = a.periods;
  config.forger.sign_queries = a.sign_queries;
  config.forger.skips = a.skips;
  config.forger.cosigners = a.cosigners;
  out << dump_json(game_report_to_json(run_game_trials(config)));
  return kExitOk;
}

// ---- bench ------------------------------------------------------------------

struct BenchArgs {
  ParamsFlag params;
  std::vector<std::string> schemes{"sas", "bgls"};
  std::vector<std::size_t> ells{1, 2, 5, 10, 50, 100};
  std::string out;
  std::string gnuplot;
  std::uint64_t seed = 1;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const bool have_params =
      !a.params.path.empty() || (std::getenv("SAS_PARAMS") &&
                                 *std::getenv("SAS_PARAMS"));
  const SasParams params = have_params ? a.params.load() : sas_setup(128, 1000);
  std::vector<BenchScheme> schemes;
  for (const std::string& s : a.schemes) {
    const auto scheme = bench_scheme_from_string(s);
    if (!scheme) throw UsageError("unknown scheme '" + s + "'");
    schemes.push_back(*scheme);
  }
  if (std::any_of(a.ells.begin(), a.ells.end(),
                  [](std::size_t l) { return l == 0; })) {
    throw UsageError("--ell values must be positive");
  }
  Rng rng = Rng::from_seed(a.seed);
  const std::vector<BenchReport> reports =
      run_comparison(params, a.ells, schemes, rng);

  std::ostringstream csv;
  write_bench_csv(csv, reports);
  write_text_file(a.out, csv.str());
  if (!a.gnuplot.empty()) {
    std::ostringstream dat;
    write_gnuplot_data(dat, reports);
    write_text_file(a.gnuplot, dat.str());
  }
  Json rows = Json::array();
  bool all_match = true;
  for (const BenchReport& r : reports) {
    rows.push_back(Json{{"scheme", r.scheme},
                        {"ell", r.ell},
                        {"pairing_count", r.pairing_count},
                        {"expected_pairings", r.expected_pairings},
                        {"accepted", r.accepted}});
    all_match = all_match && r.matches_expected();
  }
  out << dump_json(Json{{"report", a.out},
                        {"rows", rows},
                        {"all_match_expected", all_match}});
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Synchronized aggregate signatures over BLS12-381", "pssas"};
  app.require_subcommand(1);

  SetupArgs setup;
  auto* s = app.add_subcommand("setup", "write public parameters");
  s->add_option("--periods", setup.periods, "period bound T")->required();
  s->add_option("--security", setup.security, "security level in bits");
  s->add_option("--out", setup.out, "parameter file")->required();

  KeygenArgs keygen;
  auto* k = app.add_subcommand("keygen", "generate a signing key");
  k->add_option("--params", keygen.params.path, "parameter file");
  k->add_option("--out", keygen.out, "key file (contains the secret key)")
      ->required();
  k->add_option("--pub-out", keygen.pub_out, "public key file");
  k->add_option("--seed", keygen.seed, "deterministic seed (testing only)");
  k->add_flag("--reveal", keygen.reveal, "print the secret key");

  RegisterArgs reg;
  auto* r = app.add_subcommand("register", "certify a key in a registry");
  r->add_option("--params", reg.params.path, "parameter file");
  r->add_option("--registry", reg.registry, "registry JSON-lines file")
      ->required();
  r->add_option("--key", reg.key, "key file")->required();
  r->add_option("--mode", reg.mode, "harness or production");
  r->add_option("--escrow", reg.escrow, "escrow file (harness mode)");
  r->add_option("--at", reg.at, "registration timestamp (unix seconds)");

  SignArgs sign;
  auto* g = app.add_subcommand("sign", "sign a message for one period");
  g->add_option("--params", sign.params.path, "parameter file");
  g->add_option("--key", sign.key, "key file")->required();
  auto* period_opt = g->add_option("--period", sign.period, "period t");
  auto* epoch_opt = g->add_option("--period-from-unix-epoch",
                                  sign.seconds_per_period,
                                  "derive t from the clock");
  period_opt->excludes(epoch_opt);
  g->add_option("--epoch-start", sign.epoch_start,
                "unix time at which period 1 begins");
  g->add_option("--now", sign.now, "override the clock (unix seconds)");
  auto* msg_opt = g->add_option("--message", sign.message, "message text");
  g->add_option("--message-file", sign.message_file, "message file")
      ->excludes(msg_opt);
  g->add_option("--out", sign.out, "signature bundle file")->required();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "verify every signature in a bundle");
  v->add_option("--params", verify.params.path, "parameter file");
  v->add_option("--bundle", verify.bundle, "signature bundle")->required();

  AggregateArgs aggregate;
  auto* a = app.add_subcommand("aggregate", "aggregate same-period bundles");
  a->add_option("--params", aggregate.params.path, "parameter file");
  a->add_option("--bundle", aggregate.bundles, "signature bundle (repeatable)")
      ->required();
  a->add_option("--out", aggregate.out, "aggregate file")->required();

  AverArgs aver;
  auto* av = app.add_subcommand("aver", "verify an aggregate signature");
  av->add_option("--params", aver.params.path, "parameter file");
  av->add_option("--aggregate", aver.aggregate, "aggregate file")->required();
  av->add_option("--registry", aver.registry,
                 "require every key to be certified in this registry");

  GameArgs game;
  auto* gm = app.add_subcommand("game", "run security-game trials");
  gm->add_option("--game", game.game,
                 "reduction|eufcma|eufcma-replay|eufcma-uncertified|gps|ps");
  gm->add_option("--trials", game.trials, "number of trials");
  gm->add_option("--seed", game.seed, "master seed");
  gm->add_option("--periods", game.periods, "period bound T");
  gm->add_option("--sign-queries", game.sign_queries, "forger sign queries");
  gm->add_option("--skips", game.skips, "forger skipped periods");
  gm->add_option("--cosigners", game.cosigners, "certified co-signers");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "pairing-count and timing comparison");
  b->add_option("--params", bench.params.path, "parameter file");
  b->add_option("--schemes", bench.schemes, "sas,bgls")->delimiter(',');
  b->add_option("--ell", bench.ells, "aggregate sizes")->delimiter(',');
  b->add_option("--out", bench.out, "CSV report")->required();
  b->add_option("--gnuplot", bench.gnuplot, "gnuplot data file");
  b->add_option("--seed", bench.seed, "seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (s->parsed()) return cmd_setup(setup, out);
    if (k->parsed()) return cmd_keygen(keygen, out);
    if (r->parsed()) return cmd_register(reg, out);
    if (g->parsed()) return cmd_sign(sign, out);
    if (v->parsed()) return cmd_verify(verify, out);
    if (a->parsed()) return cmd_aggregate(aggregate, out);
    if (av->parsed()) return cmd_aver(aver, out);
    if (gm->parsed()) return cmd_game(game, out);
    if (b->parsed()) return cmd_bench(bench, out);
  } catch (const SasError& e) {
    err << "error: " << e.what() << " (" << e.reason() << ")\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace pssas::cli
