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

#include "pssas/formats.h"

#include <cmath>
#include <fstream>
#include <sstream>

namespace pssas {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw FormatError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

std::string string_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) {
    throw FormatError(std::string("field '") + name + "' must be a string");
  }
  return v.get<std::string>();
}

std::uint64_t u64_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw FormatError(std::string("field '") + name +
                      "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

void check_version(const Json& j) {
  if (u64_field(j, "version") != kFormatVersion) {
    throw FormatError("unsupported format version");
  }
}

Json number_or_null(double v) {
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

G1Element g1_from_hex(const std::string& hex) {
  auto p = G1Element::decode(from_hex(hex));
  if (!p) throw FormatError("invalid G1 element encoding");
  return *p;
}

G2Element g2_from_hex(const std::string& hex) {
  auto p = G2Element::decode(from_hex(hex));
  if (!p) throw FormatError("invalid G2 element encoding");
  return *p;
}

Scalar scalar_from_hex(const std::string& hex) {
  auto s = Scalar::from_bytes(from_hex(hex));
  if (!s) throw FormatError("invalid scalar encoding");
  return *s;
}

SasPublicKey public_key_from_hex(const std::string& hex) {
  auto pk = SasPublicKey::decode(from_hex(hex));
  if (!pk) throw FormatError("invalid public key encoding");
  return *pk;
}

Json params_to_json(const SasParams& params) {
  return Json{{"version", kFormatVersion},
              {"curve", std::string(params.ctx.curve_name())},
              {"security_level", params.ctx.security_level()},
              {"max_period", params.max_period},
              {"g2_hex", params.g2.to_hex()},
              {"h1_tag", params.h1_tag},
              {"h2_tag", params.h2_tag}};
}

SasParams params_from_json(const Json& j) {
  check_version(j);
  const BilinearGroupContext ctx =
      generate_context(static_cast<int>(u64_field(j, "security_level")));
  if (string_field(j, "curve") != ctx.curve_name()) {
    throw FormatError("unsupported curve");
  }
  const std::uint64_t max_period = u64_field(j, "max_period");
  if (max_period == 0) throw FormatError("max_period must be at least 1");
  const G2Element g2 = g2_from_hex(string_field(j, "g2_hex"));
  if (g2.is_identity()) throw FormatError("g2 must not be the identity");
  return SasParams{ctx, g2, max_period, string_field(j, "h1_tag"),
                   string_field(j, "h2_tag")};
}

Json key_file_to_json(const KeyFile& key) {
  Json j{{"version", kFormatVersion},
         {"pk_hex", key.pk.to_hex()},
         {"x_hex", key.sk.x.to_hex()},
         {"y_hex", key.sk.y.to_hex()}};
  j["last_signed_period"] = key.state.last_signed_period
                                ? Json(*key.state.last_signed_period)
                                : Json(nullptr);
  return j;
}

KeyFile key_file_from_json(const Json& j) {
  check_version(j);
  KeyFile key{public_key_from_hex(string_field(j, "pk_hex")),
              SasSecretKey{scalar_from_hex(string_field(j, "x_hex")),
                           scalar_from_hex(string_field(j, "y_hex"))},
              SignerState{}};
  const Json& last = field(j, "last_signed_period");
  if (!last.is_null()) {
    key.state.last_signed_period = u64_field(j, "last_signed_period");
  }
  return key;
}

Json public_key_to_json(const SasPublicKey& pk) {
  return Json{{"version", kFormatVersion}, {"pk_hex", pk.to_hex()}};
}

Json bundle_to_json(const SignatureBundle& bundle) {
  Json entries = Json::array();
  for (const SignedEntry& e : bundle.entries) {
    if (e.sig.period != bundle.period) {
      throw FormatError("bundle entry period differs from bundle period");
    }
    entries.push_back(Json{{"pk_hex", e.pk.to_hex()},
                           {"message_b64", to_base64(e.message)},
                           {"sig_hex", e.sig.B.to_hex()}});
  }
  return Json{{"version", kFormatVersion},
              {"period", bundle.period},
              {"entries", std::move(entries)}};
}

SignatureBundle bundle_from_json(const Json& j) {
  check_version(j);
  SignatureBundle bundle;
  bundle.period = u64_field(j, "period");
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw FormatError("'entries' must be an array");
  for (const Json& e : entries) {
    bundle.entries.push_back(SignedEntry{
        public_key_from_hex(string_field(e, "pk_hex")),
        from_base64(string_field(e, "message_b64")),
        EpochSignature{g1_from_hex(string_field(e, "sig_hex")),
                       bundle.period}});
  }
  return bundle;
}

Json aggregate_file_to_json(const AggregateFile& file) {
  Json pairs = Json::array();
  for (const PublicEntry& e : file.pairs) {
    pairs.push_back(Json{{"pk_hex", e.pk.to_hex()},
                         {"message_b64", to_base64(e.message)}});
  }
  return Json{{"version", kFormatVersion},
              {"period", file.agg.period},
              {"bprime_hex", file.agg.Bp.to_hex()},
              {"pairs", std::move(pairs)}};
}

AggregateFile aggregate_file_from_json(const Json& j) {
  check_version(j);
  AggregateFile file;
  file.agg = AggregateSignature{g1_from_hex(string_field(j, "bprime_hex")),
                                u64_field(j, "period")};
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array()) throw FormatError("'pairs' must be an array");
  for (const Json& e : pairs) {
    file.pairs.push_back(
        PublicEntry{public_key_from_hex(string_field(e, "pk_hex")),
                    from_base64(string_field(e, "message_b64"))});
  }
  return file;
}

Json ps_vector_to_json(const PsTestVector& v) {
  Json j{{"x", v.sk.x.to_hex()}, {"y", v.sk.y.to_hex()},
         {"X", v.pk.X.to_hex()}, {"Y", v.pk.Y.to_hex()},
         {"m", v.m.to_hex()},    {"A", v.sig.A.to_hex()},
         {"B", v.sig.B.to_hex()}, {"valid", v.valid}};
  if (v.pk.g2 != G2Element::generator()) j["g2"] = v.pk.g2.to_hex();
  return j;
}

PsTestVector ps_vector_from_json(const Json& j) {
  PsTestVector v;
  v.pk.g2 = j.contains("g2") ? g2_from_hex(string_field(j, "g2"))
                             : G2Element::generator();
  v.pk.X = g2_from_hex(string_field(j, "X"));
  v.pk.Y = g2_from_hex(string_field(j, "Y"));
  v.sk.x = scalar_from_hex(string_field(j, "x"));
  v.sk.y = scalar_from_hex(string_field(j, "y"));
  v.m = scalar_from_hex(string_field(j, "m"));
  v.sig.A = g1_from_hex(string_field(j, "A"));
  v.sig.B = g1_from_hex(string_field(j, "B"));
  const Json& valid = field(j, "valid");
  if (!valid.is_boolean()) throw FormatError("'valid' must be a boolean");
  v.valid = valid.get<bool>();
  return v;
}

std::vector<Json> read_json_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<Json> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const Json::parse_error& e) {
      throw FormatError(path.string() + ": " + e.what());
    }
  }
  return out;
}

void append_registry_record(const std::filesystem::path& path,
                            const RegistryRecord& record) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to " + path.string());
  out << Json{{"pk_hex", record.pk.to_hex()},
              {"registered_at", record.registered_at},
              {"mode", std::string(to_string(record.mode))}}
             .dump()
      << '\n';
}

std::vector<RegistryRecord> read_registry_records(
    const std::filesystem::path& path) {
  std::vector<RegistryRecord> out;
  if (!std::filesystem::exists(path)) return out;
  for (const Json& j : read_json_lines(path)) {
    const auto mode = registry_mode_from_string(string_field(j, "mode"));
    if (!mode) throw FormatError("unknown registry mode");
    const Json& at = field(j, "registered_at");
    if (!at.is_number_integer()) {
      throw FormatError("'registered_at' must be an integer");
    }
    out.push_back(RegistryRecord{public_key_from_hex(string_field(j, "pk_hex")),
                                 at.get<std::int64_t>(), *mode});
  }
  return out;
}

void append_escrow_record(const std::filesystem::path& path,
                          const SasPublicKey& pk, const SasSecretKey& sk) {
  const bool fresh = !std::filesystem::exists(path) ||
                     std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to " + path.string());
  if (fresh) {
    out << Json{{"warning",
                 "SECRET KEY ESCROW for the security-game harness. Contains "
                 "signing keys; never use in production."}}
               .dump()
        << '\n';
  }
  out << Json{{"pk_hex", pk.to_hex()},
              {"x_hex", sk.x.to_hex()},
              {"y_hex", sk.y.to_hex()}}
             .dump()
      << '\n';
}

void load_registry(KeyRegistry& registry,
                   const std::filesystem::path& registry_path,
                   const std::optional<std::filesystem::path>& escrow_path) {
  for (const RegistryRecord& r : read_registry_records(registry_path)) {
    registry.restore_certified(r.pk);
  }
  if (!escrow_path || !std::filesystem::exists(*escrow_path)) return;
  for (const Json& j : read_json_lines(*escrow_path)) {
    if (j.contains("warning")) continue;
    registry.restore_escrow(public_key_from_hex(string_field(j, "pk_hex")),
                            SasSecretKey{scalar_from_hex(string_field(j, "x_hex")),
                                         scalar_from_hex(string_field(j, "y_hex"))});
  }
}

Json game_report_to_json(const GameReport& report) {
  const AdvantageReport& l = report.loss_terms;
  Json aborts = Json::object();
  for (const auto& [reason, count] : report.aborts_by_reason) {
    aborts[reason] = count;
  }
  return Json{
      {"game", report.game},
      {"trials", report.trials},
      {"wins", report.wins},
      {"aborts_by_reason", std::move(aborts)},
      {"loss_terms",
       Json{{"q_s", l.sign_queries},
            {"q_h2", l.h2_queries},
            {"log2_p", l.log2_modulus},
            {"log2_sign_loss", number_or_null(l.log2_sign_loss)},
            {"log2_h2_loss", number_or_null(l.log2_h2_loss)},
            {"log2_h2_birthday_loss", number_or_null(l.log2_h2_birthday_loss)},
            {"sign_loss", l.sign_loss},
            {"h2_loss", l.h2_loss},
            {"h2_birthday_loss", l.h2_birthday_loss},
            {"negligible", l.negligible},
            {"measured_success_rate", l.measured_success_rate},
            {"predicted_lower_bound", l.predicted_lower_bound}}}};
}

}  // namespace pssas
