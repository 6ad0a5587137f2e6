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

#ifndef PSSAS_FORMATS_H_
#define PSSAS_FORMATS_H_

// JSON file formats. Group elements are hex of their compressed encodings,
// scalars 32-byte big-endian hex, messages base64.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pssas/harness.h"
#include "pssas/ps_sig.h"
#include "pssas/registry.h"
#include "pssas/sas.h"

namespace pssas {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

class FormatError : public DecodeError {
 public:
  using DecodeError::DecodeError;
};

// Pretty-printed with a trailing newline; key order is deterministic.
std::string dump_json(const Json& j);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

G1Element g1_from_hex(const std::string& hex);
G2Element g2_from_hex(const std::string& hex);
Scalar scalar_from_hex(const std::string& hex);
SasPublicKey public_key_from_hex(const std::string& hex);

Json params_to_json(const SasParams& params);
SasParams params_from_json(const Json& j);

struct KeyFile {
  SasPublicKey pk;
  SasSecretKey sk;
  SignerState state;
};

Json key_file_to_json(const KeyFile& key);
KeyFile key_file_from_json(const Json& j);
Json public_key_to_json(const SasPublicKey& pk);

// {version, period, entries: [{pk_hex, message_b64, sig_hex}]}
struct SignatureBundle {
  std::uint64_t period = 0;
  std::vector<SignedEntry> entries;
};

Json bundle_to_json(const SignatureBundle& bundle);
SignatureBundle bundle_from_json(const Json& j);

// {version, period, bprime_hex, pairs: [{pk_hex, message_b64}]}
struct AggregateFile {
  AggregateSignature agg;
  std::vector<PublicEntry> pairs;
};

Json aggregate_file_to_json(const AggregateFile& file);
AggregateFile aggregate_file_from_json(const Json& j);

// One JSON line {x, y, X, Y, m, A, B, valid}; G~ is the standard generator
// unless a "g2" field is present.
struct PsTestVector {
  PsPublicKey pk;
  PsSecretKey sk;
  Scalar m;
  PsSignature sig;
  bool valid = false;
};

Json ps_vector_to_json(const PsTestVector& v);
PsTestVector ps_vector_from_json(const Json& j);

std::vector<Json> read_json_lines(const std::filesystem::path& path);

// Registry persistence: append-only JSON lines {pk_hex, registered_at, mode}.
struct RegistryRecord {
  SasPublicKey pk;
  std::int64_t registered_at = 0;
  RegistryMode mode = RegistryMode::kProduction;
};

void append_registry_record(const std::filesystem::path& path,
                            const RegistryRecord& record);
std::vector<RegistryRecord> read_registry_records(
    const std::filesystem::path& path);
// Escrow lines {pk_hex, x_hex, y_hex}, preceded by a warning banner line.
void append_escrow_record(const std::filesystem::path& path,
                          const SasPublicKey& pk, const SasSecretKey& sk);
// Restores certified keys (and escrowed secrets, when a path is given).
void load_registry(KeyRegistry& registry,
                   const std::filesystem::path& registry_path,
                   const std::optional<std::filesystem::path>& escrow_path);

Json game_report_to_json(const GameReport& report);

}  // namespace pssas

#endif  // PSSAS_FORMATS_H_
