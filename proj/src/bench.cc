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

#include "pssas/bench.h"

#include <array>
#include <chrono>
#include <iomanip>
#include <map>
#include <optional>

#include "pssas/bgls.h"

namespace pssas {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

Bytes bench_message(std::size_t i) {
  return to_bytes("bench message " + std::to_string(i));
}

BenchReport run_sas(const SasParams& params, std::size_t ell, Rng& rng) {
  BenchReport r;
  r.scheme = std::string(to_string(BenchScheme::kSas));
  r.ell = ell;
  r.expected_pairings = 2;
  r.pk_components = SasPublicKey::kComponents;
  r.agg_sig_components = AggregateSignature::kComponents;
  r.pk_bytes = kPublicKeyBytes;
  r.agg_sig_bytes = kSignatureBytes;

  const std::uint64_t t = 1;
  std::vector<std::pair<SasPublicKey, SasSecretKey>> keys;
  for (std::size_t i = 0; i < ell; ++i) keys.push_back(sas_keygen(params, rng));

  std::vector<SignedEntry> entries;
  auto start = Clock::now();
  for (std::size_t i = 0; i < ell; ++i) {
    SignerState state;
    Bytes m = bench_message(i);
    EpochSignature sig = sas_sign(params, keys[i].second, t, m, state);
    entries.push_back({keys[i].first, std::move(m), sig});
  }
  r.sign_ms = elapsed_ms(start);

  start = Clock::now();
  const AggregateSignature agg = sas_aggregate(params, entries);
  r.agg_ms = elapsed_ms(start);

  std::vector<PublicEntry> pairs;
  for (const SignedEntry& e : entries) pairs.push_back({e.pk, e.message});
  pairing_counter_read_reset();
  start = Clock::now();
  r.accepted = sas_aggregate_verify(params, pairs, agg).accepted;
  r.aver_ms = elapsed_ms(start);
  r.pairing_count = pairing_counter_read_reset();
  return r;
}

BenchReport run_bgls(const SasParams& params, std::size_t ell, Rng& rng) {
  BenchReport r;
  r.scheme = std::string(to_string(BenchScheme::kBgls));
  r.ell = ell;
  r.expected_pairings = ell + 1;
  r.pk_components = BglsPublicKey::kComponents;
  r.agg_sig_components = BglsAggregate::kComponents;
  r.pk_bytes = kG2Bytes;
  r.agg_sig_bytes = kSignatureBytes;

  const std::uint64_t t = 1;
  BglsCertifiedKeys certified;
  std::vector<std::pair<BglsPublicKey, BglsSecretKey>> keys;
  for (std::size_t i = 0; i < ell; ++i) {
    keys.push_back(bgls_keygen(params, rng));
    certified.register_key(params, keys.back().first, keys.back().second);
  }

  std::vector<BglsSignedEntry> entries;
  auto start = Clock::now();
  for (std::size_t i = 0; i < ell; ++i) {
    Bytes m = bench_message(i);
    BglsSignature sig =
        bgls_sign(params, keys[i].second, keys[i].first, t, m);
    entries.push_back({keys[i].first, std::move(m), sig});
  }
  r.sign_ms = elapsed_ms(start);

  start = Clock::now();
  const BglsAggregate agg = bgls_aggregate(params, entries);
  r.agg_ms = elapsed_ms(start);

  std::vector<BglsPublicEntry> pairs;
  for (const BglsSignedEntry& e : entries) pairs.push_back({e.pk, e.message});
  pairing_counter_read_reset();
  start = Clock::now();
  r.accepted =
      bgls_certified_aggregate_verify(certified, params, pairs, agg).accepted;
  r.aver_ms = elapsed_ms(start);
  r.pairing_count = pairing_counter_read_reset();
  return r;
}

constexpr std::array<ReferenceRow, 3> kReferenceRows = {{
    {"SAS_AGH1", "1", "3", "k+3", "Type-3"},
    {"SAS_AGH2", "1", "3", "4", "Type-3"},
    {"SAS_LLY", "1", "2", "3", "Type-1"},
}};

}  // namespace

std::string_view to_string(BenchScheme scheme) {
  return scheme == BenchScheme::kSas ? "sas" : "bgls";
}

std::optional<BenchScheme> bench_scheme_from_string(std::string_view s) {
  if (s == "sas") return BenchScheme::kSas;
  if (s == "bgls") return BenchScheme::kBgls;
  return std::nullopt;
}

std::vector<BenchReport> run_comparison(
    const SasParams& params, std::span<const std::size_t> ell_values,
    std::span<const BenchScheme> schemes, Rng& rng) {
  std::vector<BenchReport> reports;
  for (std::size_t ell : ell_values) {
    if (ell == 0) continue;
    for (BenchScheme scheme : schemes) {
      reports.push_back(scheme == BenchScheme::kSas
                            ? run_sas(params, ell, rng)
                            : run_bgls(params, ell, rng));
    }
  }
  return reports;
}

std::span<const ReferenceRow> reference_rows() { return kReferenceRows; }

void write_bench_csv(std::ostream& out, std::span<const BenchReport> reports) {
  out << "# curve: BLS12-381 (type-3); the bgls baseline runs on the same "
         "type-3 curve rather than a type-2 setting\n";
  out << "# reference (not measured): scheme,pk_size,agg_size,"
         "aver_pairings,pairing_type\n";
  for (const ReferenceRow& row : reference_rows()) {
    out << "# " << row.scheme << ',' << row.pk_size << ',' << row.agg_size
        << ',' << row.aver_pairings << ',' << row.pairing_type << '\n';
  }
  out << "scheme,ell,pairing_count,expected_pairings,agg_sig_components,"
         "pk_components,agg_sig_bytes,pk_bytes,sign_ms,agg_ms,aver_ms,"
         "accepted\n";
  out << std::fixed << std::setprecision(3);
  for (const BenchReport& r : reports) {
    out << r.scheme << ',' << r.ell << ',' << r.pairing_count << ','
        << r.expected_pairings << ',' << r.agg_sig_components << ','
        << r.pk_components << ',' << r.agg_sig_bytes << ',' << r.pk_bytes
        << ',' << r.sign_ms << ',' << r.agg_ms << ',' << r.aver_ms << ','
        << (r.accepted ? 1 : 0) << '\n';
  }
}

void write_gnuplot_data(std::ostream& out,
                        std::span<const BenchReport> reports) {
  struct Row {
    std::optional<BenchReport> sas;
    std::optional<BenchReport> bgls;
  };
  std::map<std::size_t, Row> rows;
  for (const BenchReport& r : reports) {
    if (r.scheme == "sas") {
      rows[r.ell].sas = r;
    } else {
      rows[r.ell].bgls = r;
    }
  }
  out << "# ell sas_pairings bgls_pairings sas_aver_ms bgls_aver_ms\n";
  out << std::fixed << std::setprecision(3);
  for (const auto& [ell, row] : rows) {
    out << ell << ' ' << (row.sas ? std::to_string(row.sas->pairing_count) : "?")
        << ' '
        << (row.bgls ? std::to_string(row.bgls->pairing_count) : "?") << ' ';
    if (row.sas) {
      out << row.sas->aver_ms;
    } else {
      out << '?';
    }
    out << ' ';
    if (row.bgls) {
      out << row.bgls->aver_ms;
    } else {
      out << '?';
    }
    out << '\n';
  }
}

}  // namespace pssas
