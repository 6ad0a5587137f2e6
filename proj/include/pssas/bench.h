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

#ifndef PSSAS_BENCH_H_
#define PSSAS_BENCH_H_

// Side-by-side measurement of the PS-based scheme and the BGLS baseline:
// pairing counts from the instrumented counter, element counts, encoded
// sizes and wall-clock times.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pssas/rng.h"
#include "pssas/sas.h"

namespace pssas {

enum class BenchScheme { kSas, kBgls };

std::string_view to_string(BenchScheme scheme);
std::optional<BenchScheme> bench_scheme_from_string(std::string_view s);

struct BenchReport {
  std::string scheme;
  std::size_t ell = 0;
  std::uint64_t pairing_count = 0;
  std::uint64_t expected_pairings = 0;
  std::size_t agg_sig_components = 0;
  std::size_t pk_components = 0;
  std::size_t agg_sig_bytes = 0;
  std::size_t pk_bytes = 0;
  double sign_ms = 0.0;  // all l signers
  double agg_ms = 0.0;
  double aver_ms = 0.0;
  bool accepted = false;

  bool matches_expected() const {
    return accepted && pairing_count == expected_pairings;
  }
};

// Runs each scheme end to end for every l. Expected pairings are 2 for the
// PS-based scheme and l + 1 for the baseline.
std::vector<BenchReport> run_comparison(
    const SasParams& params, std::span<const std::size_t> ell_values,
    std::span<const BenchScheme> schemes, Rng& rng);

// Literature rows that are not implemented: name, pk size, aggregate size,
// aggregate-verification pairings, pairing type.
struct ReferenceRow {
  std::string_view scheme;
  std::string_view pk_size;
  std::string_view agg_size;
  std::string_view aver_pairings;
  std::string_view pairing_type;
};
std::span<const ReferenceRow> reference_rows();

void write_bench_csv(std::ostream& out, std::span<const BenchReport> reports);
// Whitespace-separated columns for gnuplot, one row per l.
void write_gnuplot_data(std::ostream& out,
                        std::span<const BenchReport> reports);

}  // namespace pssas

#endif  // PSSAS_BENCH_H_
