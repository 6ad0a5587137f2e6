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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pssas/formats.h"
#include "pssas/ps_sig.h"
#include "pssas/registry.h"
#include "pssas/sas.h"

namespace py = pybind11;

namespace pssas {
namespace {

Bytes as_bytes(const py::bytes& b) { return to_bytes(std::string(b)); }

py::bytes as_py(ByteView v) {
  return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

template <typename T>
T decode_or_throw(const py::bytes& b, const char* what) {
  auto v = T::decode(as_bytes(b));
  if (!v) throw py::value_error(std::string("invalid ") + what + " encoding");
  return *v;
}

Rng rng_for(std::optional<std::uint64_t> seed) {
  return seed ? Rng::from_seed(*seed) : Rng::from_os();
}

std::vector<SignedEntry> signed_entries(
    const std::vector<std::tuple<SasPublicKey, py::bytes, EpochSignature>>&
        in) {
  std::vector<SignedEntry> out;
  for (const auto& [pk, m, sig] : in) out.push_back({pk, as_bytes(m), sig});
  return out;
}

std::vector<PublicEntry> public_entries(
    const std::vector<std::tuple<SasPublicKey, py::bytes>>& in) {
  std::vector<PublicEntry> out;
  for (const auto& [pk, m] : in) out.push_back({pk, as_bytes(m)});
  return out;
}

py::tuple verdict(const Verdict& v) { return py::make_tuple(v.accepted, v.reason); }

}  // namespace
}  // namespace pssas

PYBIND11_MODULE(pssas, m) {
  using namespace pssas;
  m.doc() = "Synchronized aggregate signatures over BLS12-381";

  py::register_exception<SasError>(m, "SasError", PyExc_ValueError);

  py::class_<SasParams>(m, "Params")
      .def_readonly("max_period", &SasParams::max_period)
      .def("to_json", [](const SasParams& p) { return dump_json(params_to_json(p)); })
      .def_static("from_json", [](const std::string& s) {
        return params_from_json(Json::parse(s));
      });

  py::class_<SasPublicKey>(m, "PublicKey")
      .def("encode", [](const SasPublicKey& pk) { return as_py(pk.encode()); })
      .def_static("decode", [](const py::bytes& b) {
        return decode_or_throw<SasPublicKey>(b, "public key");
      })
      .def("hex", &SasPublicKey::to_hex)
      .def("__eq__", [](const SasPublicKey& a, const SasPublicKey& b) { return a == b; });

  py::class_<SasSecretKey>(m, "SecretKey");

  py::class_<EpochSignature>(m, "Signature")
      .def_readonly("period", &EpochSignature::period)
      .def("encode", [](const EpochSignature& s) { return as_py(s.encode()); })
      .def_static("decode", [](const py::bytes& b) {
        return decode_or_throw<EpochSignature>(b, "signature");
      })
      .def("__eq__", [](const EpochSignature& a, const EpochSignature& b) { return a == b; });

  py::class_<AggregateSignature>(m, "AggregateSignature")
      .def_readonly("period", &AggregateSignature::period)
      .def("encode", [](const AggregateSignature& s) { return as_py(s.encode()); })
      .def_static("decode", [](const py::bytes& b) {
        return decode_or_throw<AggregateSignature>(b, "aggregate");
      })
      .def("__eq__", [](const AggregateSignature& a, const AggregateSignature& b) {
        return a == b;
      });

  py::class_<SignerState>(m, "SignerState")
      .def(py::init<>())
      .def_readonly("last_signed_period", &SignerState::last_signed_period);

  m.def(
      "setup",
      [](std::uint64_t max_period, int security_level) {
        return sas_setup(security_level, max_period);
      },
      py::arg("max_period"), py::arg("security_level") = 128);
  m.def(
      "keygen",
      [](const SasParams& params, std::optional<std::uint64_t> seed) {
        Rng rng = rng_for(seed);
        return sas_keygen(params, rng);
      },
      py::arg("params"), py::arg("seed") = py::none());
  m.def(
      "sign",
      [](const SasParams& params, const SasSecretKey& sk, std::uint64_t t,
         const py::bytes& msg, SignerState& state) {
        return sas_sign(params, sk, t, as_bytes(msg), state);
      },
      py::arg("params"), py::arg("sk"), py::arg("period"), py::arg("message"),
      py::arg("state"));
  m.def(
      "verify",
      [](const SasParams& params, const SasPublicKey& pk, const py::bytes& msg,
         const EpochSignature& sig) {
        return verdict(sas_verify(params, pk, as_bytes(msg), sig));
      },
      "Returns (accepted, reason).");
  m.def(
      "aggregate",
      [](const SasParams& params,
         const std::vector<std::tuple<SasPublicKey, py::bytes, EpochSignature>>&
             entries) {
        return sas_aggregate(params, signed_entries(entries));
      },
      "Entries are (pk, message, signature) triples.");
  m.def(
      "aggregate_verify",
      [](const SasParams& params,
         const std::vector<std::tuple<SasPublicKey, py::bytes>>& pairs,
         const AggregateSignature& agg) {
        return verdict(sas_aggregate_verify(params, public_entries(pairs), agg));
      },
      "Returns (accepted, reason).");
  m.def("key_pair_is_valid", &key_pair_is_valid);
  m.def("pairing_counter_read_reset", &pairing_counter_read_reset);
}
