# Copyright 2026 The pssas Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import pssas


@pytest.fixture(scope="module")
def params():
    return pssas.setup(max_period=100)


def test_sign_verify_roundtrip(params):
    pk, sk = pssas.keygen(params, seed=7)
    state = pssas.SignerState()
    sig = pssas.sign(params, sk, 3, b"hello", state)
    assert sig.period == 3
    assert state.last_signed_period == 3
    assert pssas.verify(params, pk, b"hello", sig) == (True, "ok")
    assert pssas.verify(params, pk, b"other", sig) == (False, "pairing-mismatch")


def test_second_signature_in_same_period_is_refused(params):
    _, sk = pssas.keygen(params, seed=8)
    state = pssas.SignerState()
    pssas.sign(params, sk, 5, b"a", state)
    with pytest.raises(ValueError):
        pssas.sign(params, sk, 5, b"b", state)


def test_aggregate_uses_two_pairings(params):
    entries = []
    for i in range(5):
        pk, sk = pssas.keygen(params, seed=100 + i)
        msg = b"member-%d" % i
        entries.append((pk, msg, pssas.sign(params, sk, 9, msg, pssas.SignerState())))
    agg = pssas.aggregate(params, entries)
    pssas.pairing_counter_read_reset()
    ok = pssas.aggregate_verify(params, [(pk, m) for pk, m, _ in entries], agg)
    assert ok == (True, "ok")
    assert pssas.pairing_counter_read_reset() == 2


def test_encodings_roundtrip(params):
    pk, sk = pssas.keygen(params, seed=1)
    sig = pssas.sign(params, sk, 1, b"x", pssas.SignerState())
    assert len(pk.encode()) == 192
    assert len(sig.encode()) == 56
    assert pssas.PublicKey.decode(pk.encode()) == pk
    assert pssas.Signature.decode(sig.encode()) == sig
    with pytest.raises(ValueError):
        pssas.Signature.decode(b"\x00" * 10)


def test_params_json_roundtrip(params):
    text = params.to_json()
    assert pssas.Params.from_json(text).to_json() == text


def test_seeded_keygen_is_deterministic(params):
    a, _ = pssas.keygen(params, seed=42)
    b, _ = pssas.keygen(params, seed=42)
    assert a == b
