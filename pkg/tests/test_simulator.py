import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import truth_table
from qgimli.builder import build_gimli_circuit, build_inverse
from qgimli.circuit import CCNOT, CNOT, Circuit, Gate, X
from qgimli.gimli_ref import GimliState, Params, gimli_permute
from qgimli.simulator import (
    EquivalenceReport, UnsupportedGateError, lanes_to_words, pack, random_words, run, unpack,
    verify_equivalence, words_to_lanes,
)


def test_run_basics():
    assert run(Circuit(3), [1, 0, 1]) == [1, 0, 1]
    assert run(Circuit(3, [CCNOT(0, 1, 2)]), [1, 1, 0]) == [1, 1, 1]
    assert run(Circuit(3, [CCNOT(0, 1, 2)]), [1, 0, 0]) == [1, 0, 0]
    assert run(Circuit(2, [Gate("SWAP", (0, 1))]), [1, 0]) == [0, 1]
    with pytest.raises(UnsupportedGateError):
        run(Circuit(1, [Gate("H", (0,))]), [0])
    with pytest.raises(ValueError):
        run(Circuit(2), [0])


def test_run_applies_output_perm():
    c = Circuit(3, [X(0)], output_perm=[2, 0, 1])
    # wire 0 ends at logical position 2
    assert run(c, [0, 0, 0]) == [0, 0, 1]


def test_pack_unpack():
    p = Params()
    assert pack(GimliState.zero(), p) == [0] * 384
    bits = pack(GimliState([1] + [0] * 11), p)
    assert bits[0] == 1 and sum(bits) == 1
    with pytest.raises(ValueError):
        unpack([0] * 10, p)


@given(st.lists(st.integers(0, 2**32 - 1), min_size=12, max_size=12))
def test_pack_round_trip(words):
    s = GimliState(words)
    assert unpack(pack(s, Params()), Params()) == s


def test_lane_transpose_round_trip():
    for n in (4, 32, 64):
        words = random_words(Params(word_len=n), 1000, seed=n)
        assert np.array_equal(lanes_to_words(words_to_lanes(words, n), n, 1000), words)


def test_full_circuit_on_zero_state():
    circuit, _ = build_gimli_circuit()
    out = unpack(run(circuit, pack(GimliState.zero(), Params())), Params())
    assert out == gimli_permute(GimliState.zero())


def _random_classical(rng, width, count):
    gates = []
    for _ in range(count):
        kind = rng.choice(["X", "CNOT", "CCNOT", "SWAP"])
        arity = {"X": 1, "CNOT": 2, "SWAP": 2, "CCNOT": 3}[kind]
        gates.append(Gate(kind, tuple(rng.sample(range(width), arity))))
    return gates


@pytest.mark.parametrize("seed", range(30))
def test_run_matches_truth_table(seed):
    rng = random.Random(seed)
    width = rng.randint(3, 10)
    gates = _random_classical(rng, width, rng.randint(1, 25))
    c = Circuit(width, gates)
    table = truth_table([(g.kind, g.operands) for g in gates], width)
    for v in rng.sample(range(1 << width), min(64, 1 << width)):
        bits = [(v >> w) & 1 for w in range(width)]
        out = run(c, bits)
        assert sum(b << w for w, b in enumerate(out)) == table[v]
    # bijection on the whole basis
    assert len(set(table.tolist())) == 1 << width
    # a flipped input bit only reaches wires downstream of it
    for w0 in range(width):
        reach = {w0}
        for g in gates:
            if reach & set(g.operands):
                reach |= set(g.operands)
        v = rng.randrange(1 << width)
        diff = table[v] ^ table[v ^ (1 << w0)]
        assert all(w in reach for w in range(width) if diff >> w & 1)


def test_inverse_on_random_classical_circuits():
    rng = random.Random(11)
    for _ in range(20):
        width = rng.randint(3, 8)
        perm = list(range(width))
        rng.shuffle(perm)
        c = Circuit(width, _random_classical(rng, width, 15), perm)
        inv = build_inverse(c)
        for v in range(1 << width):
            bits = [(v >> w) & 1 for w in range(width)]
            assert run(inv, run(c, bits)) == bits


def test_verify_small_instances():
    for rounds, n in [(4, 8), (3, 5), (9, 16)]:
        rep = verify_equivalence(Params(rounds, n), trials=2000, seed=1, check_inverse=True)
        assert rep.mismatches == 0 and rep.inverse_mismatches == 0 and rep.ok


def test_verify_is_deterministic():
    a = verify_equivalence(Params(4, 8), trials=1, seed=42)
    b = verify_equivalence(Params(4, 8), trials=1, seed=42)
    assert a == b and a.to_json() == b.to_json()


def test_verify_reports_first_failure():
    params = Params(4, 8)
    circuit, _ = build_gimli_circuit(params)
    circuit.gates.append(X(0))
    rep = verify_equivalence(params, trials=50, seed=0, circuit=circuit)
    assert rep.mismatches == 50 and not rep.ok
    assert set(rep.first_failure) == {"input", "expected", "actual"}
    assert '"first_failure"' in rep.to_json()


def test_report_merge():
    a = EquivalenceReport({"rounds": 1}, trials=10, seed=0, mismatches=0)
    b = EquivalenceReport({"rounds": 1}, trials=5, seed=0, mismatches=2, first_failure={"input": []})
    m = a.merge(b)
    assert (m.trials, m.mismatches, m.first_failure) == (15, 2, {"input": []})
