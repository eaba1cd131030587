"""Classical execution of X/CNOT/CCNOT/SWAP circuits and the equivalence harness.

Simulation is bit-sliced: each wire is a Python int whose bit ``t`` holds
the wire value for trial ``t``, so one pass over the gate list evaluates
every trial at once.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

import numpy as np

from qgimli.builder import build_gimli_circuit, build_inverse
from qgimli.circuit import Circuit
from qgimli.gimli_ref import GimliState, Params, gimli_permute


class UnsupportedGateError(ValueError):
    pass


def run_sliced(circuit: Circuit, lanes: Sequence[int], all_ones: int = -1) -> list[int]:
    """Run ``circuit`` on bit-sliced wire values.

    ``all_ones`` is the lane mask used by X; the default ``-1`` works for
    Python ints, callers then mask the result to the trial count.
    """
    if len(lanes) != circuit.width:
        raise ValueError(f"expected {circuit.width} lanes, got {len(lanes)}")
    v = list(lanes)
    for g in circuit.gates:
        kind, ops = g.kind, g.operands
        if kind == "CCNOT":
            a, b, t = ops
            v[t] ^= v[a] & v[b]
        elif kind == "CNOT":
            a, t = ops
            v[t] ^= v[a]
        elif kind == "X":
            v[ops[0]] ^= all_ones
        elif kind == "SWAP":
            a, b = ops
            v[a], v[b] = v[b], v[a]
        else:
            raise UnsupportedGateError(f"{kind} has no classical counterpart")
    out = [0] * circuit.width
    for w, p in enumerate(circuit.output_perm):
        out[p] = v[w]
    return out


def run(circuit: Circuit, bits: Sequence[int]) -> list[int]:
    """Run ``circuit`` on one basis state given as a list of 0/1 per wire."""
    if len(bits) != circuit.width:
        raise ValueError(f"expected {circuit.width} bits, got {len(bits)}")
    return run_sliced(circuit, [b & 1 for b in bits], all_ones=1)


def pack(state: GimliState, params: Params) -> list[int]:
    """Bit ``b`` of word (i, j) goes to wire ``(4i + j) * word_len + b``."""
    if state.word_len != params.word_len:
        raise ValueError("state word length does not match params")
    n = params.word_len
    return [(w >> b) & 1 for w in state.words for b in range(n)]


def unpack(bits: Sequence[int], params: Params) -> GimliState:
    n = params.word_len
    if len(bits) != 12 * n:
        raise ValueError(f"expected {12 * n} bits, got {len(bits)}")
    words = [sum((bits[q * n + b] & 1) << b for b in range(n)) for q in range(12)]
    return GimliState(words, n)


def random_words(params: Params, trials: int, seed: int) -> np.ndarray:
    """``(trials, 12)`` uint64 array of random words from a Philox stream."""
    rng = np.random.Generator(np.random.Philox(seed))
    raw = rng.integers(0, np.iinfo(np.uint64).max, size=(trials, 12), dtype=np.uint64, endpoint=True)
    return raw & np.uint64(params.mask)


def words_to_lanes(words: np.ndarray, word_len: int) -> list[int]:
    """Transpose ``(trials, 12)`` words into one int per wire."""
    lanes = []
    for q in range(12):
        col = words[:, q]
        for b in range(word_len):
            bits = ((col >> np.uint64(b)) & np.uint64(1)).astype(np.uint8)
            lanes.append(int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little"))
    return lanes


def lanes_to_words(lanes: Sequence[int], word_len: int, trials: int) -> np.ndarray:
    nbytes = (trials + 7) // 8
    words = np.zeros((trials, 12), dtype=np.uint64)
    for q in range(12):
        acc = np.zeros(trials, dtype=np.uint64)
        for b in range(word_len):
            raw = np.frombuffer(lanes[q * word_len + b].to_bytes(nbytes, "little"), dtype=np.uint8)
            bits = np.unpackbits(raw, bitorder="little")[:trials].astype(np.uint64)
            acc |= bits << np.uint64(b)
        words[:, q] = acc
    return words


def run_states(circuit: Circuit, words: np.ndarray, word_len: int) -> np.ndarray:
    trials = words.shape[0]
    mask = (1 << trials) - 1
    out = run_sliced(circuit, words_to_lanes(words, word_len), all_ones=mask)
    return lanes_to_words([v & mask for v in out], word_len, trials)


@dataclass
class EquivalenceReport:
    params: dict
    trials: int
    seed: int
    mismatches: int = 0
    first_failure: Optional[dict] = None
    inverse_mismatches: Optional[int] = None
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.mismatches == 0 and not self.inverse_mismatches

    def merge(self, other: "EquivalenceReport") -> "EquivalenceReport":
        first = self.first_failure if self.first_failure is not None else other.first_failure
        inv = None
        if self.inverse_mismatches is not None or other.inverse_mismatches is not None:
            inv = (self.inverse_mismatches or 0) + (other.inverse_mismatches or 0)
        return EquivalenceReport(self.params, self.trials + other.trials, self.seed,
                                 self.mismatches + other.mismatches, first, inv)

    def to_json(self, **kwargs) -> str:
        d = asdict(self)
        d.pop("extra")
        if d["first_failure"] is None:
            d.pop("first_failure")
        if d["inverse_mismatches"] is None:
            d.pop("inverse_mismatches")
        return json.dumps(d, **kwargs)


def _hex(words, n: int) -> list[str]:
    return [f"{int(w):0{(n + 3) // 4}x}" for w in words]


def verify_equivalence(params: Params = Params(), trials: int = 10_000, seed: int = 0,
                       circuit: Optional[Circuit] = None, check_inverse: bool = False) -> EquivalenceReport:
    """Compare the circuit against the reference permutation on random states.

    Mismatches are counted and the first one is recorded; nothing is raised.
    With ``check_inverse`` the inverse circuit is also run on the outputs and
    compared with the inputs.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if circuit is None:
        circuit, _ = build_gimli_circuit(params)
    n = params.word_len
    inputs = random_words(params, trials, seed)
    got = run_states(circuit, inputs, n)
    report = EquivalenceReport(
        params={"rounds": params.rounds, "word_len": n, "constant": f"{params.constant:#x}"},
        trials=trials, seed=seed)
    for t in range(trials):
        expected = gimli_permute(GimliState([int(w) for w in inputs[t]], n), params).words
        actual = [int(w) for w in got[t]]
        if actual != expected:
            report.mismatches += 1
            if report.first_failure is None:
                report.first_failure = {"input": _hex(inputs[t], n),
                                        "expected": _hex(expected, n),
                                        "actual": _hex(actual, n)}
    if check_inverse:
        back = run_states(build_inverse(circuit), got, n)
        report.inverse_mismatches = int(np.count_nonzero(np.any(back != inputs, axis=1)))
    return report
