"""Gate-level IR, label dictionary for free relabelling, and resource metrics."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

KINDS = ("X", "CNOT", "CCNOT", "H", "T", "TDG", "SWAP")
ARITY = {"X": 1, "H": 1, "T": 1, "TDG": 1, "CNOT": 2, "SWAP": 2, "CCNOT": 3}
T_KINDS = frozenset({"T", "TDG"})


class CircuitError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Gate:
    """One gate; operands are physical wires, controls first and target last."""

    kind: str
    operands: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ARITY:
            raise CircuitError(f"unknown gate kind {self.kind!r}")
        if len(self.operands) != ARITY[self.kind]:
            raise CircuitError(f"{self.kind} takes {ARITY[self.kind]} operands, got {self.operands}")
        if len(set(self.operands)) != len(self.operands):
            raise CircuitError(f"{self.kind} operands must be distinct, got {self.operands}")
        if any(w < 0 for w in self.operands):
            raise CircuitError(f"negative wire in {self.operands}")

    def __str__(self):
        return f"{self.kind}({', '.join(map(str, self.operands))})"


def X(a: int) -> Gate:
    return Gate("X", (a,))


def CNOT(c: int, t: int) -> Gate:
    return Gate("CNOT", (c, t))


def CCNOT(c0: int, c1: int, t: int) -> Gate:
    return Gate("CCNOT", (c0, c1, t))


class Circuit:
    """Ordered gate list on ``width`` wires plus an output relabelling.

    ``output_perm[w]`` is the logical output position of the bit carried by
    physical wire ``w`` once all gates have run.
    """

    def __init__(self, width: int, gates: Iterable[Gate] = (), output_perm: Optional[Sequence[int]] = None):
        if width < 0:
            raise CircuitError("width must be non-negative")
        self.width = width
        self.gates: list[Gate] = []
        for g in gates:
            self.append(g)
        self.output_perm = list(range(width)) if output_perm is None else list(output_perm)
        if sorted(self.output_perm) != list(range(width)):
            raise CircuitError("output_perm is not a permutation of the wires")

    def append(self, gate: Gate) -> "Circuit":
        if any(w >= self.width for w in gate.operands):
            raise CircuitError(f"{gate} references a wire outside width {self.width}")
        self.gates.append(gate)
        return self

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __eq__(self, other):
        if not isinstance(other, Circuit):
            return NotImplemented
        return (self.width, self.gates, self.output_perm) == (other.width, other.gates, other.output_perm)

    def __repr__(self):
        return f"Circuit(width={self.width}, gates={len(self.gates)})"


class LabelMap:
    """Bijection between logical bits ``(i, j, b)`` and physical wires.

    Rotations and word swaps only rename wires; no gates are emitted.
    """

    def __init__(self, word_len: int):
        self.word_len = word_len
        n = 12 * word_len
        self.forward = list(range(n))
        self.backward = list(range(n))

    def _index(self, i: int, j: int, b: int) -> int:
        return (4 * i + j) * self.word_len + b

    def wire(self, i: int, j: int, b: int) -> int:
        return self.forward[self._index(i, j, b)]

    def word_wires(self, i: int, j: int) -> list[int]:
        start = self._index(i, j, 0)
        return self.forward[start:start + self.word_len]

    def _set_word(self, i: int, j: int, wires: Sequence[int]):
        start = self._index(i, j, 0)
        self.forward[start:start + self.word_len] = wires
        for b, w in enumerate(wires):
            self.backward[w] = start + b

    def rotate(self, i: int, j: int, amount: int) -> "LabelMap":
        """Relabel word (i, j) as if it had been rotated left by ``amount``."""
        n = self.word_len
        if not 0 <= amount < n:
            raise ValueError(f"rotation amount must lie in [0, {n}), got {amount}")
        old = self.word_wires(i, j)
        self._set_word(i, j, [old[(b - amount) % n] for b in range(n)])
        return self

    def swap_words(self, a: tuple[int, int], b: tuple[int, int]) -> "LabelMap":
        wa, wb = self.word_wires(*a), self.word_wires(*b)
        self._set_word(*a, wb)
        self._set_word(*b, wa)
        return self

    def final_permutation(self) -> list[int]:
        """Physical wire -> logical output position of the bit it carries."""
        return list(self.backward)

    def copy(self) -> "LabelMap":
        other = LabelMap(self.word_len)
        other.forward = list(self.forward)
        other.backward = list(self.backward)
        return other

    def __eq__(self, other):
        if not isinstance(other, LabelMap):
            return NotImplemented
        return self.word_len == other.word_len and self.forward == other.forward


@dataclass
class ResourceReport:
    width: int
    counts: dict[str, int] = field(default_factory=dict)
    depth: Optional[int] = None
    t_depth: Optional[int] = None

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def t_count(self) -> int:
        return self.counts.get("T", 0) + self.counts.get("TDG", 0)

    def __getitem__(self, kind: str) -> int:
        if kind == "T+TDG":
            return self.t_count
        if kind == "total":
            return self.total
        return self.counts.get(kind, 0)

    def as_dict(self) -> dict:
        out = {"width": self.width, "depth": self.depth, "t_depth": self.t_depth, "total": self.total}
        for kind in KINDS:
            out[kind] = self.counts.get(kind, 0)
        out["T+TDG"] = self.t_count
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.as_dict(), **kwargs)


def gate_counts(circuit: Circuit) -> ResourceReport:
    tally = Counter(g.kind for g in circuit.gates)
    return ResourceReport(circuit.width, {k: tally.get(k, 0) for k in KINDS})


def _weighted_depth(circuit: Circuit, weighted: frozenset | None) -> int:
    # ASAP layering on the wire-sharing DAG; a gate sits one layer after
    # the latest earlier gate touching any of its wires.
    level = [0] * circuit.width
    best = 0
    for g in circuit.gates:
        ops = g.operands
        m = max(level[w] for w in ops)
        if weighted is None or g.kind in weighted:
            m += 1
        for w in ops:
            level[w] = m
        if m > best:
            best = m
    return best


def depth(circuit: Circuit) -> int:
    return _weighted_depth(circuit, None)


def t_depth(circuit: Circuit) -> int:
    """Largest number of T/TDG gates on any wire-sharing dependency path."""
    return _weighted_depth(circuit, T_KINDS)


def resources(circuit: Circuit) -> ResourceReport:
    report = gate_counts(circuit)
    report.depth = depth(circuit)
    report.t_depth = t_depth(circuit)
    return report
