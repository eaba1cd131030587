"""Resource reports, published reference values, and (rounds, word_len) sweeps."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable

from qgimli.builder import build_gimli_circuit, expected_counts
from qgimli.circuit import resources
from qgimli.gimli_ref import DEFAULT_CONSTANT, Params
from qgimli.lowering import lower_toffoli

# Published figures for 24 rounds, 32-bit words.
REFERENCE = {
    "ccnot": {"depth": 3104, "total": 32739, "X": 14979, "CCNOT": 8640, "CNOT": 9120,
              "H": 0, "T+TDG": 0, "t_depth": 0},
    "clifford_t": {"depth": 14908, "total": 153699, "X": 14979, "CCNOT": 0, "CNOT": 60960,
                   "H": 17280, "T+TDG": 60480, "t_depth": 168},
}
DEPTH_BOUND_24_32 = 3846
EXACT_KEYS = ("total", "X", "CCNOT", "CNOT", "H", "T+TDG")


def depth_bound(rounds: int, word_len: int) -> int:
    return 5 * word_len * rounds + math.ceil(rounds / 4)


def stats(params: Params, lower: bool = False) -> dict:
    """Resource report for one build, with reference comparison when one exists."""
    circuit, _ = build_gimli_circuit(params)
    if lower:
        circuit = lower_toffoli(circuit)
    out = {
        "params": {"rounds": params.rounds, "word_len": params.word_len, "constant": f"{params.constant:#x}"},
        "form": "clifford_t" if lower else "ccnot",
        "report": resources(circuit).as_dict(),
    }
    if not lower:
        out["depth_bound"] = depth_bound(params.rounds, params.word_len)
    if (params.rounds, params.word_len, params.constant) == (24, 32, DEFAULT_CONSTANT):
        ref = REFERENCE[out["form"]]
        rep = out["report"]
        out["reference"] = ref
        out["matched"] = {k: rep[k] == ref[k] for k in ref}
        out["deviation"] = {k: rep[k] - ref[k] for k in ref if rep[k] != ref[k]}
        out["counts_exact"] = all(out["matched"][k] for k in EXACT_KEYS)
    return out


@dataclass
class SweepRow:
    rounds: int
    word_len: int
    depth: int
    depth_bound: int
    t_depth_lowered: int | None
    X: int
    CNOT: int
    CCNOT: int
    total: int
    counts_match_formula: bool


def sweep(rounds_list: Iterable[int], word_lens: Iterable[int], constant: int = DEFAULT_CONSTANT,
          lowered_t_depth: bool = False) -> list[SweepRow]:
    rows = []
    for n in word_lens:
        for r in rounds_list:
            params = Params(r, n, constant)
            circuit, _ = build_gimli_circuit(params)
            rep = resources(circuit)
            tdep = resources(lower_toffoli(circuit)).t_depth if lowered_t_depth else None
            expect = expected_counts(params)
            rows.append(SweepRow(
                rounds=r, word_len=n, depth=rep.depth, depth_bound=depth_bound(r, n),
                t_depth_lowered=tdep, X=rep["X"], CNOT=rep["CNOT"], CCNOT=rep["CCNOT"],
                total=rep.total,
                counts_match_formula=all(rep[k] == v for k, v in expect.items()),
            ))
    return rows


def write_csv(rows: list[SweepRow], path) -> None:
    fields = list(SweepRow.__dataclass_fields__)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(fields)
        for row in rows:
            w.writerow(["" if getattr(row, f) is None else getattr(row, f) for f in fields])
