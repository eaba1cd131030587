"""OpenQASM 2.0 and JSON gate-list export, plus a reader for our own exports."""

from __future__ import annotations

import json
import re

from qgimli.circuit import Circuit, Gate

QASM_NAME = {"X": "x", "CNOT": "cx", "CCNOT": "ccx", "H": "h", "T": "t", "TDG": "tdg", "SWAP": "swap"}
KIND_OF = {v: k for k, v in QASM_NAME.items()}
SWAP_MARKER = "// swap layer: materialized relabelling, excluded from resource counts"

_GATE_RE = re.compile(r"^([a-z]+)\s+(q\[\d+\](?:\s*,\s*q\[\d+\])*)\s*;$")
_PERM_RE = re.compile(r"^//\s*perm\s+(\d+)\s*->\s*(\d+)$")


def materialize_swaps(circuit: Circuit) -> list[Gate]:
    """SWAP gates that move every bit to the wire matching its logical position."""
    holds = list(circuit.output_perm)
    swaps = []
    for i in range(circuit.width):
        while holds[i] != i:
            k = holds[i]
            swaps.append(Gate("SWAP", (i, k)))
            holds[i], holds[k] = holds[k], holds[i]
    return swaps


def with_swap_layer(circuit: Circuit) -> Circuit:
    out = Circuit(circuit.width, circuit.gates)
    out.gates.extend(materialize_swaps(circuit))
    return out


def export_qasm(circuit: Circuit, swap_layer: list[Gate] | None = None) -> str:
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{circuit.width}];"]
    for g in circuit.gates:
        lines.append(f"{QASM_NAME[g.kind]} " + ",".join(f"q[{w}]" for w in g.operands) + ";")
    perm = circuit.output_perm
    if swap_layer:
        lines.append(SWAP_MARKER)
        for g in swap_layer:
            lines.append(f"swap q[{g.operands[0]}],q[{g.operands[1]}];")
        perm = range(circuit.width)
    lines.extend(f"// perm {w} -> {p}" for w, p in enumerate(perm))
    return "\n".join(lines) + "\n"


def parse_qasm(text: str) -> Circuit:
    """Read a file written by :func:`export_qasm`; not a general QASM parser."""
    width = None
    gates = []
    perm = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("OPENQASM", "include")):
            continue
        m = _PERM_RE.match(line)
        if m:
            perm[int(m.group(1))] = int(m.group(2))
            continue
        if line.startswith("//"):
            continue
        if line.startswith("qreg"):
            width = int(re.search(r"\[(\d+)\]", line).group(1))
            continue
        m = _GATE_RE.match(line)
        if not m or m.group(1) not in KIND_OF:
            raise ValueError(f"unsupported line: {raw!r}")
        ops = tuple(int(x) for x in re.findall(r"\d+", m.group(2)))
        gates.append(Gate(KIND_OF[m.group(1)], ops))
    if width is None:
        raise ValueError("missing qreg declaration")
    output_perm = [perm.get(w, w) for w in range(width)]
    return Circuit(width, gates, output_perm)


def export_json(circuit: Circuit, swap_layer: list[Gate] | None = None) -> str:
    doc = {
        "width": circuit.width,
        "gates": [[g.kind, *g.operands] for g in circuit.gates],
        "output_perm": circuit.output_perm,
    }
    if swap_layer:
        doc["swap_layer"] = [list(g.operands) for g in swap_layer]
        doc["output_perm"] = list(range(circuit.width))
    return json.dumps(doc, separators=(",", ":")) + "\n"


def parse_json(text: str) -> Circuit:
    doc = json.loads(text)
    gates = [Gate(g[0], tuple(g[1:])) for g in doc["gates"]]
    gates += [Gate("SWAP", tuple(ops)) for ops in doc.get("swap_layer", [])]
    return Circuit(doc["width"], gates, doc["output_perm"])
