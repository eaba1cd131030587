"""Clifford+T lowering of CCNOT and exact 8x8 unitary checks."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from qgimli.circuit import Circuit, Gate

_S2 = 1 / np.sqrt(2)
ONE_QUBIT = {
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "H": np.array([[_S2, _S2], [_S2, -_S2]], dtype=complex),
    "T": np.array([[1, 0], [0, (1 + 1j) * _S2]], dtype=complex),
    "TDG": np.array([[1, 0], [0, (1 - 1j) * _S2]], dtype=complex),
}


def toffoli_sequence(c0: int, c1: int, t: int) -> list[Gate]:
    """The 15-gate H/T/TDG/CNOT realisation of CCNOT(c0, c1, t), no ancilla."""
    G = Gate
    return [
        G("H", (t,)),
        G("CNOT", (c1, t)),
        G("TDG", (t,)),
        G("CNOT", (c0, t)),
        G("T", (t,)),
        G("CNOT", (c1, t)),
        G("TDG", (t,)),
        G("CNOT", (c0, t)),
        G("T", (c1,)),
        G("T", (t,)),
        G("H", (t,)),
        G("CNOT", (c0, c1)),
        G("T", (c0,)),
        G("TDG", (c1,)),
        G("CNOT", (c0, c1)),
    ]


def lower_toffoli(circuit: Circuit) -> Circuit:
    """Replace every CCNOT in place; all other gates are kept verbatim."""
    out = Circuit(circuit.width, output_perm=circuit.output_perm)
    gates = out.gates
    for g in circuit.gates:
        if g.kind == "CCNOT":
            gates.extend(toffoli_sequence(*g.operands))
        else:
            gates.append(g)
    return out


def _gate_matrix(gate: Gate, pos: dict[int, int], nq: int) -> np.ndarray:
    dim = 1 << nq
    # basis index: window position p is bit (nq - 1 - p), so position 0 is most significant
    shift = {w: nq - 1 - p for w, p in pos.items()}
    if gate.kind in ONE_QUBIT:
        s = shift[gate.operands[0]]
        u = ONE_QUBIT[gate.kind]
        m = np.zeros((dim, dim), dtype=complex)
        for col in range(dim):
            bit = (col >> s) & 1
            for out_bit in (0, 1):
                m[(col & ~(1 << s)) | (out_bit << s), col] += u[out_bit, bit]
        return m
    m = np.zeros((dim, dim), dtype=complex)
    sh = [shift[w] for w in gate.operands]
    for col in range(dim):
        row = col
        if gate.kind == "CNOT":
            if col >> sh[0] & 1:
                row ^= 1 << sh[1]
        elif gate.kind == "CCNOT":
            if col >> sh[0] & 1 and col >> sh[1] & 1:
                row ^= 1 << sh[2]
        elif gate.kind == "SWAP":
            a, b = col >> sh[0] & 1, col >> sh[1] & 1
            row = col & ~(1 << sh[0]) & ~(1 << sh[1]) | (b << sh[0]) | (a << sh[1])
        m[row, col] = 1
    return m


def block_unitary(gates: Sequence[Gate], wires: Sequence[int] = (0, 1, 2)) -> np.ndarray:
    """Product of the gates' embeddings on ``wires``; later gates multiply on the left.

    ``wires[0]`` is the most significant bit of the basis index, so with
    ``wires = (c0, c1, t)`` CCNOT exchanges basis states 6 and 7.
    """
    pos = {w: p for p, w in enumerate(wires)}
    if len(pos) != len(wires):
        raise ValueError("window wires must be distinct")
    u = np.eye(1 << len(wires), dtype=complex)
    for g in gates:
        for w in g.operands:
            if w not in pos:
                raise ValueError(f"{g} acts outside the window {tuple(wires)}")
        u = _gate_matrix(g, pos, len(wires)) @ u
    return u
