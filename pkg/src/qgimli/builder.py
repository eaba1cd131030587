"""In-place Gimli circuit over X/CNOT/CCNOT on exactly 12*word_len wires.

All linear moves (rotations, the x/z exchange, small and big swaps) are
absorbed into the label map; only the bitwise T-function and the round
constants cost gates.
"""

from __future__ import annotations

from qgimli.circuit import CCNOT, CNOT, Circuit, Gate, LabelMap, X
from qgimli.gimli_ref import Params, round_tweak

SELF_INVERSE = frozenset({"X", "CNOT", "CCNOT", "H", "SWAP"})
DAGGER = {"T": "TDG", "TDG": "T"}


def tk_gates(labels: LabelMap, j: int, k: int, word_len: int) -> list[Gate]:
    """Gates updating bit index ``k`` of column ``j`` in five layers.

    Index ``k`` is bit ``word_len - 1 - k`` of the word (0 is the MSB).
    Computes, reading only old values at indices > k,
        z_k ^= y_k ^ x_{k+3} y_{k+3}
        y_k ^= x_k ^ (x_{k+1} OR z_{k+1})
        x_k ^= z_{k+1} ^ y_{k+2} z_{k+2}
    with bits at index >= word_len treated as zero. The OR is built from
    a CCNOT on negated controls followed by a NOT of the target.
    """
    n = word_len
    if not 0 <= k < n:
        raise ValueError(f"bit index {k} outside word of length {n}")

    # k counts from the most significant bit: a left shift moves bit k
    # towards k - 1 in this indexing, so bit k only reads indices > k.
    def x(q): return labels.wire(0, j, n - 1 - q)
    def y(q): return labels.wire(1, j, n - 1 - q)
    def z(q): return labels.wire(2, j, n - 1 - q)

    last = k == n - 1
    gates = [CNOT(y(k), z(k))]
    if k + 3 < n:
        gates.append(CCNOT(x(k + 3), y(k + 3), z(k)))
    gates.append(CNOT(x(k), y(k)))
    if not last:
        gates += [X(x(k + 1)), X(z(k + 1)), CCNOT(x(k + 1), z(k + 1), y(k))]
    if k + 2 < n:
        gates.append(CCNOT(y(k + 2), z(k + 2), x(k)))
    if not last:
        gates += [X(x(k + 1)), X(z(k + 1)), X(y(k)), CNOT(z(k + 1), x(k))]
    return gates


def emit_tk(circuit: Circuit, labels: LabelMap, j: int, k: int, params: Params) -> Circuit:
    for g in tk_gates(labels, j, k, params.word_len):
        circuit.append(g)
    return circuit


def emit_sp_box(circuit: Circuit, labels: LabelMap, j: int, params: Params) -> tuple[Circuit, LabelMap]:
    labels.rotate(0, j, params.rot_x)
    labels.rotate(1, j, params.rot_y)
    for k in range(params.word_len):
        emit_tk(circuit, labels, j, k, params)
    labels.swap_words((0, j), (2, j))
    return circuit, labels


def emit_constant(circuit: Circuit, labels: LabelMap, r: int, params: Params) -> Circuit:
    tweak = round_tweak(r, params)
    for b in range(params.word_len):
        if tweak >> b & 1:
            circuit.append(X(labels.wire(0, 0, b)))
    return circuit


def build_gimli_circuit(params: Params = Params()) -> tuple[Circuit, LabelMap]:
    circuit = Circuit(params.width)
    labels = LabelMap(params.word_len)
    for r in range(params.rounds, 0, -1):
        for j in range(4):
            emit_sp_box(circuit, labels, j, params)
        if r % 4 == 0:
            labels.swap_words((0, 0), (0, 1))
            labels.swap_words((0, 2), (0, 3))
        elif r % 4 == 2:
            labels.swap_words((0, 0), (0, 2))
            labels.swap_words((0, 1), (0, 3))
        if r % 4 == 0:
            emit_constant(circuit, labels, r, params)
    circuit.output_perm = labels.final_permutation()
    return circuit, labels


def expected_counts(params: Params) -> dict[str, int]:
    """Closed-form gate tallies for ``build_gimli_circuit(params)``."""
    r, n = params.rounds, params.word_len
    const_x = sum(bin(round_tweak(q, params)).count("1") for q in range(4, r + 1, 4))
    return {
        "CCNOT": 4 * r * (3 * n - 6),
        "CNOT": 4 * r * (3 * n - 1),
        "X": 20 * r * (n - 1) + const_x,
    }


def build_inverse(circuit: Circuit) -> Circuit:
    """Circuit computing the inverse map.

    Gates run in reverse with T and TDG exchanged. The output relabelling
    of the forward circuit is folded into the operands, so the inverse is
    an ordinary circuit whose own ``output_perm`` is the inverse permutation.
    """
    perm = circuit.output_perm
    inv = [0] * circuit.width
    for w, p in enumerate(perm):
        inv[p] = w
    gates = []
    for g in reversed(circuit.gates):
        kind = DAGGER.get(g.kind, g.kind)
        if kind not in SELF_INVERSE and kind not in DAGGER:
            raise ValueError(f"cannot invert gate kind {g.kind}")
        gates.append(Gate(kind, tuple(perm[w] for w in g.operands)))
    return Circuit(circuit.width, gates, inv)
