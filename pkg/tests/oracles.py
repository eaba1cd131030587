"""Independent oracles used only by the tests.

Nothing here imports the package's permutation or metric code.
"""

import itertools

import numpy as np


def gimli_numpy(states, rounds=24, word_len=32, constant=0x9E377900):
    """Vectorised second transcription of the round function.

    ``states`` is an (N, 12) integer array; rows of the state matrix are
    columns 0-3, 4-7, 8-11.
    """
    n = word_len
    mask = np.uint64((1 << n) - 1) if n < 64 else np.uint64(0xFFFFFFFFFFFFFFFF)
    s = np.array(states, dtype=np.uint64).copy()

    def rot(v, a):
        a %= n
        if a == 0:
            return v
        return ((v << np.uint64(a)) | (v >> np.uint64(n - a))) & mask

    def shl(v, a):
        return (v << np.uint64(a)) & mask

    for r in range(rounds, 0, -1):
        for col in range(4):
            x = rot(s[:, col], 24)
            y = rot(s[:, 4 + col], 9)
            z = s[:, 8 + col].copy()
            s[:, 8 + col] = x ^ shl(z, 1) ^ shl(y & z, 2)
            s[:, 4 + col] = x ^ y ^ shl(x | z, 1)
            s[:, col] = y ^ z ^ shl(x & y, 3)
        if r % 4 == 0:
            s[:, [0, 1, 2, 3]] = s[:, [1, 0, 3, 2]]
            s[:, 0] ^= np.uint64((constant ^ r) & ((1 << n) - 1))
        if r % 4 == 2:
            s[:, [0, 1, 2, 3]] = s[:, [2, 3, 0, 1]]
    return s


def longest_chain(ops_list, weight=lambda i: 1):
    """Exhaustive longest weighted path over the wire-sharing DAG.

    Nodes are gate indices; there is an edge i -> j for every i < j whose
    operand sets intersect. Every path is enumerated, so keep inputs small.
    """
    m = len(ops_list)
    succ = [[j for j in range(i + 1, m) if set(ops_list[i]) & set(ops_list[j])] for i in range(m)]
    best = 0

    def walk(i, acc):
        nonlocal best
        acc += weight(i)
        best = max(best, acc)
        for j in succ[i]:
            walk(j, acc)

    for i in range(m):
        walk(i, 0)
    return best


def truth_table(gates, nwires):
    """Permutation of basis states as an integer array, built gate by gate."""
    idx = np.arange(1 << nwires)
    state = idx.copy()
    for kind, ops in gates:
        bits = [(state >> w) & 1 for w in ops]
        if kind == "X":
            state = state ^ (1 << ops[0])
        elif kind == "CNOT":
            state = state ^ (bits[0] << ops[1])
        elif kind == "CCNOT":
            state = state ^ ((bits[0] & bits[1]) << ops[2])
        elif kind == "SWAP":
            diff = bits[0] ^ bits[1]
            state = state ^ (diff << ops[0]) ^ (diff << ops[1])
    return state


def all_bit_vectors(n):
    return itertools.product((0, 1), repeat=n)
