"""Classical Gimli permutation, parametric in round count and word length.

Words are plain ints; bit ``b`` of a word is the coefficient of ``2**b``.
Rotation amounts (24 and 9) are reduced modulo the word length and the
round constant is truncated to ``word_len`` bits, so small instances stay
well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_CONSTANT = 0x9E377900
ROT_X = 24
ROT_Y = 9


@dataclass(frozen=True)
class Params:
    rounds: int = 24
    word_len: int = 32
    constant: int = DEFAULT_CONSTANT

    def __post_init__(self):
        if not isinstance(self.rounds, int) or self.rounds < 1:
            raise ValueError(f"rounds must be a positive integer, got {self.rounds!r}")
        if not isinstance(self.word_len, int) or self.word_len < 4:
            raise ValueError(f"word_len must be an integer >= 4, got {self.word_len!r}")
        if self.constant < 0:
            raise ValueError("constant must be non-negative")

    @property
    def mask(self) -> int:
        return (1 << self.word_len) - 1

    @property
    def width(self) -> int:
        return 12 * self.word_len

    @property
    def rot_x(self) -> int:
        return ROT_X % self.word_len

    @property
    def rot_y(self) -> int:
        return ROT_Y % self.word_len


class GimliState:
    """A 3x4 matrix of words, stored row-major as ``s[4*i + j]``."""

    __slots__ = ("words", "word_len")

    def __init__(self, words: Sequence[int], word_len: int = 32):
        words = list(words)
        if len(words) != 12:
            raise ValueError(f"a Gimli state has 12 words, got {len(words)}")
        for w in words:
            if not 0 <= w < (1 << word_len):
                raise ValueError(f"word {w:#x} does not fit in {word_len} bits")
        self.words = words
        self.word_len = word_len

    @classmethod
    def zero(cls, word_len: int = 32) -> "GimliState":
        return cls([0] * 12, word_len)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.words[4 * i + j]

    def __setitem__(self, ij: tuple[int, int], value: int):
        i, j = ij
        self.words[4 * i + j] = value

    def __eq__(self, other):
        if not isinstance(other, GimliState):
            return NotImplemented
        return self.word_len == other.word_len and self.words == other.words

    def __hash__(self):
        return hash((self.word_len, tuple(self.words)))

    def __repr__(self):
        digits = (self.word_len + 3) // 4
        body = " ".join(f"{w:0{digits}x}" for w in self.words)
        return f"GimliState({body})"

    def copy(self) -> "GimliState":
        return GimliState(self.words, self.word_len)


def rotl(word: int, amount: int, word_len: int) -> int:
    amount %= word_len
    mask = (1 << word_len) - 1
    return ((word << amount) | (word >> (word_len - amount))) & mask


def _check_word(w: int, params: Params):
    if not 0 <= w <= params.mask:
        raise ValueError(f"word {w:#x} does not fit in {params.word_len} bits")


def sp_box(x: int, y: int, z: int, params: Params = Params()) -> tuple[int, int, int]:
    """Apply the SP-box to one column ``(s0j, s1j, s2j)``.

    Returns the new column in the same row order, i.e. the x/z exchange is
    already applied.
    """
    for w in (x, y, z):
        _check_word(w, params)
    n, mask = params.word_len, params.mask
    x = rotl(x, params.rot_x, n)
    y = rotl(y, params.rot_y, n)
    new2 = (x ^ (z << 1) ^ ((y & z) << 2)) & mask
    new1 = (x ^ y ^ ((x | z) << 1)) & mask
    new0 = (y ^ z ^ ((x & y) << 3)) & mask
    return new0, new1, new2


def round_tweak(r: int, params: Params = Params()) -> int:
    """Word XORed into ``s[0][0]`` on rounds divisible by four."""
    if r % 4 != 0:
        raise ValueError(f"round constant only applies when r % 4 == 0, got r={r}")
    return (params.constant ^ r) & params.mask


def gimli_rounds(state: GimliState, params: Params = Params()) -> Iterator[tuple[int, GimliState]]:
    """Yield ``(r, state)`` after each round, counting ``r`` down to 1."""
    if state.word_len != params.word_len:
        raise ValueError("state word length does not match params")
    s = state.copy()
    for r in range(params.rounds, 0, -1):
        for j in range(4):
            s[0, j], s[1, j], s[2, j] = sp_box(s[0, j], s[1, j], s[2, j], params)
        if r % 4 == 0:
            # small swap
            s[0, 0], s[0, 1] = s[0, 1], s[0, 0]
            s[0, 2], s[0, 3] = s[0, 3], s[0, 2]
        elif r % 4 == 2:
            # big swap
            s[0, 0], s[0, 2] = s[0, 2], s[0, 0]
            s[0, 1], s[0, 3] = s[0, 3], s[0, 1]
        if r % 4 == 0:
            s[0, 0] ^= round_tweak(r, params)
        yield r, s.copy()


def gimli_permute(state: GimliState, params: Params = Params()) -> GimliState:
    s = state
    for _, s in gimli_rounds(state, params):
        pass
    return s


def read_vectors(path, word_len: int = 32) -> list[GimliState]:
    """Read a test-vector file: 12 hex words per line plus a reserved count field."""
    states = []
    with open(path) as fh:
        for line in fh:
            fields = line.split()
            if not fields or line.lstrip().startswith("#"):
                continue
            if len(fields) != 13:
                raise ValueError(f"expected 13 fields, got {len(fields)}: {line!r}")
            words = [int(f, 16) for f in fields[:12]]
            states.append(GimliState(words, word_len))
    return states


def write_vectors(path, states: Sequence[GimliState], count: int = 0):
    with open(path, "w") as fh:
        for s in states:
            digits = (s.word_len + 3) // 4
            fh.write(" ".join(f"{w:0{digits}x}" for w in s.words) + f" {count:x}\n")
