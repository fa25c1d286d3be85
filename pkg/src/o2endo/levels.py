"""Matrix picture of the gauge-invariant part of the word algebra.

Degree-zero elements supported on words of length <= k form a full
matrix algebra of size 2**k: the monomial s_alpha s_beta* with
len(alpha) == len(beta) == k acts as the matrix unit
e[word_index(alpha), word_index(beta)].  Shorter diagonal-degree terms
embed by padding both words with a common suffix, which is the identity
on the trailing tensor legs.

Leg convention: letter position = tensor leg, first letter most
significant.  The canonical shift phi(x) = s_1 x s_1* + s_2 x s_2*
therefore lands as identity-tensor-x, with the fresh leg in front.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import BadLevels, LevelTooSmall, NonZeroGaugeDegree
from .words import AlgebraElement, ScalarLike, all_words, index_word, word_index

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LevelMatrix:
    """Square matrix of Fractions with its level (size 2**level)."""

    __slots__ = ("level", "rows")

    def __init__(self, level: int, rows: Iterable[Sequence[ScalarLike]]):
        size = 1 << level
        frozen = tuple(
            tuple(Fraction(v) for v in row) for row in rows
        )
        if len(frozen) != size or any(len(r) != size for r in frozen):
            raise ValueError(f"need a {size}x{size} matrix for level {level}")
        self.level = level
        self.rows = frozen

    @property
    def size(self) -> int:
        return 1 << self.level

    @classmethod
    def zeros(cls, level: int) -> "LevelMatrix":
        size = 1 << level
        return cls(level, [[_ZERO] * size for _ in range(size)])

    @classmethod
    def identity(cls, level: int) -> "LevelMatrix":
        size = 1 << level
        return cls(
            level,
            [[_ONE if i == j else _ZERO for j in range(size)] for i in range(size)],
        )

    @classmethod
    def unit(cls, level: int, row: int, col: int) -> "LevelMatrix":
        size = 1 << level
        return cls(
            level,
            [
                [_ONE if (i, j) == (row, col) else _ZERO for j in range(size)]
                for i in range(size)
            ],
        )

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LevelMatrix):
            return NotImplemented
        return self.level == other.level and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.level, self.rows))

    def _check_level(self, other: "LevelMatrix") -> None:
        if self.level != other.level:
            raise BadLevels(f"level mismatch: {self.level} vs {other.level}")

    def __add__(self, other: "LevelMatrix") -> "LevelMatrix":
        self._check_level(other)
        return LevelMatrix(
            self.level,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other: "LevelMatrix") -> "LevelMatrix":
        self._check_level(other)
        return LevelMatrix(
            self.level,
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self) -> "LevelMatrix":
        return LevelMatrix(self.level, [[-a for a in r] for r in self.rows])

    def scale(self, coeff: ScalarLike) -> "LevelMatrix":
        coeff = Fraction(coeff)
        return LevelMatrix(
            self.level, [[coeff * a for a in r] for r in self.rows]
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LevelMatrix):
            return NotImplemented
        self._check_level(other)
        size = self.size
        cols = list(zip(*other.rows))
        return LevelMatrix(
            self.level,
            [
                [
                    sum((a * b for a, b in zip(row, col)), _ZERO)
                    for col in cols
                ]
                for row in self.rows
            ],
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def adjoint(self) -> "LevelMatrix":
        return LevelMatrix(self.level, list(zip(*self.rows)))

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.size)), _ZERO)

    def normalized_trace(self) -> Fraction:
        return self.trace() / self.size

    def is_zero(self) -> bool:
        return all(not v for row in self.rows for v in row)

    def flat(self) -> tuple[Fraction, ...]:
        """Row-major vector of length 4**level, used by linear algebra."""
        return tuple(v for row in self.rows for v in row)

    def __repr__(self) -> str:
        return f"<LevelMatrix level={self.level} rows={self.rows!r}>"


def matrix_from_flat(level: int, flat: Sequence[ScalarLike]) -> LevelMatrix:
    size = 1 << level
    if len(flat) != size * size:
        raise ValueError(f"need {size * size} entries for level {level}")
    return LevelMatrix(
        level, [flat[i * size:(i + 1) * size] for i in range(size)]
    )


def tensor(left: LevelMatrix, right: LevelMatrix) -> LevelMatrix:
    """Kronecker product; left factor owns the leading (big-endian) legs."""
    rsize = right.size
    level = left.level + right.level
    size = 1 << level
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            row.append(
                left.rows[i // rsize][j // rsize]
                * right.rows[i % rsize][j % rsize]
            )
        rows.append(row)
    return LevelMatrix(level, rows)


def embed_to_level(x: AlgebraElement, level: int) -> LevelMatrix:
    """Matrix of a gauge-invariant element at the given level.

    Terms on words shorter than the level pad out with a shared suffix,
    i.e. tensor with the identity on the trailing legs.
    """
    size = 1 << level
    rows = [[_ZERO] * size for _ in range(size)]
    for a, b, c in x.terms():
        if len(a) != len(b):
            raise NonZeroGaugeDegree(
                f"term s_{{{a},{b}}} has gauge degree {len(a) - len(b)}"
            )
        if len(a) > level:
            raise LevelTooSmall(
                f"term s_{{{a},{b}}} needs level >= {len(a)}, got {level}"
            )
        pad = level - len(a)
        base_r = word_index(a) << pad
        base_c = word_index(b) << pad
        for t in range(1 << pad):
            rows[base_r | t][base_c | t] += c
    return LevelMatrix(level, rows)


def to_algebra_element(m: LevelMatrix) -> AlgebraElement:
    """Inverse of embed_to_level; canonicalization re-merges padding."""
    level = m.level
    acc = {}
    for i in range(m.size):
        for j in range(m.size):
            if m.rows[i][j]:
                acc[(index_word(i, level), index_word(j, level))] = m.rows[i][j]
    return AlgebraElement(acc)


def expect_onto_level(m: LevelMatrix, level: int) -> LevelMatrix:
    """Normalized partial trace over the trailing legs.

    Compatible with the state: normalized_trace is unchanged, and on
    matrices coming from embed_to_level at the lower level it is the
    identity.
    """
    if level > m.level or level < 0:
        raise BadLevels(f"cannot reduce level {m.level} onto {level}")
    drop = m.level - level
    block = 1 << drop
    size = 1 << level
    weight = Fraction(1, block)
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            total = _ZERO
            for t in range(block):
                total += m.rows[(i << drop) | t][(j << drop) | t]
            row.append(total * weight)
        rows.append(row)
    return LevelMatrix(level, rows)


def diagonal_words(x: AlgebraElement) -> bool:
    """True when every term is diagonal (alpha == beta)."""
    return all(a == b for a, b, _ in x.terms())
