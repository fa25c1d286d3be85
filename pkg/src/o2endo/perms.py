"""Permutations of the words {1,2}^k and their notation.

A PermSpec stores the rank k and a bijection of word indices
0 .. 2**k - 1 (words of length k in lexicographic order).  For k = 2
the points 1, 2, 3, 4 of cycle notation name the words 11, 12, 21, 22.

Cycle text uses juxtaposed cycles ("(12)(34)", "(142)", "id"); one-line
notation is a digit string listing the images of 1, 2, ... in order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations
from math import lcm

from .errors import WordError
from .words import index_word, word_index


@dataclass(frozen=True)
class PermSpec:
    """A permutation of {1,2}^rank, images stored 0-based."""

    rank: int
    mapping: tuple[int, ...]

    def __post_init__(self):
        size = 1 << self.rank
        if self.rank < 1 or len(self.mapping) != size or sorted(
            self.mapping
        ) != list(range(size)):
            raise WordError(
                f"not a bijection of {{1..{size}}}: {self.mapping}"
            )

    @classmethod
    def identity(cls, rank: int) -> "PermSpec":
        return cls(rank, tuple(range(1 << rank)))

    @classmethod
    def from_one_line(cls, images: "list[int] | tuple[int, ...]", rank: int) -> "PermSpec":
        """Images of 1, 2, ..., 2**rank in order (1-based)."""
        return cls(rank, tuple(v - 1 for v in images))

    def one_line(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self.mapping)

    def apply_point(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.mapping[point - 1] + 1

    def apply_word(self, word: str) -> str:
        return index_word(self.mapping[word_index(word)], self.rank)

    def compose(self, other: "PermSpec") -> "PermSpec":
        """(self compose other)(x) = self(other(x))."""
        if self.rank != other.rank:
            raise WordError("rank mismatch in composition")
        return PermSpec(
            self.rank, tuple(self.mapping[v] for v in other.mapping)
        )

    def inverse(self) -> "PermSpec":
        out = [0] * len(self.mapping)
        for i, v in enumerate(self.mapping):
            out[v] = i
        return PermSpec(self.rank, tuple(out))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.mapping))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its least point."""
        seen = [False] * len(self.mapping)
        out = []
        for start in range(len(self.mapping)):
            if seen[start]:
                continue
            cur, cyc = start, [start]
            seen[start] = True
            while self.mapping[cur] != start:
                cur = self.mapping[cur]
                seen[cur] = True
                cyc.append(cur)
            if len(cyc) > 1:
                out.append(tuple(p + 1 for p in cyc))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def cycle_notation(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "id"
        sep = " " if any(p > 9 for c in cycs for p in c) else ""
        return "".join(
            "(" + sep.join(str(p) for p in c) + ")" for c in cycs
        )

    def __str__(self) -> str:
        return self.cycle_notation()


def _parse_cycle_body(body: str) -> list[int]:
    body = body.strip()
    if re.search(r"[,\s]", body):
        toks = [tok for tok in re.split(r"[,\s]+", body) if tok]
        if not all(tok.isdigit() for tok in toks):
            raise WordError(f"bad cycle body: {body!r}")
        points = [int(tok) for tok in toks]
    else:
        if not body.isdigit():
            raise WordError(f"bad cycle body: {body!r}")
        points = [int(ch) for ch in body]
    if len(points) < 2 or len(set(points)) != len(points) or min(points) < 1:
        raise WordError(f"bad cycle body: {body!r}")
    return points


def parse_perm(text: str, rank: int | None = None) -> PermSpec:
    """Parse "id", cycle notation, or a one-line digit string.

    Without an explicit rank the least rank containing all points is
    used, with a floor of 2 (the cases the reference table names).
    """
    text = text.strip()
    if text.lower() == "id":
        return PermSpec.identity(rank if rank is not None else 2)
    if text.startswith("("):
        if not re.fullmatch(r"(\s*\([^()]+\))+\s*", text):
            raise WordError(f"bad cycle notation: {text!r}")
        chunks = re.findall(r"\(([^()]*)\)", text)
        cycles = [_parse_cycle_body(c) for c in chunks]
        top = max(p for c in cycles for p in c)
        if rank is None:
            rank = 2
            while (1 << rank) < top:
                rank += 1
        size = 1 << rank
        if top > size:
            raise WordError(f"point {top} exceeds 2**rank = {size}")
        mapping = list(range(size))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if mapping[a - 1] != a - 1:
                    raise WordError(f"point {a} repeated across cycles")
                mapping[a - 1] = b - 1
        return PermSpec(rank, tuple(mapping))
    digits = re.split(r"[,\s]+", text) if re.search(r"[,\s]", text) else list(text)
    try:
        images = [int(tok) for tok in digits if tok]
    except ValueError:
        raise WordError(f"cannot parse permutation: {text!r}") from None
    size = len(images)
    if rank is None:
        rank = max(1, (size - 1).bit_length())
    if (1 << rank) != size:
        raise WordError(f"one-line length {size} is not 2**{rank}")
    return PermSpec.from_one_line(images, rank)


def all_perm_specs(rank: int):
    """All permutations of {1,2}^rank in lexicographic one-line order."""
    for images in permutations(range(1 << rank)):
        yield PermSpec(rank, images)


TABLE_ORDER = (
    "id",
    "(12)", "(13)", "(14)", "(23)", "(24)", "(34)",
    "(123)", "(132)", "(124)", "(142)", "(134)", "(143)", "(234)", "(243)",
    "(1234)", "(1243)", "(1324)", "(1342)", "(1423)", "(1432)",
    "(12)(34)", "(13)(24)", "(14)(23)",
)


def table_order_specs() -> list[PermSpec]:
    """The 24 rank-2 permutations in the reference table's row order:
    identity, transpositions, 3-cycles, 4-cycles, double transpositions.
    """
    return [parse_perm(text, rank=2) for text in TABLE_ORDER]
