"""Restriction of a permutation endomorphism to the diagonal.

The diagonal subalgebra is spanned by the projections s_w s_w*, whose
supports are the cylinder sets of the Cantor space {1,2}^infinity.  A
rank-2 permutation endomorphism maps each depth-d diagonal projection
to a sum of depth-(d+1) diagonal projections, so its restriction is
described combinatorially: the images of the depth-d words form a
partition of depth-(d+1) words.

The restriction is an automorphism exactly when these image partitions
generate every cylinder in the limit.  Since the depth-(m+1) image
partition refines the depth-m one, the "capture depth" g(m) (the
largest d such that every depth-d cylinder is a union of image atoms
at depth m) is non-decreasing; the analyzer reports

* True  when g(depth_cap) = depth_cap (capture keeps full pace, every
  cylinder inspected is generated),
* False when a strict deficit persists and g stalls across two
  consecutive depths (the automaton structure of permutation images
  makes a stalled deficit permanent),
* Inconclusive otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .endos import PermEndomorphism
from .errors import NotDiagonal, WordError
from .words import AlgebraElement, all_words

DEFAULT_DEPTH_CAP = 6
_MAX_DEPTH = 16


class _Inconclusive:
    """Sentinel verdict for an exhausted but undecided search."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "Inconclusive"

    def __bool__(self) -> bool:
        return False


INCONCLUSIVE = _Inconclusive()


@dataclass(frozen=True)
class CylinderSet:
    """A union of depth-d cylinders, stored as the set of d-words."""

    depth: int
    members: frozenset[str]

    def __post_init__(self):
        if self.depth < 0 or self.depth > _MAX_DEPTH:
            raise WordError(f"cylinder depth out of range: {self.depth}")
        if any(len(w) != self.depth for w in self.members):
            raise WordError("cylinder member of wrong length")

    @classmethod
    def from_words(cls, depth: int, words) -> "CylinderSet":
        return cls(depth, frozenset(words))

    def refine(self, depth: int) -> "CylinderSet":
        """Re-express at a finer depth; represents the same set."""
        if depth < self.depth:
            raise WordError(f"cannot coarsen depth {self.depth} to {depth}")
        pad = depth - self.depth
        return CylinderSet(
            depth,
            frozenset(w + t for w in self.members for t in all_words(pad)),
        )

    def is_empty(self) -> bool:
        return not self.members

    def common_prefix_length(self) -> int:
        """Length of the longest prefix shared by all members."""
        if not self.members:
            return self.depth
        first = min(self.members)
        last = max(self.members)
        n = 0
        while n < len(first) and first[n] == last[n]:
            n += 1
        return n

    def render(self) -> str:
        return "{" + ", ".join(sorted(self.members)) + "}"

    def __str__(self) -> str:
        return self.render()


def diagonal_image(rho: PermEndomorphism, w: str) -> CylinderSet:
    """Image of the projection s_w s_w*, as cylinders at depth |w|+1.

    Canonical form may have merged image words to different lengths;
    each is refined to the common target depth.
    """
    proj = AlgebraElement.monomial(w, w)
    image = rho.apply(proj)
    depth = len(w) + rho.rank - 1
    acc: set[str] = set()
    for a, b, c in image.terms():
        if a != b or c != 1:
            raise NotDiagonal(
                f"image of s_{{{w},{w}}} is not a diagonal projection: {image}"
            )
        pad = depth - len(a)
        if pad < 0:
            raise NotDiagonal(f"image word {a!r} deeper than {depth}")
        acc.update(a + t for t in all_words(pad))
    return CylinderSet(depth, frozenset(acc))


def image_partition(rho: PermEndomorphism, depth: int) -> list[CylinderSet]:
    """Images of all depth-`depth` words; checked to be a partition."""
    cells = [diagonal_image(rho, w) for w in all_words(depth)]
    seen: set[str] = set()
    for cell in cells:
        if seen & cell.members:
            raise NotDiagonal("image cells overlap")
        seen |= cell.members
    if len(seen) != 1 << (depth + rho.rank - 1):
        raise NotDiagonal("image cells do not cover the space")
    return cells


def capture_depths(rho: PermEndomorphism, depth_cap: int) -> tuple[int, ...]:
    """g(m) for m = 1..depth_cap: every depth-g(m) cylinder is a union
    of depth-m image atoms iff every atom lies in one depth-g cylinder,
    so g(m) is the least common-prefix length over the atoms."""
    out = []
    for m in range(1, depth_cap + 1):
        cells = image_partition(rho, m)
        out.append(min(cell.common_prefix_length() for cell in cells))
    return tuple(out)


def is_diagonal_automorphism(
    rho: PermEndomorphism, depth_cap: int = DEFAULT_DEPTH_CAP
):
    """Semi-decide whether the restriction to the diagonal is onto.

    Returns True, False, or INCONCLUSIVE; see the module docstring for
    the decision rule.  Injectivity is automatic (the images partition),
    so surjectivity at finite depth is the whole question.
    """
    if depth_cap < 2:
        raise WordError(f"depth cap must be >= 2, got {depth_cap}")
    return decide_from_captures(capture_depths(rho, depth_cap))


def decide_from_captures(g: tuple[int, ...]):
    """Apply the pace/stall rule to a capture-depth sequence."""
    if g[-1] == len(g):
        return True
    # g[i-1] is the capture depth at depth i (1-based)
    for i in range(1, len(g)):
        if g[i] == g[i - 1] and g[i - 1] < i:
            return False
    return INCONCLUSIVE
