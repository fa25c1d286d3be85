"""The decreasing subspace invariant whose dimension is the index.

For a unitary u in the level-2 algebra and K = span{u s_1, u s_2}, the
spaces Xi_0 = F_2^1 (the level-1 algebra) and

    Xi_{s+1} = span{ s_i* u* x u s_j : x in Xi_s, i, j in {1, 2} }

form a decreasing chain inside the level-1 algebra (the step map is
monotone and Xi_1 is contained in Xi_0).  The chain stabilizes after at
most 4 strict drops; when the stable space Xi satisfies Xi^2 in Xi and
the two state conditions below, dim(Xi) is the index of the inclusion
induced by lambda_u:

    (a)  omega(a lambda_u(b)) = omega(a) omega(b)   for a in Xi, b in F_2^1,
    (b)  E_1(u* a u) = omega(a) 1                    for a in Xi,

with E_1 the normalized partial trace onto level 1.  For rank-2
permutation unitaries the resulting index always lies in {1, 2, 4}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .endos import Endomorphism
from .errors import IndexOutOfRange, NoStabilization, RankUnsupported
from .levels import (
    LevelMatrix,
    embed_to_level,
    expect_onto_level,
    matrix_from_flat,
    to_algebra_element,
)
from .linalg import Subspace
from .words import AlgebraElement, all_words, multiply, omega

_ITERATION_CAP = 8


@dataclass(frozen=True)
class Inapplicable:
    """Index undefined because the named hypothesis checks failed."""

    failed: tuple[str, ...]

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"Inapplicable(failed={list(self.failed)!r})"


@dataclass(frozen=True)
class XiCertificate:
    """Chain, stable subspace, hypothesis flags, and resulting index."""

    chain_dims: tuple[int, ...]
    xi: Subspace
    square_closed: bool
    condition_a: bool
    condition_b: bool
    index: Union[int, Inapplicable]

    def hypotheses_hold(self) -> bool:
        return self.square_closed and self.condition_a and self.condition_b

    def basis_elements(self) -> list[AlgebraElement]:
        return [
            to_algebra_element(matrix_from_flat(self.xi.ambient_level, vec))
            for vec in self.xi.basis
        ]


def _level_one_space(vectors) -> Subspace:
    return Subspace.from_vectors(1, vectors)


def _full_level_one() -> Subspace:
    units = []
    for a in all_words(1):
        for b in all_words(1):
            units.append(embed_to_level(AlgebraElement.monomial(a, b), 1).flat())
    return _level_one_space(units)


def _check_rank(rho: Endomorphism) -> None:
    if rho.rank > 2:
        raise RankUnsupported(
            f"subspace iteration needs a level-2 unitary, got rank {rho.rank}"
        )


def _xi_step(rho: Endomorphism, space: Subspace) -> Subspace:
    u = rho.unitary
    ustar = u.adjoint()
    gens = [AlgebraElement.generator(i) for i in "12"]
    vectors = []
    for vec in space.basis:
        x = to_algebra_element(matrix_from_flat(1, vec))
        squeezed = multiply(multiply(ustar, x), u)
        for si in gens:
            left = multiply(si.adjoint(), squeezed)
            for sj in gens:
                vectors.append(embed_to_level(multiply(left, sj), 1).flat())
    return _level_one_space(vectors)


def xi_subspace(rho: Endomorphism) -> XiCertificate:
    """Iterate to the stable subspace and run all hypothesis checks."""
    _check_rank(rho)
    current = _full_level_one()
    dims = [current.dim]
    for _ in range(_ITERATION_CAP):
        nxt = _xi_step(rho, current)
        dims.append(nxt.dim)
        if nxt == current:
            break
        current = nxt
    else:
        raise NoStabilization(
            f"no stable subspace within {_ITERATION_CAP} iterations: dims {dims}"
        )
    square = xi_square_check(current)
    cond_a = condition_a(rho, current)
    cond_b = condition_b(rho, current)
    if square and cond_a and cond_b:
        index: Union[int, Inapplicable] = current.dim
        if index not in (1, 2, 4):
            raise IndexOutOfRange(
                f"dimension {index} outside {{1, 2, 4}} with hypotheses passing"
            )
    else:
        failed = tuple(
            name
            for name, ok in (
                ("square_closed", square),
                ("condition_a", cond_a),
                ("condition_b", cond_b),
            )
            if not ok
        )
        index = Inapplicable(failed)
    return XiCertificate(
        chain_dims=tuple(dims),
        xi=current,
        square_closed=square,
        condition_a=cond_a,
        condition_b=cond_b,
        index=index,
    )


def xi_square_check(xi: Subspace) -> bool:
    """True when the subspace is closed under multiplication."""
    elements = [
        to_algebra_element(matrix_from_flat(xi.ambient_level, vec))
        for vec in xi.basis
    ]
    for x in elements:
        for y in elements:
            flat = embed_to_level(multiply(x, y), xi.ambient_level).flat()
            if not xi.contains(flat):
                return False
    return True


def condition_a(rho: Endomorphism, xi: Subspace) -> bool:
    """State factorization omega(a lambda_u(b)) = omega(a) omega(b)."""
    _check_rank(rho)
    u = rho.unitary
    ustar = u.adjoint()
    basis_a = [
        to_algebra_element(matrix_from_flat(xi.ambient_level, vec))
        for vec in xi.basis
    ]
    for a in basis_a:
        for i in all_words(1):
            for j in all_words(1):
                b = AlgebraElement.monomial(i, j)
                lam_b = multiply(multiply(u, b), ustar)
                if omega(multiply(a, lam_b)) != omega(a) * omega(b):
                    return False
    return True


def condition_b(rho: Endomorphism, xi: Subspace) -> bool:
    """Collapse under expectation: E_1(u* a u) = omega(a) 1."""
    _check_rank(rho)
    u = rho.unitary
    ustar = u.adjoint()
    for vec in xi.basis:
        a = to_algebra_element(matrix_from_flat(xi.ambient_level, vec))
        squeezed = multiply(multiply(ustar, a), u)
        reduced = expect_onto_level(embed_to_level(squeezed, 2), 1)
        if reduced != LevelMatrix.identity(1).scale(omega(a)):
            return False
    return True


def jones_index_via_xi(rho: Endomorphism) -> Union[int, Inapplicable]:
    """dim(Xi) when all hypotheses pass, else Inapplicable (named)."""
    return xi_subspace(rho).index
