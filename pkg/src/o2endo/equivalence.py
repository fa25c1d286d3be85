"""Inner equivalence between endomorphisms by bounded witness search.

rho' is inner-equivalent to rho when rho' = Ad(v) . rho for some
unitary v.  The search space here is the permutation unitaries of rank
up to a bound (2 candidates at rank 1, 24 at rank 2, 40320 at rank 3),
scanned in lexicographic (rank, one-line) order; the first verifying
witness is returned.  A miss never certifies inequivalence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .endos import (
    NOT_FOUND_WITHIN_BOUND,
    Endomorphism,
    PermEndomorphism,
    permutation_unitary,
)
from .errors import WordError
from .perms import PermSpec, all_perm_specs, table_order_specs
from .words import AlgebraElement, multiply


@dataclass(frozen=True)
class EquivalenceWitness:
    """v with v rho(s_i) v* = rho'(s_i); re-verified at construction."""

    left: PermSpec
    right: PermSpec
    witness: AlgebraElement
    witness_rank: int
    witness_spec: PermSpec


def _conjugated_images(
    v: AlgebraElement, images: tuple[AlgebraElement, AlgebraElement]
) -> tuple[AlgebraElement, AlgebraElement]:
    vstar = v.adjoint()
    return tuple(multiply(multiply(v, img), vstar) for img in images)


def _candidate_specs(rank_bound: int):
    for rank in range(1, rank_bound + 1):
        yield from all_perm_specs(rank)


def inner_equivalence_witness(
    rho: PermEndomorphism, rho_prime: PermEndomorphism, rank_bound: int = 2
):
    """First permutation witness v with Ad(v) . rho = rho_prime, or the
    NOT_FOUND_WITHIN_BOUND sentinel."""
    if rank_bound not in (1, 2, 3):
        raise WordError(f"witness rank bound must be 1, 2 or 3: {rank_bound}")
    if isinstance(rho, PermSpec):
        rho = PermEndomorphism(rho)
    if isinstance(rho_prime, PermSpec):
        rho_prime = PermEndomorphism(rho_prime)
    source = rho.generator_images()
    target = rho_prime.generator_images()
    for spec in _candidate_specs(rank_bound):
        v = permutation_unitary(spec)
        if _conjugated_images(v, source) == target:
            return EquivalenceWitness(
                left=_spec_of(rho),
                right=_spec_of(rho_prime),
                witness=v,
                witness_rank=spec.rank,
                witness_spec=spec,
            )
    return NOT_FOUND_WITHIN_BOUND


def _spec_of(rho: Endomorphism) -> PermSpec:
    if isinstance(rho, PermEndomorphism):
        return rho.spec
    raise WordError("witness bookkeeping requires permutation endomorphisms")


def equivalence_classes(rank_bound: int = 2) -> list[list[PermSpec]]:
    """Partition of the 24 rank-2 permutations under the bounded search.

    One scan per (candidate, left endomorphism) pair: conjugating the
    generator images of `left` by the candidate and looking the result
    up among all 24 image pairs finds every relation the pairwise
    search would, in one pass.  Classes keep table order, and the list
    is ordered by each class's first row.
    """
    if rank_bound not in (2, 3):
        raise WordError(f"class search rank bound must be 2 or 3: {rank_bound}")
    specs = table_order_specs()
    endos = [PermEndomorphism(s) for s in specs]
    by_images = {e.generator_images(): i for i, e in enumerate(endos)}
    if len(by_images) != len(endos):
        raise WordError("generator images fail to separate the 24 cases")
    parent = list(range(len(endos)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for spec in _candidate_specs(rank_bound):
        v = permutation_unitary(spec)
        for i, endo in enumerate(endos):
            j = by_images.get(_conjugated_images(v, endo.generator_images()))
            if j is not None and find(i) != find(j):
                parent[find(j)] = find(i)
    classes: dict[int, list[PermSpec]] = {}
    first_row: dict[int, int] = {}
    for i, spec in enumerate(specs):
        root = find(i)
        classes.setdefault(root, []).append(spec)
        first_row.setdefault(root, i)
    return [classes[r] for r in sorted(classes, key=first_row.__getitem__)]
