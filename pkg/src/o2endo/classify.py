"""Verdicts for rank-2 permutation endomorphisms.

Decision tree, each branch backed by a machine-checkable certificate:

1. a finite order n with rho^n = id makes rho an automorphism; a
   bounded inner-witness search against the identity splits inn/out,
   and the index is 1;
2. otherwise a commutant dimension > 1 at some level <= depth_cap
   certifies reducibility, which forces index 4 (reducible inclusions
   have index >= (1+1)^2 = 4 and rank-2 inclusions at most 2^2 = 4);
3. otherwise the subspace invariant decides: when its hypotheses hold
   the endomorphism is irreducible with index dim(Xi); if they fail
   but the map factors through verified composition identities, the
   index follows by multiplicativity (automorphism factors contribute
   1, inner perturbations nothing).

Evidence from different branches is cross-checked; any conflict raises
ConsistencyViolation rather than guessing, and a case with no decisive
evidence raises InconclusiveError.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .commutant import CommutantWitness, commutant_dims, commutant_witness
from .diagonal import DEFAULT_DEPTH_CAP, capture_depths, decide_from_captures
from .endos import (
    NOT_FOUND_WITHIN_BOUND,
    PermEndomorphism,
    ad_endomorphism,
    automorphism_order,
    endo_compose,
    permutation_unitary,
)
from .equivalence import EquivalenceWitness, inner_equivalence_witness
from .errors import ConsistencyViolation, InconclusiveError, RankUnsupported, WordError
from .perms import PermSpec, parse_perm
from .words import render
from .xi import Inapplicable, XiCertificate, xi_subspace

ORDER_BOUND = 8

# composition identities: target = (kind, conjugator-or-left, right);
# "compose" is plain composition, "ad" conjugates the right factor by
# the named permutation unitary.  Right factors apply first.
IDENTITIES: tuple[tuple[str, str, str, str], ...] = (
    ("(34)", "compose", "(12)(34)", "(12)"),
    ("(1324)", "ad", "(13)(24)", "(12)"),
    ("(1423)", "ad", "(13)(24)", "(34)"),
    ("(24)", "compose", "(13)", "(13)(24)"),
    ("(1234)", "ad", "(13)(24)", "(24)"),
    ("(1432)", "ad", "(13)(24)", "(13)"),
    ("(134)", "compose", "(142)", "(13)(24)"),
)


@dataclass(frozen=True)
class Classification:
    """Verdict plus every certificate that backs it."""

    perm: PermSpec
    property: str
    index: int
    order: Optional[int]
    inner_witness: Optional[EquivalenceWitness]
    witness_rank_bound: int
    commutant_dims: tuple[int, ...]
    commutant: Optional[CommutantWitness]
    xi: XiCertificate
    factorization: Optional[tuple[str, ...]]
    diagonal_automorphism: bool
    diagonal_capture_depths: tuple[int, ...]
    entropy_label: str
    diagonal_entropy_label: str

    def to_payload(self) -> dict:
        xi_index: Union[int, dict]
        if isinstance(self.xi.index, Inapplicable):
            xi_index = {"inapplicable": list(self.xi.index.failed)}
        else:
            xi_index = self.xi.index
        witness = None
        if self.inner_witness is not None:
            witness = {
                "cycles": self.inner_witness.witness_spec.cycle_notation(),
                "rank": self.inner_witness.witness_rank,
                "element": render(self.inner_witness.witness),
            }
        com = None
        if self.commutant is not None:
            com = {
                "level": self.commutant.level,
                "element": render(self.commutant.element),
                "verified": self.commutant.verified,
            }
        return {
            "perm": self.perm.cycle_notation(),
            "one_line": list(self.perm.one_line()),
            "property": self.property,
            "index": self.index,
            "order": self.order,
            "order_bound": ORDER_BOUND,
            "inner_witness": witness,
            "witness_rank_bound": self.witness_rank_bound,
            "commutant": {
                "dims": list(self.commutant_dims),
                "witness": com,
            },
            "xi": {
                "chain_dims": list(self.xi.chain_dims),
                "basis": [render(e) for e in self.xi.basis_elements()],
                "square_closed": self.xi.square_closed,
                "condition_a": self.xi.condition_a,
                "condition_b": self.xi.condition_b,
                "index": xi_index,
            },
            "factorization": list(self.factorization)
            if self.factorization
            else None,
            "diagonal": {
                "automorphism": self.diagonal_automorphism,
                "capture_depths": list(self.diagonal_capture_depths),
            },
            "ht": self.entropy_label,
            "ht_diag": self.diagonal_entropy_label,
        }


def _as_spec(sigma) -> PermSpec:
    if isinstance(sigma, PermSpec):
        return sigma
    if isinstance(sigma, PermEndomorphism):
        return sigma.spec
    if isinstance(sigma, str):
        return parse_perm(sigma, rank=2)
    raise WordError(f"cannot interpret permutation input: {sigma!r}")


def _endo_index(rho: PermEndomorphism) -> Optional[int]:
    """Index of a factor endomorphism: 1 for automorphisms, else the
    subspace route when applicable."""
    if automorphism_order(rho, ORDER_BOUND) is not NOT_FOUND_WITHIN_BOUND:
        return 1
    value = xi_subspace(rho).index
    return value if isinstance(value, int) else None


def _factorization_trace(spec: PermSpec) -> Optional[tuple[tuple[str, ...], int]]:
    """Verified composition identity for this permutation, if listed.

    Returns the rendered trace lines and the multiplicativity-derived
    index; None when the permutation has no listed factorization or a
    factor index is itself unavailable.
    """
    key = spec.cycle_notation()
    for target, kind, first, second in IDENTITIES:
        if target != key:
            continue
        right = PermEndomorphism(parse_perm(second, rank=2))
        if kind == "compose":
            outer = PermEndomorphism(parse_perm(first, rank=2))
            composed = endo_compose(outer, right)
            outer_index = _endo_index(outer)
            right_index = _endo_index(right)
            if outer_index is None or right_index is None:
                return None
            derived = outer_index * right_index
            lines = (
                f"rho_{_bare(target)} = rho_{_bare(first)} . rho_{_bare(second)}",
                f"index {outer_index} x {right_index} = {derived}",
            )
        else:
            conj = ad_endomorphism(
                permutation_unitary(parse_perm(first, rank=2))
            )
            composed = endo_compose(conj, right)
            right_index = _endo_index(right)
            if right_index is None:
                return None
            derived = right_index
            lines = (
                f"rho_{_bare(target)} = Ad(u_{_bare(first)}) . rho_{_bare(second)}",
                f"index {derived} (inner perturbation preserves it)",
            )
        if not composed.agrees_with(PermEndomorphism(spec)):
            raise ConsistencyViolation(
                f"stored identity for {key} fails on generator images"
            )
        return lines, derived
    return None


def _bare(cycles: str) -> str:
    return cycles if cycles.count("(") > 1 else cycles.strip("()")


def classify(sigma, depth_cap: int = 3, rank_bound: int = 2) -> Classification:
    """Full verdict for one rank-2 permutation; see module docstring."""
    spec = _as_spec(sigma)
    if spec.rank != 2:
        raise RankUnsupported(f"classification is rank-2 only, got {spec.rank}")
    if depth_cap < 2:
        raise WordError(f"depth cap must be >= 2, got {depth_cap}")
    rho = PermEndomorphism(spec)
    order = automorphism_order(rho, ORDER_BOUND)
    dims = commutant_dims(rho, depth_cap)
    cert = xi_subspace(rho)
    g_depths = capture_depths(rho, DEFAULT_DEPTH_CAP)
    diag = decide_from_captures(g_depths)
    if diag not in (True, False):
        raise InconclusiveError(
            f"diagonal restriction undecided for {spec.cycle_notation()}"
        )

    inner = None
    witness = None
    factor_trace = None
    if order is not NOT_FOUND_WITHIN_BOUND:
        inner = inner_equivalence_witness(
            PermEndomorphism.identity(2), rho, rank_bound
        )
        prop = "inn" if inner is not NOT_FOUND_WITHIN_BOUND else "out"
        index = 1
        if any(d != 1 for d in dims):
            raise ConsistencyViolation(
                f"automorphism {spec.cycle_notation()} with nontrivial commutant {dims}"
            )
        if isinstance(cert.index, int) and cert.index != 1:
            raise ConsistencyViolation(
                f"automorphism {spec.cycle_notation()} with subspace index {cert.index}"
            )
        if diag is not True:
            raise ConsistencyViolation(
                f"automorphism {spec.cycle_notation()} failing on the diagonal"
            )
    elif any(d > 1 for d in dims):
        prop = "red"
        index = 4
        level = next(k for k, d in enumerate(dims, start=1) if d > 1)
        witness = commutant_witness(rho, level)
        if witness is None or not witness.verified:
            raise ConsistencyViolation(
                f"reducibility witness for {spec.cycle_notation()} failed re-verification"
            )
        if isinstance(cert.index, int) and cert.index != 4:
            raise ConsistencyViolation(
                f"reducible {spec.cycle_notation()} with subspace index {cert.index}"
            )
    else:
        if isinstance(cert.index, int):
            index = cert.index
            if index == 1:
                raise ConsistencyViolation(
                    f"index 1 for {spec.cycle_notation()} without finite order"
                )
        else:
            fallback = _factorization_trace(spec)
            if fallback is None:
                raise InconclusiveError(
                    f"no decisive evidence for {spec.cycle_notation()} "
                    f"within depth {depth_cap}"
                )
            factor_trace, index = fallback
        prop = "irr"

    if factor_trace is None:
        listed = _factorization_trace(spec)
        if listed is not None:
            lines, derived = listed
            if derived != index:
                raise ConsistencyViolation(
                    f"multiplicativity gives {derived} for {spec.cycle_notation()}, "
                    f"direct route gives {index}"
                )
            factor_trace = lines

    inner_witness = inner if isinstance(inner, EquivalenceWitness) else None
    return Classification(
        perm=spec,
        property=prop,
        index=index,
        order=order if isinstance(order, int) else None,
        inner_witness=inner_witness,
        witness_rank_bound=rank_bound,
        commutant_dims=dims,
        commutant=witness,
        xi=cert,
        factorization=factor_trace,
        diagonal_automorphism=bool(diag),
        diagonal_capture_depths=g_depths,
        entropy_label="0" if prop in ("inn", "out") else "log 2",
        diagonal_entropy_label="0" if diag is True else "log 2",
    )


@dataclass(frozen=True)
class RelationCheck:
    """One verified composition identity with its index consequence."""

    name: str
    holds: bool
    derived_index: Optional[int]
    direct_index: Optional[int]

    @property
    def index_consistent(self) -> bool:
        return (
            self.derived_index is not None
            and self.derived_index == self.direct_index
        )

    @property
    def ok(self) -> bool:
        return self.holds and self.index_consistent


@dataclass(frozen=True)
class RelationReport:
    checks: tuple[RelationCheck, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_paper_relations() -> RelationReport:
    """Check the seven composition/conjugation identities on generator
    images, plus the index values they force by multiplicativity."""
    checks = []
    for target, kind, first, second in IDENTITIES:
        target_endo = PermEndomorphism(parse_perm(target, rank=2))
        right = PermEndomorphism(parse_perm(second, rank=2))
        if kind == "compose":
            outer = PermEndomorphism(parse_perm(first, rank=2))
            composed = endo_compose(outer, right)
            lhs = f"rho_{_bare(first)} . rho_{_bare(second)}"
            first_index = _endo_index(outer)
            second_index = _endo_index(right)
            derived = (
                None
                if first_index is None or second_index is None
                else first_index * second_index
            )
        else:
            conj = ad_endomorphism(permutation_unitary(parse_perm(first, rank=2)))
            composed = endo_compose(conj, right)
            lhs = f"Ad(u_{_bare(first)}) . rho_{_bare(second)}"
            derived = _endo_index(right)
        direct = _endo_index(target_endo)
        checks.append(
            RelationCheck(
                name=f"rho_{_bare(target)} = {lhs}",
                holds=composed.agrees_with(target_endo),
                derived_index=derived,
                direct_index=direct,
            )
        )
    return RelationReport(tuple(checks))
