"""Finite-level relative commutants of an induced endomorphism.

An element x of the level-k matrix algebra commutes with every
lambda_u(y) exactly when x is a fixed point of the transfer map
Psi(x) = u phi(x) u* (sum of lambda(s_i) x lambda(s_i)*): Psi(x) = x
forces x lambda(s_i) = lambda(s_i) x directly, and conversely those
relations give Psi(x) = x since the lambda(s_i) ranges sum to 1.

For permutation unitaries both Psi(x) and the plain embedding of x
have at most one source coordinate of x per matrix position, so the
linear system splits into equalities c_s = c_t and annihilations
c_s = 0; union-find over coordinates solves it in linear time (kernels
in _accel).  A dense nullspace solve over the rationals is available
for arbitrary degree-0 unitaries and doubles as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _accel
from .endos import Endomorphism, PermEndomorphism
from .errors import WordError
from .levels import embed_to_level, matrix_from_flat, to_algebra_element
from .linalg import Subspace, nullspace
from .words import AlgebraElement, all_words, canonical_shift, multiply

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class CommutantWitness:
    """A non-scalar finite-level element commuting with the image."""

    level: int
    element: AlgebraElement
    verified: bool


def _labels_to_subspace(labels: list, level: int) -> Subspace:
    by_root: dict[int, list[int]] = {}
    for idx, root in enumerate(labels):
        if root >= 0:
            by_root.setdefault(root, []).append(idx)
    n = len(labels)
    vectors = []
    for root in sorted(by_root):
        vec = [_ZERO] * n
        for idx in by_root[root]:
            vec[idx] = _ONE
        vectors.append(vec)
    return Subspace.from_vectors(level, vectors)


def _dense_fixed_points(rho: Endomorphism, k: int) -> Subspace:
    """Nullspace formulation of Psi(x) = x, any degree-0 unitary."""
    u = rho.unitary
    ustar = u.adjoint()
    m = max(k + 1, rho.rank)
    columns = []
    for a in all_words(k):
        for b in all_words(k):
            e = AlgebraElement.monomial(a, b)
            psi = multiply(multiply(u, canonical_shift(e)), ustar)
            columns.append(embed_to_level(psi - e, m).flat())
    equations = list(zip(*columns))
    return Subspace.from_vectors(k, nullspace(equations, len(columns)))


def commutant_fixed_points(rho: Endomorphism, k: int) -> Subspace:
    """Level-k part of the commutant of the image of lambda_u.

    Always contains the scalars; dimension > 1 certifies reducibility.
    """
    if k < 1:
        raise WordError(f"level must be >= 1, got {k}")
    if isinstance(rho, PermEndomorphism):
        labels, _ = _accel.commutant_labels(list(rho.spec.mapping), rho.rank, k)
        return _labels_to_subspace(labels, k)
    return _dense_fixed_points(rho, k)


def commutant_dims(rho: Endomorphism, depth_cap: int) -> tuple[int, ...]:
    return tuple(
        commutant_fixed_points(rho, k).dim for k in range(1, depth_cap + 1)
    )


def commutant_witness(rho: Endomorphism, k: int) -> CommutantWitness | None:
    """A non-scalar fixed point at level k, re-verified independently.

    The verification multiplies out x lambda(s_i) = lambda(s_i) x in the
    word calculus, bypassing the linear solver entirely.
    """
    space = commutant_fixed_points(rho, k)
    identity_flat = embed_to_level(AlgebraElement.unit(), k).flat()
    for vec in space.basis:
        candidate = to_algebra_element(matrix_from_flat(k, vec))
        if not _is_scalar(candidate):
            img1, img2 = rho.generator_images()
            ok = all(
                multiply(candidate, img) == multiply(img, candidate)
                for img in (img1, img2)
            )
            return CommutantWitness(level=k, element=candidate, verified=ok)
    if not space.contains(identity_flat):
        raise WordError("fixed-point space lost the scalars")
    return None


def _is_scalar(x: AlgebraElement) -> bool:
    terms = x.terms()
    return not terms or (len(terms) == 1 and terms[0][:2] == ("", ""))


def _uhf_labels(mapping: tuple[int, ...], rank: int, k: int, m: int):
    """Union-find for x at level m commuting with lambda(e) for all
    level-k matrix units e; permutation unitaries only.

    lambda(e_{alpha beta}) = u_k e u_k* is a partial isometry whose
    matrix positions are (c(alpha g), c(beta g)) at level T = k+rank-1,
    c the cocycle permutation.  Each equation of x lambda(e) = lambda(e) x
    again touches at most two coordinates of x.
    """
    p = list(mapping)
    T = k + rank - 1
    M = max(m, T)
    coc = _accel.cocycle_perm(p, rank, k)
    nm = 1 << m
    n_unknown = nm * nm
    zero = n_unknown
    parent = list(range(n_unknown + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    mask_mt = (1 << (M - T)) - 1
    mask_mm = (1 << (M - m)) - 1
    half = 1 << (rank - 1)
    for ia in range(1 << k):
        for ib in range(1 << k):
            rows = {}
            cols = {}
            for g in range(half):
                d0 = coc[(ia << (rank - 1)) | g]
                t0 = coc[(ib << (rank - 1)) | g]
                rows[d0] = t0
                cols[t0] = d0
            for d0, t0 in rows.items():
                for h in range(1 << (M - T)):
                    delta = (d0 << (M - T)) | h
                    tau = (t0 << (M - T)) | h
                    # positions where x lambda(e) is nonzero
                    dsuf = delta & mask_mm
                    for g0 in range(nm):
                        gamma = (g0 << (M - m)) | dsuf
                        src1 = (g0 << m) | (delta >> (M - m))
                        t0b = rows.get(gamma >> (M - T))
                        if t0b is None:
                            union(src1, zero)
                            continue
                        dp = (t0b << (M - T)) | (gamma & mask_mt)
                        if (dp & mask_mm) == (tau & mask_mm):
                            src2 = ((dp >> (M - m)) << m) | (tau >> (M - m))
                            union(src1, src2)
                        else:
                            union(src1, zero)
                    # positions where lambda(e) x is nonzero, x lambda(e) not
                    gamma = delta
                    dprime = tau
                    psuf = dprime & mask_mm
                    for t0v in range(nm):
                        tau2 = (t0v << (M - m)) | psuf
                        src2 = ((dprime >> (M - m)) << m) | t0v
                        d0b = cols.get(tau2 >> (M - T))
                        if d0b is None:
                            union(src2, zero)
                            continue
                        dd = (d0b << (M - T)) | (tau2 & mask_mt)
                        if (gamma & mask_mm) != (dd & mask_mm):
                            union(src2, zero)
    zero_root = find(zero)
    labels = []
    for t in range(n_unknown):
        r = find(t)
        labels.append(-1 if r == zero_root else r)
    return labels


def _dense_uhf(rho: Endomorphism, k: int, m: int) -> Subspace:
    T = k + rho.rank - 1
    M = max(m, T)
    lam_units = [
        rho.apply(AlgebraElement.monomial(a, b))
        for a in all_words(k)
        for b in all_words(k)
    ]
    columns = []
    for a in all_words(m):
        for b in all_words(m):
            e = AlgebraElement.monomial(a, b)
            flats = []
            for lam in lam_units:
                diff = multiply(e, lam) - multiply(lam, e)
                flats.extend(embed_to_level(diff, M).flat())
            columns.append(flats)
    equations = list(zip(*columns))
    return Subspace.from_vectors(m, nullspace(equations, len(columns)))


def uhf_commutant(rho: Endomorphism, k: int, m: int) -> Subspace:
    """Elements at level m commuting with the images of all level-k
    matrix units; non-increasing in k.  A dimension that stays > 1 as
    k grows witnesses reducibility of the gauge-invariant restriction.
    """
    if k < 1 or m < 1:
        raise WordError(f"levels must be >= 1, got k={k}, m={m}")
    if isinstance(rho, PermEndomorphism):
        labels = _uhf_labels(rho.spec.mapping, rho.rank, k, m)
        return _labels_to_subspace(labels, m)
    return _dense_uhf(rho, k, m)


def uhf_commutant_dims(rho: Endomorphism, k_max: int, m: int) -> tuple[int, ...]:
    return tuple(uhf_commutant(rho, k, m).dim for k in range(1, k_max + 1))
