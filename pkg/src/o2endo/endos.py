"""Endomorphisms induced by gauge-invariant unitaries.

A unitary u of gauge degree zero induces the unital *-endomorphism
lambda_u with lambda_u(s_i) = u s_i.  On a word s_alpha of length m
this gives u_m s_alpha, where u_m = u phi(u) ... phi^{m-1}(u) is the
product cocycle of the canonical shift phi, and on the level-k matrix
algebra lambda_u acts as conjugation by u_k.

Composition obeys lambda_u . lambda_w = lambda_{lambda_u(w) u} (the
right factor applied first), and the inner endomorphism Ad(v) is
lambda_{v phi(v*)}.  Endomorphism equality is always decided on the
generator images s_1, s_2, which determine the whole map.

Permutation unitaries u_sigma = sum_alpha s_{sigma(alpha)} s_alpha*
keep their PermSpec alongside, which enables fast index-permutation
arithmetic (kernels in _accel) for order detection and sweeps.
"""

from __future__ import annotations

from . import _accel
from .errors import NotUnitary, WordError
from .perms import PermSpec, parse_perm
from .words import (
    AlgebraElement,
    canonical_shift,
    expanded_form,
    index_word,
    multiply,
    word_index,
)


class _NotFound:
    """Sentinel for bounded searches that exhausted their budget."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "NotFoundWithinBound"

    def __bool__(self) -> bool:
        return False


NOT_FOUND_WITHIN_BOUND = _NotFound()


def permutation_unitary(spec: PermSpec) -> AlgebraElement:
    """u_sigma = sum over words alpha of s_{sigma(alpha)} s_alpha*."""
    k = spec.rank
    return AlgebraElement(
        {
            (index_word(spec.mapping[i], k), index_word(i, k)): 1
            for i in range(1 << k)
        }
    )


def as_perm_spec(u: AlgebraElement) -> PermSpec | None:
    """Recognize a permutation unitary, returning its spec, else None."""
    if not u.is_gauge_invariant():
        return None
    rank = max(1, u.max_word_length())
    expanded = expanded_form(u, rank)
    size = 1 << rank
    if len(expanded) != size:
        return None
    mapping = [-1] * size
    for (alpha, beta), coeff in expanded.items():
        if coeff != 1:
            return None
        mapping[word_index(beta)] = word_index(alpha)
    if sorted(mapping) != list(range(size)):
        return None
    return PermSpec(rank, tuple(mapping))


class Endomorphism:
    """lambda_u for a degree-zero unitary u in the word calculus."""

    def __init__(self, unitary: AlgebraElement, check: bool = True):
        if check:
            if not unitary.is_gauge_invariant():
                raise NotUnitary("inducing element must have gauge degree 0")
            if not unitary.is_unitary():
                raise NotUnitary(f"not unitary: {unitary}")
        self.unitary = unitary
        self.rank = max(1, unitary.max_word_length())
        self._cocycles: dict[int, AlgebraElement] = {
            0: AlgebraElement.unit(),
            1: unitary,
        }
        self._images: tuple[AlgebraElement, AlgebraElement] | None = None

    def cocycle(self, m: int) -> AlgebraElement:
        """u_m = u phi(u) ... phi^{m-1}(u); lambda(s_alpha) = u_m s_alpha."""
        if m not in self._cocycles:
            self._cocycles[m] = multiply(
                self.unitary, canonical_shift(self.cocycle(m - 1))
            )
        return self._cocycles[m]

    def apply(self, x: AlgebraElement) -> AlgebraElement:
        """Extend s_i -> u s_i multiplicatively and *-linearly."""
        acc = AlgebraElement.zero()
        for a, b, c in x.terms():
            left = multiply(self.cocycle(len(a)), AlgebraElement.monomial(a, ""))
            right = multiply(self.cocycle(len(b)), AlgebraElement.monomial(b, ""))
            acc = acc + multiply(left, right.adjoint()).scale(c)
        return acc

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        return self.apply(x)

    def generator_images(self) -> tuple[AlgebraElement, AlgebraElement]:
        if self._images is None:
            self._images = (
                self.apply(AlgebraElement.generator("1")),
                self.apply(AlgebraElement.generator("2")),
            )
        return self._images

    def agrees_with(self, other: "Endomorphism") -> bool:
        """Equality as endomorphisms (generator images determine the map)."""
        return self.generator_images() == other.generator_images()

    def is_identity_on_generators(self) -> bool:
        return self.generator_images() == (
            AlgebraElement.generator("1"),
            AlgebraElement.generator("2"),
        )

    def __repr__(self) -> str:
        return f"<Endomorphism u={self.unitary}>"


class PermEndomorphism(Endomorphism):
    """lambda_{u_sigma} with the permutation kept for fast arithmetic."""

    def __init__(self, spec: PermSpec):
        super().__init__(permutation_unitary(spec), check=False)
        self.spec = spec
        self.rank = spec.rank

    @classmethod
    def from_text(cls, text: str, rank: int | None = None) -> "PermEndomorphism":
        return cls(parse_perm(text, rank))

    @classmethod
    def identity(cls, rank: int = 2) -> "PermEndomorphism":
        return cls(PermSpec.identity(rank))

    def __repr__(self) -> str:
        return f"<PermEndomorphism {self.spec.cycle_notation()}>"


def make_endomorphism(unitary: AlgebraElement, check: bool = True) -> Endomorphism:
    """Wrap a unitary, promoting to PermEndomorphism when recognizable."""
    spec = as_perm_spec(unitary)
    if spec is not None:
        return PermEndomorphism(spec)
    return Endomorphism(unitary, check=check)


def endo_apply(rho: Endomorphism, x: AlgebraElement) -> AlgebraElement:
    return rho.apply(x)


def endo_compose(outer: Endomorphism, inner: Endomorphism) -> Endomorphism:
    """outer after inner, induced by lambda_outer(w) u for inner = lambda_w."""
    unitary = multiply(outer.apply(inner.unitary), outer.unitary)
    # product of unitaries under a *-homomorphism; no re-check needed
    return make_endomorphism(unitary, check=False)


def compose_perm_specs(outer: PermSpec, inner: PermSpec) -> PermSpec:
    """Index-permutation form of endo_compose for permutation unitaries.

    The result lives at level rank(inner) + rank(outer) - 1.
    """
    ru, rw = outer.rank, inner.rank
    total = rw + ru - 1
    coc = _accel.cocycle_perm(list(outer.mapping), ru, rw)
    lam_w = _accel.compose_perm(
        _accel.compose_perm(coc, _accel.pad_suffix_perm(list(inner.mapping), total - rw)),
        _accel.invert_perm(coc),
    )
    return PermSpec(
        total,
        tuple(
            _accel.compose_perm(
                lam_w, _accel.pad_suffix_perm(list(outer.mapping), total - ru)
            )
        ),
    )


def ad_endomorphism(v: AlgebraElement) -> Endomorphism:
    """Ad(v): x -> v x v*, realized as lambda_{v phi(v*)}."""
    if not v.is_gauge_invariant() or not v.is_unitary():
        raise NotUnitary(f"Ad requires a degree-0 unitary, got {v}")
    return make_endomorphism(multiply(v, canonical_shift(v.adjoint())), check=False)


def _perm_order(spec: PermSpec, bound: int):
    p = list(spec.mapping)
    rank = spec.rank
    v, lv = p, rank
    for n in range(1, bound + 1):
        if _accel.is_identity_perm(v):
            return n
        if n == bound:
            break
        total = lv + rank - 1
        coc = _accel.cocycle_perm(p, rank, lv)
        lam = _accel.compose_perm(
            _accel.compose_perm(coc, _accel.pad_suffix_perm(v, total - lv)),
            _accel.invert_perm(coc),
        )
        v = _accel.compose_perm(lam, _accel.pad_suffix_perm(p, total - rank))
        lv = total
    return NOT_FOUND_WITHIN_BOUND


def automorphism_order(rho: Endomorphism, bound: int = 8):
    """Least n <= bound with rho^n = id on generators, else the sentinel.

    rho^n(s_i) = v_n s_i with v_1 = u and v_{n+1} = lambda_u(v_n) u, so
    rho^n is the identity exactly when v_n = 1; for permutation
    unitaries v_n stays a permutation and the check runs on indices.
    """
    if bound < 1:
        raise WordError(f"order bound must be >= 1, got {bound}")
    if isinstance(rho, PermEndomorphism):
        return _perm_order(rho.spec, bound)
    current = rho
    for n in range(1, bound + 1):
        if current.is_identity_on_generators():
            return n
        if n < bound:
            current = endo_compose(rho, current)
    return NOT_FOUND_WITHIN_BOUND
