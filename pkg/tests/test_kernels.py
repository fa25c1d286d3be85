"""Compiled kernels must agree with the pure-Python reference.

Parity is checked on randomized inputs for every exported kernel, and
the word-index arithmetic is cross-checked against the slow operator
calculus (unitary products, the canonical shift, cocycles).
"""

import random

import pytest

from o2endo import _kernels_py as pure
from o2endo.endos import PermEndomorphism, permutation_unitary
from o2endo.levels import embed_to_level
from o2endo.perms import PermSpec, all_perm_specs, parse_perm
from o2endo.words import (
    AlgebraElement,
    all_words,
    canonical_shift,
    multiply,
    word_index,
)

try:
    from o2endo import _kernels as compiled
except ImportError:
    compiled = None

needs_extension = pytest.mark.skipif(
    compiled is None, reason="compiled extension not built"
)

RNG = random.Random(40320)


def random_perm(level):
    p = list(range(1 << level))
    RNG.shuffle(p)
    return p


@needs_extension
class TestParity:
    def test_compose_invert_identity(self):
        for _ in range(50):
            level = RNG.randint(1, 4)
            p, q = random_perm(level), random_perm(level)
            assert compiled.compose_perm(p, q) == pure.compose_perm(p, q)
            assert compiled.invert_perm(p) == pure.invert_perm(p)
            assert compiled.is_identity_perm(p) == pure.is_identity_perm(p)

    def test_pad_and_shift(self):
        for _ in range(30):
            level = RNG.randint(1, 3)
            p = random_perm(level)
            extra = RNG.randint(0, 3)
            assert compiled.pad_suffix_perm(p, extra) == pure.pad_suffix_perm(p, extra)
            shift = RNG.randint(0, 2)
            total = level + shift + RNG.randint(0, 2)
            assert compiled.shift_prefix_perm(p, level, shift, total) == (
                pure.shift_prefix_perm(p, level, shift, total)
            )

    def test_cocycle(self):
        for _ in range(20):
            level = RNG.randint(1, 3)
            p = random_perm(level)
            steps = RNG.randint(1, 4)
            assert compiled.cocycle_perm(p, level, steps) == (
                pure.cocycle_perm(p, level, steps)
            )

    def test_commutant_labels(self):
        for _ in range(20):
            level = RNG.randint(1, 3)
            p = random_perm(level)
            k = RNG.randint(1, 2)
            assert compiled.commutant_labels(p, level, k) == (
                pure.commutant_labels(p, level, k)
            )


def unitary_action_on_words(u, total):
    """Word-index permutation x -> y with u s_x = s_y, via real products."""
    out = []
    for w in all_words(total):
        image = multiply(u, AlgebraElement({(w, ""): 1}))
        ((gamma, beta, coeff),) = image.terms()
        assert beta == "" and coeff == 1
        out.append(word_index(gamma))
    return out


class TestAgainstOperatorCalculus:
    def test_pad_matches_left_multiplication(self):
        for spec in all_perm_specs(2):
            u = permutation_unitary(spec)
            p = list(spec.mapping)
            for extra in (0, 1, 2):
                assert pure.pad_suffix_perm(p, extra) == (
                    unitary_action_on_words(u, 2 + extra)
                )

    def test_shift_matches_canonical_shift(self):
        spec = parse_perm("(1342)")
        u = permutation_unitary(spec)
        p = list(spec.mapping)
        phi_u = canonical_shift(u)
        assert pure.shift_prefix_perm(p, 2, 1, 3) == (
            unitary_action_on_words(phi_u, 3)
        )
        assert pure.shift_prefix_perm(p, 2, 2, 4) == (
            unitary_action_on_words(canonical_shift(phi_u), 4)
        )

    def test_cocycle_matches_word_route(self):
        for name in ("(13)", "(142)", "(1243)"):
            rho = PermEndomorphism(parse_perm(name))
            p = list(rho.spec.mapping)
            for steps in (1, 2, 3):
                assert pure.cocycle_perm(p, 2, steps) == (
                    unitary_action_on_words(rho.cocycle(steps), steps + 1)
                )

    def test_shift_rejects_short_total(self):
        with pytest.raises(ValueError):
            pure.shift_prefix_perm([0, 1], 1, 2, 2)
