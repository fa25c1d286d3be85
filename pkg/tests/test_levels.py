"""Level matrices: embedding, partial trace, tensor legs."""

from fractions import Fraction

import pytest

from conftest import random_uhf_element
from o2endo.errors import BadLevels, LevelTooSmall, NonZeroGaugeDegree
from o2endo.levels import (
    LevelMatrix,
    embed_to_level,
    expect_onto_level,
    matrix_from_flat,
    tensor,
    to_algebra_element,
)
from o2endo.words import (
    AlgebraElement,
    canonical_shift,
    gauge_expectation,
    multiply,
    omega,
)


class TestLevelMatrix:
    def test_unit_products(self):
        e01 = LevelMatrix.unit(1, 0, 1)
        e10 = LevelMatrix.unit(1, 1, 0)
        assert e01 * e10 == LevelMatrix.unit(1, 0, 0)
        assert e10 * e01 == LevelMatrix.unit(1, 1, 1)
        assert (e01 * e01).is_zero()

    def test_adjoint_transposes(self):
        m = LevelMatrix(1, [[1, 2], [3, 4]])
        assert m.adjoint() == LevelMatrix(1, [[1, 3], [2, 4]])

    def test_trace(self):
        m = LevelMatrix(1, [[1, 2], [3, 4]])
        assert m.trace() == 5
        assert m.normalized_trace() == Fraction(5, 2)

    def test_level_mismatch_raises(self):
        with pytest.raises(BadLevels):
            LevelMatrix.identity(1) + LevelMatrix.identity(2)

    def test_flat_round_trip(self, rng):
        for level in (1, 2, 3):
            size = 1 << level
            m = LevelMatrix(
                level,
                [
                    [Fraction(rng.randint(-3, 3)) for _ in range(size)]
                    for _ in range(size)
                ],
            )
            assert matrix_from_flat(level, m.flat()) == m


class TestEmbed:
    def test_monomial_is_matrix_unit(self):
        m = embed_to_level(AlgebraElement.monomial("12", "21"), 2)
        assert m == LevelMatrix.unit(2, 1, 2)

    def test_padding_is_identity_on_trailing_legs(self):
        x = AlgebraElement.monomial("1", "2")
        m = embed_to_level(x, 2)
        expected = tensor(LevelMatrix.unit(1, 0, 1), LevelMatrix.identity(1))
        assert m == expected

    def test_multiplicative(self, rng):
        for _ in range(100):
            x = random_uhf_element(rng, 2)
            y = random_uhf_element(rng, 2)
            assert embed_to_level(multiply(x, y), 2) == embed_to_level(
                x, 2
            ) * embed_to_level(y, 2)

    def test_round_trip(self, rng):
        for _ in range(100):
            x = gauge_expectation(random_uhf_element(rng, 3))
            assert to_algebra_element(embed_to_level(x, 3)) == x

    def test_rejects_nonzero_degree(self):
        with pytest.raises(NonZeroGaugeDegree):
            embed_to_level(AlgebraElement.generator(1), 2)

    def test_rejects_too_small_level(self):
        with pytest.raises(LevelTooSmall):
            embed_to_level(AlgebraElement.monomial("121", "112"), 2)

    def test_shift_is_tensor_with_leading_identity(self, rng):
        # phi(x) = 1 (x) x with the fresh leg in front
        for _ in range(100):
            x = random_uhf_element(rng, 2)
            lhs = embed_to_level(canonical_shift(x), 3)
            rhs = tensor(LevelMatrix.identity(1), embed_to_level(x, 2))
            assert lhs == rhs


class TestExpectOntoLevel:
    def test_unital(self):
        assert expect_onto_level(LevelMatrix.identity(3), 1) == (
            LevelMatrix.identity(1)
        )

    def test_identity_on_embedded_elements(self, rng):
        for _ in range(100):
            x = random_uhf_element(rng, 2)
            m2 = embed_to_level(x, 2)
            m4 = embed_to_level(x, 4)
            assert expect_onto_level(m4, 2) == m2

    def test_bimodule_property(self, rng):
        # E(a x b) = a E(x) b for a, b already at the target level
        for _ in range(60):
            a = embed_to_level(random_uhf_element(rng, 2), 2)
            b = embed_to_level(random_uhf_element(rng, 2), 2)
            size = 8
            x = LevelMatrix(
                3,
                [
                    [Fraction(rng.randint(-2, 2)) for _ in range(size)]
                    for _ in range(size)
                ],
            )
            big_a = embed_to_level(to_algebra_element(a), 3)
            big_b = embed_to_level(to_algebra_element(b), 3)
            lhs = expect_onto_level(big_a * x * big_b, 2)
            rhs = a * expect_onto_level(x, 2) * b
            assert lhs == rhs

    def test_preserves_normalized_trace(self, rng):
        for _ in range(100):
            size = 8
            x = LevelMatrix(
                3,
                [
                    [Fraction(rng.randint(-3, 3)) for _ in range(size)]
                    for _ in range(size)
                ],
            )
            assert expect_onto_level(x, 1).normalized_trace() == (
                x.normalized_trace()
            )

    def test_matches_omega(self, rng):
        # omega on the word side equals the normalized trace on the
        # matrix side
        for _ in range(100):
            x = random_uhf_element(rng, 3)
            assert omega(x) == embed_to_level(x, 3).normalized_trace()

    def test_rejects_bad_target(self):
        with pytest.raises(BadLevels):
            expect_onto_level(LevelMatrix.identity(1), 2)
