"""Exact rational linear algebra: rref, nullspace, subspaces."""

import random
from fractions import Fraction

import pytest

from o2endo.linalg import Subspace, in_row_space, nullspace, rank, rref


def _random_matrix(rng, nrows, ncols, lo=-4, hi=4):
    return [
        [Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(ncols)]
        for _ in range(nrows)
    ]


def _mat_vec(rows, vec):
    return [sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in rows]


class TestRref:
    def test_known_case(self):
        rows = [[1, 2, 3], [2, 4, 6], [1, 1, 1]]
        reduced = rref([[Fraction(v) for v in r] for r in rows])
        assert reduced == (
            (Fraction(1), Fraction(0), Fraction(-1)),
            (Fraction(0), Fraction(1), Fraction(2)),
        )

    def test_idempotent(self, rng):
        for _ in range(100):
            rows = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
            once = rref(rows)
            assert rref(once) == once

    def test_pivots_normalized(self, rng):
        for _ in range(50):
            rows = _random_matrix(rng, 4, 5)
            for row in rref(rows):
                lead = next(v for v in row if v)
                assert lead == 1

    def test_rank_bounds(self, rng):
        for _ in range(100):
            n, m = rng.randint(1, 5), rng.randint(1, 5)
            rows = _random_matrix(rng, n, m)
            r = rank(rows)
            assert 0 <= r <= min(n, m)


class TestNullspace:
    def test_solutions_annihilate(self, rng):
        for _ in range(100):
            n, m = rng.randint(1, 5), rng.randint(1, 6)
            rows = _random_matrix(rng, n, m)
            for vec in nullspace(rows, m):
                assert all(v == 0 for v in _mat_vec(rows, vec))

    def test_rank_nullity(self, rng):
        for _ in range(100):
            n, m = rng.randint(1, 5), rng.randint(1, 6)
            rows = _random_matrix(rng, n, m)
            assert rank(rows) + len(nullspace(rows, m)) == m

    def test_empty_system_is_full_space(self):
        vecs = nullspace([], 3)
        assert len(vecs) == 3

    def test_nullspace_vectors_independent(self, rng):
        for _ in range(50):
            rows = _random_matrix(rng, 3, 5)
            vecs = nullspace(rows, 5)
            assert rank(vecs) == len(vecs)


class TestInRowSpace:
    def test_membership(self):
        rows = rref([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]])
        assert in_row_space(rows, [Fraction(3), Fraction(-2)])
        rows2 = rref([[Fraction(1), Fraction(1)]])
        assert in_row_space(rows2, [Fraction(2), Fraction(2)])
        assert not in_row_space(rows2, [Fraction(1), Fraction(0)])


class TestSubspace:
    def test_from_vectors_reduces(self):
        v1 = [Fraction(1)] + [Fraction(0)] * 15
        v2 = [Fraction(2)] + [Fraction(0)] * 15
        s = Subspace.from_vectors(2, [v1, v2])
        assert s.dim == 1
        assert s.ambient_level == 2

    def test_contains(self):
        v1 = [Fraction(1), Fraction(0), Fraction(0), Fraction(1)]
        s = Subspace.from_vectors(1, [v1])
        assert s.contains([Fraction(3), Fraction(0), Fraction(0), Fraction(3)])
        assert not s.contains([Fraction(1), Fraction(0), Fraction(0), Fraction(0)])

    def test_is_subspace_of(self, rng):
        vecs = [
            [Fraction(rng.randint(-2, 2)) for _ in range(4)] for _ in range(3)
        ]
        big = Subspace.from_vectors(1, vecs)
        small = Subspace.from_vectors(1, vecs[:1])
        assert small.is_subspace_of(big)
        if small.dim < big.dim:
            assert not big.is_subspace_of(small)

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            Subspace.from_vectors(1, [[Fraction(1), Fraction(0)]])

    def test_equality_is_representation_free(self):
        a = Subspace.from_vectors(
            1,
            [
                [Fraction(1), Fraction(1), Fraction(0), Fraction(0)],
                [Fraction(0), Fraction(1), Fraction(0), Fraction(0)],
            ],
        )
        b = Subspace.from_vectors(
            1,
            [
                [Fraction(1), Fraction(0), Fraction(0), Fraction(0)],
                [Fraction(2), Fraction(3), Fraction(0), Fraction(0)],
            ],
        )
        assert a == b
