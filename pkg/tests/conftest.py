"""Shared randomized-input helpers.

Every generator takes an explicit random.Random so each test controls
its own seed; nothing here reads global RNG state.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from o2endo.words import AlgebraElement


def random_word(rng: random.Random, max_len: int = 3, min_len: int = 0) -> str:
    return "".join(rng.choice("12") for _ in range(rng.randint(min_len, max_len)))


def random_element(
    rng: random.Random, max_terms: int = 4, max_len: int = 3
) -> AlgebraElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        pair = (random_word(rng, max_len), random_word(rng, max_len))
        terms[pair] = terms.get(pair, 0) + Fraction(
            rng.randint(-4, 4), rng.randint(1, 4)
        )
    return AlgebraElement(terms)


def random_uhf_element(
    rng: random.Random, level: int, max_terms: int = 4
) -> AlgebraElement:
    """Gauge-invariant element supported on one matrix level."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        pair = (
            random_word(rng, level, min_len=level),
            random_word(rng, level, min_len=level),
        )
        terms[pair] = terms.get(pair, 0) + Fraction(
            rng.randint(-4, 4), rng.randint(1, 4)
        )
    return AlgebraElement(terms)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260814)
