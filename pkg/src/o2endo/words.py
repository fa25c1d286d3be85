"""Exact word calculus for the *-algebra generated by two isometries.

The generators s_1, s_2 satisfy the Cuntz relations

    s_i* s_j = delta_ij 1,        s_1 s_1* + s_2 s_2* = 1.

Elements are finite rational combinations of monomials s_alpha s_beta*
indexed by pairs of words (alpha, beta) over the alphabet {1, 2}.  The
second relation makes the monomial spanning set redundant: a sibling
pair with equal coefficients,

    c s_{alpha.1} s_{beta.1}* + c s_{alpha.2} s_{beta.2}*,

collapses to c s_alpha s_beta*.  Canonical form applies this merge to
exhaustion; each merge has at most one partner, so the result is unique
and dict equality of canonical forms decides equality in the algebra.
An independent decision procedure (expand all monomials to a common
word length, compare coefficients; see equal_by_expansion) is kept as a
cross-check.

Conventions used throughout the package:

* a word is a str over "12", the empty word acting as the unit;
* the gauge degree of s_alpha s_beta* is len(alpha) - len(beta);
* omega(s_alpha s_beta*) = 2**-len(alpha) if alpha == beta else 0,
  the canonical trace-like state;
* the canonical shift is phi(x) = s_1 x s_1* + s_2 x s_2*.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping, Union

from .errors import WordError

LETTERS = "12"

WordPair = tuple[str, str]
ScalarLike = Union[Fraction, int]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def check_word(word: str) -> str:
    """Validate a word over the alphabet {1, 2} and return it."""
    if not isinstance(word, str) or any(ch not in LETTERS for ch in word):
        raise WordError(f"not a word over {{1,2}}: {word!r}")
    return word


def all_words(length: int) -> list[str]:
    """All words of the given length, in lexicographic order."""
    if length < 0:
        raise WordError(f"negative word length: {length}")
    return ["".join(p) for p in product(LETTERS, repeat=length)]


def word_index(word: str) -> int:
    """Position of a word among words of its length (lexicographic).

    Reading 1 as bit 0 and 2 as bit 1, first letter most significant.
    """
    idx = 0
    for ch in word:
        idx = (idx << 1) | (0 if ch == "1" else 1)
    return idx


def index_word(idx: int, length: int) -> str:
    """Inverse of word_index for a fixed length."""
    return "".join(LETTERS[(idx >> (length - 1 - i)) & 1] for i in range(length))


def term_sort_key(pair: WordPair) -> tuple:
    """Deterministic term order: by beta, then alpha, short words first."""
    alpha, beta = pair
    return ((len(beta), beta), (len(alpha), alpha))


def _common_tail(alpha: str, beta: str) -> int:
    n = 0
    while (
        n < len(alpha)
        and n < len(beta)
        and alpha[len(alpha) - 1 - n] == beta[len(beta) - 1 - n]
    ):
        n += 1
    return n


def canonicalize(raw: Mapping[WordPair, ScalarLike]) -> dict[WordPair, Fraction]:
    """Unique normal form: overlap-free supports, maximally merged.

    Phase 1 splits any pair that some other pair extends by a shared
    tail (s_a s_b* = s_{a1}s_{b1}* + s_{a2}s_{b2}*) until supports are
    tail-disjoint; without this, one element could have two merged
    representations and equality would be unsound.  Phase 2 collapses
    sibling pairs with equal coefficients.  Each phase terminates
    (splits push mass toward the fixed maximal word length, merges
    strictly shorten words) and each monomial has a unique split target
    and merge partner, so the result is order-independent.
    """
    terms: dict[WordPair, Fraction] = {}
    for (alpha, beta), coeff in raw.items():
        check_word(alpha)
        check_word(beta)
        coeff = Fraction(coeff)
        if coeff:
            acc = terms.get((alpha, beta), _ZERO) + coeff
            if acc:
                terms[(alpha, beta)] = acc
            else:
                terms.pop((alpha, beta), None)
    changed = True
    while changed:
        changed = False
        for alpha, beta in sorted(terms, key=term_sort_key):
            for j in range(1, _common_tail(alpha, beta) + 1):
                ancestor = (alpha[:-j], beta[:-j])
                if ancestor in terms:
                    coeff = terms.pop(ancestor)
                    for letter in LETTERS:
                        child = (ancestor[0] + letter, ancestor[1] + letter)
                        acc = terms.get(child, _ZERO) + coeff
                        if acc:
                            terms[child] = acc
                        else:
                            terms.pop(child, None)
                    changed = True
                    break
            if changed:
                break
    queue = list(terms)
    while queue:
        alpha, beta = queue.pop()
        coeff = terms.get((alpha, beta))
        if coeff is None or not alpha or not beta:
            continue
        if alpha[-1] != beta[-1]:
            continue
        other = "2" if alpha[-1] == "1" else "1"
        sibling = (alpha[:-1] + other, beta[:-1] + other)
        if terms.get(sibling) != coeff:
            continue
        del terms[(alpha, beta)]
        del terms[sibling]
        parent = (alpha[:-1], beta[:-1])
        acc = terms.get(parent, _ZERO) + coeff
        if acc:
            terms[parent] = acc
            queue.append(parent)
        else:
            terms.pop(parent, None)
    return terms


class AlgebraElement:
    """Immutable element of the word algebra, stored in canonical form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[WordPair, ScalarLike] = ()):
        self._terms = canonicalize(dict(terms))

    @classmethod
    def _wrap(cls, canonical: dict[WordPair, Fraction]) -> "AlgebraElement":
        out = object.__new__(cls)
        out._terms = canonical
        return out

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls._wrap({})

    @classmethod
    def unit(cls) -> "AlgebraElement":
        return cls._wrap({("", ""): _ONE})

    @classmethod
    def generator(cls, letter: Union[str, int]) -> "AlgebraElement":
        """The isometry s_1 or s_2."""
        return cls.monomial(check_word(str(letter)), "")

    @classmethod
    def isometry(cls, word: str) -> "AlgebraElement":
        """s_alpha, the product of generators along a word."""
        return cls.monomial(check_word(word), "")

    @classmethod
    def monomial(
        cls, alpha: str, beta: str, coeff: ScalarLike = 1
    ) -> "AlgebraElement":
        """coeff * s_alpha s_beta*."""
        return cls({(check_word(alpha), check_word(beta)): coeff})

    def terms(self) -> list[tuple[str, str, Fraction]]:
        """Canonical terms in deterministic order."""
        return [
            (a, b, self._terms[(a, b)])
            for (a, b) in sorted(self._terms, key=term_sort_key)
        ]

    def coefficient(self, alpha: str, beta: str) -> Fraction:
        return self._terms.get((alpha, beta), _ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        acc = dict(self._terms)
        for pair, coeff in other._terms.items():
            acc[pair] = acc.get(pair, _ZERO) + coeff
        return AlgebraElement(acc)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._wrap({p: -c for p, c in self._terms.items()})

    def scale(self, coeff: ScalarLike) -> "AlgebraElement":
        coeff = Fraction(coeff)
        if not coeff:
            return AlgebraElement.zero()
        return AlgebraElement._wrap(
            {p: coeff * c for p, c in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def adjoint(self) -> "AlgebraElement":
        """Conjugate-transpose: (c s_alpha s_beta*)* = c s_beta s_alpha*.

        Coefficients are rational, so no complex conjugation is needed.
        """
        return AlgebraElement._wrap(
            {(b, a): c for (a, b), c in self._terms.items()}
        )

    def gauge_degrees(self) -> set[int]:
        """Degrees len(alpha) - len(beta) present in the element."""
        return {len(a) - len(b) for (a, b) in self._terms}

    def is_gauge_invariant(self) -> bool:
        return all(len(a) == len(b) for (a, b) in self._terms)

    def max_word_length(self) -> int:
        """Longest word appearing on either side; 0 for scalars and 0."""
        return max((max(len(a), len(b)) for (a, b) in self._terms), default=0)

    def omega(self) -> Fraction:
        return omega(self)

    def is_unitary(self) -> bool:
        unit = AlgebraElement.unit()
        star = self.adjoint()
        return multiply(star, self) == unit and multiply(self, star) == unit

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"<AlgebraElement {render(self)}>"


def _product_pair(a: str, b: str, g: str, d: str) -> WordPair | None:
    """(s_a s_b*)(s_g s_d*) collapses to one monomial or to zero."""
    if g.startswith(b):
        return (a + g[len(b):], d)
    if b.startswith(g):
        return (a, d + b[len(g):])
    return None


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Product in the algebra."""
    acc: dict[WordPair, Fraction] = {}
    for (a, b), c1 in x._terms.items():
        for (g, d), c2 in y._terms.items():
            pair = _product_pair(a, b, g, d)
            if pair is not None:
                acc[pair] = acc.get(pair, _ZERO) + c1 * c2
    return AlgebraElement(acc)


def adjoint(x: AlgebraElement) -> AlgebraElement:
    return x.adjoint()


def omega(x: AlgebraElement) -> Fraction:
    """The canonical state: 2**-len(alpha) on diagonal monomials, else 0.

    Consistent with the sibling merge (two length-(k+1) diagonal terms
    weigh as much as one length-k term), so any representative gives
    the same value.
    """
    total = _ZERO
    for (a, b), c in x._terms.items():
        if a == b:
            total += c * Fraction(1, 2 ** len(a))
    return total


def gauge_expectation(x: AlgebraElement) -> AlgebraElement:
    """Projection onto gauge degree zero (drop all off-degree terms).

    Removing whole degrees cannot create a new sibling merge, so the
    filtered dict is still canonical.
    """
    return AlgebraElement._wrap(
        {(a, b): c for (a, b), c in x._terms.items() if len(a) == len(b)}
    )


def canonical_shift(x: AlgebraElement) -> AlgebraElement:
    """phi(x) = s_1 x s_1* + s_2 x s_2*; prefixes both words of each term."""
    acc: dict[WordPair, Fraction] = {}
    for (a, b), c in x._terms.items():
        for i in LETTERS:
            acc[(i + a, i + b)] = c
    return AlgebraElement(acc)


def expanded_form(
    x: AlgebraElement, beta_length: int
) -> dict[WordPair, Fraction]:
    """Expand every term so all beta words reach the target length.

    Uses s_a s_b* = sum_t s_{a.t} s_{b.t}* over words t of the needed
    length; within each gauge degree this produces a rigid common shape.
    """
    out: dict[WordPair, Fraction] = {}
    for (a, b), c in x._terms.items():
        pad = beta_length - len(b)
        if pad < 0:
            raise WordError(
                f"beta length {beta_length} below existing word {b!r}"
            )
        for t in all_words(pad):
            out[(a + t, b + t)] = out.get((a + t, b + t), _ZERO) + c
    return {p: c for p, c in out.items() if c}


def equal_by_expansion(x: AlgebraElement, y: AlgebraElement) -> bool:
    """Equality decided without canonical forms, as a cross-check.

    Expanding both elements until all beta words share one length gives
    a spanning set with no relations left in it, so coefficient dicts
    compare directly.
    """
    target = max(
        (len(b) for (a, b) in (*x._terms, *y._terms)), default=0
    )
    return expanded_form(x, target) == expanded_form(y, target)


def render(x: AlgebraElement) -> str:
    """Plain-text form, e.g. "s_{12,1}+s_{11,2}" or "1/2·s_{1}".

    Terms are ordered by term_sort_key; the unit monomial prints as a
    bare coefficient.
    """
    if not x._terms:
        return "0"
    parts = []
    for a, b, c in x.terms():
        if a and b:
            body = f"s_{{{a},{b}}}"
        elif a:
            body = f"s_{{{a}}}"
        elif b:
            body = f"s*_{{{b}}}"
        else:
            body = None
        if body is None:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append("-" + body)
        else:
            parts.append(f"{c}·{body}")
    text = parts[0]
    for part in parts[1:]:
        text += part if part.startswith("-") else "+" + part
    return text


def element_sum(items: Iterable[AlgebraElement]) -> AlgebraElement:
    acc: dict[WordPair, Fraction] = {}
    for item in items:
        for pair, coeff in item._terms.items():
            acc[pair] = acc.get(pair, _ZERO) + coeff
    return AlgebraElement(acc)


def iter_monomials(x: AlgebraElement) -> Iterator[AlgebraElement]:
    for a, b, c in x.terms():
        yield AlgebraElement.monomial(a, b, c)
