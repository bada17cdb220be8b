"""Fox derivatives over the rational group ring of a free group.

The derivative rules are d_i(x_j) = delta_ij and the product rule
d_i(uv) = d_i(u) eps(v) + u d_i(v), which forces d_i(x_i^-1) = -x_i^-1.
Iterated derivatives follow the coefficient convention of the Magnus
expansion: the coefficient of x_{i_1}..x_{i_s} in M(w) is eps_I(w) with
d_{i_s} applied first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .presentations import FinitePresentation
from .words import IDENTITY, Word, inverse, multiply, word


class GroupRingElement:
    """Finite Q-linear combination of freely reduced words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[w] = c

    @classmethod
    def from_word(cls, w: Word, coeff=1) -> "GroupRingElement":
        return cls({w: Fraction(coeff)})

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            new = out.get(w, 0) + c
            if new:
                out[w] = new
            else:
                out.pop(w, None)
        return GroupRingElement(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return GroupRingElement({w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other):
        """Ring product; words multiply with free reduction."""
        out = {}
        for u, c in self.terms.items():
            for v, d in other.terms.items():
                uv = multiply(u, v)
                new = out.get(uv, 0) + c * d
                if new:
                    out[uv] = new
                else:
                    out.pop(uv, None)
        return GroupRingElement(out)

    def word_mul(self, w: Word) -> "GroupRingElement":
        """Left multiplication by a single word."""
        return GroupRingElement({multiply(w, u): c for u, c in self.terms.items()})

    def __repr__(self):
        return f"GroupRingElement({self.terms!r})"


ZERO = GroupRingElement()
ONE = GroupRingElement.from_word(IDENTITY)


def augmentation(e: GroupRingElement) -> Fraction:
    """Sum of coefficients: the map sending every group element to 1."""
    return sum(e.terms.values(), Fraction(0))


@lru_cache(maxsize=200000)
def _fox_word(i: int, letters) -> GroupRingElement:
    # recursive product rule on words; eps of a group word is 1
    if not letters:
        return ZERO
    if len(letters) == 1:
        gen, exp = letters[0]
        if gen != i:
            return ZERO
        if exp == 1:
            return ONE
        if exp == -1:
            return GroupRingElement.from_word(word([(gen, -1)]), -1)
        # split the power in halves; memoization keeps this near-linear
        half = exp // 2 if exp > 0 else -((-exp) // 2)
        left, right = (letters[0][0], half), (letters[0][0], exp - half)
        return _fox_split(i, (left,), (right,))
    mid = len(letters) // 2
    return _fox_split(i, letters[:mid], letters[mid:])


def _fox_split(i, left, right):
    du = _fox_word(i, left)
    dv = _fox_word(i, right)
    return du + dv.word_mul(word(left))


def fox_derivative(i: int, w: Word) -> GroupRingElement:
    """d_i(w) in the rational group ring."""
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    return _fox_word(i, w.letters)


def fox_derivative_element(i: int, e: GroupRingElement) -> GroupRingElement:
    """Additive extension of d_i to ring elements."""
    out = ZERO
    for w, c in e.terms.items():
        out = out + c * fox_derivative(i, w)
    return out


def epsilon(i: int, w: Word) -> int:
    """eps_i(w) = augmentation of d_i(w) = net exponent sum of generator i."""
    value = augmentation(fox_derivative(i, w))
    assert value.denominator == 1
    return int(value)


def epsilon_multi(index, w: Word) -> Fraction:
    """eps_I(w): iterated Fox derivative then augmentation.

    I = (i_1, .., i_s) names the coefficient of x_{i_1}..x_{i_s} in M(w);
    d_{i_s} is applied first.
    """
    if not index:
        raise ValueError("multi-index must be nonempty")
    e = GroupRingElement.from_word(w)
    for i in reversed(tuple(index)):
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        e = fox_derivative_element(i, e)
    return augmentation(e)


class JacobianMatrix:
    """m x n integer matrix with entry (k, i) = eps_i(r_k)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(tuple(int(v) for v in row) for row in entries)

    @property
    def num_rows(self):
        return len(self.entries)

    @property
    def num_cols(self):
        return len(self.entries[0]) if self.entries else 0

    def __eq__(self, other):
        return isinstance(other, JacobianMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"JacobianMatrix({self.entries!r})"


def jacobian(p: FinitePresentation) -> JacobianMatrix:
    """Fox Jacobian of a presentation: exponent sums, exact integers."""
    n = p.num_generators
    return JacobianMatrix(
        [[r.exponent_sum(i) for i in range(1, n + 1)] for r in p.relators])
