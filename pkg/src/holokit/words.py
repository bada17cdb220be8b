"""Freely reduced words in a finitely generated free group.

A word is a run-length sequence of (generator, exponent) pairs with 1-based
generator indices.  Adjacent pairs never share a generator and exponents are
never zero, so equal tuples mean equal group elements.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the empty tuple is the identity."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for gen, exp in self.letters:
            if gen < 1:
                raise ValueError(f"generator index must be >= 1, got {gen}")
            if exp == 0:
                raise ValueError("zero exponent in reduced word")
        for (g1, _), (g2, _) in zip(self.letters, self.letters[1:]):
            if g1 == g2:
                raise ValueError("word is not freely reduced")

    def is_identity(self) -> bool:
        return not self.letters

    def length(self) -> int:
        """Number of single letters after free reduction."""
        return sum(abs(e) for _, e in self.letters)

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=0)

    def exponent_sum(self, gen: int) -> int:
        return sum(e for g, e in self.letters if g == gen)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return inverse(self)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)


IDENTITY = Word()


def word(pairs) -> Word:
    """Build a Word from any (generator, exponent) sequence, reducing freely."""
    stack: list[list[int]] = []
    for gen, exp in pairs:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return Word(tuple((g, e) for g, e in stack))


def generator(gen: int, exp: int = 1) -> Word:
    return word([(gen, exp)])


def multiply(u: Word, v: Word) -> Word:
    return word(u.letters + v.letters)


def inverse(u: Word) -> Word:
    return Word(tuple((g, -e) for g, e in reversed(u.letters)))


def power(u: Word, k: int) -> Word:
    if k == 0:
        return IDENTITY
    base = u if k > 0 else inverse(u)
    out = base
    for _ in range(abs(k) - 1):
        out = multiply(out, base)
    return out


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    return multiply(multiply(u, v), multiply(inverse(u), inverse(v)))
