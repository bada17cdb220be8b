"""Truncated noncommutative power series over Q; Magnus and kappa expansions.

Coefficients are exact rationals throughout.  Multi-indices are tuples of
1-based variable indices; the empty tuple keys the constant term.  Products
discard every term of total degree above the truncation order.
"""

from __future__ import annotations

from fractions import Fraction

from .words import Word

INFINITE = float("inf")


class WeightCapExceeded(ValueError):
    """Nonzero word with no Magnus coefficient up to the requested cap."""


class TruncatedSeries:
    __slots__ = ("num_vars", "order", "coeffs")

    def __init__(self, num_vars, order, coeffs=None):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        self.num_vars = num_vars
        self.order = order
        self.coeffs = {}
        if coeffs:
            for index, c in coeffs.items():
                c = Fraction(c)
                if c and len(index) <= order:
                    self.coeffs[index] = c

    @classmethod
    def one(cls, num_vars, order):
        return cls(num_vars, order, {(): 1})

    @classmethod
    def variable(cls, s, num_vars, order):
        return cls(num_vars, order, {(s,): 1})

    def coeff(self, index) -> Fraction:
        return self.coeffs.get(tuple(index), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeffs.get((), Fraction(0))

    def homogeneous_part(self, k) -> "TruncatedSeries":
        return TruncatedSeries(self.num_vars, self.order,
                               {i: c for i, c in self.coeffs.items() if len(i) == k})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.num_vars == other.num_vars
                and self.order == other.order
                and self.coeffs == other.coeffs)

    def _check_shape(self, other):
        if self.num_vars != other.num_vars or self.order != other.order:
            raise ValueError("mismatched series shapes")

    def __add__(self, other):
        self._check_shape(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            new = out.get(i, 0) + c
            if new:
                out[i] = new
            else:
                out.pop(i, None)
        return TruncatedSeries(self.num_vars, self.order, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return TruncatedSeries(self.num_vars, self.order,
                               {i: scalar * c for i, c in self.coeffs.items()})

    def __mul__(self, other):
        self._check_shape(other)
        order = self.order
        out = {}
        for i, c in self.coeffs.items():
            room = order - len(i)
            for j, d in other.coeffs.items():
                if len(j) > room:
                    continue
                ij = i + j
                new = out.get(ij, 0) + c * d
                if new:
                    out[ij] = new
                else:
                    out.pop(ij, None)
        return TruncatedSeries(self.num_vars, self.order, out)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("use geometric inverse for negative powers")
        result = TruncatedSeries.one(self.num_vars, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __repr__(self):
        items = ", ".join(f"{i}: {c}" for i, c in sorted(self.coeffs.items(),
                                                         key=lambda t: (len(t[0]), t[0])))
        return f"TruncatedSeries({self.num_vars} vars, order {self.order}, {{{items}}})"


class ProjectionMatrix:
    """b x n rational matrix of a linear map; column s gives the image of x_s."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(v) for v in row) for row in rows)
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged projection matrix")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def num_rows(self):
        return len(self.rows)

    @property
    def num_cols(self):
        return len(self.rows[0]) if self.rows else 0

    def column(self, s):
        return [row[s] for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, ProjectionMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"ProjectionMatrix({self.rows!r})"


def _geometric_inverse_of_one_plus(t: TruncatedSeries) -> TruncatedSeries:
    # (1 + t)^-1 = sum (-t)^k for t with zero constant term
    if t.constant_term():
        raise ValueError("expected zero constant term")
    out = TruncatedSeries.one(t.num_vars, t.order)
    acc = TruncatedSeries.one(t.num_vars, t.order)
    neg = (-1) * t
    for _ in range(t.order):
        acc = acc * neg
        if acc.is_zero():
            break
        out = out + acc
    return out


def _letter_series(base: TruncatedSeries, exp: int) -> TruncatedSeries:
    # (1 + base)^exp by binary exponentiation, geometric series for exp < 0
    one = TruncatedSeries.one(base.num_vars, base.order)
    positive = one + base
    if exp < 0:
        return _geometric_inverse_of_one_plus(base) ** (-exp)
    return positive ** exp


def magnus(w: Word, order: int, num_vars=None) -> TruncatedSeries:
    """Classical Magnus expansion M(w) truncated at the given order.

    M(x_i) = 1 + x_i and M(x_i^-1) = 1 - x_i + x_i^2 - ...; multiplicative
    on concatenation.
    """
    if num_vars is None:
        num_vars = w.max_generator()
    out = TruncatedSeries.one(num_vars, order)
    for gen, exp in w.letters:
        base = TruncatedSeries.variable(gen, num_vars, order)
        out = out * _letter_series(base, exp)
    return out


def substitute_linear(series: TruncatedSeries, a: ProjectionMatrix) -> TruncatedSeries:
    """Apply the variable substitution x_s -> sum_i a[i][s] y_i degreewise."""
    if a.num_cols != series.num_vars:
        raise ValueError("projection matrix does not match series variables")
    b = a.num_rows
    columns = [[(i + 1, a.rows[i][s]) for i in range(b) if a.rows[i][s]]
               for s in range(series.num_vars)]
    out = {}
    for index, c in series.coeffs.items():
        partial = {(): c}
        for s in index:
            nxt = {}
            for prefix, coef in partial.items():
                for i, a_is in columns[s - 1]:
                    key = prefix + (i,)
                    new = nxt.get(key, 0) + coef * a_is
                    if new:
                        nxt[key] = new
                    else:
                        nxt.pop(key, None)
            partial = nxt
            if not partial:
                break
        for key, coef in partial.items():
            new = out.get(key, 0) + coef
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return TruncatedSeries(b, series.order, out)


def kappa(w: Word, a: ProjectionMatrix, order: int) -> TruncatedSeries:
    """Magnus expansion relative to a group: M followed by the projection.

    Computed letterwise in the target variables; agrees with
    substitute_linear(magnus(w, order), a), which the test suite checks.
    """
    b = a.num_rows
    out = TruncatedSeries.one(b, order)
    images = {}
    for gen, exp in w.letters:
        if gen not in images:
            col = a.column(gen - 1)
            images[gen] = TruncatedSeries(
                b, order, {(i + 1,): v for i, v in enumerate(col) if v})
        out = out * _letter_series(images[gen], exp)
    return out


def kappa_coeff(w: Word, a: ProjectionMatrix, index) -> Fraction:
    index = tuple(index)
    return kappa(w, a, len(index)).coeff(index)


def kappa_k(w: Word, a: ProjectionMatrix, k: int) -> TruncatedSeries:
    """Degree-k homogeneous component of kappa."""
    return kappa(w, a, k).homogeneous_part(k)


def weight(w: Word, cap: int = 16, num_vars=None):
    """Lowest degree with a nonzero Magnus coefficient, by iterative deepening.

    Returns an int, INFINITE for the identity word, or None when the word is
    nonzero but every coefficient through the cap vanishes.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if w.is_identity():
        return INFINITE
    for k in range(1, cap + 1):
        if not magnus(w, k, num_vars).homogeneous_part(k).is_zero():
            return k
    return None


def initial_form(w: Word, cap: int = 16, num_vars=None) -> TruncatedSeries:
    """Degree-omega(w) part of M(w) - 1; a primitive tensor."""
    om = weight(w, cap, num_vars)
    if om is INFINITE:
        raise ValueError("identity word has no initial form")
    if om is None:
        raise WeightCapExceeded(f"weight exceeds cap {cap}")
    return magnus(w, om, num_vars).homogeneous_part(om)
