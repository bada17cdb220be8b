"""Exact rank and row-space bookkeeping over Q.

Rows live in sparse dicts keyed by arbitrary orderable column labels and are
kept as primitive integer vectors; elimination cross-multiplies and strips
the content, so no fractions ever appear.  Rational input rows are cleared
to integers first (row scaling does not change the span).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def clear_denominators(row):
    """Scale a {col: rational} row to a primitive {col: int} row."""
    lcm = 1
    for v in row.values():
        f = Fraction(v)
        if f:
            lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    out = {}
    for k, v in row.items():
        f = Fraction(v) * lcm
        assert f.denominator == 1
        if f.numerator:
            out[k] = f.numerator
    return _normalize(out)


def _normalize(row):
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


class IntRowSpace:
    """Incremental row space with fraction-free elimination.

    pivot_rule "max" picks the largest column label of a new row as its
    pivot (leading-monomial style), "min" the smallest.  Both give the same
    ranks; the choice only shapes fill-in.
    """

    def __init__(self, pivot_rule="max"):
        if pivot_rule not in ("max", "min"):
            raise ValueError("pivot_rule must be 'max' or 'min'")
        self._pick = max if pivot_rule == "max" else min
        self.rows = {}  # pivot column -> primitive integer row dict

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, row):
        """Return the residue of a row after elimination; does not insert."""
        row = dict(row)
        pivots = self.rows
        while row:
            hits = [c for c in row if c in pivots]
            if not hits:
                break
            c = self._pick(hits)
            piv = pivots[c]
            pv, rv = piv[c], row[c]
            g = gcd(pv, rv)
            mr, mp = pv // g, rv // g
            for k, v in piv.items():
                new = mr * row.get(k, 0) - mp * v
                if new:
                    row[k] = new
                else:
                    row.pop(k, None)
            if mr != 1:
                for k in row:
                    if k not in piv:
                        row[k] *= mr
            row = _normalize(row)
        return row

    def insert(self, row) -> bool:
        """Add a row to the span; True when the rank grew."""
        residue = self.reduce(row)
        if not residue:
            return False
        c = self._pick(residue)
        if residue[c] < 0:
            residue = {k: -v for k, v in residue.items()}
        self.rows[c] = residue
        return True

    def insert_rational(self, row) -> bool:
        return self.insert(clear_denominators(row))

    def contains(self, row) -> bool:
        return not self.reduce(clear_denominators(row))

    def basis_rows(self):
        """Deterministic snapshot of the echelon rows."""
        return [dict(self.rows[c]) for c in sorted(self.rows)]

    def union(self, other) -> "IntRowSpace":
        out = IntRowSpace("max" if self._pick is max else "min")
        for r in self.rows.values():
            out.insert(r)
        for r in other.rows.values():
            out.insert(r)
        return out
