"""Free Lie algebras over Q on Lyndon bases; holonomy presentations and
graded quotient dimensions.

Three exact engines live here.  The Lyndon engine converts between tensors
and Lyndon coordinates through the triangularity of standard bracketings
(P_w = w + lexicographically later words).  The metabelian engine works in
the left-normed basis of the free metabelian Lie algebra and carries the
derived-quotient computations that would be hopeless in full Lyndon
coordinates.  The tensor engine row-reduces two-sided ideal spans in the
tensor algebra, deliberately independent of the Lie side so the PBW check
cross-validates both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product

from .cupprod import CupStructure, cup_structure
from .echelon import echelon_approximation
from .linalg import IntRowSpace, clear_denominators
from .presentations import FinitePresentation
from .series import TruncatedSeries, initial_form
from .words import IDENTITY, Word, commutator, generator, multiply, power


class NotPrimitiveError(ValueError):
    """Tensor fails the Dynkin primitivity test: not a Lie element."""


# ---------------------------------------------------------------------------
# Witt numbers and Lyndon words


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius needs n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def witt(b: int, k: int) -> int:
    """Dimension of degree k of the free Lie algebra on b generators."""
    if k < 1:
        raise ValueError("witt needs k >= 1")
    total = sum(moebius(d) * b ** (k // d) for d in _divisors(k))
    assert total % k == 0
    return total // k


@lru_cache(maxsize=None)
def lyndon_words(b: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All Lyndon words of the exact degree over 1..b, in lexicographic order."""
    if b == 0 or degree < 1:
        return ()
    out = []
    w = [0]
    while w:
        w[-1] += 1
        if len(w) == degree:
            out.append(tuple(w))
        m = len(w)
        while len(w) < degree:
            w.append(w[len(w) - m])
        while w and w[-1] == b:
            w.pop()
    assert len(out) == witt(b, degree)
    return tuple(out)


def _is_lyndon(w) -> bool:
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def standard_factorization(w):
    """w = u v with v the lexicographically smallest proper suffix."""
    if len(w) < 2:
        raise ValueError("single letters do not factor")
    v = min(w[i:] for i in range(1, len(w)))
    return w[:len(w) - len(v)], v


# ---------------------------------------------------------------------------
# Tensor arithmetic (dicts keyed by letter tuples)


def tensor_bracket(t1, t2):
    out = {}
    for u, c in t1.items():
        for v, d in t2.items():
            cd = c * d
            for key, sign in ((u + v, cd), (v + u, -cd)):
                new = out.get(key, 0) + sign
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def lyndon_tensor(w) -> dict:
    """Tensor expansion of the standard bracketing of a Lyndon word.

    Leading (lexicographically least) term is w itself with coefficient 1.
    """
    if len(w) == 1:
        return {w: 1}
    u, v = standard_factorization(w)
    return tensor_bracket(lyndon_tensor(u), lyndon_tensor(v))


@lru_cache(maxsize=None)
def _left_normed_tensor(w) -> dict:
    if len(w) == 1:
        return {w: 1}
    return tensor_bracket(_left_normed_tensor(w[:-1]), {(w[-1],): 1})


def dynkin(tensor) -> dict:
    """Left-normed bracketing applied termwise; fixes Lie elements up to degree."""
    out = {}
    for w, c in tensor.items():
        for key, d in _left_normed_tensor(w).items():
            new = out.get(key, 0) + c * d
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def _tensor_degree(tensor):
    degrees = {len(w) for w in tensor}
    if len(degrees) != 1:
        raise ValueError("expected a nonzero homogeneous tensor")
    return degrees.pop()


def is_primitive(tensor) -> bool:
    """Dynkin test: theta(t) = deg(t) * t exactly on Lie elements."""
    if not tensor:
        return True
    k = _tensor_degree(tensor)
    scaled = {w: k * c for w, c in tensor.items()}
    return dynkin(tensor) == scaled


def to_lyndon(tensor) -> dict:
    """Lyndon coordinates of a homogeneous Lie tensor.

    Repeatedly strips the lexicographically least word, which for a Lie
    element is always Lyndon with the coefficient of its bracketing.
    """
    residue = dict(tensor)
    coords = {}
    while residue:
        w = min(residue)
        if not _is_lyndon(w):
            raise NotPrimitiveError(f"monomial {w} is not a Lyndon leading term")
        c = residue[w]
        coords[w] = coords.get(w, 0) + c
        for key, d in lyndon_tensor(w).items():
            new = residue.get(key, 0) - c * d
            if new:
                residue[key] = new
            else:
                residue.pop(key, None)
    return {w: c for w, c in coords.items() if c}


# ---------------------------------------------------------------------------
# Lie elements


@dataclass(frozen=True)
class LieElement:
    """Rational coordinates over Lyndon words (possibly mixed degrees)."""

    coords: tuple  # sorted ((word, Fraction), ...)

    @classmethod
    def from_dict(cls, d) -> "LieElement":
        items = tuple(sorted((w, Fraction(c)) for w, c in d.items() if c))
        return cls(items)

    def as_dict(self):
        return dict(self.coords)

    def is_zero(self):
        return not self.coords

    def degrees(self):
        return sorted({len(w) for w, _ in self.coords})

    def homogeneous_coords(self, k):
        return {w: c for w, c in self.coords if len(w) == k}

    def tensor(self) -> dict:
        out = {}
        for w, c in self.coords:
            for key, d in lyndon_tensor(w).items():
                new = out.get(key, 0) + c * d
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return out

    def __add__(self, other):
        out = self.as_dict()
        for w, c in other.coords:
            new = out.get(w, 0) + c
            if new:
                out[w] = new
            else:
                out.pop(w, None)
        return LieElement.from_dict(out)

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return LieElement.from_dict({w: scalar * c for w, c in self.coords})

    def __sub__(self, other):
        return self + (-1) * other


def lie_generator(i: int) -> LieElement:
    return LieElement.from_dict({(i,): 1})


def bracket(u: LieElement, v: LieElement) -> LieElement:
    """[u, v] via the tensor algebra and back; exact."""
    return LieElement.from_dict(to_lyndon(tensor_bracket(u.tensor(), v.tensor())))


def lie_from_primitive_tensor(tensor) -> LieElement:
    """Convert a primitive homogeneous tensor to Lyndon coordinates.

    Accepts a TruncatedSeries homogeneous component or a plain dict; raises
    NotPrimitiveError when the Dynkin test fails.
    """
    if isinstance(tensor, TruncatedSeries):
        tensor = dict(tensor.coeffs)
    if not tensor:
        return LieElement.from_dict({})
    _tensor_degree(tensor)
    if not is_primitive(tensor):
        raise NotPrimitiveError("tensor is not primitive")
    return LieElement.from_dict(to_lyndon(tensor))


# ---------------------------------------------------------------------------
# Holonomy presentations


def _as_fraction_matrix(mat):
    rows = tuple(tuple(Fraction(v) for v in row) for row in mat)
    b = len(rows)
    for row in rows:
        if len(row) != b:
            raise ValueError("relation matrix must be square")
    for i in range(b):
        for j in range(b):
            if rows[i][j] != -rows[j][i]:
                raise ValueError("relation matrix must be antisymmetric")
    return rows


@dataclass(frozen=True)
class HolonomyPresentation:
    """Quadratic presentation: free Lie algebra modulo antisymmetric matrices.

    Each matrix encodes sum_{i<j} c[i][j] [y_i, y_j].  Zero matrices are
    dropped but counted; they witness relators of weight at least 3.
    """

    generator_names: tuple[str, ...]
    relations: tuple  # antisymmetric b x b Fraction matrices, none zero
    dropped_labels: tuple[int, ...] = ()

    @property
    def num_generators(self):
        return len(self.generator_names)

    def relation_elements(self) -> list[LieElement]:
        out = []
        b = self.num_generators
        for mat in self.relations:
            out.append(LieElement.from_dict(
                {(i + 1, j + 1): mat[i][j] for i in range(b) for j in range(i + 1, b)
                 if mat[i][j]}))
        return out


def holonomy_presentation(p: FinitePresentation, cup: CupStructure | None = None,
                          names=None) -> HolonomyPresentation:
    """Quadratic presentation of the holonomy Lie algebra of a presentation.

    The relation matrices are exactly the cup-product constants; the
    computation is shared with cup_structure.
    """
    if cup is None:
        data = echelon_approximation(p)
        cup = cup_structure(p, data)
        names = tuple(p.generator_names[i - 1] for i in data.h1_basis)
    elif names is None:
        names = tuple(f"y{i}" for i in range(1, cup.betti + 1))
    relations = []
    dropped = []
    for label, mat in zip(cup.h2_labels, cup.constants):
        if any(any(v for v in row) for row in mat):
            relations.append(_as_fraction_matrix(mat))
        else:
            dropped.append(label)
    return HolonomyPresentation(tuple(names), tuple(relations), tuple(dropped))


def link_holonomy(linking) -> HolonomyPresentation:
    """Holonomy Lie algebra of a link from its linking matrix.

    One relation sum_j l[i][j] [y_i, y_j] per component i < n; zero rows
    are dropped like any other trivial quadratic relation.
    """
    n = len(linking)
    mat = [[int(v) for v in row] for row in linking]
    for row in mat:
        if len(row) != n:
            raise ValueError("linking matrix must be square")
    for i in range(n):
        if mat[i][i] != 0:
            raise ValueError("linking matrix must have zero diagonal")
        for j in range(n):
            if mat[i][j] != mat[j][i]:
                raise ValueError("linking matrix must be symmetric")
    relations = []
    dropped = []
    for i in range(1, n):
        rel = [[Fraction(0)] * n for _ in range(n)]
        for j in range(1, n + 1):
            if j != i and mat[i - 1][j - 1]:
                rel[i - 1][j - 1] += mat[i - 1][j - 1]
                rel[j - 1][i - 1] -= mat[i - 1][j - 1]
        if any(any(v for v in row) for row in rel):
            relations.append(_as_fraction_matrix(rel))
        else:
            dropped.append(i)
    names = tuple(f"y{i}" for i in range(1, n + 1))
    return HolonomyPresentation(names, tuple(relations), tuple(dropped))


def group_from_quadratic_lie(relations) -> FinitePresentation:
    """Commutator-relators group whose holonomy has the given relations.

    Each integer antisymmetric matrix c yields the relator
    prod_{i<j} [x_i, x_j]^{c[i][j]} in (i, j) lexicographic order.
    """
    mats = [_as_fraction_matrix(m) for m in relations]
    if not mats:
        raise ValueError("need at least one relation matrix")
    n = len(mats[0])
    words = []
    for mat in mats:
        if len(mat) != n:
            raise ValueError("relation matrices must share one size")
        w = IDENTITY
        for i in range(n):
            for j in range(i + 1, n):
                c = mat[i][j]
                if c.denominator != 1:
                    raise ValueError("relation coefficients must be integers")
                if c:
                    w = multiply(w, power(commutator(generator(i + 1), generator(j + 1)),
                                          int(c)))
        words.append(w)
    names = tuple(f"x{i}" for i in range(1, n + 1))
    return FinitePresentation(names, tuple(words))


# ---------------------------------------------------------------------------
# Graded ideal spans in Lyndon coordinates


@lru_cache(maxsize=None)
def _ad_image(w, j) -> tuple:
    """Lyndon coordinates of [P_w, y_j], as ((word, int), ...)."""
    t = tensor_bracket(lyndon_tensor(w), {(j,): 1})
    return tuple(sorted(to_lyndon(t).items()))


@lru_cache(maxsize=None)
def _bracket_words(u, v) -> tuple:
    t = tensor_bracket(lyndon_tensor(u), lyndon_tensor(v))
    return tuple(sorted(to_lyndon(t).items()))


@dataclass
class GradedIdealSpan:
    """Per-degree row spaces of a graded Lie ideal, in Lyndon coordinates."""

    b: int
    order: int
    spaces: dict  # degree -> IntRowSpace

    def rank(self, k) -> int:
        space = self.spaces.get(k)
        return space.rank if space else 0

    def union(self, other) -> "GradedIdealSpan":
        if self.b != other.b:
            raise ValueError("mismatched generator counts")
        order = min(self.order, other.order)
        spaces = {}
        for k in range(1, order + 1):
            a = self.spaces.get(k)
            c = other.spaces.get(k)
            if a and c:
                spaces[k] = a.union(c)
            elif a or c:
                src = a or c
                fresh = IntRowSpace("min")
                for row in src.rows.values():
                    fresh.insert(row)
                spaces[k] = fresh
        return GradedIdealSpan(self.b, order, spaces)


def ideal_spans(generators, b: int, order: int) -> GradedIdealSpan:
    """Lie ideal generated by homogeneous elements, degree by degree.

    Degree k+1 is the bracket of the degree-1 space with degree k plus any
    new degree-(k+1) generators; the ad action of the degree-1 space
    generates the full ideal closure.
    """
    by_degree = {}
    for gen in generators:
        if gen.is_zero():
            continue
        for k in gen.degrees():
            coords = gen.homogeneous_coords(k)
            if k > order:
                continue
            by_degree.setdefault(k, []).append(coords)
    spaces = {}
    for k in range(1, order + 1):
        space = IntRowSpace("min")
        for coords in by_degree.get(k, ()):
            space.insert(clear_denominators(coords))
        prev = spaces.get(k - 1)
        if prev is not None and prev.rank:
            for row in prev.basis_rows():
                for j in range(1, b + 1):
                    image = {}
                    for w, val in row.items():
                        for key, c in _ad_image(w, j):
                            new = image.get(key, 0) + val * c
                            if new:
                                image[key] = new
                            else:
                                image.pop(key, None)
                    if image:
                        space.insert(image)
        spaces[k] = space
    return GradedIdealSpan(b, order, spaces)


def quotient_dims(pres_or_pair, order: int) -> list[int]:
    """Graded dimensions of the free Lie algebra modulo the given ideal."""
    b, generators = _split_presentation(pres_or_pair)
    spans = ideal_spans(generators, b, order)
    dims = []
    for k in range(1, order + 1):
        d = witt(b, k) - spans.rank(k)
        assert d >= 0
        dims.append(d)
    return dims


def _split_presentation(pres_or_pair):
    if isinstance(pres_or_pair, HolonomyPresentation):
        return pres_or_pair.num_generators, pres_or_pair.relation_elements()
    b, generators = pres_or_pair
    return b, list(generators)


def derived_subalgebra_spans(i: int, b: int, order: int) -> GradedIdealSpan:
    """Per-degree spans of the i-th derived subalgebra of the free Lie algebra.

    Built by bracketing the (i-1)-st spans pairwise; the full algebra at
    i=0 has the Lyndon basis itself.  Lowest possible nonzero degree is 2^i.
    """
    if i < 0:
        raise ValueError("derived level must be >= 0")
    spaces = {}
    if i == 0:
        for k in range(1, order + 1):
            space = IntRowSpace("min")
            for w in lyndon_words(b, k):
                space.insert({w: 1})
            spaces[k] = space
        return GradedIdealSpan(b, order, spaces)
    if i == 1:
        for k in range(2, order + 1):
            space = IntRowSpace("min")
            full = witt(b, k)
            for a in range(1, k // 2 + 1):
                if space.rank == full:
                    break
                for u in lyndon_words(b, a):
                    for v in lyndon_words(b, k - a):
                        if a == k - a and v <= u:
                            continue
                        row = {}
                        for key, c in _bracket_words(u, v):
                            row[key] = row.get(key, 0) + c
                        if row:
                            space.insert(row)
                    if space.rank == full:
                        break
            spaces[k] = space
        return GradedIdealSpan(b, order, spaces)
    lower = derived_subalgebra_spans(i - 1, b, order)
    low = 2 ** i
    for k in range(low, order + 1):
        space = IntRowSpace("min")
        for a in range(2 ** (i - 1), k - 2 ** (i - 1) + 1):
            rows_a = lower.spaces.get(a)
            rows_b = lower.spaces.get(k - a)
            if not rows_a or not rows_b:
                continue
            for ra in rows_a.basis_rows():
                ea = LieElement.from_dict(ra)
                for rb in rows_b.basis_rows():
                    if a == k - a and rb == ra:
                        continue
                    image = bracket(ea, LieElement.from_dict(rb))
                    if not image.is_zero():
                        space.insert(clear_denominators(image.as_dict()))
        spaces[k] = space
    return GradedIdealSpan(b, order, spaces)


# ---------------------------------------------------------------------------
# Free metabelian engine (derived level 2)


@lru_cache(maxsize=None)
def _mb_rewrite(seq) -> tuple:
    """Normalize a left-normed bracket word into the metabelian basis.

    Basis words satisfy a1 > a2 <= a3 <= ... <= ak; brackets of two
    derived-subalgebra elements vanish, so tails commute and the degree-3
    Jacobi identity L(a,b,c) = L(a,c,b) - L(b,c,a) moves small letters in.
    Returns ((basis_word, int), ...).
    """
    a, c = seq[0], seq[1]
    if a == c:
        return ()
    if a < c:
        return tuple((w, -v) for w, v in _mb_rewrite((c, a) + seq[2:]))
    if len(seq) == 2:
        return ((seq, 1),)
    tail = tuple(sorted(seq[2:]))
    if c <= tail[0]:
        return (((a, c) + tail, 1),)
    t0, rest = tail[0], tail[1:]
    out = {}
    for w, v in _mb_rewrite((a, t0, c) + rest):
        out[w] = out.get(w, 0) + v
    for w, v in _mb_rewrite((c, t0, a) + rest):
        out[w] = out.get(w, 0) - v
    return tuple(sorted((w, v) for w, v in out.items() if v))


@lru_cache(maxsize=None)
def _mb_image(w) -> tuple:
    """Image of a Lyndon basis element in the free metabelian algebra."""
    if len(w) == 1:
        return ((w, 1),)
    u, v = standard_factorization(w)
    iu, iv = _mb_image(u), _mb_image(v)
    if len(u) >= 2 and len(v) >= 2:
        return ()
    out = {}
    if len(v) == 1:
        for key, val in iu:
            for key2, val2 in _mb_rewrite(key + v):
                out[key2] = out.get(key2, 0) + val * val2
    else:
        # [letter, B] = -[B, letter]
        for key, val in iv:
            for key2, val2 in _mb_rewrite(key + u):
                out[key2] = out.get(key2, 0) - val * val2
    return tuple(sorted((k, v2) for k, v2 in out.items() if v2))


def metabelian_dim(b: int, k: int) -> int:
    """Dimension of degree k of the free metabelian Lie algebra on b letters."""
    return len(metabelian_basis(b, k))


@lru_cache(maxsize=None)
def metabelian_basis(b: int, k: int) -> tuple:
    if k == 1:
        return tuple((i,) for i in range(1, b + 1))
    out = []
    for a2 in range(1, b + 1):
        for a1 in range(a2 + 1, b + 1):
            for tail in combinations_with_replacement(range(a2, b + 1), k - 2):
                out.append((a1, a2) + tail)
    return tuple(sorted(out))


def _metabelian_quotient_dims(b, generators, order) -> list[int]:
    """Dims of the free metabelian algebra modulo the ideal the generators span."""
    by_degree = {}
    for gen in generators:
        for k in gen.degrees():
            if k > order:
                continue
            coords = {}
            for w, c in gen.homogeneous_coords(k).items():
                for key, val in _mb_image(w):
                    new = coords.get(key, 0) + c * val
                    if new:
                        coords[key] = new
                    else:
                        coords.pop(key, None)
            if coords:
                by_degree.setdefault(k, []).append(coords)
    dims = []
    prev = None
    for k in range(1, order + 1):
        space = IntRowSpace("min")
        for coords in by_degree.get(k, ()):
            space.insert(clear_denominators(coords))
        if prev is not None and prev.rank:
            for row in prev.basis_rows():
                for j in range(1, b + 1):
                    image = {}
                    for w, val in row.items():
                        for key, c in _mb_rewrite(w + (j,)):
                            new = image.get(key, 0) + val * c
                            if new:
                                image[key] = new
                            else:
                                image.pop(key, None)
                    if image:
                        space.insert(image)
        d = metabelian_dim(b, k) - space.rank
        assert d >= 0
        dims.append(d)
        prev = space
    return dims


def solvable_quotient_dims(pres_or_pair, i: int, order: int) -> list[int]:
    """Graded dims of (free Lie / relations) modulo its i-th derived subalgebra.

    Derived spans start in degree 2^i, so when 2^i exceeds the order this
    equals quotient_dims.  Level 2 (Chen ranks) runs in the free metabelian
    basis; other levels take the generic Lyndon route.
    """
    if i < 1:
        raise ValueError("derived level must be >= 1")
    b, generators = _split_presentation(pres_or_pair)
    if 2 ** i > order:
        return quotient_dims((b, generators), order)
    if i == 2:
        return _metabelian_quotient_dims(b, generators, order)
    spans = ideal_spans(generators, b, order)
    derived = derived_subalgebra_spans(i, b, order)
    combined = spans.union(derived)
    dims = []
    for k in range(1, order + 1):
        d = witt(b, k) - combined.rank(k)
        assert d >= 0
        dims.append(d)
    return dims


# ---------------------------------------------------------------------------
# Tensor-algebra engine (enveloping algebras, Anick numerics)


def tensor_ideal_quotient_dims(num_vars: int, generators, order: int) -> list[int]:
    """Dims of T(V)/(two-sided ideal), degrees 0..order.

    The degree-k span is the sum over placements of monomial x generator x
    monomial, row-reduced exactly; generators are homogeneous tensors.
    """
    gens = []
    for g in generators:
        if isinstance(g, TruncatedSeries):
            g = dict(g.coeffs)
        g = clear_denominators(g)
        if g:
            gens.append((_tensor_degree(g), g))
    dims = [1]
    letters = range(1, num_vars + 1)
    for k in range(1, order + 1):
        space = IntRowSpace("max")
        for degree, g in gens:
            if degree > k:
                continue
            for a in range(0, k - degree + 1):
                for u in product(letters, repeat=a):
                    for v in product(letters, repeat=k - degree - a):
                        space.insert({u + mono + v: c for mono, c in g.items()})
        d = num_vars ** k - space.rank
        assert d >= 0
        dims.append(d)
    return dims


def enveloping_dims(pres: HolonomyPresentation, order: int) -> list[int]:
    """Dims of the universal enveloping algebra, degrees 0..order.

    Works in the tensor algebra on the same quadratic relations, with no
    input from the Lie-side computation.
    """
    b = pres.num_generators
    gens = []
    for mat in pres.relations:
        tensor = {}
        for i in range(b):
            for j in range(i + 1, b):
                c = mat[i][j]
                if c:
                    tensor[(i + 1, j + 1)] = c
                    tensor[(j + 1, i + 1)] = -c
        gens.append(tensor)
    return tensor_ideal_quotient_dims(b, gens, order)


def pbw_check(lie_dims, env_dims, order: int):
    """Compare Hilb(U) with prod_k (1 - t^k)^(-h_k) through the given order.

    Returns (True, None) on agreement, else (False, first mismatch degree).
    """
    from math import comb
    series = [Fraction(1)] + [Fraction(0)] * order
    for k in range(1, order + 1):
        h = lie_dims[k - 1]
        if h == 0:
            continue
        factor = [Fraction(comb(h - 1 + j, j)) for j in range(order // k + 1)]
        new = [Fraction(0)] * (order + 1)
        for d in range(order + 1):
            if series[d] == 0:
                continue
            for j, f in enumerate(factor):
                if d + k * j > order:
                    break
                new[d + k * j] += series[d] * f
        series = new
    for d in range(order + 1):
        expected = env_dims[d] if d < len(env_dims) else None
        if expected is None:
            break
        if series[d] != expected:
            return False, d
    return True, None


def initial_form_lie_dims(p: FinitePresentation, order: int, cap: int = 16) -> list[int]:
    """Graded dims of the initial-form Lie algebra L = lie(x) / ini(relators)."""
    n = p.num_generators
    generators = []
    for idx, r in enumerate(p.relators, start=1):
        if r.is_identity():
            raise ValueError(f"relator {idx} is trivial: weight is infinite")
        tensor = initial_form(r, cap, num_vars=n)
        generators.append(lie_from_primitive_tensor(tensor))
    return quotient_dims((n, generators), order)
