"""Integer row reduction with unimodular transform; echelon approximations.

hermite_normal_form computes C with det +-1 and H = C J in row Hermite form:
pivots positive, entries above a pivot reduced into [0, pivot), zero rows at
the bottom, pivot columns the lexicographically earliest available.  The
echelon approximation replaces the relators by the unimodular combinations
w_k = r_1^{C[k][1]} .. r_m^{C[k][m]} so that the new Jacobian equals H.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .foxcalc import JacobianMatrix, jacobian
from .presentations import FinitePresentation
from .series import ProjectionMatrix
from .words import IDENTITY, Word, multiply, power


@dataclass(frozen=True)
class UnimodularReduction:
    transform: tuple[tuple[int, ...], ...]  # C, m x m, det +-1
    hermite: tuple[tuple[int, ...], ...]    # H = C J, m x n
    pivot_cols: tuple[int, ...]             # 1-based, strictly increasing
    det: int                                # determinant of C, +1 or -1

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)


def hermite_normal_form(matrix) -> UnimodularReduction:
    """Row Hermite form over Z with the full unimodular transform."""
    h = [list(map(int, row)) for row in matrix]
    m = len(h)
    n = len(h[0]) if m else 0
    c = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    det = 1
    pivot_cols = []
    r = 0
    for col in range(n):
        # euclidean elimination below row r in this column
        while True:
            live = [i for i in range(r, m) if h[i][col]]
            if not live:
                break
            i0 = min(live, key=lambda i: (abs(h[i][col]), i))
            if i0 != r:
                h[r], h[i0] = h[i0], h[r]
                c[r], c[i0] = c[i0], c[r]
                det = -det
            if len(live) == 1:
                break
            for i in range(r + 1, m):
                if h[i][col]:
                    q = h[i][col] // h[r][col]
                    if q:
                        for j in range(n):
                            h[i][j] -= q * h[r][j]
                        for j in range(m):
                            c[i][j] -= q * c[r][j]
        if r < m and h[r][col]:
            if h[r][col] < 0:
                h[r] = [-v for v in h[r]]
                c[r] = [-v for v in c[r]]
                det = -det
            for i in range(r):
                q = h[i][col] // h[r][col]
                if q:
                    for j in range(n):
                        h[i][j] -= q * h[r][j]
                    for j in range(m):
                        c[i][j] -= q * c[r][j]
            pivot_cols.append(col + 1)
            r += 1
            if r == m:
                break
    return UnimodularReduction(
        transform=tuple(tuple(row) for row in c),
        hermite=tuple(tuple(row) for row in h),
        pivot_cols=tuple(pivot_cols),
        det=det)


def projection_matrix(red: UnimodularReduction, num_cols=None) -> ProjectionMatrix:
    """Matrix of the quotient map onto the non-pivot generator classes.

    Non-pivot columns map to the corresponding basis vectors; pivot columns
    are solved by exact back-substitution in the rational row space of H, so
    the rows annihilate every row of H.
    """
    if num_cols is None:
        num_cols = len(red.hermite[0]) if red.hermite else 0
    n = num_cols
    pivots = list(red.pivot_cols)
    free = [j for j in range(1, n + 1) if j not in set(pivots)]
    b = len(free)
    free_pos = {col: i for i, col in enumerate(free)}
    # expr[col] = image of x_col as a length-b rational vector
    expr = {col: [Fraction(1) if i == free_pos[col] else Fraction(0) for i in range(b)]
            for col in free}
    for t in range(len(pivots) - 1, -1, -1):
        col = pivots[t]
        row = red.hermite[t]
        pivot_val = Fraction(row[col - 1])
        vec = [Fraction(0)] * b
        for j in range(col + 1, n + 1):
            if row[j - 1]:
                img = expr[j]
                coef = Fraction(row[j - 1])
                for i in range(b):
                    vec[i] -= coef * img[i]
        expr[col] = [v / pivot_val for v in vec]
    return ProjectionMatrix([[expr[col][i] for col in range(1, n + 1)]
                             for i in range(b)])


@dataclass(frozen=True)
class EchelonData:
    presentation: FinitePresentation   # the echelon approximation G_e
    reduction: UnimodularReduction
    betti: int                         # n - rank
    h1_basis: tuple[int, ...]          # non-pivot generator indices, 1-based
    h2_basis: tuple[int, ...]          # relator indices rank+1 .. m, 1-based
    proj: ProjectionMatrix


def echelon_approximation(p: FinitePresentation) -> EchelonData:
    """Echelon presentation with the same 2-complex cohomology.

    w_k is assembled in the fixed factor order r_1^{c_1} r_2^{c_2} .. r_m^{c_m};
    the Jacobian of the result is verified to equal H exactly.
    """
    jac = jacobian(p)
    red = hermite_normal_form(jac.entries)
    m = p.num_relators
    n = p.num_generators
    new_relators = []
    for k in range(m):
        w = IDENTITY
        for l in range(m):
            e = red.transform[k][l]
            if e:
                w = multiply(w, power(p.relators[l], e))
        new_relators.append(w)
    ge = FinitePresentation(p.generator_names, tuple(new_relators))
    if jacobian(ge).entries != red.hermite:
        raise AssertionError("echelon relators do not reproduce the Hermite form")
    d = red.rank
    pivotset = set(red.pivot_cols)
    h1 = tuple(j for j in range(1, n + 1) if j not in pivotset)
    return EchelonData(
        presentation=ge,
        reduction=red,
        betti=n - d,
        h1_basis=h1,
        h2_basis=tuple(range(d + 1, m + 1)),
        proj=projection_matrix(red, n))
