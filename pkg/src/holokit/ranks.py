"""Closed-form rank tables, Hilbert series, Anick mildness, formality verdicts.

This is the reconciliation layer: wherever a family has a closed formula and
the Lie engines can also compute the number, reports carry both and the
report constructor insists they agree.  Verdicts are three-valued whenever
the underlying statement is an iff that we can only check to finite degree;
the checked degree is stamped into the verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb

from .freelie import (holonomy_presentation, link_holonomy, moebius, quotient_dims,
                      solvable_quotient_dims, tensor_ideal_quotient_dims, witt)
from .presentations import FinitePresentation, seifert_euler, seifert_presentation
from .series import INFINITE, WeightCapExceeded, initial_form, weight

__all__ = [
    "HilbertSeries", "RankEntry", "RankReport", "Verdict", "anick_highest_terms",
    "anick_mild_combinatorial", "anick_mild_numeric", "anick_search_orderings",
    "chen_free", "graded_formality_compare", "labute_one_relator_ranks",
    "link_rank_report", "moebius", "one_relator_chen_series",
    "one_relator_envelope_series", "one_relator_graded_formality",
    "presentation_rank_report", "seifert_rank_report", "surface_chen",
    "surface_lcs_ranks", "witt",
]


# ---------------------------------------------------------------------------
# Hilbert series


class HilbertSeries:
    """Exact rational coefficients in degrees 0..order."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        self.coefficients = tuple(Fraction(c) for c in coefficients)

    @property
    def order(self):
        return len(self.coefficients) - 1

    def coeff(self, k) -> Fraction:
        return self.coefficients[k]

    def __eq__(self, other):
        return (isinstance(other, HilbertSeries)
                and self.coefficients == other.coefficients)

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, c in enumerate(self.coefficients[:order + 1]):
            if not c:
                continue
            for j in range(order + 1 - i):
                d = other.coefficients[j]
                if d:
                    out[i + j] += c * d
        return HilbertSeries(out)

    def inverse(self) -> "HilbertSeries":
        c0 = self.coefficients[0]
        if not c0:
            raise ValueError("series with zero constant term has no inverse")
        order = self.order
        out = [Fraction(0)] * (order + 1)
        out[0] = 1 / c0
        for k in range(1, order + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self.coefficients[j] * out[k - j] if j <= order else 0
            out[k] = -acc / c0
        return HilbertSeries(out)

    def __repr__(self):
        return f"HilbertSeries({[str(c) for c in self.coefficients]})"


def _binomial_inverse_power(n, order):
    # (1 - t)^(-n)
    return HilbertSeries([comb(n + k - 1, k) for k in range(order + 1)])


# ---------------------------------------------------------------------------
# Closed-form tables


def labute_one_relator_ranks(n: int, e: int, order: int) -> list[int]:
    """LCS ranks of a one-relator group with n generators and relator weight e."""
    if n < 2 or e < 1:
        raise ValueError("need n >= 2 and e >= 1")
    out = []
    for k in range(1, order + 1):
        total = Fraction(0)
        for d in range(1, k + 1):
            if k % d:
                continue
            mu = moebius(k // d)
            if not mu:
                continue
            inner = Fraction(0)
            for i in range(0, d // e + 1):
                denom = d + i - e * i
                inner += (-1) ** i * Fraction(d, denom) * comb(d + i - i * e, i) * n ** (d - e * i)
            total += mu * inner
        value = total / k
        assert value.denominator == 1 and value >= 0
        out.append(int(value))
    return out


def surface_lcs_ranks(g: int, order: int) -> list[int]:
    """LCS ranks of the genus-g surface group; the trivial group at g=0."""
    if g == 0:
        return [0] * order
    return labute_one_relator_ranks(2 * g, 2, order)


def chen_free(n: int, k: int) -> int:
    """Chen ranks of the free group: (k-1) C(n+k-2, k) for k >= 2."""
    if k == 1:
        return n
    return (k - 1) * comb(n + k - 2, k)


def surface_chen(g: int, k: int) -> int:
    """Chen ranks of the genus-g surface group."""
    if g == 0:
        return 0
    if k == 1:
        return 2 * g
    if k == 2:
        return 2 * g * g - g - 1
    return (k - 1) * comb(2 * g + k - 2, k) - comb(2 * g + k - 3, k - 2)


def one_relator_chen_series(n: int, is_commutator: bool, order: int) -> HilbertSeries:
    """Chen-rank Hilbert series of a 1-formal one-relator group.

    Commutator relator: 1 + nt - (1 - nt + t^2) / (1-t)^n; otherwise
    1 + (n-1)t - (1 - (n-1)t) / (1-t)^(n-1).
    """
    if is_commutator:
        numer = [1, -n, 1] + [0] * max(0, order - 2)
        head = [1, n] + [0] * max(0, order - 1)
        frac = HilbertSeries(numer[:order + 1]) * _binomial_inverse_power(n, order)
    else:
        numer = [1, -(n - 1)] + [0] * max(0, order - 1)
        head = [1, n - 1] + [0] * max(0, order - 1)
        frac = HilbertSeries(numer[:order + 1]) * _binomial_inverse_power(n - 1, order)
    coeffs = [Fraction(head[k] if k < len(head) else 0) - frac.coeff(k)
              for k in range(order + 1)]
    return HilbertSeries(coeffs)


def one_relator_envelope_series(n: int, omega, order: int) -> list[int]:
    """Hilb(U(h)) of a one-relator group, by the weight of the relator."""
    if omega == 1:
        denom = [1, -(n - 1)]
    elif omega == 2:
        denom = [1, -n, 1]
    else:
        denom = [1, -n]
    denom = denom + [0] * (order + 1 - len(denom))
    series = HilbertSeries(denom[:order + 1]).inverse()
    out = []
    for k in range(order + 1):
        c = series.coeff(k)
        assert c.denominator == 1
        out.append(int(c))
    return out


# ---------------------------------------------------------------------------
# Verdicts


@dataclass(frozen=True)
class Verdict:
    """Three-valued outcome with the degree it was checked to, when finite."""

    status: str
    degree: int | None = None
    detail: str = ""

    def __str__(self):
        parts = [self.status]
        if self.degree is not None:
            parts.append(f"(degree {self.degree})")
        if self.detail:
            parts.append(f"- {self.detail}")
        return " ".join(parts)


def _relator_weights(p: FinitePresentation, cap: int):
    weights = []
    for idx, r in enumerate(p.relators, start=1):
        om = weight(r, cap, num_vars=p.num_generators)
        if om is INFINITE:
            raise ValueError(f"relator {idx} is trivial (weight infinite)")
        if om is None:
            raise WeightCapExceeded(f"relator {idx} has weight above cap {cap}")
        weights.append(om)
    return weights


def anick_mild_numeric(p: FinitePresentation, order: int, cap: int = 16) -> Verdict:
    """Compare Hilb(U(L(G))) against (1 - nt + sum t^omega_i)^(-1).

    A mismatch refutes mildness definitively; agreement through the order is
    evidence only, never a certificate.
    """
    n = p.num_generators
    weights = _relator_weights(p, cap)
    forms = [initial_form(r, cap, num_vars=n) for r in p.relators]
    computed = tensor_ideal_quotient_dims(n, forms, order)
    expected = [1]
    for k in range(1, order + 1):
        value = n * expected[k - 1]
        for om in weights:
            if k - om >= 0:
                value -= expected[k - om]
        expected.append(value)
    for k in range(order + 1):
        if computed[k] != expected[k]:
            return Verdict("not-mild", degree=k,
                           detail=f"dim {computed[k]} != series {expected[k]}")
    return Verdict("consistent", degree=order,
                   detail="necessary condition holds through the checked degree")


def anick_highest_terms(p: FinitePresentation, ordering, cap: int = 16):
    """Highest tensor monomial of each initial form under the given precedence.

    ordering lists generator indices from highest to lowest precedence.
    """
    n = p.num_generators
    if sorted(ordering) != list(range(1, n + 1)):
        raise ValueError("ordering must be a permutation of the generators")
    rank = {g: pos for pos, g in enumerate(ordering)}
    terms = []
    for r in p.relators:
        tensor = initial_form(r, cap, num_vars=n)
        best = min(tensor.coeffs, key=lambda mono: tuple(rank[g] for g in mono))
        terms.append(best)
    return terms


def anick_mild_combinatorial(p: FinitePresentation, ordering, cap: int = 16) -> Verdict:
    """Anick's highest-monomial test: sufficient for mildness, never necessary.

    Checks that no highest term is a submonomial of another and that no two
    highest terms overlap; success certifies mildness for this presentation.
    """
    terms = anick_highest_terms(p, ordering, cap)
    for idx, t in enumerate(terms, start=1):
        if not t:
            return Verdict("inconclusive", detail=f"relator {idx} has empty highest term")
    for i, wi in enumerate(terms):
        for j, wj in enumerate(terms):
            if i != j and _is_submonomial(wi, wj):
                return Verdict(
                    "inconclusive",
                    detail=f"highest term {i + 1} is a submonomial of {j + 1}")
            if _overlaps(wi, wj):
                return Verdict(
                    "inconclusive",
                    detail=f"highest terms {i + 1} and {j + 1} overlap")
    names = ", ".join(p.generator_names[g - 1] for g in ordering)
    return Verdict("mild-certified", detail=f"ordering {names}")


def _is_submonomial(wi, wj):
    li, lj = len(wi), len(wj)
    if li > lj:
        return False
    return any(wj[s:s + li] == wi for s in range(lj - li + 1))


def _overlaps(wi, wj):
    # proper split w_i = u v, w_j = v w with v nonempty, not both u and w empty
    for length in range(1, min(len(wi), len(wj)) + 1):
        if length == len(wi) and length == len(wj):
            continue
        if wi[len(wi) - length:] == wj[:length]:
            return True
    return False


def anick_search_orderings(p: FinitePresentation, cap: int = 16, max_generators: int = 6):
    """Try every generator ordering; return (ordering, verdict) for the first
    certificate, else (None, inconclusive)."""
    n = p.num_generators
    if n > max_generators:
        raise ValueError(f"refusing to try {n}! orderings; supply one explicitly")
    last = None
    for ordering in permutations(range(1, n + 1)):
        verdict = anick_mild_combinatorial(p, ordering, cap)
        if verdict.status == "mild-certified":
            return ordering, verdict
        last = verdict
    return None, last or Verdict("inconclusive")


def one_relator_graded_formality(p: FinitePresentation, cap: int = 16) -> bool:
    """Graded-formal iff the single relator has weight at most 2."""
    if p.num_relators != 1:
        raise ValueError("expects exactly one relator")
    om = _relator_weights(p, cap)[0]
    return om <= 2


def graded_formality_compare(p: FinitePresentation, order: int, cap: int = 16,
                             ordering=None) -> Verdict:
    """Compare holonomy dims with initial-form Lie dims, when gr is known.

    Valid when the presentation is mild (single relator, or certified by the
    combinatorial test), since then gr(G) = L(G).  Mismatch refutes graded
    formality definitively; agreement holds only through the checked degree.
    """
    from .freelie import initial_form_lie_dims

    if p.num_relators == 1 and not p.relators[0].is_identity():
        why = "single relator (mild by Labute)"
    else:
        if ordering is not None:
            verdict = anick_mild_combinatorial(p, ordering, cap)
        else:
            try:
                _, verdict = anick_search_orderings(p, cap)
            except ValueError:
                verdict = Verdict("inconclusive", detail="too many generators to search")
        if verdict.status != "mild-certified":
            return Verdict("unknown", detail="mildness not certified")
        why = verdict.detail
    holo = quotient_dims(holonomy_presentation(p), order)
    lg = initial_form_lie_dims(p, order, cap)
    for k in range(order):
        if holo[k] != lg[k]:
            return Verdict("not-graded-formal", degree=k + 1,
                           detail=f"holonomy {holo[k]} != gr {lg[k]}; {why}")
    return Verdict("graded-formal", degree=order, detail=why)


# ---------------------------------------------------------------------------
# Rank reports


@dataclass(frozen=True)
class RankEntry:
    value: int
    provenance: str


@dataclass
class RankReport:
    """Per-degree tables phi, phi_bar, theta, theta_bar plus verdicts.

    add() is the reconciliation point: a degree may receive a value twice,
    once from a formula and once from linear algebra, and they must agree.
    """

    degree: int
    tables: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def add(self, table: str, k: int, value: int, provenance: str):
        slot = self.tables.setdefault(table, {})
        if k in slot:
            if slot[k].value != value:
                raise AssertionError(
                    f"{table}[{k}]: {slot[k].value} ({slot[k].provenance}) "
                    f"!= {value} ({provenance})")
            slot[k] = RankEntry(value, slot[k].provenance + "; " + provenance)
        else:
            slot[k] = RankEntry(value, provenance)

    def add_table(self, table: str, values, provenance: str, start: int = 1):
        for k, v in enumerate(values, start=start):
            self.add(table, k, v, provenance)

    def values(self, table: str) -> list[int]:
        slot = self.tables.get(table, {})
        return [slot[k].value for k in sorted(slot)]


def seifert_rank_report(g: int, pairs, b: int, order: int) -> RankReport:
    """Rank tables for a Seifert manifold group, branching on the Euler number.

    phi and theta come from the closed-form propositions; phi_bar and
    theta_bar from the Lie engines on the computed holonomy presentation,
    with the overlapping entries asserted equal.
    """
    e = seifert_euler(pairs, b)
    pres = seifert_presentation(g, pairs, b)
    holo = holonomy_presentation(pres)
    report = RankReport(order)
    report.notes.append(f"euler number {e}")
    report.add_table("phi_bar", quotient_dims(holo, order), "linear-algebra")
    report.add_table("theta_bar", solvable_quotient_dims(holo, 2, order),
                     "linear-algebra")
    surface_phi = surface_lcs_ranks(g, order)
    if e == 0:
        report.add("phi", 1, 2 * g + 1, "seifert lcs, euler zero")
        report.add("phi_bar", 1, 2 * g + 1, "seifert lcs, euler zero")
        report.add("theta", 1, 2 * g + 1, "seifert chen, euler zero")
        report.add("theta_bar", 1, 2 * g + 1, "seifert chen, euler zero")
        for k in range(2, order + 1):
            report.add("phi", k, surface_phi[k - 1], "seifert lcs, euler zero")
            report.add("phi_bar", k, surface_phi[k - 1], "seifert lcs, euler zero")
            theta = surface_chen(g, k)
            report.add("theta", k, theta, "seifert chen, euler zero")
            report.add("theta_bar", k, theta, "seifert chen, euler zero")
        report.verdicts["graded-formality"] = Verdict(
            "graded-formal", detail="euler number zero")
    else:
        report.add("phi", 1, 2 * g, "seifert lcs, euler nonzero")
        report.add("theta", 1, 2 * g, "seifert chen, euler nonzero")
        if order >= 2:
            report.add("phi", 2, g * (2 * g - 1), "seifert lcs, euler nonzero")
            report.add("theta", 2, g * (2 * g - 1), "seifert chen, euler nonzero")
        for k in range(3, order + 1):
            report.add("phi", k, surface_phi[k - 1], "seifert lcs, euler nonzero")
            report.add("theta", k, surface_chen(g, k), "seifert chen, euler nonzero")
        for k in range(1, order + 1):
            report.add("phi_bar", k, witt(2 * g, k), "free Lie ranks")
            report.add("theta_bar", k, chen_free(2 * g, k), "free Chen ranks")
        report.verdicts["graded-formality"] = Verdict(
            "graded-formal" if g == 0 else "not-graded-formal",
            detail="euler number nonzero")
    report.verdicts["mildness"] = Verdict("unknown")
    _assert_chen_series_consistency(g, order)
    return report


def _assert_chen_series_consistency(g, order):
    # the closed-form surface Chen table must match the one-relator series
    if g == 0:
        return
    series = one_relator_chen_series(2 * g, True, order)
    for k in range(1, order + 1):
        assert series.coeff(k) == surface_chen(g, k)


def _linking_graph_connected(linking) -> bool:
    n = len(linking)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j not in seen and linking[i][j]:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def link_rank_report(linking, order: int) -> RankReport:
    """Rank tables for a link group from its linking matrix.

    With a connected linking graph the holonomy tables are also the LCS and
    Chen tables; otherwise phi and theta stay unknown.
    """
    holo = link_holonomy(linking)
    report = RankReport(order)
    phibar = quotient_dims(holo, order)
    thetabar = solvable_quotient_dims(holo, 2, order)
    report.add_table("phi_bar", phibar, "linear-algebra")
    report.add_table("theta_bar", thetabar, "linear-algebra")
    if _linking_graph_connected(linking):
        report.add_table("phi", phibar, "connected linking graph: gr = holonomy")
        report.add_table("theta", thetabar, "connected linking graph")
        report.verdicts["graded-formality"] = Verdict(
            "graded-formal", detail="connected linking graph")
    else:
        report.notes.append("disconnected linking graph: phi and theta unknown")
        report.verdicts["graded-formality"] = Verdict("unknown")
    report.verdicts["mildness"] = Verdict("unknown")
    return report


def presentation_rank_report(p: FinitePresentation, order: int, cap: int = 16) -> RankReport:
    """General report: holonomy tables always, gr tables when mildness allows."""
    from .freelie import initial_form_lie_dims

    holo = holonomy_presentation(p)
    report = RankReport(order)
    report.add_table("phi_bar", quotient_dims(holo, order), "linear-algebra")
    report.add_table("theta_bar", solvable_quotient_dims(holo, 2, order),
                     "linear-algebra")
    try:
        weights = _relator_weights(p, cap)
    except (ValueError, WeightCapExceeded) as exc:
        report.notes.append(f"initial forms unavailable: {exc}")
        report.verdicts["mildness"] = Verdict("unknown")
        report.verdicts["graded-formality"] = Verdict("unknown")
        return report
    if p.num_relators == 1:
        mild = Verdict("mild-certified", detail="single relator (Labute)")
        if p.num_generators >= 2:
            report.add_table("phi",
                             labute_one_relator_ranks(p.num_generators, weights[0], order),
                             "labute one-relator formula")
    else:
        try:
            _, search = anick_search_orderings(p, cap)
        except ValueError:
            search = Verdict("inconclusive", detail="too many generators to search")
        mild = search if search.status == "mild-certified" \
            else anick_mild_numeric(p, order, cap)
    report.verdicts["mildness"] = mild
    if mild.status == "mild-certified":
        lg = initial_form_lie_dims(p, order, cap)
        report.add_table("phi", lg, "mild presentation: gr = initial-form Lie algebra")
    if p.num_relators == 1 and not p.relators[0].is_identity():
        formal = one_relator_graded_formality(p, cap)
        report.verdicts["graded-formality"] = Verdict(
            "graded-formal" if formal else "not-graded-formal",
            detail="one-relator weight criterion")
    else:
        report.verdicts["graded-formality"] = graded_formality_compare(p, order, cap)
    return report
