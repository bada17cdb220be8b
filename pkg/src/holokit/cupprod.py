"""Cup-product structure constants on the presentation 2-complex.

The constants live in the transferred basis: H^1 classes dual to the
non-pivot generators of the echelon approximation, H^2 classes indexed by
the echelon relators past the Jacobian rank.  They depend on the chosen
presentation, so reports carry its fingerprint.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .echelon import EchelonData, echelon_approximation
from .foxcalc import epsilon_multi
from .presentations import FinitePresentation, fingerprint
from .series import kappa


class CommutatorRelatorsRequired(ValueError):
    """A relator has a nonzero exponent sum where zero is required."""


def worker_count() -> int:
    """Thread budget for independent per-relator work; HOLOKIT_THREADS caps it."""
    raw = os.environ.get("HOLOKIT_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"HOLOKIT_THREADS must be an integer, got {raw!r}")
    return max(1, value)


@dataclass(frozen=True)
class CupStructure:
    betti: int
    h2_labels: tuple[int, ...]
    constants: tuple[tuple[tuple[Fraction, ...], ...], ...]  # one b x b matrix per label
    presentation_fingerprint: str

    def matrix(self, label):
        return self.constants[self.h2_labels.index(label)]


def _check_antisymmetric(mat, context):
    b = len(mat)
    for i in range(b):
        for j in range(b):
            if mat[i][j] != -mat[j][i]:
                raise AssertionError(f"cup matrix not antisymmetric for {context}")


def cup_structure(p: FinitePresentation, echelon_data: EchelonData | None = None) -> CupStructure:
    """kappa(w_k)_{i,j} for every H^2 label k, via the echelon approximation."""
    data = echelon_data if echelon_data is not None else echelon_approximation(p)
    b = data.betti
    proj = data.proj

    def constants_for(k):
        w = data.presentation.relators[k - 1]
        series = kappa(w, proj, 2)
        mat = tuple(tuple(series.coeff((i + 1, j + 1)) for j in range(b))
                    for i in range(b))
        _check_antisymmetric(mat, f"relator {k}")
        return mat

    labels = data.h2_basis
    workers = worker_count()
    if workers > 1 and len(labels) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            mats = tuple(pool.map(constants_for, labels))
    else:
        mats = tuple(constants_for(k) for k in labels)
    return CupStructure(b, labels, mats, fingerprint(p))


def cup_structure_integral(p: FinitePresentation) -> CupStructure:
    """Integer constants eps_{i,j}(r_k) for a commutator-relators presentation."""
    n = p.num_generators
    for idx, r in enumerate(p.relators, start=1):
        for i in range(1, n + 1):
            if r.exponent_sum(i) != 0:
                raise CommutatorRelatorsRequired(
                    f"relator {idx} has nonzero exponent sum on generator {i}")
    mats = []
    for k, r in enumerate(p.relators, start=1):
        mat = tuple(tuple(epsilon_multi((i, j), r) for j in range(1, n + 1))
                    for i in range(1, n + 1))
        for row in mat:
            for v in row:
                assert v.denominator == 1
        _check_antisymmetric(mat, f"relator {k}")
        mats.append(mat)
    return CupStructure(n, tuple(range(1, p.num_relators + 1)), tuple(mats),
                        fingerprint(p))
