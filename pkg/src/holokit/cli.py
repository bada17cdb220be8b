"""Command-line front end: parse, reduce, expand, report.

Subcommands: echelon, cup, holonomy, chen, lgdims, ranks, mild, formality,
seifert, link.  Reports are deterministic: identical input and version give
byte-identical JSON.  Rationals serialize as "p/q" strings, never floats.

Exit codes: 0 success, 2 presentation parse error, 3 precondition failure,
4 resource refusal.  HOLOKIT_THREADS bounds internal worker threads.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .cupprod import cup_structure, cup_structure_integral, worker_count
from .echelon import echelon_approximation
from .freelie import (enveloping_dims, holonomy_presentation, initial_form_lie_dims,
                      pbw_check, quotient_dims, solvable_quotient_dims)
from .presentations import (FinitePresentation, PresentationError, borromean_presentation,
                            fingerprint, format_presentation, parse_presentation,
                            seifert_euler, seifert_presentation, surface_presentation,
                            whitehead_presentation)
from .ranks import (RankReport, Verdict, anick_mild_combinatorial, anick_mild_numeric,
                    anick_search_orderings, graded_formality_compare, link_rank_report,
                    one_relator_graded_formality, presentation_rank_report,
                    seifert_rank_report)
from .series import WeightCapExceeded

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_RESOURCE = 4

TENSOR_DIMENSION_LIMIT = 10 ** 7


class ResourceRefusal(RuntimeError):
    pass


def _rational(value):
    f = Fraction(value)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _matrix(mat):
    return [[_rational(v) for v in row] for row in mat]


def builtin_family(name: str, params: dict) -> FinitePresentation:
    """Canonical fixtures: whitehead, borromean, surface (g), seifert (g, pairs, b)."""
    if name == "whitehead":
        return whitehead_presentation()
    if name == "borromean":
        return borromean_presentation()
    if name == "surface":
        if params.get("g") is None:
            raise ValueError("surface family needs --g")
        return surface_presentation(params["g"])
    if name == "seifert":
        if params.get("g") is None:
            raise ValueError("seifert family needs --g (plus --pairs, --b)")
        return seifert_presentation(params["g"], params.get("pairs") or [],
                                    params.get("b") or 0)
    raise ValueError(f"unknown family '{name}'")


def _load_presentation(args) -> FinitePresentation:
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            return parse_presentation(fh.read())
    if getattr(args, "family", None):
        return builtin_family(args.family, {
            "g": getattr(args, "g", None),
            "pairs": getattr(args, "pairs", None),
            "b": getattr(args, "b", None)})
    raise ValueError("supply --file or --family")


def _guard(base: int, degree: int, force: bool):
    if base >= 2 and base ** degree > TENSOR_DIMENSION_LIMIT and not force:
        raise ResourceRefusal(
            f"{base}^{degree} tensor dimensions exceed {TENSOR_DIMENSION_LIMIT}; "
            "pass --force to override")


def _check_degrees(args):
    if getattr(args, "degree", None) is not None and args.degree < 1:
        raise ValueError("--degree must be >= 1")
    cap = getattr(args, "cap", None)
    degree = getattr(args, "degree", None)
    if cap is not None and degree is not None and cap < degree:
        raise ValueError("--cap must be at least --degree")


def _envelope(args, presentation=None, **payload):
    body = {"tool": "holokit", "version": __version__, "subcommand": args.command}
    if presentation is not None:
        body["fingerprint"] = fingerprint(presentation)
        body["generators"] = list(presentation.generator_names)
    if getattr(args, "degree", None) is not None:
        body["degree"] = args.degree
    body.update(payload)
    return body


def _verdicts_json(verdicts):
    return {name: {"status": v.status,
                   **({"degree": v.degree} if v.degree is not None else {}),
                   **({"detail": v.detail} if v.detail else {})}
            for name, v in verdicts.items()}


def _report_json(report: RankReport):
    tables = {}
    for name, slot in sorted(report.tables.items()):
        tables[name] = [{"degree": k, "value": slot[k].value,
                         "provenance": slot[k].provenance} for k in sorted(slot)]
    out = {"tables": tables, "verdicts": _verdicts_json(report.verdicts)}
    if report.notes:
        out["notes"] = list(report.notes)
    return out


def _emit(args, payload):
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        sys.stdout.write("\n")
        return
    _emit_text(payload)


def _emit_text(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for key in payload:
            value = payload[key]
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                print(f"{pad}{key}:")
                _emit_text(value, indent + 1)
            else:
                print(f"{pad}{key}: {_flat(value)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                _emit_text(item, indent)
            else:
                print(f"{pad}- {_flat(item)}")
    else:
        print(f"{pad}{_flat(payload)}")


def _is_flat(value):
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _flat(value):
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return value


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_echelon(args):
    p = _load_presentation(args)
    data = echelon_approximation(p)
    red = data.reduction
    return _envelope(
        args, p,
        transform=_matrix(red.transform),
        hermite=_matrix(red.hermite),
        pivot_columns=list(red.pivot_cols),
        rank=red.rank,
        betti=data.betti,
        h1_basis=list(data.h1_basis),
        h2_basis=list(data.h2_basis),
        echelon_relators=format_presentation(data.presentation).splitlines()[2:],
        proj=_matrix(data.proj.rows))


def _cmd_cup(args):
    p = _load_presentation(args)
    if args.integral:
        cup = cup_structure_integral(p)
    else:
        cup = cup_structure(p)
    return _envelope(
        args, p,
        b=cup.betti,
        labels=list(cup.h2_labels),
        matrices=[_matrix(m) for m in cup.constants])


def _cmd_holonomy(args):
    p = _load_presentation(args)
    holo = holonomy_presentation(p)
    _guard(holo.num_generators, args.degree, args.force)
    dims = quotient_dims(holo, args.degree)
    env = enveloping_dims(holo, args.degree)
    ok, mismatch = pbw_check(dims, env, args.degree)
    if not ok:
        raise AssertionError(f"PBW cross-check failed at degree {mismatch}")
    return _envelope(
        args, p,
        holonomy_generators=list(holo.generator_names),
        relations=[_matrix(m) for m in holo.relations],
        dropped_relation_labels=list(holo.dropped_labels),
        dims=dims,
        enveloping_dims=env,
        pbw_consistent=ok)


def _cmd_chen(args):
    p = _load_presentation(args)
    holo = holonomy_presentation(p)
    _guard(holo.num_generators, args.degree, args.force)
    dims = solvable_quotient_dims(holo, args.i, args.degree)
    return _envelope(args, p, derived_level=args.i, dims=dims)


def _cmd_lgdims(args):
    p = _load_presentation(args)
    _guard(p.num_generators, args.degree, args.force)
    dims = initial_form_lie_dims(p, args.degree, args.cap)
    return _envelope(args, p, dims=dims)


def _cmd_ranks(args):
    p = _load_presentation(args)
    holo_b = len(echelon_approximation(p).h1_basis)
    _guard(max(holo_b, p.num_generators), args.degree, args.force)
    report = presentation_rank_report(p, args.degree, args.cap)
    return _envelope(args, p, **_report_json(report))


def _cmd_mild(args):
    p = _load_presentation(args)
    _guard(p.num_generators, args.degree, args.force)
    numeric = anick_mild_numeric(p, args.degree, args.cap)
    payload = {"numeric": _verdicts_json({"v": numeric})["v"]}
    if args.ordering:
        names = [s.strip() for s in args.ordering.split(",")]
        index = {name: i + 1 for i, name in enumerate(p.generator_names)}
        unknown = [s for s in names if s not in index]
        if unknown or sorted(names) != sorted(p.generator_names):
            raise ValueError("--ordering must list every generator name once")
        ordering = tuple(index[s] for s in names)
        verdict = anick_mild_combinatorial(p, ordering, args.cap)
        payload["combinatorial"] = _verdicts_json({"v": verdict})["v"]
        payload["ordering"] = names
    elif p.num_generators <= 6:
        ordering, verdict = anick_search_orderings(p, args.cap)
        payload["combinatorial"] = _verdicts_json({"v": verdict})["v"]
        if ordering:
            payload["ordering"] = [p.generator_names[g - 1] for g in ordering]
    return _envelope(args, p, **payload)


def _cmd_formality(args):
    p = _load_presentation(args)
    _guard(p.num_generators, args.degree, args.force)
    payload = {}
    if p.num_relators == 1 and not p.relators[0].is_identity():
        formal = one_relator_graded_formality(p, args.cap)
        payload["one_relator_criterion"] = _verdicts_json(
            {"v": Verdict("graded-formal" if formal else "not-graded-formal",
                          detail="weight at most 2 iff graded-formal")})["v"]
    verdict = graded_formality_compare(p, args.degree, args.cap)
    payload["compare"] = _verdicts_json({"v": verdict})["v"]
    return _envelope(args, p, **payload)


def _parse_pairs(raw):
    pairs = []
    for item in raw or []:
        try:
            alpha, beta = item.split("/")
            pairs.append((int(alpha), int(beta)))
        except ValueError:
            raise ValueError(f"bad --pairs entry '{item}', expected alpha/beta")
    return pairs


def _cmd_seifert(args):
    pairs = _parse_pairs(args.pairs)
    p = seifert_presentation(args.g, pairs, args.b)
    _guard(2 * args.g + 1, args.degree, args.force)
    report = seifert_rank_report(args.g, pairs, args.b, args.degree)
    e = seifert_euler(pairs, args.b)
    return _envelope(args, p, euler=_rational(e),
                     branch="euler zero" if e == 0 else "euler nonzero",
                     **_report_json(report))


def _cmd_link(args):
    linking = json.loads(args.matrix)
    report = link_rank_report(linking, args.degree)
    return _envelope(args, linking_matrix=linking, **_report_json(report))


# ---------------------------------------------------------------------------
# argument parsing


def _add_input_options(sub, families=True):
    sub.add_argument("--file", help="presentation file")
    if families:
        sub.add_argument("--family", help="builtin family: whitehead, borromean, surface, seifert")
        sub.add_argument("--g", type=int, help="genus for the surface/seifert families")
        sub.add_argument("--pairs", nargs="*", help="seifert pairs alpha/beta")
        sub.add_argument("--b", type=int, help="seifert obstruction b")


def _add_common(sub, degree=True):
    if degree:
        sub.add_argument("--degree", type=int, default=8, help="truncation degree (default 8)")
    sub.add_argument("--cap", type=int, default=16, help="weight cap (default 16)")
    sub.add_argument("--json", action="store_true", help="emit JSON")
    sub.add_argument("--force", action="store_true", help="override the resource guard")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="holokit",
        description="Fox calculus, cup products and holonomy Lie algebras "
                    "for finite group presentations")
    parser.add_argument("--version", action="version", version=f"holokit {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("echelon", help="Hermite reduction and echelon approximation")
    _add_input_options(sub)
    _add_common(sub, degree=False)
    sub.set_defaults(handler=_cmd_echelon)

    sub = subs.add_parser("cup", help="cup-product structure constants")
    _add_input_options(sub)
    sub.add_argument("--integral", action="store_true",
                     help="integer constants (commutator relators only)")
    _add_common(sub, degree=False)
    sub.set_defaults(handler=_cmd_cup)

    sub = subs.add_parser("holonomy", help="holonomy Lie algebra presentation and dims")
    _add_input_options(sub)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_holonomy)

    sub = subs.add_parser("chen", help="solvable quotient dims of the holonomy Lie algebra")
    _add_input_options(sub)
    sub.add_argument("--i", type=int, default=2, help="derived series level (default 2)")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_chen)

    sub = subs.add_parser("lgdims", help="initial-form Lie algebra dims")
    _add_input_options(sub)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_lgdims)

    sub = subs.add_parser("ranks", help="full rank report")
    _add_input_options(sub)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_ranks)

    sub = subs.add_parser("mild", help="Anick mildness tests")
    _add_input_options(sub)
    sub.add_argument("--ordering", help="comma-separated generator names, highest first")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_mild)

    sub = subs.add_parser("formality", help="graded-formality verdicts")
    _add_input_options(sub)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_formality)

    sub = subs.add_parser("seifert", help="Seifert manifold group rank report")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--pairs", nargs="*", default=[], help="pairs alpha/beta")
    sub.add_argument("--b", type=int, default=0)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_seifert)

    sub = subs.add_parser("link", help="link group report from a linking matrix")
    sub.add_argument("--matrix", required=True, help="JSON n x n symmetric integer matrix")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_link)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        worker_count()
        _check_degrees(args)
        payload = args.handler(args)
    except PresentationError as exc:
        print(f"holokit: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceRefusal as exc:
        print(f"holokit: refused: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, WeightCapExceeded, OSError, json.JSONDecodeError) as exc:
        print(f"holokit: error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(args, payload)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
