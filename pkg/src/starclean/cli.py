"""Command-line front end.

Subcommands: analyze (full report for one spec), verify (statement suite
over a directory of specs), witness (decompositions of one element) and
involutions (every involution of a ring with its decision).  Exit codes:
0 success, 2 spec/input error, 3 order-bound error, 4 inconsistency.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from importlib import resources
from pathlib import Path

import jsonschema

from . import __version__
from .cleanness import Variant, decide, holds
from .constructors import construct, construct_group, generated_ideal
from .core import enumerate_involutions
from .errors import OrderBoundExceeded, StarCleanError
from .harness import STATEMENT_IDS, Aux, run_corpus, verify_statement
from .structure import (
    as_star_ideal,
    classify_flags,
    idempotents,
    jacobson_radical,
    projections,
    units,
)

EXIT_OK = 0
EXIT_SPEC_ERROR = 2
EXIT_ORDER_BOUND = 3
EXIT_INCONSISTENT = 4


class CliError(Exception):
    """Input problem reportable as exit code 2."""


def _spec_schema() -> dict:
    text = resources.files("starclean").joinpath("schema/ringspec.schema.json").read_text()
    return json.loads(text)


def load_spec_document(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}") from exc
    try:
        jsonschema.validate(doc, _spec_schema())
    except jsonschema.ValidationError as exc:
        raise CliError(f"{path} fails schema validation: {exc.message}") from exc
    return doc


def build_star_ring(doc: dict):
    spec = dict(doc["construct"])
    if "involution" in doc:
        spec["involution"] = doc["involution"]
    return construct(spec)


def build_aux(S, doc: dict) -> Aux:
    raw = doc.get("aux") or {}
    kwargs = {}
    if "ideal_generators" in raw:
        ideal = generated_ideal(S.ring, raw["ideal_generators"])
        kwargs["ideal"] = as_star_ideal(S, ideal)
    if "group" in raw:
        kwargs["group"] = construct_group(raw["group"])
    if "series_orders" in raw:
        kwargs["series_orders"] = tuple(raw["series_orders"])
    if "extension_limit" in raw:
        kwargs["extension_limit"] = raw["extension_limit"]
    return Aux(**kwargs)


def load_spec(path):
    doc = load_spec_document(path)
    S = build_star_ring(doc)
    return doc["name"], S, build_aux(S, doc)


# ---------------------------------------------------------------------------
# report assembly

def _labels(R, members) -> list:
    return [R.labels[x] for x in sorted(members)]


def _ring_summary(S) -> dict:
    R = S.ring
    jac = jacobson_radical(R)
    u = units(R)
    return {
        "order": R.order,
        "flags": asdict(classify_flags(S)),
        "radical": _labels(R, jac.members),
        "radical_size": len(jac.members),
        "units": _labels(R, u),
        "unit_count": len(u),
        "idempotent_count": len(idempotents(R)),
        "projection_count": len(projections(S)),
    }


def _decision_doc(S, variant: Variant, exhaustive: bool) -> dict:
    report = decide(S, variant, exhaustive=exhaustive)
    return {
        "holds": report.holds,
        "failures": [
            {"element": S.ring.labels[a], "witness_count": count}
            for a, count in report.failures
        ],
    }


def _statement_doc(result) -> dict:
    return {
        "statement": result.statement,
        "ring": result.ring_label,
        "consistent": result.consistent,
        "vacuous": result.vacuous,
        "note": result.note,
        "witness": result.witness,
        "clauses": [[text, value] for text, value in result.clauses],
    }


def analyze_document(name: str, S, aux: Aux, exhaustive: bool = False) -> dict:
    return {
        "tool": "starclean",
        "version": __version__,
        "name": name,
        "ring": _ring_summary(S),
        "variants": {
            v.value: _decision_doc(S, v, exhaustive) for v in Variant
        },
        "statements": [
            _statement_doc(verify_statement(S, sid, aux, name=name))
            for sid in STATEMENT_IDS
        ],
    }


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _render_analyze_text(doc: dict) -> str:
    ring = doc["ring"]
    lines = [
        f"ring {doc['name']} (order {ring['order']})",
        "flags: " + ", ".join(f"{k}={v}" for k, v in sorted(ring["flags"].items())),
        f"J(R) = {{{', '.join(ring['radical'])}}} ({ring['radical_size']} elements)",
        f"units = {{{', '.join(ring['units'])}}} ({ring['unit_count']} elements)",
        f"idempotents: {ring['idempotent_count']}  projections: {ring['projection_count']}",
        "",
        "variants:",
    ]
    for name in sorted(doc["variants"]):
        dec = doc["variants"][name]
        line = f"  {name}: {str(dec['holds']).lower()}"
        if dec["failures"]:
            first = dec["failures"][0]
            line += f"  (element {first['element']} has {first['witness_count']} witnesses)"
        lines.append(line)
    lines.append("")
    lines.append("statements:")
    for res in doc["statements"]:
        status = "consistent" if res["consistent"] else "INCONSISTENT"
        if res["vacuous"]:
            status = f"vacuous ({res['note']})"
        lines.append(f"  {res['statement']}: {status}")
        if res["witness"]:
            lines.append(f"    witness: {res['witness']}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands

def cmd_analyze(args) -> int:
    name, S, aux = load_spec(args.spec)
    doc = analyze_document(name, S, aux, exhaustive=args.exhaustive)
    if args.text:
        sys.stdout.write(_render_analyze_text(doc))
    else:
        sys.stdout.write(_dump(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    directory = Path(args.corpus)
    if not directory.is_dir():
        raise CliError(f"{directory} is not a directory")
    paths = sorted(directory.glob("*.json"))
    if not paths:
        raise CliError(f"no spec files in {directory}")
    statements = STATEMENT_IDS
    if args.statements:
        requested = tuple(s.strip() for s in args.statements.split(",") if s.strip())
        unknown = [s for s in requested if s not in STATEMENT_IDS]
        if unknown:
            raise CliError(f"unknown statement ids: {', '.join(unknown)}")
        statements = requested
    entries = [load_spec(path) for path in paths]
    results = []
    for name, S, aux in sorted(entries, key=lambda entry: entry[0]):
        for sid in statements:
            results.append(verify_statement(S, sid, aux, name=name))
    inconsistent = [r for r in results if not r.consistent]
    vacuous = sum(1 for r in results if r.vacuous)
    if args.json:
        doc = {
            "tool": "starclean",
            "version": __version__,
            "rings": sorted(name for name, _, _ in entries),
            "results": [_statement_doc(r) for r in results],
            "total": len(results),
            "inconsistent_count": len(inconsistent),
            "vacuous_count": vacuous,
        }
        sys.stdout.write(_dump(doc))
    else:
        for r in results:
            status = "ok"
            if r.vacuous:
                status = "vacuous"
            elif not r.consistent:
                status = "INCONSISTENT"
            line = f"{r.ring_label:20s} {r.statement:6s} {status}"
            if r.note:
                line += f"  [{r.note}]"
            if r.witness:
                line += f"  {r.witness}"
            sys.stdout.write(line + "\n")
        sys.stdout.write(
            f"{len(results)} checks, {len(inconsistent)} inconsistent, {vacuous} vacuous\n"
        )
    return EXIT_INCONSISTENT if inconsistent else EXIT_OK


def _resolve_element(S, token: str) -> int:
    if token in S.ring.labels:
        return S.ring.labels.index(token)
    try:
        idx = int(token)
    except ValueError:
        raise CliError(f"unknown element label {token!r}") from None
    if not 0 <= idx < S.ring.order:
        raise CliError(f"element index {idx} out of range for order {S.ring.order}")
    return idx


def cmd_witness(args) -> int:
    from .cleanness import witnesses

    name, S, _aux = load_spec(args.spec)
    try:
        variant = Variant(args.variant)
    except ValueError:
        raise CliError(f"unknown variant {args.variant!r}") from None
    a = _resolve_element(S, args.element)
    found = witnesses(S, a, variant)
    sys.stdout.write(
        f"{name}: element {S.ring.labels[a]}, variant {variant.value}: "
        f"{len(found)} witness(es)\n"
    )
    for w in found:
        sys.stdout.write(
            f"e={S.ring.labels[w.companion]} u={S.ring.labels[w.complement]} "
            f"commutes={str(w.commutes).lower()}\n"
        )
    return EXIT_OK


def cmd_involutions(args) -> int:
    name, S, _aux = load_spec(args.spec)
    found = enumerate_involutions(S.ring)
    sys.stdout.write(f"{name}: {len(found)} involution(s)\n")
    from .core import StarRing

    for star in found:
        starred = StarRing(S.ring, star)
        value = holds(starred, Variant.STRONGLY_J_STAR_CLEAN)
        perm = ",".join(str(p) for p in star.as_tuple())
        sys.stdout.write(f"[{perm}] strongly_J_star_clean={str(value).lower()}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starclean",
        description="Finite *-ring analysis and statement verification.",
    )
    parser.add_argument("--version", action="version", version=f"starclean {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one ring spec")
    p.add_argument("spec")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--text", action="store_true")
    p.add_argument("--exhaustive", action="store_true",
                   help="report every failing element, not just the first")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="verify the statement suite over a spec directory")
    p.add_argument("corpus")
    p.add_argument("--statements", help="comma-separated statement ids (default: all)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="list decompositions of one element")
    p.add_argument("spec")
    p.add_argument("element")
    p.add_argument("variant")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("involutions", help="enumerate involutions with decisions")
    p.add_argument("spec")
    p.set_defaults(func=cmd_involutions)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OrderBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORDER_BOUND
    except (CliError, StarCleanError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC_ERROR


if __name__ == "__main__":
    sys.exit(main())
