"""Command-line surface: classify, invariants, conjugate, catalog, verify.

States are JSON files mapping 4-bit strings to Gaussian-rational strings,
e.g. {"0000": "1", "1111": "1"}; absent keys mean amplitude zero.  Output is
deterministic: fixed key order and canonical scalar serialisation.

Exit codes: classify 0 exact / 3 partial; conjugate 0 yes / 1 no / 2 unknown;
parse errors 64; unknown catalog labels 65; verify 0 all-pass / 1 failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional

from . import catalog, tables
from .algebra import StateVector
from .catalog import OrbitClassLabel
from .groebner import Limits
from .invariants import evaluate_signature
from .scalars import ParseError, format_gr
from .verify import SUITE_ORDER, run_suites

EXIT_OK = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_PARTIAL = 3
EXIT_PARSE = 64
EXIT_BADLABEL = 65


def _load_state(path: str) -> StateVector:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ParseError(path, "top-level value must be an object")
        return StateVector.from_mapping(data)
    except json.JSONDecodeError as e:
        raise ParseError(path, e.msg) from None


def _limits(args) -> Limits:
    return Limits(max_degree=args.limits_degree, time_budget=args.limits_time)


def _emit(payload: Dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        _emit_text(payload)


def _emit_text(payload: Dict, indent: int = 0) -> None:
    pad = "  " * indent
    for key, value in payload.items():
        if isinstance(value, dict):
            print(f"{pad}{key}:")
            _emit_text(value, indent + 1)
        elif isinstance(value, list):
            print(f"{pad}{key}: " + "; ".join(str(v) for v in value))
        else:
            print(f"{pad}{key}: {value}")


def _state_json(x: StateVector) -> Dict[str, str]:
    return {k: v for k, v in sorted(x.to_mapping().items())}


def cmd_classify(args) -> int:
    from .classify import classify_state
    try:
        x = _load_state(args.state)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    report = classify_state(x, _limits(args))
    label = report.label
    payload = {
        "input": _state_json(x),
        "jordan": {
            "semisimple": _state_json(report.jordan.s),
            "nilpotent": _state_json(report.jordan.n),
        },
        "invariants": {
            "H": format_gr(report.signature.H),
            "L": format_gr(report.signature.L),
            "M": format_gr(report.signature.M),
            "D": format_gr(report.signature.D),
        },
        "family": label.family if label else None,
        "class": {
            "kind": label.kind if label else None,
            "i": label.family if label else None,
            "j": label.j if label else None,
            "orbit": label.orbit if label else None,
            "parameters": [format_gr(p) for p in label.parameters] if label else [],
            "exactness": report.exactness,
        },
        "s_class": list(report.s_class) if report.s_class else None,
        "stabilizer": {
            "dim": report.stabilizer.identity_component_dim,
            "generators": [str(g) for g in report.stabilizer.component_generators],
        } if report.stabilizer else None,
        "normal_form": _state_json(report.normal_form)
        if report.normal_form else None,
        "notes": report.notes,
    }
    _emit(payload, args.format)
    return EXIT_OK if report.exactness == "exact" else EXIT_PARTIAL


def cmd_invariants(args) -> int:
    try:
        x = _load_state(args.state)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    sig = evaluate_signature(x)
    payload = {
        "H": format_gr(sig.H), "L": format_gr(sig.L),
        "M": format_gr(sig.M), "D": format_gr(sig.D),
    }
    _emit(payload, args.format)
    return EXIT_OK


def cmd_conjugate(args) -> int:
    from .conjugacy import g0_conjugate, s_conjugate
    try:
        a = _load_state(args.state_a)
        b = _load_state(args.state_b)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    limits = _limits(args)
    if args.group == "g0":
        verdict = g0_conjugate(a, b, limits, want_witness=args.witness)
    else:
        verdict = s_conjugate(a, b, limits, want_witness=args.witness)
    payload = {"answer": verdict.answer, "route": verdict.route}
    if verdict.permutation:
        payload["permutation"] = list(verdict.permutation)
    if verdict.witness is not None:
        payload["witness"] = [
            [[format_gr(x) for x in row] for row in m] for m in verdict.witness.mats]
    if verdict.detail:
        payload["detail"] = verdict.detail
    _emit(payload, args.format)
    return {"yes": EXIT_OK, "no": EXIT_NO, "unknown": EXIT_UNKNOWN}[verdict.answer]


def _parse_catalog_label(text: str) -> OrbitClassLabel:
    if text.startswith("nilpotent/"):
        return OrbitClassLabel("nilpotent", orbit=int(text.split("/", 1)[1]))
    if text.startswith("semisimple/"):
        fam = int(text.split("/", 1)[1])
        return OrbitClassLabel("semisimple", family=fam,
                               parameters=catalog.DEFAULT_FAMILY_PARAMS[fam])
    if text.startswith("mixed/"):
        body = text.split("/", 1)[1]
        fam, j = body.split(".")
        return OrbitClassLabel("mixed", family=int(fam), j=int(j),
                               parameters=catalog.DEFAULT_FAMILY_PARAMS[int(fam)])
    raise catalog.CatalogError(f"unknown catalog label {text!r}")


def cmd_catalog(args) -> int:
    if args.action == "list":
        if args.level == "S":
            rows = []
            for kind, name in catalog.all_s_classes():
                rows.append({"kind": kind, "class": name})
            _emit({"level": "S", "count": len(rows), "classes": rows}, args.format)
        else:
            labels = catalog.all_g0_labels()
            rows = [{"label": str(lab), "kind": lab.kind} for lab in labels]
            _emit({"level": "G0", "count": len(rows), "classes": rows}, args.format)
        return EXIT_OK
    # show
    name = args.label
    try:
        if name.startswith("N") and name[1:].isdigit():
            x = catalog.sclass_nilpotent_rep(name)
            payload = {"class": name, "representative": _state_json(x)}
            if name in tables.NILPOTENT_STABILIZERS:
                orbit, dim, _, gens = tables.NILPOTENT_STABILIZERS[name]
                payload["stabilizer"] = {
                    "stated_for_orbit": orbit,
                    "identity_component_dim": dim,
                    "generators": [" , ".join(g) for g in gens],
                }
            _emit(payload, args.format)
            return EXIT_OK
        lab = _parse_catalog_label(name)
        x = catalog.representative(lab)
        desc = catalog.stabilizer_of(lab)
        payload = {
            "label": str(lab),
            "representative": _state_json(x),
            "s_class": list(catalog.sclass_of(lab)),
            "stabilizer": {
                "source": desc.source,
                "identity_component_dim": desc.identity_component_dim,
                "generators": [str(g) for g in desc.component_generators],
            },
        }
        _emit(payload, args.format)
        return EXIT_OK
    except (catalog.CatalogError, ValueError, KeyError) as e:
        print(f"unknown catalog label: {e}", file=sys.stderr)
        return EXIT_BADLABEL


def cmd_verify(args) -> int:
    names = list(SUITE_ORDER) if args.suite == "all" else [args.suite]
    checks, elapsed = run_suites(names)
    rows = [{"suite": c.suite, "check": c.name, "passed": c.passed,
             "detail": c.detail} for c in checks]
    ok = all(c.passed for c in checks)
    payload = {
        "suites": names,
        "checks": rows,
        "passed": sum(1 for c in checks if c.passed),
        "failed": sum(1 for c in checks if not c.passed),
        "elapsed_s": round(elapsed, 3),
        "ok": ok,
    }
    if args.format == "text":
        for c in checks:
            mark = "PASS" if c.passed else "FAIL"
            extra = f" ({c.detail})" if c.detail else ""
            print(f"[{mark}] {c.suite}: {c.name}{extra}")
        print(f"{payload['passed']} passed, {payload['failed']} failed "
              f"in {payload['elapsed_s']}s")
    else:
        print(json.dumps(payload, indent=2))
    return EXIT_OK if ok else EXIT_NO


def _common_flags(parser: argparse.ArgumentParser, top: bool) -> None:
    # accepted both before and after the subcommand; the later wins
    default = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--format", choices=("json", "text"),
                        default=default("json"))
    parser.add_argument("--limits-time", type=float, default=default(60.0),
                        help="time budget per polynomial-system decision (s)")
    parser.add_argument("--limits-degree", type=int, default=default(14),
                        help="degree cap per polynomial-system decision")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="slocc4",
        description="Exact classification of four-qubit states under local "
                    "SL(2,C) operations")
    _common_flags(ap, top=True)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a state file")
    _common_flags(p, top=False)
    p.add_argument("state")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("invariants", help="print the invariant signature")
    _common_flags(p, top=False)
    p.add_argument("state")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("conjugate", help="decide conjugacy of two states")
    _common_flags(p, top=False)
    p.add_argument("state_a")
    p.add_argument("state_b")
    p.add_argument("--group", choices=("g0", "s"), default="g0")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(fn=cmd_conjugate)

    p = sub.add_parser("catalog", help="list or show catalog entries")
    _common_flags(p, top=False)
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("label", nargs="?", default="")
    p.add_argument("--level", choices=("G0", "S"), default="G0")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("verify", help="replay the table-level checks")
    _common_flags(p, top=False)
    p.add_argument("--suite", choices=tuple(SUITE_ORDER) + ("all",),
                   default="all")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
