"""Command line interface.

Exit codes: 0 success, 1 failing verification, 2 invalid input,
3 internal postcondition failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .cyclicpres import cyclic_presentation_for_cover
from .fpgroup import Presentation, format_gap, format_presentation, homology
from .takahashi import (SurgeryDataError, parse_surgery_data, surgered_presentation,
                        theorem1_presentation)
from .twobridge import (INFINITE, InternalCheckError, TwoBridgeError, alexander_polynomial,
                        conway_to_fraction, cover_homology_order, fraction_to_conway,
                        parse_conway, parse_fraction)
from .verify import GRIDS, run_suites
from .words import format_word

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _add_source_args(sub: argparse._SubParsersAction):
    tk = sub.add_parser("takahashi", help="balanced presentation from a surgery data file")
    tk.add_argument("--file", required=True, help="surgery data file (n, m, pq, rs lines)")
    tk.add_argument("--form", choices=("theorem1", "surgered"), default="theorem1",
                    help="a-generator presentation or the surgered Wirtinger presentation")
    cy = sub.add_parser("cyclic", help="cyclic presentation of a branched cover of a two-bridge knot")
    src = cy.add_mutually_exclusive_group(required=True)
    src.add_argument("--conway", help="even Conway form such as [2,2]")
    src.add_argument("--fraction", help="knot fraction a/b, converted to an even Conway form")
    cy.add_argument("--n", type=int, required=True, help="degree of the cyclic cover")
    return tk, cy


def _conway_from(args):
    if args.conway is not None:
        return parse_conway(args.conway)
    return fraction_to_conway(parse_fraction(args.fraction))


def _build(args) -> tuple[Presentation, dict]:
    if args.source == "takahashi":
        path = Path(args.file)
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from None
        d = parse_surgery_data(text)
        P = theorem1_presentation(d) if args.form == "theorem1" else surgered_presentation(d)
        return P, {"file": str(path), "form": args.form, "n": d.n, "m": d.m}
    if args.n < 1:
        raise InputError(f"--n must be >= 1, got {args.n}")
    c = _conway_from(args)
    return cyclic_presentation_for_cover(c, args.n), {"conway": str(c), "n": args.n}


def cmd_present(args) -> int:
    P, inputs = _build(args)
    h = homology(P) if args.homology else None
    if args.json:
        out = {"command": f"present {args.source}", "inputs": inputs,
               "generators": list(P.generators),
               "relators": [format_word(r, P.generators) for r in P.relators]}
        if h is not None:
            out["homology"] = str(h)
        print(_dump(out))
    else:
        sys.stdout.write(format_presentation(P))
        if h is not None:
            print(f"# homology: {h}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    if args.n < 1:
        raise InputError(f"--n must be >= 1, got {args.n}")
    c = _conway_from(args)
    f = conway_to_fraction(c)
    delta = alexander_polynomial(f)
    h = homology(cyclic_presentation_for_cover(c, args.n))
    order = cover_homology_order(f, args.n) if args.n >= 2 else 1
    out = {
        "conway": str(c),
        "n": args.n,
        "fraction": str(f),
        "alexander": delta.format(descending=True),
        "alexander_coefficients": list(delta.coefficients),
        "order": str(order),
        "homology": str(h),
        "oracle": {
            "presentation_order": str(h.order()) if h.order() is not None else INFINITE,
            "resultant_order": str(order),
            "agree": (h.free_rank > 0) if order == INFINITE else h.order() == order,
        },
    }
    print(_dump(out))
    if not out["oracle"]["agree"]:
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_verify(args) -> int:
    grid = GRIDS[args.grid]
    t0 = time.perf_counter()
    results = run_suites(grid)
    total = time.perf_counter() - t0
    timing = not args.no_timing
    report = {
        "command": f"verify --grid {args.grid}",
        "inputs": {"grid": args.grid},
        "suites": [r.to_dict(timing) for r in results],
        "passed": all(r.passed for r in results),
    }
    if timing:
        report["seconds"] = round(total, 3)
    if args.report:
        Path(args.report).write_text(_dump(report) + "\n")
    if args.json:
        print(_dump(report))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.name:26s} {r.cases:6d} cases"
            if timing:
                line += f" {r.seconds:8.2f}s"
            print(line)
            for fail in r.failures[:5]:
                print(f"    {json.dumps(fail, sort_keys=True)}")
        print(f"{'PASS' if report['passed'] else 'FAIL'}: {sum(r.passed for r in results)}/{len(results)} suites")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_export(args) -> int:
    P, inputs = _build(args)
    text = format_presentation(P) if args.format == "presentation" else format_gap(P)
    if args.out:
        Path(args.out).write_text(text)
    if args.json:
        print(_dump({"command": f"export {args.source}", "format": args.format,
                     "inputs": inputs, "out": args.out, "text": text}))
    elif not args.out:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="takahashi-groups",
        description="Presentations of generalized Takahashi manifolds and cyclic branched covers "
                    "of two-bridge knots, with exact homology cross-checks.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("present", help="print a presentation")
    prsub = pr.add_subparsers(dest="source", required=True)
    for p in _add_source_args(prsub):
        p.add_argument("--homology", action="store_true", help="also print H_1")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=cmd_present)

    inv = sub.add_parser("invariants", help="fraction, Alexander polynomial, cover homology (JSON)")
    src = inv.add_mutually_exclusive_group(required=True)
    src.add_argument("--conway")
    src.add_argument("--fraction")
    inv.add_argument("--n", type=int, required=True)
    inv.add_argument("--json", action="store_true", help="accepted for uniformity; output is always JSON")
    inv.set_defaults(func=cmd_invariants)

    ver = sub.add_parser("verify", help="run the verification suites")
    ver.add_argument("--grid", choices=sorted(GRIDS), default="small")
    ver.add_argument("--json", action="store_true")
    ver.add_argument("--report", help="also write the JSON report to this path")
    ver.add_argument("--no-timing", action="store_true", help="omit timings (byte-stable output)")
    ver.set_defaults(func=cmd_verify)

    ex = sub.add_parser("export", help="write a presentation file or GAP input")
    ex.add_argument("--format", choices=("presentation", "generic-cgt"), required=True)
    ex.add_argument("--out", help="output path (default stdout)")
    ex.add_argument("--json", action="store_true", help="wrap the exported text in a JSON object")
    exsub = ex.add_subparsers(dest="source", required=True)
    for p in _add_source_args(exsub):
        p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SurgeryDataError, TwoBridgeError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
