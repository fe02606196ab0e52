"""Command-line interface: polynomials, coproducts, involutions, law suites.

All results are printed to stdout as JSON (polynomials as integer-string
coefficient arrays, constant term first; coproduct terms with factors in
HGX matrix form).  Exit codes: 0 success / all laws pass, 1 law violation,
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .canon import canonical_form, canonical_key, from_key
from .chromatic import (
    chromatic_poly,
    count_colorings,
    count_rainbow,
    quartet,
    rainbow_poly,
    rainbow_quartet,
)
from .coalgebra import CoproductKind, coproduct
from .errors import HypergraphError, ResourceLimitError
from .hgx import ParseError, parse_hgx, serialize_hgx
from .hypergraph import Hypergraph, derive
from .laws import SUITE_NAMES, SuiteConfig, run_suite

POLY_KINDS = ("chi", "chi-d", "chi-c", "chi-cd", "rainbow")
COPRODUCT_KINDS = (
    "Delta",
    "Delta-d",
    "Delta-c",
    "Delta-cd",
    "delta",
    "delta-d",
    "delta-c",
    "delta-cd",
    "Dprime",
    "Dpp",
    "dpp",
)


def _load(path: str) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hgx(fh.read())


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _poly_json(poly) -> list[str]:
    return poly.int_strings()


def _cmd_quartet(args) -> int:
    h = _load(args.file)
    polys = rainbow_quartet(h) if args.rainbow else quartet(h)
    _emit(
        {
            "chi": _poly_json(polys[0]),
            "chi_d": _poly_json(polys[1]),
            "chi_c": _poly_json(polys[2]),
            "chi_cd": _poly_json(polys[3]),
        }
    )
    return 0


def _cmd_poly(args) -> int:
    h = _load(args.file)
    if args.kind == "rainbow":
        poly = rainbow_poly(h)
    else:
        invol = args.kind.partition("-")[2] or "id"
        poly = chromatic_poly(derive(h, invol))
    _emit(_poly_json(poly))
    return 0


def _cmd_count(args) -> int:
    h = _load(args.file)
    counter = count_rainbow if args.rainbow else count_colorings
    _emit(counter(h, args.colors))
    return 0


def _cmd_coproduct(args) -> int:
    h = _load(args.file)
    lc = coproduct(CoproductKind.parse(args.kind), h)
    terms = [
        {
            "coeff": str(c.numerator) if c.denominator == 1 else str(c),
            "left": serialize_hgx(from_key(k1)),
            "right": serialize_hgx(from_key(k2)),
        }
        for (k1, k2), c in lc.terms()
    ]
    terms.sort(key=lambda t: (t["left"], t["right"]))
    _emit(terms)
    return 0


def _cmd_derive(args) -> int:
    h = _load(args.file)
    _emit({"hgx": serialize_hgx(derive(h, args.op))})
    return 0


def _cmd_canon(args) -> int:
    h = _load(args.file)
    _emit(
        {
            "key": canonical_key(h).hex(),
            "hgx": serialize_hgx(canonical_form(h)),
        }
    )
    return 0


def _cmd_laws(args) -> int:
    cfg = SuiteConfig(
        max_edges=args.max_edges,
        max_vertices=args.max_vertices,
        samples=args.samples,
        seed=args.seed,
        suites=tuple(args.suite) if args.suite else SUITE_NAMES,
        jobs=args.jobs if args.jobs else (os.cpu_count() or 1),
    )
    report = run_suite(cfg)
    if args.json:
        print(report.to_json())
    else:
        for law in sorted(report.entries):
            entry = report.entries[law]
            status = "ok" if entry.failed == 0 else "FAIL"
            print(f"{status:4} {law}: checked={entry.checked} failed={entry.failed}")
        verdict = "all laws hold" if report.all_pass else "violations found"
        print(f"== {verdict} ==")
    return 0 if report.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypalg",
        description="Hypergraph bialgebra coproducts, chromatic quartets, and law suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quartet", help="the four chromatic polynomials of a hypergraph")
    p.add_argument("--rainbow", action="store_true", help="use the rainbow polynomial instead")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_quartet)

    p = sub.add_parser("poly", help="one polynomial of a hypergraph")
    p.add_argument("--kind", choices=POLY_KINDS, required=True)
    p.add_argument("file")
    p.set_defaults(fn=_cmd_poly)

    p = sub.add_parser("count", help="count colorings with a fixed number of colors")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--rainbow", action="store_true")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("coproduct", help="expand a coproduct into collected terms")
    p.add_argument("--kind", choices=COPRODUCT_KINDS, required=True)
    p.add_argument("file")
    p.set_defaults(fn=_cmd_coproduct)

    p = sub.add_parser("derive", help="apply an involution to the incidence matrix")
    p.add_argument("--op", choices=("d", "c", "cd"), required=True)
    p.add_argument("file")
    p.set_defaults(fn=_cmd_derive)

    p = sub.add_parser("canon", help="canonical key and canonical matrix form")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_canon)

    p = sub.add_parser("laws", help="run the law verification suites")
    p.add_argument("--suite", action="append", choices=SUITE_NAMES, default=None)
    p.add_argument("--max-edges", type=int, default=3)
    p.add_argument("--max-vertices", type=int, default=3)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--jobs", type=int, default=0, help="worker processes (default: all cores)")
    p.set_defaults(fn=_cmd_laws)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"hypalg: parse error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"hypalg: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"hypalg: resource limit: {exc}", file=sys.stderr)
        return 2
    except HypergraphError as exc:
        print(f"hypalg: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
