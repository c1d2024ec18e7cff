"""Command line interface.

Exit codes: 0 success, 1 semantic failure (violation, FAIL, counterexample),
2 usage error, 3 I/O or file format error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import classes
from .catalog import (
    CATALOG_MODES,
    build_catalog,
    load_catalog,
    save_catalog,
)
from .classes import PROPOSITION_IDS
from .errors import (
    FormatError,
    InvalidParams,
    OrderTooLarge,
    ParseError,
    SglatError,
    UnknownClass,
    ValidationError,
)
from .hasse import LATTICE_NODES, derive_lattice
from .satisfaction import find_violation
from .semigroups import parse_semigroup
from .verify import (
    build_matrix,
    explore_cover_of_I,
    probe_metatheorems,
    prop32_suite,
    verify_propositions,
)

_MODE_ALIASES = {"iso": "iso", "equiv": "iso_or_anti_iso"}


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="sglat",
        description="Finite semigroup toolkit: enumeration, inclusion systems, class lattice verification.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate semigroups and write a catalog")
    p.add_argument("--order", type=int, required=True, help="largest order to enumerate (1..6)")
    p.add_argument("--mode", choices=sorted(_MODE_ALIASES), default="iso",
                   help="equivalence: iso, or equiv (isomorphism or anti-isomorphism)")
    p.add_argument("--out", required=True, help="catalog file to write")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("check", help="check one semigroup against an inclusion system")
    p.add_argument("--semigroup", required=True, help="semigroup file (text or JSON form)")
    p.add_argument("--system", required=True, help="inclusion system, e.g. 'xy = x' or 'xyz <= {xy, qz}'")

    p = sub.add_parser("classify", help="CSV membership matrix over a catalog")
    p.add_argument("--catalog", required=True)
    p.add_argument("--classes", default=None,
                   help="comma separated class names (default: core classes and unions)")

    p = sub.add_parser("verify", help="check the numbered class equalities over a catalog")
    p.add_argument("--catalog", required=True)
    p.add_argument("--props", default=None, help="e.g. '1..18' or '1,5,17' (default all)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("probe", help="random systems against the implication laws")
    p.add_argument("--catalog", required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("lattice", help="derive the empirical class diagram")
    p.add_argument("--catalog", required=True)
    p.add_argument("--emit", choices=("dot", "text"), default="text")

    p = sub.add_parser("prop32", help="witness suite: the chain condition is no identity class")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("explore-cover", help="search for systems strictly between I and GRB")
    p.add_argument("--catalog", required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    return top


def _parse_props(text: str | None) -> list[int]:
    if text is None:
        return list(PROPOSITION_IDS)
    ids: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, _, hi = part.partition("..")
            ids.extend(range(int(lo), int(hi) + 1))
        elif part:
            ids.append(int(part))
    bad = [i for i in ids if i not in PROPOSITION_IDS]
    if bad:
        raise InvalidParams(f"unknown claim ids {bad}; valid ids are 1..18")
    return ids


def _cmd_enumerate(args) -> int:
    mode = _MODE_ALIASES[args.mode]
    catalog = build_catalog(args.order, mode, jobs=args.jobs)
    for order, count in catalog.counts().items():
        print(f"order {order}: {count}")
    save_catalog(catalog, args.out)
    total = sum(catalog.counts().values())
    print(f"wrote {total} entries (mode={mode}) to {args.out}")
    return 0


def _cmd_check(args) -> int:
    with open(args.semigroup, "r", encoding="utf-8") as fh:
        semigroup = parse_semigroup(fh.read())
    system = _parse_system_arg(args.system)
    violation = find_violation(semigroup, system)
    if violation is None:
        print("satisfied")
        return 0
    print(f"violated: {violation.describe()}")
    return 1


def _parse_system_arg(text):
    from .words import parse_system

    try:
        return parse_system(text)
    except ParseError as exc:
        print(f"error: bad system: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _cmd_classify(args) -> int:
    catalog = load_catalog(args.catalog)
    if args.classes:
        names = [n.strip() for n in args.classes.split(",") if n.strip()]
    else:
        skip = set(classes.PROPOSITION_DESCRIPTORS)
        names = [d.name for d in classes.registry() if d.name not in skip]
    matrix = build_matrix(catalog, names)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["canonical_id", *matrix.classes])
    for sid, row in zip(matrix.ids, matrix.bits):
        writer.writerow([sid, *(int(b) for b in row)])
    sys.stdout.write(out.getvalue())
    return 0


def _cmd_verify(args) -> int:
    catalog = load_catalog(args.catalog)
    ids = _parse_props(args.props)
    reports = verify_propositions(catalog, ids, jobs=args.jobs)
    if args.json:
        print(json.dumps([r.to_json_dict() for r in reports], indent=2))
    else:
        for report in reports:
            print(report.format_text())
    return 0 if all(r.equal for r in reports) else 1


def _cmd_probe(args) -> int:
    catalog = load_catalog(args.catalog)
    report = probe_metatheorems(catalog, args.trials, seed=args.seed, jobs=args.jobs)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.format_text())
    return 0 if report.passed else 1


def _cmd_lattice(args) -> int:
    catalog = load_catalog(args.catalog)
    matrix = build_matrix(catalog, LATTICE_NODES)
    diagram = derive_lattice(matrix, catalog)
    print(diagram.format_dot() if args.emit == "dot" else diagram.format_text())
    return 0


def _cmd_prop32(args) -> int:
    report = prop32_suite()
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.format_text())
    return 0 if report.passed else 1


def _cmd_explore(args) -> int:
    catalog = load_catalog(args.catalog)
    report = explore_cover_of_I(catalog, args.trials, seed=args.seed)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.format_text())
    return 0


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "check": _cmd_check,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "probe": _cmd_probe,
    "lattice": _cmd_lattice,
    "prop32": _cmd_prop32,
    "explore-cover": _cmd_explore,
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (FormatError, ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, UnknownClass, InvalidParams, OrderTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SglatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
