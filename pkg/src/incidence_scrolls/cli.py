"""Command-line interface.

Bases are written n:d1,d2,... (for example 4:2,2,2,2,2) or as a JSON object
{"ambient": 4, "dims": [2, 2, 2, 2, 2]}.  Commands taking a base also accept
@FILE to process one base per line (blank lines and # comments skipped).

Exit codes: 0 success, 1 invalid or unrealizable base, 2 parse error,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .base import (
    BaseValidationError,
    IncidenceBase,
    InternalConsistencyError,
    SpecialityError,
    UnrealizableBaseError,
    degree,
    formula_genus,
    normalize,
    validate,
)
from .classify import audit, build_tables, render_table, row_to_dict
from .degeneration import (
    genus_by_degeneration,
    join,
    separate,
    verified_invariants,
)
from .ruled import (
    RuledSurfaceModel,
    base_structure_constraints,
    embedding_invariants,
    incidence_clause,
    is_incidence,
    min_directrix_count,
    predicted_base,
    very_ample,
)
from .schubert import intersection_number, oracle_intersection_number


class CLIParseError(Exception):
    pass


def parse_base(text: str) -> IncidenceBase:
    text = text.strip()
    try:
        if text.startswith("{"):
            obj = json.loads(text)
            return IncidenceBase(int(obj["ambient"]), tuple(int(d) for d in obj["dims"]))
        head, _, tail = text.partition(":")
        dims = tuple(int(p) for p in tail.split(",")) if tail else ()
        return IncidenceBase(int(head), dims)
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise CLIParseError(f"cannot parse base {text!r}: {exc}") from None


def _iter_bases(arg: str):
    if arg.startswith("@"):
        with open(arg[1:], "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if line:
                    yield parse_base(line)
    else:
        yield parse_base(arg)


def _invariants_dict(b: IncidenceBase) -> dict:
    inv = verified_invariants(b)
    bundle = inv.bundle
    return {
        "base": str(b),
        "ambient": inv.ambient,
        "dims": list(b.dims),
        "degree": inv.degree,
        "genus": inv.genus,
        "e": inv.e,
        "m": inv.divisor_degree,
        "min_directrix_degree": inv.min_directrix_degree,
        "decomposable": inv.decomposable,
        "speciality": inv.speciality,
        "bundle": None
        if bundle is None
        else {
            "kind": bundle.kind,
            "base_genus": bundle.base_genus,
            "e": bundle.e,
            "e_trivial": bundle.e_divisor_trivial,
        },
    }


def cmd_validate(args) -> int:
    worst = 0
    for b in _iter_bases(args.base):
        report = validate(b)
        print(report.summary())
        if not report.all_ok:
            worst = 1
            try:
                reduced = normalize(b)
                if reduced != b:
                    print(f"  reduces to {reduced}")
            except UnrealizableBaseError as exc:
                print(f"  unrealizable: {exc}")
    return worst


def cmd_degree(args) -> int:
    for b in _iter_bases(args.base):
        print(f"{b}  degree = {degree(b)}")
    return 0


def cmd_genus(args) -> int:
    for b in _iter_bases(args.base):
        g = genus_by_degeneration(b)
        d = degree(b)
        try:
            gf = formula_genus(b, deg=d)
            formula = str(gf)
        except SpecialityError:
            gf = None
            formula = "inapplicable (degree + 1 - n is odd)"
        print(f"{b}  genus by degeneration = {g}, by formula = {formula}")
        if gf is not None and gf != g:
            i = b.ambient - 1 - d + 2 * g
            print(f"  scroll is special: speciality i = {i}")
    return 0


def cmd_invariants(args) -> int:
    records = [_invariants_dict(b) for b in _iter_bases(args.base)]
    if args.json:
        print(json.dumps(records if args.base.startswith("@") else records[0], indent=2))
        return 0
    for rec in records:
        bundle = rec["bundle"]
        print(f"{rec['base']}  R^{rec['degree']}_{rec['genus']} in P^{rec['ambient']}")
        print(
            f"  e = {rec['e']}, deg(b) = {rec['m']}, min directrix degree = "
            f"{rec['min_directrix_degree']}"
        )
        print(
            f"  decomposable = {str(rec['decomposable']).lower()}, "
            f"speciality = {rec['speciality']}"
        )
        if bundle is not None:
            flag = ", e-divisor trivial" if bundle["e_trivial"] else ""
            print(f"  bundle: {bundle['kind']}, e = {bundle['e']}{flag}")
    return 0


def cmd_join(args) -> int:
    b = parse_base(args.base)
    split = join(b, args.i, args.j)
    print(f"join of spaces {args.i} and {args.j} in {b} (forced meet P^{split.m})")
    print(f"  component through P^{split.m}: {split.beta_dot}", end="")
    dot_norm = normalize(split.beta_dot)
    if dot_norm != split.beta_dot:
        print(f" -> {dot_norm}", end="")
    print(f"  (d1, g1) = ({split.d1}, {split.g1})")
    print(f"  component in the hyperplane: {split.beta_ddot}", end="")
    ddot_norm = normalize(split.beta_ddot)
    if ddot_norm != split.beta_ddot:
        print(f" -> {ddot_norm}", end="")
    print(f"  (d2, g2) = ({split.d2}, {split.g2})")
    print(f"  common generators kappa = {split.kappa}")
    print(
        f"  degree {split.d1} + {split.d2} = {split.d1 + split.d2}, "
        f"genus {split.g1} + {split.g2} + {split.kappa} - 1 = "
        f"{split.g1 + split.g2 + split.kappa - 1}"
    )
    return 0


def cmd_separate(args) -> int:
    b = parse_base(args.base)
    out = separate(b, args.i, args.j, add_hyperplane=args.add_hyperplane)
    print(f"{b} separates to {out}")
    print(f"  degree {degree(b)} -> {degree(out)}, genus {genus_by_degeneration(out)}")
    return 0


def cmd_schubert(args) -> int:
    codims = [int(p) for p in args.codims.split(",")]
    value = intersection_number(args.n, codims)
    check = oracle_intersection_number(args.n, codims)
    if value != check:
        raise InternalConsistencyError(
            f"Pieri gives {value}, bialternant gives {check} for {codims} in G(1, {args.n})"
        )
    print(value)
    return 0


def cmd_surface(args) -> int:
    model = RuledSurfaceModel(
        genus=args.g,
        e=args.e,
        divisor_degree=args.m,
        decomposable=not args.indecomposable,
        e_divisor_trivial=args.e_trivial,
    )
    print(f"model: genus {model.genus}, e = {model.e}, deg(b) = {model.m}, "
          f"{'decomposable' if model.decomposable else 'indecomposable'}")
    if not very_ample(model):
        print("  divisor is not very ample; no scroll embedding")
        return 0
    d, n = embedding_invariants(model)
    print(f"  embeds as R^{d}_{model.genus} in P^{n}")
    if is_incidence(model):
        print(f"  incidence scroll: {incidence_clause(model)}")
        print(f"  base: {predicted_base(model)}")
    else:
        print("  not an incidence scroll")
    count = min_directrix_count(model)
    print(f"  minimum directrix curves: {'inf^1' if count is None else count}")
    if model.decomposable:
        reqs = base_structure_constraints(model)
        pretty = ", ".join(f"{c} of dimension {dim}" for dim, c in reqs)
        print(f"  forced base spaces: {pretty}")
    return 0


def cmd_enumerate(args) -> int:
    from .classify import enumerate_bases

    records = []
    for b, inv in enumerate_bases(args.n):
        records.append(_invariants_dict(b))
    if args.json:
        print(json.dumps(records, indent=2))
        return 0
    for rec in records:
        tag = f" (special, i = {rec['speciality']})" if rec["speciality"] else ""
        print(
            f"{rec['base']}  degree {rec['degree']}, genus {rec['genus']}, "
            f"e = {rec['e']}, m = {rec['m']}{tag}"
        )
    return 0


def cmd_table(args) -> int:
    rational, elliptic = build_tables(args.max_n)
    rows = rational if args.genus == 0 else elliptic
    if args.json:
        text = json.dumps([row_to_dict(r) for r in rows], indent=2) + "\n"
    else:
        text = render_table(rows, args.genus, args.max_n)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_audit(args) -> int:
    report = audit(args.max_n)
    sys.stdout.write(report.render())
    return 3 if report.violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="incidence-scrolls",
        description="Exact classification engine for incidence scrolls",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def base_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("base", help="base as n:d1,d2,... (or @FILE for a list)")
        p.set_defaults(func=func)
        return p

    base_cmd("validate", cmd_validate, "check the curve condition and general position")
    base_cmd("degree", cmd_degree, "degree of the swept scroll")
    base_cmd("genus", cmd_genus, "genus by degeneration and by formula, cross-checked")
    p = base_cmd("invariants", cmd_invariants, "full scroll invariants")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("join", help="split the scroll by joining two base spaces")
    p.add_argument("base")
    p.add_argument("-i", type=int, required=True, help="index into the sorted dims")
    p.add_argument("-j", type=int, required=True)
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("separate", help="pull two spaces meeting in a point apart")
    p.add_argument("base")
    p.add_argument("-i", type=int, required=True)
    p.add_argument("-j", type=int, default=None)
    p.add_argument("--add-hyperplane", action="store_true")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("schubert", help="intersection number of special classes")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-c", dest="codims", required=True, help="comma-separated codimensions")
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("surface", help="predicates for a ruled-surface model")
    p.add_argument("-g", type=int, required=True, choices=(0, 1))
    p.add_argument("-e", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--e-trivial", dest="e_trivial", action="store_true")
    p.add_argument("--indecomposable", action="store_true")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("enumerate", help="all bases in one ambient dimension")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="classification table for genus 0 or 1")
    p.add_argument("--genus", type=int, required=True, choices=(0, 1))
    p.add_argument("--max-n", dest="max_n", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("audit", help="replay the classification over the enumeration")
    p.add_argument("--max-n", dest="max_n", type=int, default=8)
    p.set_defaults(func=cmd_audit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except CLIParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except (BaseValidationError, UnrealizableBaseError, SpecialityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
