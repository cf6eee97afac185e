"""Command-line interface.

Exit status: 0 on success, 1 when a check, comparison or census diff fails,
2 on usage errors and unreadable input files.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import arrangement as arr
from . import catalog
from .arrangement import RationalArrangement
from .chirotope import Chirotope, check_chirotope, covectors_from_chirotope
from .formats import ParseError, format_arrangement, format_covectors, read_any
from .isomorphism import are_equivalent, canonicalize, canonicalize_affine, fingerprint
from .oriented_matroid import CovectorSet, check_axioms
from .signvec import ResourceError

log = logging.getLogger("omarr")


class UsageError(Exception):
    pass


def _load(source: str):
    """A catalog entry name, or a file of any of the three formats."""
    try:
        return catalog.get(source).arrangement
    except KeyError:
        pass
    if not Path(source).exists():
        raise UsageError(f"no such file or catalog entry: {source}")
    return read_any(source)


def _arrangement(source: str) -> RationalArrangement:
    obj = _load(source)
    if not isinstance(obj, RationalArrangement):
        raise UsageError(f"{source}: expected an arrangement file")
    return obj


def _covectors(obj) -> CovectorSet:
    if isinstance(obj, CovectorSet):
        return obj
    if isinstance(obj, Chirotope):
        return covectors_from_chirotope(obj)
    return arr.covectors(obj)


def _out(text: str, path: Optional[str]) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------

def cmd_faces(args) -> int:
    A = _arrangement(args.file)
    for f in arr.faces(A):
        print(f"{f.covector} {f.dimension} {'bounded' if f.bounded else 'unbounded'}")
    return 0


def cmd_check_om(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, Chirotope):
        res = check_chirotope(obj)
        print(f"chirotope: {'pass' if res.ok else 'FAIL ' + res.reason + ' ' + str(res.witness)}")
        if not res.ok:
            return 1
    report = check_axioms(_covectors(obj))
    print("\n".join(report.lines()))
    return 0 if report.ok else 1


def _print_form(form) -> None:
    print(f"# certificate {form.certificate}")
    if form.marked is not None:
        print(f"# marked element {form.marked + 1}")
    print(f"n={form.n}")
    for v in form.vectors:
        print(v)


def cmd_canon(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, RationalArrangement):
        # affine faces are encoded by the cone, marked at the added hyperplane
        V = arr.covectors(arr.cone(obj))
        g = obj.n if args.affine is None else args.affine - 1
        form = canonicalize_affine((V, g))
    else:
        V = _covectors(obj)
        if args.affine is not None:
            if not 1 <= args.affine <= V.n:
                raise UsageError(f"--affine must be between 1 and {V.n}")
            form = canonicalize_affine((V, args.affine - 1))
        else:
            form = canonicalize(V)
    _print_form(form)
    return 0


def cmd_iso(args) -> int:
    a, b = _load(args.first), _load(args.second)
    if isinstance(a, RationalArrangement) and isinstance(b, RationalArrangement):
        res = are_equivalent(a, b, affine=True)
    else:
        va, vb = _covectors(a), _covectors(b)
        marked = None
        if args.affine is not None:
            marked = (va.n if args.affine == 0 else args.affine) - 1
        res = are_equivalent(va, vb, marked=marked)
    print(("equivalent" if res else "not equivalent") + (f": {res.reason}" if res.reason else ""))
    return 0 if res else 1


def cmd_construct(args) -> int:
    fam = args.family
    p = args.params
    try:
        if fam == "trivial":
            A = arr.trivial(int(p[0]), int(p[1]) if len(p) > 1 else 3)
        elif fam == "general-position":
            A = arr.general_position(int(p[0]), int(p[1]) if len(p) > 1 else 3)
        elif fam in ("product", "cone", "bisect"):
            if not p:
                raise UsageError(f"{fam} needs an arrangement file")
            L = _arrangement(p[0])
            if fam == "product":
                A = arr.product_with_axis(L)
            elif fam == "cone":
                A = arr.cone(L)
            else:
                A = arr.bisect(L, p[1] if len(p) > 1 else 0)
        elif fam == "pappus":
            A = arr.pappus()
        elif fam == "gp8":
            A = arr.goodman_pollack8()
        else:
            raise UsageError(f"unknown family {fam}")
    except (IndexError, ValueError) as e:
        raise UsageError(f"bad parameters for {fam}: {e}") from None
    _out(format_arrangement(A), args.output)
    return 0


def cmd_stats(args) -> int:
    A = _arrangement(args.file)
    facts = catalog.arrangement_facts(A)
    for key in ("hyperplanes", "dimension", "rank", "central", "faces_by_dim", "bounded_by_dim",
                "chambers", "bounded_chambers", "points", "rays", "lines", "bounded_edges",
                "bounded_triangles", "bounded_quadrilaterals", "bounded_chamber_kinds"):
        value = facts[key]
        if isinstance(value, (list, tuple)):
            value = " ".join(str(v) for v in value) or "-"
        print(f"{key}: {value}")
    if args.full:
        print(f"fingerprint: {fingerprint(A).serialize()}")
    return 0


def cmd_enumerate(args) -> int:
    from .enumeration import enumerate_affine, enumerate_oms

    try:
        if args.affine:
            forms = enumerate_affine(args.n, args.rank, simple=not args.loop_free,
                                     workers=args.workers, allow_large=args.allow_large)
        else:
            forms = enumerate_oms(args.n, args.rank, simple=not args.loop_free, workers=args.workers)
    except ResourceError as e:
        raise UsageError(str(e)) from None
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for k, form in enumerate(forms, 1):
            comment = f"class {k} of {len(forms)}"
            if form.marked is not None:
                comment += f", marked element {form.marked + 1}"
            (out / f"class{k:04d}.cov").write_text(
                format_covectors(CovectorSet(form.n, form.vectors), comment))
    print(len(forms))
    return 0


def cmd_census(args) -> int:
    from .enumeration import census_diff, census_table, format_census

    t0 = time.perf_counter()
    try:
        rows = census_table(args.n, simple=not args.loop_free, workers=args.workers,
                            allow_large=args.allow_large)
    except ResourceError as e:
        raise UsageError(str(e)) from None
    print("\n".join(format_census(rows)))
    problems = census_diff(rows)
    for line in problems:
        print(f"MISMATCH {line}")
    print("census matches the reference table" if not problems else f"{len(problems)} mismatches")
    log.info("census took %.1fs", time.perf_counter() - t0)
    return 1 if problems else 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        for e in catalog.entries():
            print(f"{e.name}\tfigure {e.figure}")
        return 0
    report = catalog.verify(include_census=not args.quick)
    print("\n".join(report.lines()))
    return 0 if report.ok else 1


def cmd_export_svg(args) -> int:
    from .export import to_svg

    A = _arrangement(args.file)
    if A.d != 2:
        raise UsageError("export-svg needs a line arrangement (d=2)")
    _out(to_svg(A), args.output)
    return 0


def cmd_export_scene(args) -> int:
    from .export import to_obj

    A = _arrangement(args.file)
    if A.d != 3:
        raise UsageError("export-scene needs a plane arrangement (d=3)")
    _out(to_obj(A), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="omarr", description="Exact arrangements and oriented matroids.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("faces", help="face table: covector, dimension, boundedness")
    p.add_argument("file")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("check-om", help="oriented matroid axiom report")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_om)

    p = sub.add_parser("canon", help="canonical covector list and certificate")
    p.add_argument("file")
    p.add_argument("--affine", type=int, metavar="G", help="marked element (1-based)")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("iso", help="face-combinatorial equivalence of two inputs")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--affine", type=int, nargs="?", const=0, metavar="G",
                   help="for covector inputs: compare as affine, marked at G (default: last element)")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("construct", help="emit an arrangement from a construction family")
    p.add_argument("family", choices=["trivial", "product", "cone", "bisect", "general-position", "pappus", "gp8"])
    p.add_argument("params", nargs="*", help="trivial/general-position: N [D]; product/cone: FILE; bisect: FILE [OFFSET]")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("stats", help="fingerprint summary of an arrangement")
    p.add_argument("file")
    p.add_argument("--full", action="store_true", help="also print the full fingerprint")
    p.set_defaults(func=cmd_stats)

    def census_flags(p):
        p.add_argument("--workers", type=int, default=None, help="worker processes (default: $OMARR_WORKERS or 1)")
        p.add_argument("--loop-free", action="store_true", help="allow parallel elements (loops still excluded)")
        p.add_argument("--allow-large", action="store_true", help="permit sizes beyond the desk-scale bound")

    p = sub.add_parser("enumerate", help="isomorphism classes of oriented matroids")
    p.add_argument("--n", "--m", dest="n", type=int, required=True,
                   help="elements (affine mode: affine elements)")
    p.add_argument("--rank", type=int, required=True, help="rank (affine mode: affine rank)")
    p.add_argument("--affine", action="store_true")
    p.add_argument("--out", help="directory for one canonical covector file per class")
    census_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("census", help="affine class counts compared with the reference table")
    p.add_argument("--n", type=int, required=True)
    census_flags(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("catalog", help="figure catalog")
    p.add_argument("action", choices=["verify", "list"])
    p.add_argument("--quick", action="store_true", help="skip the realizability spot-check")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("export-svg", help="SVG drawing of a line arrangement")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_svg)

    p = sub.add_parser("export-scene", help="OBJ scene of a plane arrangement")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_scene)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, ParseError) as e:
        print(f"omarr: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
