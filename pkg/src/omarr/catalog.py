"""Figure catalog: rational arrangements with the face counts they are expected to show.

Entries come in three kinds. Hand-made coordinate files under ``data/figures``;
programmatic constructions (trivial, products, cones, bisections, general
position, Pappus, the eight-plane configuration); and one realization per
affine class under ``data/classes`` used for the realizability spot-check.

``verify()`` runs every per-entry assertion and the figure-level ones
(class counts, pairwise distinctness, the 1 + 46 + 27 assembly).
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Callable, Iterable

from . import arrangement as arr
from .arrangement import RationalArrangement
from .formats import read_arrangement
from .isomorphism import affine_class_key, bounded_chamber_kinds, fingerprint

DATA = Path(__file__).parent / "data"
FIGURES = DATA / "figures"
CLASSES = DATA / "classes"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    figure: str
    build: Callable[[], RationalArrangement] = field(repr=False, compare=False)
    expected: dict = field(default_factory=dict, compare=False)

    @cached_property
    def arrangement(self) -> RationalArrangement:
        return self.build()

    def facts(self) -> dict:
        return arrangement_facts(self.arrangement)

    def check(self) -> list[str]:
        got = self.facts()
        return [f"{self.name}: {k} is {got[k]!r}, expected {v!r}"
                for k, v in self.expected.items() if got[k] != v]


def arrangement_facts(A: RationalArrangement) -> dict:
    fp = fingerprint(A)
    out = fp.summary()
    out["hyperplanes"] = A.n
    out["dimension"] = A.d
    out["central"] = A.is_central()
    out["bounded_chamber_kinds"] = tuple(bounded_chamber_kinds(fp)) if A.d == 3 else ()
    out["bounded_triangles"] = sum(1 for d, b, fv in fp.cell_shapes if d == 2 and b and fv[0] == 3)
    out["bounded_quadrilaterals"] = sum(1 for d, b, fv in fp.cell_shapes if d == 2 and b and fv[0] == 4)
    return out


def _file(name: str) -> Callable[[], RationalArrangement]:
    return lambda: read_arrangement(FIGURES / f"{name}.arr")


def class_files(n: int, r: int) -> list[Path]:
    return sorted((CLASSES / f"r{r}n{n}").glob("*.arr"))


def _lines(n: int) -> list[Path]:
    return class_files(n, 2)


def _shift(A: RationalArrangement, d: int) -> RationalArrangement:
    """Lift a lower-dimensional arrangement to dimension d by products with axes."""
    while A.d < d:
        A = arr.product_with_axis(A)
    return A


@lru_cache(maxsize=None)
def entries() -> tuple[CatalogEntry, ...]:
    E: list[CatalogEntry] = []
    add = E.append

    # three planes: one parallel family, three rank-2 products, one generic triple
    add(CatalogEntry("fig1-parallel", "1", lambda: arr.trivial(3, 3), {"rank": 1, "chambers": 4}))
    for k, p in enumerate(_lines(3), 1):
        add(CatalogEntry(f"fig1-product{k}", "1",
                         (lambda p=p: arr.product_with_axis(read_arrangement(p))), {"rank": 2}))
    add(CatalogEntry("fig1-generic", "1", lambda: read_arrangement(class_files(3, 3)[0]),
                     {"rank": 3, "chambers": 8, "points": 1}))

    add(CatalogEntry("fig2", "2", _file("fig2"),
                     {"faces_by_dim": [1, 4, 4], "rank": 2, "central": True}))

    for k in range(1, 9):
        add(CatalogEntry(f"fig3-class{k}", "3", _file(f"fig3-class{k}"), {"rank": 2, "hyperplanes": 4}))

    add(CatalogEntry("fig4-lines", "4", _file("fig4-lines"), {"rank": 2, "hyperplanes": 4}))
    add(CatalogEntry("fig4-cone", "4", lambda: arr.cone(read_arrangement(FIGURES / "fig4-lines.arr")),
                     {"rank": 3, "central": True, "hyperplanes": 5}))

    # four planes: the parallel family and eight products, then five of rank 3
    add(CatalogEntry("fig5-parallel", "5", lambda: arr.trivial(4, 3), {"rank": 1, "chambers": 5, "points": 0}))
    for k in range(1, 9):
        add(CatalogEntry(f"fig5-product{k}", "5",
                         (lambda k=k: arr.product_with_axis(read_arrangement(FIGURES / f"fig3-class{k}.arr"))),
                         {"rank": 2}))
    for k, p in enumerate(_lines(3), 1):
        add(CatalogEntry(f"fig6-cone{k}", "6", (lambda p=p: arr.cone(read_arrangement(p))),
                         {"rank": 3, "central": True}))
    for k, p in enumerate(_lines(3), 1):
        if read_arrangement(p).is_central():
            continue
        add(CatalogEntry(f"fig6-bisected{k}", "6",
                         (lambda p=p: arr.bisect(arr.product_with_axis(read_arrangement(p)))), {"rank": 3}))
    add(CatalogEntry("fig6-tetrahedron", "6", _file("fig6-tetrahedron"),
                     {"rank": 3, "bounded_chambers": 1, "bounded_chamber_kinds": ("tetrahedron",)}))

    # five planes of rank 3
    for k in range(1, 9):
        add(CatalogEntry(f"fig9-cone{k}", "9",
                         (lambda k=k: arr.cone(read_arrangement(FIGURES / f"fig3-class{k}.arr"))),
                         {"rank": 3, "central": True, "points": 1}))
    add(CatalogEntry("fig10-left", "10", _file("fig10-left"),
                     {"rank": 3, "bounded_edges": 1, "bounded_chambers": 0, "central": False}))
    for k in range(1, 9):
        if read_arrangement(FIGURES / f"fig3-class{k}.arr").is_central():
            continue
        add(CatalogEntry(f"fig10-bisected{k}", "10",
                         (lambda k=k: arr.bisect(arr.product_with_axis(
                             read_arrangement(FIGURES / f"fig3-class{k}.arr")))),
                         {"rank": 3, "bounded_chambers": 0}))
    T, P, S = "tetrahedron", "triangular prism", "square pyramid"
    for name, exp in [
        ("fig11-tetrahedron-rays18", {"bounded_chamber_kinds": (T,), "rays": 18}),
        ("fig11-tetrahedron-rays16", {"bounded_chamber_kinds": (T,), "rays": 16}),
        ("fig11-square-pyramid", {"bounded_chamber_kinds": (S,)}),
        ("fig11-triangular-prism", {"bounded_chamber_kinds": (P,)}),
        ("fig12-two-tetrahedra-points6", {"bounded_chamber_kinds": (T, T), "points": 6}),
        ("fig12-two-tetrahedra-points7", {"bounded_chamber_kinds": (T, T), "points": 7}),
        ("fig12-two-tetrahedra-points5", {"bounded_chamber_kinds": (T, T), "points": 5}),
        ("fig12-tetrahedron-prism-points8", {"bounded_chamber_kinds": (T, P), "points": 8}),
        ("fig12-tetrahedron-prism-points7", {"bounded_chamber_kinds": (T, P), "points": 7}),
        ("fig12-pyramid-tetrahedron", {"bounded_chamber_kinds": (S, T)}),
        ("fig12-two-prisms", {"bounded_chamber_kinds": (P, P)}),
        ("fig13-two-tetrahedra-prism", {"bounded_chamber_kinds": (T, T, P)}),
        ("fig13-two-tetrahedra-pyramid", {"bounded_chamber_kinds": (S, T, T)}),
        ("fig13-two-prisms-tetrahedron", {"bounded_chamber_kinds": (T, P, P)}),
    ]:
        add(CatalogEntry(name, name.split("-")[0][3:], _file(name), {"rank": 3, "hyperplanes": 5, **exp}))
    add(CatalogEntry("fig13-general-position", "13", lambda: arr.general_position(5, 3),
                     {"rank": 3, "chambers": 26, "bounded_chambers": 4, "points": 10}))

    add(CatalogEntry("pappus", "7", arr.pappus, {"rank": 2, "hyperplanes": 9}))
    add(CatalogEntry("gp8", "8", arr.goodman_pollack8, {"rank": 3, "hyperplanes": 8}))
    return tuple(E)


def get(name: str) -> CatalogEntry:
    for e in entries():
        if e.name == name:
            return e
    raise KeyError(name)


def group(prefix: str) -> list[CatalogEntry]:
    return [e for e in entries() if e.name.startswith(prefix)]


def resolve(name_or_path: str) -> RationalArrangement:
    """A catalog entry by name, or an arrangement file by path."""
    try:
        return get(name_or_path).arrangement
    except KeyError:
        return read_arrangement(name_or_path)


# -- verification -------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class Report:
    checks: list[Check]
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = [c.line() for c in self.checks]
        failed = sum(not c.passed for c in self.checks)
        out.append(f"{len(self.checks) - failed}/{len(self.checks)} checks passed in {self.seconds:.1f}s")
        return out


def _keys(items: Iterable) -> list[str]:
    return [affine_class_key(e.arrangement if isinstance(e, CatalogEntry) else e) for e in items]


def _distinct(name: str, items: list, expected: int) -> Check:
    keys = _keys(items)
    k = len(set(keys))
    return Check(name, k == expected == len(keys), f"{k} classes among {len(keys)} arrangements, expected {expected}")


def _class_count(name: str, items: list, expected: int) -> Check:
    k = len(set(_keys(items)))
    return Check(name, k == expected, f"{k} classes, expected {expected}")


def verify(include_census: bool = True) -> Report:
    """Run every catalog assertion. ``include_census`` adds the realizability spot-check."""
    from .arrangement import (collinearity_determinant, coplanarity_determinant, gp8_points,
                              pappus_points)

    t0 = time.perf_counter()
    checks: list[Check] = []
    for e in entries():
        problems = e.check()
        checks.append(Check(f"entry {e.name}", not problems, "; ".join(problems)))

    fig1 = group("fig1-")
    ranks = sorted(e.facts()["rank"] for e in fig1)
    checks.append(Check("fig1 ranks", ranks == [1, 2, 2, 2, 3], f"ranks {ranks}"))
    checks.append(_distinct("fig1 classes", fig1, 5))

    fig3 = group("fig3-")
    checks.append(_distinct("fig3 classes", fig3, 8))
    f1, f2 = (get(f"fig3-class{k}").facts() for k in (1, 2))
    checks.append(Check("fig3 first pair: only the second has a bounded quadrilateral",
                        f1["bounded_quadrilaterals"] == 0 and f2["bounded_quadrilaterals"] == 1
                        and f1["faces_by_dim"] == f2["faces_by_dim"],
                        f"quadrilaterals {f1['bounded_quadrilaterals']} vs {f2['bounded_quadrilaterals']}"))

    checks.append(_class_count("fig6 cones", group("fig6-cone"), 2))
    checks.append(_class_count("fig6 bisected products", group("fig6-bisected"), 2))
    fig6 = _unique(group("fig6-"))
    checks.append(_distinct("fig5+fig6 classes of four planes", group("fig5-") + fig6, 14))

    cones = group("fig9-")
    checks.append(_class_count("fig9 suspensions of the eight four-line classes", cones, 4))
    rays = sorted({k: e.facts()["rays"] for k, e in zip(_keys(cones), cones)}.values())
    checks.append(Check("fig9 ray counts", rays == [10, 12, 16, 20], f"rays {rays}"))
    fig4_key = affine_class_key(get("fig4-cone").arrangement)
    checks.append(Check("fig4 cone is one of the fig9 classes", fig4_key in set(_keys(cones))))

    bis = group("fig10-bisected")
    checks.append(_distinct("fig10 bisected products of non-central four-line classes", bis, 7))

    rank3 = _unique(cones) + [get("fig10-left")] + bis + group("fig11-") + group("fig12-") + group("fig13-")
    checks.append(_distinct("rank-3 five-plane classes", rank3, 27))
    one_edge = [e.name for e in rank3 if not e.facts()["central"] and e.facts()["bounded_edges"] == 1]
    checks.append(Check("unique non-central class with exactly one bounded edge",
                        one_edge == ["fig10-left"], f"{one_edge}"))
    by_bounded = Counter(e.facts()["bounded_chambers"] for e in rank3)
    checks.append(Check("bounded chamber counts 0/1/2/3/4",
                        [by_bounded[k] for k in range(5)] == [12, 4, 7, 3, 1],
                        f"{[by_bounded[k] for k in range(5)]}"))

    products = [_shift(read_arrangement(p), 3) for p in _lines(5)]
    five = [arr.trivial(5, 3)] + products + [e.arrangement for e in rank3]
    keys = _keys(five)
    checks.append(Check("five-plane assembly 1 + 46 + 27", len(products) == 46 and len(set(keys)) == 74
                        and len(keys) == 74, f"{len(set(keys))} classes from 1 + {len(products)} + {len(rank3)}"))

    gp = get("fig13-general-position").facts()
    checks.append(Check("general position meets the chamber bound",
                        gp["chambers"] == arr.max_chambers(5, 3) and gp["points"] == arr.max_vertices(5, 3),
                        f"{gp['chambers']} chambers, {gp['points']} points"))
    below = [e.name for e in rank3 if e.name != "fig13-general-position"
             and not (e.facts()["chambers"] < 26 and e.facts()["points"] < 10)]
    checks.append(Check("other five-plane entries fall strictly below both bounds", not below, f"{below}"))

    pp = pappus_points()
    det = collinearity_determinant(pp["x"], pp["y"], pp["z"])
    line9 = get("pappus").arrangement.hyperplanes[8]
    on9 = all(line9.value(pp[k]) == 0 for k in "xyz")
    checks.append(Check("pappus collinearity", det == 0 and on9, f"determinant {det}, on line 9: {on9}"))
    g = gp8_points()
    det = coplanarity_determinant(g["O"], g["P"], g["Q"], g["R"])
    plane8 = get("gp8").arrangement.hyperplanes[7]
    on8 = all(plane8.value(g[k]) == 0 for k in "OPQR")
    checks.append(Check("gp8 coplanarity", det == 0 and on8, f"determinant {det}, on plane 8: {on8}"))

    if include_census:
        checks.extend(realizability_checks())
    return Report(checks, time.perf_counter() - t0)


def _unique(items: list[CatalogEntry]) -> list[CatalogEntry]:
    """First entry of each class, in order."""
    seen, out = set(), []
    for e, k in zip(items, _keys(items)):
        if k not in seen:
            seen.add(k)
            out.append(e)
    return out


def realizability_checks(n_max: int = 5) -> list[Check]:
    """Each stored class realization matches exactly one enumerated affine class, and every class is hit."""
    from .enumeration import affine_classes
    from .isomorphism import chirotope_canonical

    out = []
    for n in range(1, n_max + 1):
        for r in (1, 2, 3):
            if r > n:
                continue
            want = {chirotope_canonical(a.chirotope, marked=a.marked)[0] for a in affine_classes(n, r)}
            arrangements = [arr.trivial(n, 1)] if r == 1 else [read_arrangement(p) for p in class_files(n, r)]
            got = _keys(arrangements)
            ok = set(got) == want and len(got) == len(want)
            out.append(Check(f"realizations n={n} r={r}", ok,
                             f"{len(set(got) & want)} of {len(want)} classes realized by {len(got)} arrangements"))
    return out


__all__ = ["CatalogEntry", "Check", "Report", "arrangement_facts", "entries", "get", "group",
           "realizability_checks", "resolve", "verify"]
