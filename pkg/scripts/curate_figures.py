"""Copy class realizations into named figure files, choosing each by its invariants.

Run after find_realizations.py; the output under data/figures is then frozen.

    python scripts/curate_figures.py src/omarr/data
"""

from __future__ import annotations

import sys
from pathlib import Path

from omarr.formats import read_arrangement, write_arrangement
from omarr.isomorphism import bounded_chamber_kinds, fingerprint


def facts(A):
    fp = fingerprint(A)
    s = fp.summary()
    s["kinds"] = tuple(bounded_chamber_kinds(fp))
    s["central"] = A.is_central()
    s["quads"] = sum(1 for d, b, fv in fp.cell_shapes if d == 2 and b and fv[0] == 4)
    return s


def pick(pool, **want):
    hits = [(p, A) for p, A, f in pool if all(f[k] == v for k, v in want.items())]
    if len(hits) != 1:
        raise SystemExit(f"{len(hits)} candidates for {want}")
    return hits[0]


def main(data: Path) -> int:
    out = data / "figures"
    out.mkdir(exist_ok=True)

    def load(sub):
        return [(p, A, facts(A)) for p in sorted((data / "classes" / sub).glob("*.arr"))
                for A in [read_arrangement(p)]]

    lines4 = load("r2n4")
    first = pick(lines4, points=5, quads=0, bounded_chambers=2)
    second = pick(lines4, points=5, quads=1, bounded_chambers=2)
    rest = [(p, A) for p, A, _ in lines4 if p not in (first[0], second[0])]
    for k, (p, A) in enumerate([first, second] + rest, 1):
        write_arrangement(A, out / f"fig3-class{k}.arr", f"four lines, class {k} (from {p.parent.name}/{p.name})")

    planes4 = load("r3n4")
    p, A = pick(planes4, bounded_chambers=1)
    write_arrangement(A, out / "fig6-tetrahedron.arr", "four planes bounding a tetrahedron")

    planes5 = load("r3n5")
    chosen = {
        "fig11-tetrahedron-rays18": dict(kinds=("tetrahedron",), rays=18),
        "fig11-tetrahedron-rays16": dict(kinds=("tetrahedron",), rays=16),
        "fig11-square-pyramid": dict(kinds=("square pyramid",)),
        "fig11-triangular-prism": dict(kinds=("triangular prism",)),
        "fig12-two-tetrahedra-points6": dict(kinds=("tetrahedron",) * 2, points=6),
        "fig12-two-tetrahedra-points7": dict(kinds=("tetrahedron",) * 2, points=7),
        "fig12-two-tetrahedra-points5": dict(kinds=("tetrahedron",) * 2, points=5),
        "fig12-tetrahedron-prism-points8": dict(kinds=("tetrahedron", "triangular prism"), points=8),
        "fig12-tetrahedron-prism-points7": dict(kinds=("tetrahedron", "triangular prism"), points=7),
        "fig12-pyramid-tetrahedron": dict(kinds=("square pyramid", "tetrahedron")),
        "fig12-two-prisms": dict(kinds=("triangular prism",) * 2),
        "fig13-two-tetrahedra-prism": dict(kinds=("tetrahedron", "tetrahedron", "triangular prism")),
        "fig13-two-tetrahedra-pyramid": dict(kinds=("square pyramid", "tetrahedron", "tetrahedron")),
        "fig13-two-prisms-tetrahedron": dict(kinds=("tetrahedron", "triangular prism", "triangular prism")),
    }
    for name, want in chosen.items():
        p, A = pick(planes5, **want)
        write_arrangement(A, out / f"{name}.arr", f"five planes (from {p.parent.name}/{p.name})")
    return 0


if __name__ == "__main__":
    sys.exit(main(Path(sys.argv[1] if len(sys.argv) > 1 else "src/omarr/data")))
