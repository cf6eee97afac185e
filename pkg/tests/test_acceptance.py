"""Acceptance criteria 1-9, one PASS/FAIL line each.

Run under pytest (lines appear in the "acceptance" summary section) or directly:

    python3 tests/test_acceptance.py

Criterion 2 (the six-element census, several minutes) runs only when
OMARR_FULL_CENSUS=1; otherwise it is reported as SKIPPED, never as PASS.
"""

from __future__ import annotations

import itertools
import os
import subprocess
import sys
import time
from math import comb

import pytest

from omarr import catalog
from omarr.arrangement import (abstract_vs_geometric_restrict, collinearity_determinant, cone, coplanarity_determinant,
                               covectors, faces, general_position, geometric_compose, gp8_points, max_chambers,
                               max_vertices, pappus_points)
from omarr.chirotope import chirotope_from_vectors, covectors_from_chirotope
from omarr.fm import rank
from omarr.isomorphism import are_equivalent, posets_isomorphic
from omarr.oriented_matroid import check_axioms
from omarr.signvec import SignedPermutation, SignVector, all_sign_vectors, compose, leq, negate, restrict

from conftest import ACCEPTANCE

FULL_CENSUS = os.environ.get("OMARR_FULL_CENSUS") == "1"

FIG2 = {"A": "00", "P": "+0", "S": "-0", "Q": "0+", "R": "0-",
        "W": "++", "Y": "+-", "X": "-+", "Z": "--"}
FIG4 = {"X": "+++++", "Y": "---++", "W": "-+00+", "Q": "-+-++", "Z": "-++++",
        "P": "0++++", "S": "++0++", "R": "0+0++"}


def cmp(x: str, y: str) -> str:
    return str(compose(SignVector.parse(x), SignVector.parse(y)))


def omarr(*argv: str) -> tuple[subprocess.CompletedProcess, float]:
    """Run the command line in a fresh interpreter, so no in-process cache is warm."""
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "omarr.cli", *argv], capture_output=True, text=True, check=False)
    return proc, time.perf_counter() - t0


def census_rows(stdout: str) -> dict[str, list[int]]:
    rows = {}
    for line in stdout.splitlines():
        head, *cells = line.split()
        if head in ("1", "2", "3", "tot"):
            rows[head] = [int(c) for c in cells]
    return rows


# -- the criteria ----------------------------------------------------------------

def check_1():
    proc, secs = omarr("census", "--n", "5", "--workers", "1")
    rows = census_rows(proc.stdout)
    ok = (proc.returncode == 0 and rows.get("1") == [1, 1, 1, 1, 1] and rows.get("2") == [1, 3, 8, 46]
          and rows.get("3") == [1, 5, 27] and rows.get("tot") == [1, 2, 5, 14, 74] and secs < 300)
    return ok, f"rows {rows}, {secs:.1f}s single worker"


def check_2():
    if not FULL_CENSUS:
        return None, "set OMARR_FULL_CENSUS=1 to run the six-element census"
    proc, secs = omarr("census", "--n", "6")
    rows = census_rows(proc.stdout)
    got = (rows["2"][-1], rows["3"][-1], rows["tot"][-1]) if rows else None
    ok = proc.returncode == 0 and got == (790, 1063, 1854) and secs < 3600
    return ok, f"n=6: r2 {got[0] if got else '?'}, r3 {got[1] if got else '?'}, total {got[2] if got else '?'}, {secs:.0f}s"


def check_3():
    problems = []
    A = catalog.get("fig2").arrangement
    for x, y, want in [("P", "Q", "W"), ("R", "X", "Z"), ("X", "R", "X"), ("Q", "A", "Q"), ("A", "Q", "Q")]:
        abstract = cmp(FIG2[x], FIG2[y])
        geometric = geometric_compose(A, FIG2[x], FIG2[y]).covector
        if not abstract == str(geometric) == FIG2[want]:
            problems.append(f"{x}o{y}")
    for x, y, want in [("Y", "X", {"P", "A", "R"}), ("P", "S", {"A"}), ("Z", "Y", {"R"})]:
        abstract, seen = abstract_vs_geometric_restrict(A, FIG2[x], FIG2[y])
        back = {v: k for k, v in FIG2.items()}
        if not ({back[str(v)] for v in abstract} == {back[str(v)] for v in seen} == want):
            problems.append(f"{x}_{y}")
    C = catalog.get("fig4-cone").arrangement
    for x, y, want in [("W", "X", "Z"), ("W", "Y", "Q"), ("Y", "W", "Y")]:
        if not cmp(FIG4[x], FIG4[y]) == str(geometric_compose(C, FIG4[x], FIG4[y]).covector) == FIG4[want]:
            problems.append(f"{x}o{y}")
    abstract, seen = abstract_vs_geometric_restrict(C, FIG4["X"], FIG4["Y"])
    back = {v: k for k, v in FIG4.items()}
    seen_names = {back.get(str(v), str(v)) for v in seen}
    if len(abstract) != 7 or seen_names != {"P", "S", "R"} or not seen <= abstract:
        problems.append(f"X_Y: {len(abstract)} abstract, seen {sorted(seen_names)}")
    return not problems, "X_Y has 7 members, 3 seen: P, S, R" if not problems else f"mismatches {problems}"


def _laws(n: int) -> bool:
    V = list(all_sign_vectors(n))
    for x, y, z in itertools.product(V, repeat=3):
        if compose(compose(x, y), z) != compose(x, compose(y, z)):
            return False
        if leq(x, y) and leq(y, z) and not leq(x, z):
            return False
    for x, y in itertools.product(V, repeat=2):
        if negate(negate(x)) != x or not leq(x, compose(x, y)):
            return False
        if negate(compose(x, y)) != compose(negate(x), negate(y)):
            return False
        if not all(leq(w, x) and w != x for w in restrict(x, y)):
            return False
        if leq(x, y) and leq(y, x) and x != y:
            return False
    for g in SignedPermutation.all(n):
        for x, y in itertools.product(V, repeat=2):
            if g(compose(x, y)) != compose(g(x), g(y)) or leq(x, y) != leq(g(x), g(y)):
                return False
            if {g(w) for w in restrict(x, y)} != restrict(g(x), g(y)):
                return False
    return True


def check_4():
    entries = catalog.entries()
    coned_bad = [e.name for e in entries if not check_axioms(covectors(cone(e.arrangement))).ok]
    raw_bad = []
    for e in entries:
        if not e.arrangement.is_central():
            report = check_axioms(covectors(e.arrangement))
            if report.sv0.passed or report.sv1.passed:
                raw_bad.append(e.name)
    laws = all(_laws(n) for n in (1, 2, 3))
    affine = sum(1 for e in entries if not e.arrangement.is_central())
    ok = not coned_bad and not raw_bad and laws
    return ok, (f"{len(entries)} coned entries pass SV0-SV3, {affine} affine face sets fail SV0 and SV1, "
                f"laws n<=3: {laws}" if ok else f"coned failures {coned_bad}, raw passes {raw_bad}, laws {laws}")


def check_5():
    proc, secs = omarr("catalog", "verify")
    last = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr
    return proc.returncode == 0 and secs < 120, f"{last} ({secs:.1f}s wall)"


def in_general_position(A) -> bool:
    for k in range(1, min(A.n, A.d + 1) + 1):
        for S in itertools.combinations(A.hyperplanes, k):
            rows = [list(h.normal) for h in S]
            if k <= A.d and rank(rows) < k:
                return False
            if k == A.d + 1 and rank([r + [h.offset] for r, h in zip(rows, S)]) < k:
                return False
    return True


def check_6():
    gp = general_position(5, 3)
    chambers = sum(1 for f in faces(gp) if f.dimension == 3)
    ok = chambers == max_chambers(5, 3) == 26
    verts = {}
    for n, d in [(4, 2), (5, 3), (6, 3)]:
        verts[(n, d)] = sum(1 for f in faces(general_position(n, d)) if f.dimension == 0)
        ok &= verts[(n, d)] == max_vertices(n, d) == comb(n, d)
    not_below = []
    n_gp = 0
    for e in catalog.entries():
        A, facts = e.arrangement, e.facts()
        if in_general_position(A):
            n_gp += 1
            if facts["chambers"] != max_chambers(A.n, A.d) or facts["points"] != max_vertices(A.n, A.d):
                not_below.append(e.name + " (general position, bound missed)")
        elif not (facts["chambers"] < max_chambers(A.n, A.d) and facts["points"] < max_vertices(A.n, A.d)):
            not_below.append(e.name)
    ok &= not not_below
    return ok, (f"26 chambers; vertices {list(verts.values())}; {len(catalog.entries()) - n_gp} other entries "
                f"strictly below" if ok else f"chambers {chambers}, vertices {verts}, offenders {not_below}")


def check_7():
    p = pappus_points()
    det = collinearity_determinant(p["x"], p["y"], p["z"])
    line9 = catalog.get("pappus").arrangement.hyperplanes[8]
    on9 = all(line9.value(p[k]) == 0 for k in "xyz")
    g = gp8_points()
    det8 = coplanarity_determinant(g["O"], g["P"], g["Q"], g["R"])
    plane8 = catalog.get("gp8").arrangement.hyperplanes[7]
    on8 = all(plane8.value(g[k]) == 0 for k in "OPQR")
    ok = det == 0 and on9 and det8 == 0 and on8
    return ok, f"pappus determinant {det}, line 9 holds x,y,z: {on9}; gp8 determinant {det8}, plane 8 holds O,P,Q,R: {on8}"


def check_8():
    small = [e for e in catalog.entries() if len(faces(e.arrangement)) <= 200]
    buckets: dict = {}
    for e in small:
        buckets.setdefault((e.arrangement.n, e.arrangement.d), []).append(e)
    disagree, compared = [], 0
    for bucket in buckets.values():
        for a, b in itertools.combinations(bucket, 2):
            A, B = a.arrangement, b.arrangement
            if bool(are_equivalent(A, B)) != posets_isomorphic(covectors(A).vectors, covectors(B).vectors):
                disagree.append((a.name, b.name))
            compared += 1
    central = [e for e in catalog.entries() if e.arrangement.is_central() and e.arrangement.rank() == e.arrangement.d]
    chi_bad = [e.name for e in central
               if covectors_from_chirotope(chirotope_from_vectors([h.normal for h in e.arrangement.hyperplanes]))
               != covectors(e.arrangement)]
    ok = not disagree and not chi_bad and compared > 0 and central
    return ok, (f"{compared} pairs agree with the poset search; {len(central)} central entries match their chirotope"
                if ok else f"disagreements {disagree}, chirotope mismatches {chi_bad}")


def check_9():
    outs = {}
    for w in ("1", "4", "8"):
        census, _ = omarr("census", "--n", "5", "--workers", w)
        env = dict(os.environ, OMARR_WORKERS=w)
        canon = subprocess.run([sys.executable, "-m", "omarr.cli", "canon", "fig12-two-prisms"],
                               capture_output=True, env=env, check=False)
        outs[w] = (census.returncode, census.stdout.encode(), canon.returncode, canon.stdout)
    ok = len(set(outs.values())) == 1 and outs["1"][0] == 0 and outs["1"][2] == 0 and outs["1"][3]
    return ok, "census --n 5 and canon identical for 1, 4, 8 workers" if ok else "outputs differ across workers"


CHECKS = {1: check_1, 2: check_2, 3: check_3, 4: check_4, 5: check_5,
          6: check_6, 7: check_7, 8: check_8, 9: check_9}


def run(k: int) -> tuple[bool | None, str]:
    ok, detail = CHECKS[k]()
    status = "SKIPPED" if ok is None else ("PASS" if ok else "FAIL")
    line = f"criterion {k}: {status} - {detail}"
    ACCEPTANCE[k] = line
    print(line)
    return ok, detail


@pytest.mark.parametrize("k", sorted(CHECKS))
def test_criterion(k):
    ok, detail = run(k)
    if ok is None:
        pytest.skip(detail)
    assert ok, detail


if __name__ == "__main__":
    results = [run(k)[0] for k in sorted(CHECKS)]
    sys.exit(0 if all(r is not False for r in results) else 1)
