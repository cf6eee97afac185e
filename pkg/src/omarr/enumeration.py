"""Isomorphism classes of small oriented matroids and their affine markings.

Classes of rank r on m + 1 elements are built from the classes on m elements:
every single-element extension of every representative is generated by
depth-first assignment of the new chirotope signs chi(A, p), pruned by the
3-term Grassmann-Pluecker relations, then kept if its support is a matroid and
the new element is neither a loop nor (for simple classes) parallel to an old
one. Deduplication uses the canonical chirotope string.
"""

from __future__ import annotations

import itertools
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .chirotope import Chirotope, covectors_from_chirotope, gp3_relations, is_matroid
from .isomorphism import CanonicalForm, canonicalize, canonicalize_affine, chirotope_canonical, chirotope_from_key, element_orbits
from .signvec import ResourceError

log = logging.getLogger(__name__)

MAX_ELEMENTS = 7
MAX_RANK = 4

# published counts of loop-free affine oriented matroids by (affine rank r, n elements)
CENSUS_COUNTS = {
    1: {n: 1 for n in range(1, 11)},
    2: {2: 1, 3: 3, 4: 8, 5: 46, 6: 790, 7: 37829, 8: 4134939},
    3: {3: 1, 4: 5, 5: 27, 6: 1063, 7: 1434219},
}
CENSUS_TOTALS = {1: 1, 2: 2, 3: 5, 4: 14, 5: 74, 6: 1854, 7: 1472049}



def worker_count(workers: Optional[int] = None) -> int:
    if workers is not None:
        return max(1, workers)
    return max(1, int(os.environ.get("OMARR_WORKERS", "1")))


@lru_cache(maxsize=None)
def _extension_plan(m: int, r: int):
    """Index bookkeeping for extending rank-r chirotopes on m elements by element m."""
    new_tuples = list(itertools.combinations(range(m + 1), r))
    index = {t: i for i, t in enumerate(new_tuples)}
    old_pos = [index[t] for t in itertools.combinations(range(m), r)]
    heads = list(itertools.combinations(range(m), r - 1))
    var_pos = [index[a + (m,)] for a in heads]
    var_of = {p: k for k, p in enumerate(var_pos)}
    rels = gp3_relations(m + 1, r) if r >= 2 else []
    by_depth: list[list] = [[] for _ in heads]
    for rel in rels:
        vs = [var_of[i] for _, a, b in rel for i in (a, b) if i in var_of]
        if vs:
            by_depth[max(vs)].append(rel)
    # variables that vanish when their head contains element e (parallel test)
    touching = [[k for k, a in enumerate(heads) if e in a] for e in range(m)]
    return new_tuples, old_pos, heads, var_pos, by_depth, touching


def extensions(chi: Chirotope, simple: bool = True) -> Iterator[Chirotope]:
    """All single-element extensions of chi by a new element m (labelled, not deduplicated)."""
    m, r = chi.m, chi.r
    new_tuples, old_pos, heads, var_pos, by_depth, touching = _extension_plan(m, r)
    signs = [0] * len(new_tuples)
    for p, s in zip(old_pos, chi.signs):
        signs[p] = s
    # a dependent head forces chi(A, p) = 0
    forced_zero = [not any(chi.value(a + (e,)) for e in range(m) if e not in a) for a in heads]
    nvars = len(heads)

    def ok(depth):
        for rel in by_depth[depth]:
            pos = neg = False
            for s, i, j in rel:
                v = s * signs[i] * signs[j]
                if v > 0:
                    pos = True
                elif v < 0:
                    neg = True
            if pos != neg:
                return False
        return True

    def dfs(k):
        if k == nvars:
            vals = [signs[p] for p in var_pos]
            if not any(vals):
                return
            if simple and any(all(vals[j] == 0 for j in touching[e]) for e in range(m)):
                return
            bases = [t for t, s in zip(new_tuples, signs) if s]
            if is_matroid(bases):
                yield Chirotope(m + 1, r, tuple(signs))
            return
        choices = (0,) if forced_zero[k] else (0, 1, -1)
        for v in choices:
            signs[var_pos[k]] = v
            if ok(k):
                yield from dfs(k + 1)
        signs[var_pos[k]] = 0

    yield from dfs(0)


def _extend_task(args) -> dict[str, None]:
    key, simple = args
    out = {}
    for ext in extensions(chirotope_from_key(key), simple=simple):
        out.setdefault(chirotope_canonical(ext)[0], None)
    return out


def _check_scale(m: int, r: int, allow_large: bool = False) -> None:
    if r > MAX_RANK:
        raise ResourceError(f"enumeration limited to rank <= {MAX_RANK}")
    if m <= MAX_ELEMENTS or (m == MAX_ELEMENTS + 1 and r <= 2):
        return
    if not allow_large:
        raise ResourceError(f"rank {r} on {m} elements is beyond the supported range; pass allow_large=True")


@lru_cache(maxsize=None)
def _class_keys(m: int, r: int, simple: bool, workers: int) -> tuple[str, ...]:
    if r < 1 or r > m:
        return ()
    if r == m:
        # the free oriented matroid: one basis
        chi = Chirotope(m, r, (1,))
        return (chirotope_canonical(chi)[0],)
    base = _class_keys(m - 1, r, simple, workers)
    tasks = [(k, simple) for k in base]
    found: set[str] = set()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_extend_task, tasks, chunksize=1):
                found.update(part)
    else:
        for t in tasks:
            found.update(_extend_task(t))
    log.info("rank %d on %d elements: %d classes", r, m, len(found))
    return tuple(sorted(found))


def om_classes(m: int, r: int, simple: bool = True, workers: Optional[int] = None,
               allow_large: bool = False) -> list[Chirotope]:
    """One canonical chirotope per isomorphism class of rank-r oriented matroids on m elements.

    ``simple`` excludes parallel pairs; loops are always excluded.
    """
    _check_scale(m, r, allow_large)
    return [chirotope_from_key(k) for k in _class_keys(m, r, simple, worker_count(workers))]


def enumerate_oms(m: int, r: int, simple: bool = True, workers: Optional[int] = None) -> list[CanonicalForm]:
    """Covector canonical forms of the classes from :func:`om_classes`, sorted."""
    forms = {canonicalize(covectors_from_chirotope(chi)) for chi in om_classes(m, r, simple, workers)}
    return sorted(forms, key=CanonicalForm.key)


@dataclass(frozen=True)
class AffineClass:
    chirotope: Chirotope
    marked: int

    def covectors(self):
        return covectors_from_chirotope(self.chirotope)


def affine_classes(n: int, r: int, simple: bool = True, workers: Optional[int] = None,
                   allow_large: bool = False) -> list[AffineClass]:
    """Affine classes with n affine elements and affine rank r: one per orbit of the
    automorphism group on the elements of each rank-(r+1) class on n+1 elements."""
    _check_affine_scale(n, r, allow_large)
    out = []
    for chi in om_classes(n + 1, r + 1, simple, workers, allow_large):
        for orbit in element_orbits(chi):
            out.append(AffineClass(chi, orbit[0]))
    return out


def _check_affine_scale(n: int, r: int, allow_large: bool = False) -> None:
    if r + 1 > MAX_RANK:
        raise ResourceError(f"affine enumeration limited to r <= {MAX_RANK - 1}")
    _check_scale(n + 1, r + 1, allow_large)


def _affine_form_task(args):
    chi, g = args
    return canonicalize_affine((covectors_from_chirotope(chi), g))


def enumerate_affine(n: int, r: int, simple: bool = True, workers: Optional[int] = None,
                     every_marking: bool = False, allow_large: bool = False) -> list[CanonicalForm]:
    """Affine canonical forms: each OM class on n+1 elements of rank r+1, marked at each element.

    Markings in one automorphism orbit give identical forms, so by default one
    marking per orbit is canonicalized; ``every_marking`` marks them all.
    """
    _check_affine_scale(n, r, allow_large)
    w = worker_count(workers)
    if every_marking:
        tasks = [(chi, g) for chi in om_classes(n + 1, r + 1, simple, w, allow_large) for g in range(n + 1)]
    else:
        tasks = [(a.chirotope, a.marked) for a in affine_classes(n, r, simple, w, allow_large)]
    if w > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=w) as pool:
            forms = set(pool.map(_affine_form_task, tasks, chunksize=4))
    else:
        forms = {_affine_form_task(t) for t in tasks}
    return sorted(forms, key=CanonicalForm.key)


@dataclass(frozen=True)
class CensusRow:
    n: int
    r: int
    count: int


def census_table(n_max: int, simple: bool = True, workers: Optional[int] = None,
                 allow_large: bool = False) -> list[CensusRow]:
    """Affine class counts for r in 1..3 and n <= n_max (r <= n)."""
    rows = []
    for r in (1, 2, 3):
        for n in range(r, n_max + 1):
            rows.append(CensusRow(n, r, len(affine_classes(n, r, simple, workers, allow_large))))
    return rows


def format_census(rows: list[CensusRow]) -> list[str]:
    ns = sorted({row.n for row in rows})
    grid = {(row.r, row.n): row.count for row in rows}
    width = max(len(str(c)) for c in grid.values()) + 1
    width = max(width, 4)
    lines = ["r\\n " + "".join(f"{n:>{width}}" for n in ns)]
    for r in (1, 2, 3):
        cells = "".join(f"{grid[(r, n)]:>{width}}" if (r, n) in grid else " " * width for n in ns)
        lines.append(f"{r:<4}" + cells)
    totals = [sum(c for (rr, nn), c in grid.items() if nn == n) for n in ns]
    lines.append("tot " + "".join(f"{t:>{width}}" for t in totals))
    return lines


def census_diff(rows: list[CensusRow]) -> list[str]:
    """Mismatches against the embedded published counts (empty when all agree)."""
    problems = []
    grid = {(row.r, row.n): row.count for row in rows}
    for (r, n), c in sorted(grid.items()):
        want = CENSUS_COUNTS.get(r, {}).get(n)
        if want is not None and want != c:
            problems.append(f"r={r} n={n}: got {c}, expected {want}")
    for n in sorted({row.n for row in rows}):
        total = sum(c for (rr, nn), c in grid.items() if nn == n)
        want = CENSUS_TOTALS.get(n)
        if want is not None and want != total:
            problems.append(f"total n={n}: got {total}, expected {want}")
    return problems


__all__ = [
    "AffineClass", "CensusRow", "CENSUS_COUNTS", "CENSUS_TOTALS", "affine_classes", "census_diff",
    "census_table", "enumerate_affine", "enumerate_oms", "extensions", "format_census", "om_classes",
]
