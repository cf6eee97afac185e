"""Canonical forms and invariants under relabeling + reorientation.

The canonical form of a set of sign vectors is the lexicographically least
sorted list of vector strings over all signed permutations, with the character
order ``0 < + < -``.  It is computed by branch and bound: positions of the
image are filled left to right, and a partial assignment is discarded once a
per-vector lower bound on its image already sorts no smaller than the best
complete image found so far.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .chirotope import Chirotope, perm_parity
from .oriented_matroid import AffineOrientedMatroid, CovectorSet
from .signvec import ResourceError, SignedPermutation, SignVector

EXHAUSTIVE_MAX_N = 8
PRUNED_MAX_N = 39  # base-3 keys must fit in int64

_FLIP = np.array([0, 2, 1], dtype=np.int64)



@dataclass(frozen=True)
class CanonicalForm:
    n: int
    vectors: tuple[str, ...]
    marked: Optional[int] = None  # canonical position of the marked element, if affine
    certificate: SignedPermutation = field(compare=False, hash=False, default=None)

    def key(self) -> str:
        head = f"n={self.n}" + (f" marked={self.marked + 1}" if self.marked is not None else "")
        return head + ":" + ",".join(self.vectors)

    def lines(self) -> list[str]:
        return list(self.vectors)


def _digits(vectors: Sequence[SignVector], n: int) -> np.ndarray:
    M = np.zeros((len(vectors), n), dtype=np.int64)
    for r, v in enumerate(vectors):
        for i in range(n):
            if v.plus >> i & 1:
                M[r, i] = 1
            elif v.minus >> i & 1:
                M[r, i] = 2
    return M


def _less(a: np.ndarray, b: np.ndarray) -> int:
    """-1, 0, 1 for lexicographic comparison of equal-length arrays."""
    diff = np.flatnonzero(a != b)
    if diff.size == 0:
        return 0
    i = diff[0]
    return -1 if a[i] < b[i] else 1


def _keys_to_strings(keys: np.ndarray, n: int) -> tuple[str, ...]:
    out = []
    for k in keys.tolist():
        chars = []
        for _ in range(n):
            k, d = divmod(k, 3)
            chars.append("0+-"[d])
        out.append("".join(reversed(chars)))
    return tuple(out)


def _coerce(V) -> tuple[int, list[SignVector]]:
    if isinstance(V, CovectorSet):
        return V.n, V.sorted()
    vs = list(V)
    if not vs:
        raise ValueError("empty vector set")
    vs = [SignVector.parse(v) if isinstance(v, str) else v for v in vs]
    return vs[0].n, sorted(set(vs), key=SignVector.sort_key)


def _branch_and_bound(M: np.ndarray, n: int, fixed: dict[int, int]):
    """Least sorted image of the rows of M; ``fixed`` maps position -> required column."""
    rows = M.shape[0]
    nz = (M != 0)
    pow3 = [3 ** k for k in range(n + 1)]
    tails = np.array([(3 ** w - 1) // 2 for w in range(n + 1)], dtype=np.int64)
    flipped = _FLIP[M]
    best_keys: Optional[np.ndarray] = None
    best_assign = None
    forced_cols = set(fixed.values())
    col_has_nz = nz.any(axis=0)

    def children(k, pre, w, used):
        if k in fixed:
            cands = [fixed[k]]
        else:
            cands = [c for c in range(n) if c not in used and c not in forced_cols]
        out = []
        rem = n - k - 1
        for c in cands:
            for f in ((0, 1) if col_has_nz[c] else (0,)):
                digit = flipped[:, c] if f else M[:, c]
                npre = pre * 3 + digit
                nw = w - nz[:, c]
                lb = np.sort(npre * pow3[rem] + tails[nw])
                out.append((lb, c, f, npre, nw))
        out.sort(key=lambda t: tuple(t[0].tolist()))
        return out

    def dfs(k, pre, w, used, assign):
        nonlocal best_keys, best_assign
        if k == n:
            keys = np.sort(pre)
            if best_keys is None or _less(keys, best_keys) < 0:
                best_keys, best_assign = keys, list(assign)
            return
        for lb, c, f, npre, nw in children(k, pre, w, used):
            if best_keys is not None and _less(lb, best_keys) >= 0:
                continue
            used.add(c)
            assign.append((c, f))
            dfs(k + 1, npre, nw, used, assign)
            assign.pop()
            used.discard(c)

    dfs(0, np.zeros(rows, dtype=np.int64), nz.sum(axis=1), set(), [])
    return best_keys, best_assign


def _certificate(assign, n) -> SignedPermutation:
    relabel = [0] * n
    reorient = set()
    for pos, (c, f) in enumerate(assign):
        relabel[c] = pos
        if f:
            reorient.add(c)
    return SignedPermutation(tuple(relabel), frozenset(reorient))


def canonicalize(V, pruning: bool = True) -> CanonicalForm:
    """Least sorted image of the vector set over all 2^n n! signed permutations."""
    n, vs = _coerce(V)
    if not pruning:
        return canonicalize_exhaustive(vs)
    if n > PRUNED_MAX_N:
        raise ResourceError(f"n={n} exceeds {PRUNED_MAX_N}")
    keys, assign = _branch_and_bound(_digits(vs, n), n, {})
    return CanonicalForm(n, _keys_to_strings(keys, n), None, _certificate(assign, n))


def canonicalize_affine(A: AffineOrientedMatroid | tuple, pruning: bool = True) -> CanonicalForm:
    """Least image over signed permutations sending the marked element to the last position.

    This is the stabilizer of the marked element after a fixed relabeling that
    moves it last, so forms of affine-isomorphic pairs coincide whatever the
    marked index.
    """
    if isinstance(A, AffineOrientedMatroid):
        V, g = A.om, A.marked
    else:
        V, g = A
    n, vs = _coerce(V)
    if not 0 <= g < n:
        raise ValueError("marked element out of range")
    if not pruning:
        return canonicalize_exhaustive(vs, marked=g)
    keys, assign = _branch_and_bound(_digits(vs, n), n, {n - 1: g})
    return CanonicalForm(n, _keys_to_strings(keys, n), n - 1, _certificate(assign, n))


def canonicalize_exhaustive(V, marked: Optional[int] = None) -> CanonicalForm:
    """Reference implementation: scan the whole group (n <= 8)."""
    n, vs = _coerce(V)
    if n > EXHAUSTIVE_MAX_N:
        raise ResourceError(f"exhaustive canonical form limited to n <= {EXHAUSTIVE_MAX_N}")
    best = None
    best_g = None
    for g in SignedPermutation.all(n):
        if marked is not None and g.relabeling[marked] != n - 1:
            continue
        image = sorted(g.apply(v).sort_key() for v in vs)
        if best is None or image < best:
            best, best_g = image, g
    strings = _keys_to_strings(np.array(best, dtype=np.int64), n)
    return CanonicalForm(n, strings, None if marked is None else n - 1, best_g)


# -- chirotope canonical forms (fast dedup for enumeration) --------------

def _colex_blocks(r: int, m: int):
    """For each k, the (r-1)-subsets of range(k) in colex order."""
    blocks = []
    for k in range(m):
        subs = list(itertools.combinations(range(k), r - 1))
        subs.sort(key=lambda t: tuple(reversed(t)))
        blocks.append(subs)
    return blocks


def _element_invariants(chi: Chirotope) -> list[tuple]:
    """Per-element matroid counts, unchanged by relabeling, reorientation and global sign."""
    m = chi.m
    single = [0] * m
    pair = [[0] * m for _ in range(m)]
    for t in chi.bases:
        for i in t:
            single[i] += 1
            for j in t:
                if i != j:
                    pair[i][j] += 1
    return [(single[e], tuple(sorted(pair[e][f] for f in range(m) if f != e))) for e in range(m)]


class _Parity:
    """Incremental GF(2) system in the flip bits of the image positions plus a global-sign bit."""

    __slots__ = ("rows",)

    def __init__(self, rows=None):
        self.rows = dict(rows or {})  # pivot bit -> (mask, value)

    def copy(self) -> "_Parity":
        return _Parity(self.rows)

    def sign_bit(self, mask: int, raw_negative: int) -> int:
        """Bit of the entry (1 = minus) with mask's flips applied; fixes it to 0 when still free."""
        v, val = mask, 0
        rows = self.rows
        while v:
            p = v.bit_length() - 1
            row = rows.get(p)
            if row is None:
                rows[p] = (v, raw_negative ^ val)
                return 0
            v ^= row[0]
            val ^= row[1]
        return raw_negative ^ val

    def solution(self, nbits: int) -> list[int]:
        x = [0] * nbits
        for p in sorted(self.rows):
            mask, val = self.rows[p]
            b = val
            rest = mask & ~(1 << p)
            while rest:
                q = rest.bit_length() - 1
                b ^= x[q]
                rest &= ~(1 << q)
            x[p] = b
        return x


def chirotope_canonical(chi: Chirotope, marked: Optional[int] = None,
                        want_automorphisms: bool = False):
    """Canonical key of a chirotope up to relabeling, reorientation and global sign.

    Elements are first grouped by matroid invariants; within that ordering the
    key is the least sign string (colex tuple order, 0 < + < -) over
    permutations, where for each permutation the least string over
    reorientations is found greedily by GF(2) elimination.  With ``marked`` the
    element is forced to the last position.

    Returns (key, certificate, automorphisms-or-None); the certificate maps chi
    to the key's chirotope up to global sign.
    """
    m, r = chi.m, chi.r
    table: dict[tuple, int] = {}
    for t, s in zip(chi.tuples, chi.signs):
        if s:
            for p in itertools.permutations(t):
                table[p] = s * perm_parity(p)
    inv = _element_invariants(chi)
    others = [e for e in range(m) if e != marked]
    slots = sorted(inv[e] for e in others)
    if marked is not None:
        slots.append(inv[marked])
    blocks = _colex_blocks(r, m)
    eps_bit = 1 << m
    best: list = [None]
    found: list = []

    def dfs(k, cols, parity, prefix):
        if k == m:
            cur = best[0]
            if cur is None or prefix < cur:
                best[0] = prefix
                found.clear()
            if best[0] == prefix:
                found.append((tuple(cols), parity))
            return
        if marked is not None and k == m - 1:
            cands = [marked]
        else:
            cands = [c for c in others if c not in cols and inv[c] == slots[k]]
        kids = []
        for c in cands:
            par = parity.copy()
            block = []
            for T in blocks[k]:
                s = table.get(tuple(cols[t] for t in T) + (c,), 0)
                if not s:
                    block.append(0)
                    continue
                mask = eps_bit | (1 << k)
                for t in T:
                    mask |= 1 << t
                block.append(2 if par.sign_bit(mask, s < 0) else 1)
            kids.append((block, c, par))
        kids.sort(key=lambda t: t[0])
        for block, c, par in kids:
            newp = prefix + tuple(block)
            cur = best[0]
            if cur is not None and newp > cur[:len(newp)]:
                break
            cols.append(c)
            dfs(k + 1, cols, par, newp)
            cols.pop()

    dfs(0, [], _Parity(), ())

    def cert_of(cols, parity):
        x = parity.solution(m + 1)
        relabel = [0] * m
        for pos, c in enumerate(cols):
            relabel[c] = pos
        return SignedPermutation(tuple(relabel), frozenset(c for pos, c in enumerate(cols) if x[pos]))

    head = f"{m},{r}" + (",g" if marked is not None else "")
    sig = ";".join(f"{a}/{'.'.join(map(str, b))}" for a, b in slots)
    key = head + "|" + sig + "|" + "".join("0+-"[d] for d in best[0])
    cert = cert_of(*found[0])
    auts = [cert_of(c, p) for c, p in found] if want_automorphisms else None
    return key, cert, auts


def chirotope_from_key(key: str) -> Chirotope:
    """Rebuild the canonical chirotope (the certified image) from its key."""
    head, _, body = key.split("|")
    m, r = (int(x) for x in head.split(",")[:2])
    colex = sorted(itertools.combinations(range(m), r), key=lambda t: tuple(reversed(t)))
    val = dict(zip(colex, body))
    table = {"0": 0, "+": 1, "-": -1}
    return Chirotope(m, r, tuple(table[val[t]] for t in itertools.combinations(range(m), r)))


def configuration_chirotope(vectors: Sequence[Sequence]) -> Chirotope:
    """Chirotope of a vector configuration in its own span (coordinates on independent columns)."""
    from fractions import Fraction
    from .chirotope import chirotope_from_vectors
    from .fm import rank as q_rank

    rows = [tuple(Fraction(x) for x in v) for v in vectors]
    cols: list[int] = []
    for j in range(len(rows[0])):
        if q_rank([[row[c] for c in cols + [j]] for row in rows]) == len(cols) + 1:
            cols.append(j)
    return chirotope_from_vectors([tuple(row[c] for c in cols) for row in rows])


def affine_class_key(A) -> str:
    """Key of the affine class of a rational arrangement: its cone marked at the added hyperplane.

    Two arrangements get the same key iff their affine face structures are isomorphic.
    """
    from .arrangement import cone

    C = cone(A)
    chi = configuration_chirotope([h.normal for h in C.hyperplanes])
    return chirotope_canonical(chi, marked=C.n - 1)[0]


def element_orbits(chi: Chirotope) -> list[list[int]]:
    """Orbits of the automorphism group of the oriented matroid on its elements."""
    _, cert, leaves = chirotope_canonical(chi, want_automorphisms=True)
    inv = cert.inverse()
    parent = list(range(chi.m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in leaves:
        a = inv.compose(g)  # automorphism of chi
        for i, j in enumerate(a.relabeling):
            parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(chi.m):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


# -- fingerprints ---------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    rank: int
    faces_by_dim: tuple[int, ...]
    bounded_by_dim: tuple[int, ...]
    rays: int
    lines: int
    cell_shapes: tuple  # sorted (dim, bounded, f-vector of the closure) over faces of dim >= 2
    chamber_shapes: tuple  # sorted (facets, vertices, bounded, f-vector) over chambers
    incidence: tuple  # sorted per-hyperplane counts of faces lying on it, by dimension

    def serialize(self) -> str:
        return repr(self)

    def summary(self) -> dict:
        d = len(self.faces_by_dim) - 1
        return {
            "rank": self.rank,
            "faces_by_dim": list(self.faces_by_dim),
            "bounded_by_dim": list(self.bounded_by_dim),
            "chambers": self.faces_by_dim[d],
            "bounded_chambers": self.bounded_by_dim[d],
            "points": self.faces_by_dim[0],
            "rays": self.rays,
            "lines": self.lines,
            "bounded_edges": self.bounded_by_dim[1] if d >= 1 else 0,
        }


def fingerprint(faces_in: Iterable, d: Optional[int] = None) -> Fingerprint:
    """Invariant summary of a geometric face set (faces carry dimension and boundedness)."""
    from .arrangement import RationalArrangement, faces as arr_faces
    from .oriented_matroid import rank as poset_rank

    if isinstance(faces_in, RationalArrangement):
        d = faces_in.d
        fs = arr_faces(faces_in)
    else:
        fs = list(faces_in)
        if d is None:
            d = max(f.dimension for f in fs)
    n = fs[0].covector.n
    below = {f.covector: [g for g in fs if g.covector != f.covector and g.covector <= f.covector]
             for f in fs}

    def fvec(f):
        c = [0] * (d + 1)
        for g in below[f.covector]:
            c[g.dimension] += 1
        return tuple(c[: f.dimension])

    by_dim = [0] * (d + 1)
    bounded = [0] * (d + 1)
    for f in fs:
        by_dim[f.dimension] += 1
        if f.bounded:
            bounded[f.dimension] += 1
    ones = [f for f in fs if f.dimension == 1 and not f.bounded]
    rays = sum(1 for f in ones if any(g.dimension == 0 for g in below[f.covector]))
    cells = sorted((f.dimension, f.bounded, fvec(f)) for f in fs if f.dimension >= 2)
    chambers = sorted(
        (fvec(f)[d - 1] if d >= 1 else 0, fvec(f)[0] if d >= 1 else 0, f.bounded, fvec(f))
        for f in fs if f.dimension == d)
    inc = []
    for i in range(n):
        c = [0] * (d + 1)
        for f in fs:
            if f.covector[i] == 0:
                c[f.dimension] += 1
        inc.append(tuple(c))
    return Fingerprint(
        rank=poset_rank([f.covector for f in fs]),
        faces_by_dim=tuple(by_dim),
        bounded_by_dim=tuple(bounded),
        rays=rays,
        lines=len(ones) - rays,
        cell_shapes=tuple(cells),
        chamber_shapes=tuple(chambers),
        incidence=tuple(sorted(inc)),
    )


def chamber_kind(facets: int, vertices: int) -> str:
    """Name of a bounded 3-dimensional chamber from its facet and vertex counts."""
    return {
        (4, 4): "tetrahedron",
        (5, 5): "square pyramid",
        (5, 6): "triangular prism",
        (6, 8): "hexahedron",
    }.get((facets, vertices), f"{facets}-facet/{vertices}-vertex polytope")


def bounded_chamber_kinds(fp: Fingerprint) -> list[str]:
    return sorted(chamber_kind(f, v) for f, v, b, _ in fp.chamber_shapes if b)


# -- equivalence -----------------------------------------------------------

@dataclass
class Equivalence:
    equivalent: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.equivalent


_POLYGONS = {3: "triangle", 4: "quadrilateral", 5: "pentagon", 6: "hexagon", 7: "heptagon", 8: "octagon"}


def _fingerprint_diff(a: Fingerprint, b: Fingerprint) -> str:
    if a.rank != b.rank:
        return f"rank differs ({a.rank} vs {b.rank})"
    if a.faces_by_dim != b.faces_by_dim:
        return f"face counts by dimension differ ({list(a.faces_by_dim)} vs {list(b.faces_by_dim)})"
    if a.bounded_by_dim != b.bounded_by_dim:
        return (f"bounded face counts by dimension differ "
                f"({list(a.bounded_by_dim)} vs {list(b.bounded_by_dim)})")
    if a.cell_shapes != b.cell_shapes:
        ca = Counter((d, bd, len(fv) > 1 and fv[1] or 0) for d, bd, fv in a.cell_shapes)
        cb = Counter((d, bd, len(fv) > 1 and fv[1] or 0) for d, bd, fv in b.cell_shapes)
        for key in sorted(set(ca) | set(cb), key=lambda k: (-k[1], k[0], -k[2])):
            if ca[key] != cb[key]:
                dim, bd, edges = key
                kind = "bounded" if bd else "unbounded"
                if dim == 2 and bd and edges in _POLYGONS:
                    return f"{kind} {_POLYGONS[edges]} count differs ({ca[key]} vs {cb[key]})"
                return (f"count of {kind} {dim}-faces with {edges} edges differs "
                        f"({ca[key]} vs {cb[key]})")
        return "face shapes differ"
    if a.rays != b.rays:
        return f"ray counts differ ({a.rays} vs {b.rays})"
    if a.chamber_shapes != b.chamber_shapes:
        return "chamber shapes differ"
    if a.incidence != b.incidence:
        return "hyperplane incidence profiles differ"
    return ""


def are_equivalent(F1, F2, affine: bool = True, marked: Optional[int] = None) -> Equivalence:
    """Face-combinatorial equivalence.

    Arrangements: fingerprint filter, then affine canonical forms of the cones
    marked at the cone hyperplane. Covector sets: canonical forms (affine when
    ``marked`` is given, the same index in both sets).
    """
    from .arrangement import RationalArrangement, cone, covectors

    if isinstance(F1, RationalArrangement) and isinstance(F2, RationalArrangement):
        if F1.n != F2.n:
            return Equivalence(False, f"hyperplane counts differ ({F1.n} vs {F2.n})")
        if F1.d != F2.d:
            return Equivalence(False, f"ambient dimensions differ ({F1.d} vs {F2.d})")
        why = _fingerprint_diff(fingerprint(F1), fingerprint(F2))
        if why:
            return Equivalence(False, why)
        if affine:
            c1, c2 = covectors(cone(F1)), covectors(cone(F2))
            k1 = canonicalize_affine((c1, F1.n))
            k2 = canonicalize_affine((c2, F2.n))
        else:
            k1, k2 = canonicalize(covectors(F1)), canonicalize(covectors(F2))
        if k1 == k2:
            return Equivalence(True, "canonical forms agree")
        return Equivalence(False, "canonical forms differ")

    n1, v1 = _coerce(F1)
    n2, v2 = _coerce(F2)
    if n1 != n2 or len(v1) != len(v2):
        return Equivalence(False, "sizes differ")
    if marked is not None:
        k1, k2 = canonicalize_affine((v1, marked)), canonicalize_affine((v2, marked))
    else:
        k1, k2 = canonicalize(v1), canonicalize(v2)
    return Equivalence(k1 == k2, "canonical forms agree" if k1 == k2 else "canonical forms differ")


def hasse_digraph(vectors: Iterable[SignVector]):
    import networkx as nx
    from .oriented_matroid import face_poset

    P = face_poset(vectors)
    G = nx.DiGraph()
    G.add_nodes_from(str(v) for v in P.elements)
    G.add_edges_from((str(a), str(b)) for a, b in P.covers)
    return G


def posets_isomorphic(V1: Iterable[SignVector], V2: Iterable[SignVector]) -> bool:
    """Independent check: isomorphism of the Hasse diagrams as directed graphs."""
    import networkx as nx

    return nx.is_isomorphic(hasse_digraph(V1), hasse_digraph(V2))
