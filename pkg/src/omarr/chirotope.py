"""Chirotopes: signs of r x r determinants over the r-subsets of a vector configuration.

Values are stored for sorted r-tuples in lexicographic order (``itertools.combinations``
order); any other ordering is evaluated by alternation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .oriented_matroid import CovectorSet
from .signvec import SignedPermutation, SignVector


class RankDeficient(ValueError):
    pass


def perm_parity(seq: Sequence[int]) -> int:
    """+1 for an even arrangement of distinct integers, -1 for odd."""
    s = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


@dataclass(frozen=True)
class Chirotope:
    m: int
    r: int
    signs: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.r <= self.m:
            raise ValueError(f"need 1 <= r <= m, got r={self.r}, m={self.m}")
        expected = _binom(self.m, self.r)
        if len(self.signs) != expected:
            raise ValueError(f"expected {expected} signs, got {len(self.signs)}")
        if any(s not in (-1, 0, 1) for s in self.signs):
            raise ValueError("signs must be -1, 0 or 1")

    @cached_property
    def tuples(self) -> list[tuple[int, ...]]:
        return list(itertools.combinations(range(self.m), self.r))

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {t: i for i, t in enumerate(self.tuples)}

    def __call__(self, *t: int) -> int:
        return self.value(t)

    def value(self, t: Sequence[int]) -> int:
        if len(set(t)) < len(t):
            return 0
        s = self.signs[self._index[tuple(sorted(t))]]
        return s * perm_parity(t) if s else 0

    def __neg__(self) -> "Chirotope":
        return Chirotope(self.m, self.r, tuple(-s for s in self.signs))

    def is_zero(self) -> bool:
        return not any(self.signs)

    @property
    def bases(self) -> list[tuple[int, ...]]:
        return [t for t, s in zip(self.tuples, self.signs) if s]

    def string(self) -> str:
        return "".join("0+-"[s] for s in self.signs)

    @classmethod
    def from_string(cls, m: int, r: int, text: str) -> "Chirotope":
        table = {"0": 0, "+": 1, "-": -1}
        try:
            signs = tuple(table[c] for c in text.strip())
        except KeyError as e:
            raise ValueError(f"bad chirotope character {e}") from None
        return cls(m, r, signs)

    def apply(self, g: SignedPermutation) -> "Chirotope":
        """Relabel/reorient so that covectors(apply(g)) == g(covectors(self))."""
        if g.n != self.m:
            raise ValueError("size mismatch")
        out = [0] * len(self.signs)
        index = self._index
        for t, s in zip(self.tuples, self.signs):
            if not s:
                continue
            image = [g.relabeling[i] for i in t]
            flips = sum(1 for i in t if i in g.reorientation)
            out[index[tuple(sorted(image))]] = s * perm_parity(image) * (-1) ** flips
        return Chirotope(self.m, self.r, tuple(out))


def _binom(n: int, k: int) -> int:
    from math import comb
    return comb(n, k)


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                for j in range(c, n):
                    a[i][j] -= f * a[c][j]
    return det


def sign(x) -> int:
    return (x > 0) - (x < 0)


def chirotope_from_vectors(vectors: Sequence[Sequence]) -> Chirotope:
    vecs = [tuple(Fraction(x) for x in v) for v in vectors]
    if not vecs:
        raise ValueError("empty configuration")
    r = len(vecs[0])
    if any(len(v) != r for v in vecs):
        raise ValueError("vectors of different lengths")
    if any(not any(v) for v in vecs):
        raise ValueError("zero vector in configuration")
    m = len(vecs)
    if m < r:
        raise RankDeficient(f"{m} vectors cannot span rank {r}")
    signs = tuple(sign(determinant([vecs[i] for i in t]))
                  for t in itertools.combinations(range(m), r))
    if not any(signs):
        raise RankDeficient("configuration spans less than full rank")
    return Chirotope(m, r, signs)


@dataclass
class ChirotopeCheck:
    ok: bool
    witness: Optional[tuple] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_chirotope(chi: Chirotope) -> ChirotopeCheck:
    """Nonzero + exchange: for chi(x)chi(y) != 0 some i has
    chi(y_i, x_2..x_r) * chi(y_1..y_{i-1}, x_1, y_{i+1}..y_r) = chi(x) chi(y).

    Alternation holds by construction of the storage.
    """
    if chi.is_zero():
        return ChirotopeCheck(False, None, "identically zero")
    r = chi.r
    bases = chi.bases
    for xs in bases:
        for k in range(r):
            x = (xs[k],) + xs[:k] + xs[k + 1:]
            cx = chi.value(x)
            for y in bases:
                target = cx * chi.value(y)
                found = False
                for i in range(r):
                    a = chi.value((y[i],) + x[1:])
                    if not a:
                        continue
                    b = chi.value(y[:i] + (x[0],) + y[i + 1:])
                    if a * b == target:
                        found = True
                        break
                if not found:
                    return ChirotopeCheck(False, (x, y), "exchange")
    return ChirotopeCheck(True)


def gp3_relations(m: int, r: int) -> list[tuple]:
    """Index triples for the 3-term Grassmann-Pluecker relations.

    Each entry is ((s1, i1, j1), (s2, i2, j2), (s3, i3, j3)): the terms are
    s * chi[i] * chi[j] with chi indexed by sorted-tuple position and s absorbing
    the alternation signs. Terms whose tuples are degenerate are dropped.
    """
    index = {t: i for i, t in enumerate(itertools.combinations(range(m), r))}

    def ref(t):
        if len(set(t)) < len(t):
            return None
        return perm_parity(t), index[tuple(sorted(t))]

    rels = []
    for base in itertools.combinations(range(m), r - 2):
        rest = [e for e in range(m) if e not in base]
        for a, b, c, d in itertools.combinations(rest, 4):
            terms = []
            for s, (p, q), (u, v) in ((1, (a, b), (c, d)), (-1, (a, c), (b, d)), (1, (a, d), (b, c))):
                t1, t2 = ref(base + (p, q)), ref(base + (u, v))
                terms.append((s * t1[0] * t2[0], t1[1], t2[1]))
            rels.append(tuple(terms))
    return rels


def gp3_ok(signs: Sequence[int], rels) -> bool:
    for rel in rels:
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


def is_matroid(bases: Sequence[tuple[int, ...]]) -> bool:
    """Basis exchange axiom on a family of sorted tuples."""
    bs = [frozenset(b) for b in bases]
    family = set(bs)
    if not family:
        return False
    for b1 in bs:
        for b2 in bs:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in family for y in b2 - b1):
                    return False
    return True


def is_chirotope_fast(chi: Chirotope) -> bool:
    """Matroid support + 3-term Grassmann-Pluecker relations (equivalent to check_chirotope)."""
    if chi.is_zero() or not is_matroid(chi.bases):
        return False
    if chi.r < 2:
        return True
    return gp3_ok(chi.signs, gp3_relations(chi.m, chi.r))


def _pack(signs: Iterable[int]) -> tuple[int, int]:
    p = m = 0
    for i, s in enumerate(signs):
        if s > 0:
            p |= 1 << i
        elif s < 0:
            m |= 1 << i
    return p, m


def cocircuit_masks(chi: Chirotope) -> set[tuple[int, int]]:
    """Cocircuits as (plus, minus) masks: x -> chi(A, x) for independent (r-1)-sets A, both signs."""
    out = set()
    for a in itertools.combinations(range(chi.m), chi.r - 1):
        vals = [chi.value(a + (x,)) for x in range(chi.m)]
        if any(vals):
            p, mm = _pack(vals)
            out.add((p, mm))
            out.add((mm, p))
    return out


def cocircuits_from_chirotope(chi: Chirotope) -> set[SignVector]:
    return {SignVector(chi.m, p, mm) for p, mm in cocircuit_masks(chi)}


def composition_closure(n: int, generators: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    """All compositions of the generators, plus zero, as (plus, minus) masks."""
    gens = list(set(generators))
    seen = {(0, 0)}
    stack = [(0, 0)]
    full = (1 << n) - 1
    while stack:
        xp, xm = stack.pop()
        z = full & ~(xp | xm)
        if not z:
            continue
        for cp, cm in gens:
            v = (xp | (cp & z), xm | (cm & z))
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def covectors_from_chirotope(chi: Chirotope) -> CovectorSet:
    masks = composition_closure(chi.m, cocircuit_masks(chi))
    return CovectorSet(chi.m, (SignVector(chi.m, p, mm) for p, mm in masks))


__all__ = [
    "Chirotope", "ChirotopeCheck", "RankDeficient", "check_chirotope", "chirotope_from_vectors",
    "cocircuits_from_chirotope", "composition_closure", "covectors_from_chirotope", "determinant",
    "gp3_ok", "gp3_relations", "is_chirotope_fast", "is_matroid", "perm_parity", "sign",
]
