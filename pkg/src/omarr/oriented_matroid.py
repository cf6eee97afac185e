"""Covector sets, the SV0-SV3 axioms, and face posets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .signvec import DimensionError, SignVector, restrict


class InvalidMarking(ValueError):
    pass


@dataclass(frozen=True)
class CovectorSet:
    n: int
    vectors: frozenset[SignVector]

    def __init__(self, n: int, vectors: Iterable[SignVector | str]):
        if n < 1:
            raise ValueError("ground set must be nonempty")
        vs = set()
        for v in vectors:
            if isinstance(v, str):
                v = SignVector.parse(v)
            if v.n != n:
                raise DimensionError(f"vector {v} has length {v.n}, expected {n}")
            vs.add(v)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "vectors", frozenset(vs))

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, v) -> bool:
        return v in self.vectors

    def sorted(self) -> list[SignVector]:
        return sorted(self.vectors, key=SignVector.sort_key)

    def strings(self) -> list[str]:
        return [str(v) for v in self.sorted()]

    @classmethod
    def full_cube(cls, n: int) -> "CovectorSet":
        from .signvec import all_sign_vectors
        return cls(n, all_sign_vectors(n))

    @classmethod
    def trivial(cls, n: int) -> "CovectorSet":
        return cls(n, [SignVector.zero(n)])


@dataclass
class AxiomResult:
    passed: bool
    witness: Optional[tuple[SignVector, ...]] = None

    def __str__(self) -> str:
        if self.passed:
            return "pass"
        return "FAIL witness " + " ".join(str(w) for w in self.witness)


@dataclass
class AxiomReport:
    sv0: AxiomResult
    sv1: AxiomResult
    sv2: AxiomResult
    sv3: AxiomResult

    @property
    def ok(self) -> bool:
        return self.sv0.passed and self.sv1.passed and self.sv2.passed and self.sv3.passed

    def lines(self) -> list[str]:
        return [f"{name.upper()}: {getattr(self, name)}" for name in ("sv0", "sv1", "sv2", "sv3")]


def check_axioms(V: CovectorSet) -> AxiomReport:
    """Brute-force check of SV0-SV3; each failure reports the first violation in sorted order."""
    n = V.n
    vs = V.sorted()
    members = V.vectors
    zero = SignVector.zero(n)

    sv0 = AxiomResult(True) if zero in members else AxiomResult(False, (zero,))

    sv1 = AxiomResult(True)
    for x in vs:
        if -x not in members:
            sv1 = AxiomResult(False, (x,))
            break

    sv2 = AxiomResult(True)
    full = (1 << n) - 1
    for x in vs:
        if x.support == full:
            continue
        for y in vs:
            if x.compose(y) not in members:
                sv2 = AxiomResult(False, (x, y))
                break
        if not sv2.passed:
            break

    sv3 = AxiomResult(True)
    for x in vs:
        for y in vs:
            # X_i = 0 => Y_i = 0, and some j with X_j = -Y_j != 0
            if y.support & x.zero_set or not x.separation(y):
                continue
            if not _restriction_hits(x, y, members):
                sv3 = AxiomResult(False, (x, y))
                break
        if not sv3.passed:
            break
    return AxiomReport(sv0, sv1, sv2, sv3)


def _restriction_hits(x: SignVector, y: SignVector, members: frozenset) -> bool:
    sep = x.separation(y)
    # walk the nonempty submasks of the separation set
    sub = sep
    while sub:
        if SignVector(x.n, x.plus & ~sub, x.minus & ~sub) in members:
            return True
        sub = (sub - 1) & sep
    return False


def is_oriented_matroid(V: CovectorSet) -> bool:
    return check_axioms(V).ok


def loops(V: CovectorSet) -> set[int]:
    """0-based indices that are zero in every vector."""
    support = 0
    for v in V.vectors:
        support |= v.support
    return {i for i in range(V.n) if not support >> i & 1}


def parallel_pairs(V: CovectorSet) -> set[tuple[int, int]]:
    """Pairs i < j whose columns agree everywhere or are opposite everywhere."""
    cols = [tuple(int(v[i]) for v in V.sorted()) for i in range(V.n)]
    out = set()
    for i in range(V.n):
        for j in range(i + 1, V.n):
            a, b = cols[i], cols[j]
            if a == b or all(s == -t for s, t in zip(a, b)):
                out.add((i, j))
    return out


def is_simple(V: CovectorSet) -> bool:
    return not loops(V) and not parallel_pairs(V)


def rank(vectors: Iterable[SignVector] | CovectorSet) -> int:
    """Number of strict steps in the longest chain under the conformal order."""
    vs = list(vectors.vectors if isinstance(vectors, CovectorSet) else vectors)
    if not vs:
        return 0
    vs.sort(key=lambda v: bin(v.support).count("1"))
    height: dict[SignVector, int] = {}
    for y in vs:
        h = 0
        for x in vs:
            if x is y:
                break
            if x != y and x <= y and height[x] + 1 > h:
                h = height[x] + 1
        height[y] = h
    return max(height.values())


@dataclass(frozen=True)
class AffineFaces:
    """Vectors positive on the marked element; that entry carries no information."""

    vectors: frozenset[SignVector]
    marked: int

    def sorted(self) -> list[SignVector]:
        return sorted(self.vectors, key=SignVector.sort_key)

    def __len__(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class AffineOrientedMatroid:
    om: CovectorSet
    marked: int  # 0-based
    check: bool = field(default=True, compare=False)

    def __post_init__(self):
        if not 0 <= self.marked < self.om.n:
            raise InvalidMarking(f"marked element {self.marked} out of range")
        if self.marked in loops(self.om):
            raise InvalidMarking(f"marked element {self.marked} is a loop")
        if self.check:
            report = check_axioms(self.om)
            if not report.ok:
                raise ValueError("not an oriented matroid: " + "; ".join(report.lines()))

    def affine_faces(self) -> AffineFaces:
        return affine_faces(self)

    @property
    def affine_rank(self) -> int:
        return rank(self.om) - 1


def affine_faces(A: AffineOrientedMatroid) -> AffineFaces:
    bit = 1 << A.marked
    return AffineFaces(frozenset(v for v in A.om.vectors if v.plus & bit), A.marked)


@dataclass
class FacePoset:
    elements: list[SignVector]
    covers: set[tuple[SignVector, SignVector]]  # (A, B): A covered by B
    dims: Optional[dict[SignVector, int]] = None
    bounded: Optional[dict[SignVector, bool]] = None

    def maximal(self) -> list[SignVector]:
        below = {a for a, _ in self.covers}
        return [x for x in self.elements if x not in below]

    def minimal(self) -> list[SignVector]:
        above = {b for _, b in self.covers}
        return [x for x in self.elements if x not in above]

    def lower_covers(self, b: SignVector) -> list[SignVector]:
        return sorted((a for a, bb in self.covers if bb == b), key=SignVector.sort_key)

    def upper_covers(self, a: SignVector) -> list[SignVector]:
        return sorted((b for aa, b in self.covers if aa == a), key=SignVector.sort_key)

    def below(self, b: SignVector) -> list[SignVector]:
        return [a for a in self.elements if a != b and a <= b]


def face_poset(vectors: Iterable[SignVector] | CovectorSet | AffineFaces) -> FacePoset:
    """Hasse diagram of the conformal order restricted to the given vectors."""
    if isinstance(vectors, (CovectorSet, AffineFaces)):
        vs = vectors.sorted()
    else:
        vs = sorted(set(vectors), key=SignVector.sort_key)
    covers = set()
    for b in vs:
        below = [a for a in vs if a != b and a <= b]
        for a in below:
            if not any(c != a and a <= c for c in below):
                covers.add((a, b))
    return FacePoset(vs, covers)


def topes(V: CovectorSet) -> list[SignVector]:
    """Maximal vectors."""
    vs = V.sorted()
    return [y for y in vs if not any(y != z and y <= z for z in vs)]


__all__ = [
    "AffineFaces", "AffineOrientedMatroid", "AxiomReport", "AxiomResult", "CovectorSet",
    "FacePoset", "InvalidMarking", "affine_faces", "check_axioms", "face_poset",
    "is_oriented_matroid", "is_simple", "loops", "parallel_pairs", "rank", "restrict", "topes",
]
