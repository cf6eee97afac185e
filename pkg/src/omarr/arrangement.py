"""Exact rational affine hyperplane arrangements and their faces."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Iterable, Optional, Sequence

from . import fm
from .fm import Constraint
from .oriented_matroid import CovectorSet, FacePoset, face_poset
from .signvec import ResourceError, SignVector, restrict

MAX_HYPERPLANES = 12
MAX_DIMENSION = 4



class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class Hyperplane:
    """The locus normal . x = offset; the positive side is normal . x > offset."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    def __init__(self, normal: Sequence, offset=0):
        nv = tuple(Fraction(x) for x in normal)
        if not any(nv):
            raise ValueError("hyperplane normal must be nonzero")
        object.__setattr__(self, "normal", nv)
        object.__setattr__(self, "offset", Fraction(offset))

    @property
    def d(self) -> int:
        return len(self.normal)

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum(a * b for a, b in zip(self.normal, x)) - self.offset

    def side(self, x: Sequence[Fraction]) -> int:
        v = self.value(x)
        return (v > 0) - (v < 0)

    def same_locus(self, other: "Hyperplane") -> bool:
        a = self.normal + (self.offset,)
        b = other.normal + (other.offset,)
        return fm.rank([a, b]) < 2


@dataclass(frozen=True)
class RationalArrangement:
    d: int
    hyperplanes: tuple[Hyperplane, ...]

    def __init__(self, d: int, hyperplanes: Iterable[Hyperplane | tuple], check: bool = True):
        hs = []
        for h in hyperplanes:
            if not isinstance(h, Hyperplane):
                normal, offset = h
                h = Hyperplane(normal, offset)
            if h.d != d:
                raise ValueError(f"hyperplane of dimension {h.d} in a {d}-dimensional arrangement")
            hs.append(h)
        if not 1 <= d:
            raise ValueError("dimension must be positive")
        if check:
            for i in range(len(hs)):
                for j in range(i + 1, len(hs)):
                    if hs[i].same_locus(hs[j]):
                        raise ValueError(f"hyperplanes {i + 1} and {j + 1} coincide")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "hyperplanes", tuple(hs))

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def normals(self) -> list[tuple[Fraction, ...]]:
        return [h.normal for h in self.hyperplanes]

    def rank(self) -> int:
        return fm.rank(self.normals())

    def is_central(self) -> bool:
        pt = fm.solve([Constraint(h.normal, h.offset, "=") for h in self.hyperplanes], self.d)
        return pt is not None

    def covector_of(self, x: Sequence[Fraction]) -> SignVector:
        return SignVector.from_signs(h.side(x) for h in self.hyperplanes)

    def constraints(self, sigma: SignVector | str) -> list[Constraint]:
        if isinstance(sigma, str):
            sigma = SignVector.parse(sigma)
        if sigma.n != self.n:
            raise ValueError(f"sign vector of length {sigma.n} for {self.n} hyperplanes")
        return [_constraint(h, int(s)) for h, s in zip(self.hyperplanes, sigma)]

    def witness(self, sigma: SignVector | str) -> Optional[tuple[Fraction, ...]]:
        return fm.solve(self.constraints(sigma), self.d)

    @cached_property
    def _faces(self) -> tuple["GeometricFace", ...]:
        return tuple(_enumerate_faces(self))

    @cached_property
    def _point_values(self) -> dict:
        return {}

    @cached_property
    def _face_map(self) -> dict[SignVector, "GeometricFace"]:
        return {f.covector: f for f in self._faces}


def _constraint(h: Hyperplane, s: int) -> Constraint:
    if s == 0:
        return Constraint(h.normal, h.offset, "=")
    if s > 0:
        return Constraint(h.normal, h.offset, ">")
    return Constraint(tuple(-a for a in h.normal), -h.offset, ">")


@dataclass(frozen=True)
class GeometricFace:
    covector: SignVector
    dimension: int
    bounded: bool
    point: tuple[Fraction, ...] = field(compare=False, repr=False, default=())

    def __str__(self) -> str:
        return f"{self.covector} dim={self.dimension} {'bounded' if self.bounded else 'unbounded'}"


def sign_feasible(A: RationalArrangement, sigma: SignVector | str) -> bool:
    return A.witness(sigma) is not None


def _check_scale(A: RationalArrangement) -> None:
    if A.n > MAX_HYPERPLANES or A.d > MAX_DIMENSION:
        raise ResourceError(
            f"face enumeration limited to n <= {MAX_HYPERPLANES}, d <= {MAX_DIMENSION} "
            f"(got n={A.n}, d={A.d})")


def _enumerate_faces(A: RationalArrangement) -> list[GeometricFace]:
    _check_scale(A)
    hs = A.hyperplanes
    n, d = A.n, A.d
    found: list[tuple[list[int], tuple]] = []

    # depth-first over sign prefixes; an infeasible prefix kills its subtree
    def visit(prefix: list[int], cons: list[Constraint], point):
        k = len(prefix)
        if k == n:
            found.append((list(prefix), point))
            return
        h = hs[k]
        here = h.side(point)
        for s in (0, 1, -1):
            c = _constraint(h, s)
            if s == here:
                p = point
            else:
                p = fm.solve(cons + [c], d)
                if p is None:
                    continue
            prefix.append(s)
            visit(prefix, cons + [c], p)
            prefix.pop()

    visit([], [], tuple(Fraction(0) for _ in range(d)))

    out = []
    for signs, point in found:
        sigma = SignVector.from_signs(signs)
        zero_normals = [h.normal for h, s in zip(hs, signs) if s == 0]
        dim = d - fm.rank(zero_normals)
        out.append(GeometricFace(sigma, dim, _is_bounded(A, signs), point))
    out.sort(key=lambda f: f.covector.sort_key())
    return out


def _is_bounded(A: RationalArrangement, signs: Sequence[int]) -> bool:
    zero = Fraction(0)
    rows = []
    for h, s in zip(A.hyperplanes, signs):
        if s == 0:
            rows.append(Constraint(h.normal, zero, "="))
        else:
            rows.append(Constraint(tuple(s * a for a in h.normal), zero, ">="))
    return fm.cone_is_pointed_zero(rows, A.d)


def faces(A: RationalArrangement) -> list[GeometricFace]:
    """Every nonempty cell of the arrangement, sorted by covector."""
    return list(A._faces)


def covectors(A: RationalArrangement) -> CovectorSet:
    return CovectorSet(A.n, (f.covector for f in A._faces))


def face_map(A: RationalArrangement) -> dict[SignVector, GeometricFace]:
    return dict(A._face_map)


def geometric_face_poset(A: RationalArrangement) -> FacePoset:
    fs = faces(A)
    poset = face_poset(f.covector for f in fs)
    poset.dims = {f.covector: f.dimension for f in fs}
    poset.bounded = {f.covector: f.bounded for f in fs}
    return poset


def _as_face(A: RationalArrangement, X) -> GeometricFace:
    fmap = A._face_map
    key = X.covector if isinstance(X, GeometricFace) else (
        SignVector.parse(X) if isinstance(X, str) else X)
    face = fmap.get(key)
    if face is None:
        raise DomainError(f"{key} is not a face of the arrangement")
    return face


def _values(A: RationalArrangement, f: GeometricFace) -> tuple[Fraction, ...]:
    cache = A._point_values
    vals = cache.get(f.covector)
    if vals is None:
        vals = cache[f.covector] = tuple(h.value(f.point) for h in A.hyperplanes)
    return vals


def _step(values, slopes) -> SignVector:
    """Covector of p + eps * u for all small eps > 0, given h(p) and the slopes h(p + u) - h(p).

    Hyperplane values are affine along the segment, so an exact eps below every
    sign change is found from the values alone.
    """
    eps = Fraction(1)
    for v, dv in zip(values, slopes):
        if v and dv and (v > 0) != (dv > 0):
            eps = min(eps, abs(v) / abs(dv) / 2)
    return SignVector.from_signs((w > 0) - (w < 0) for w in (v + eps * dv for v, dv in zip(values, slopes)))


def geometric_compose(A: RationalArrangement, X, Y) -> GeometricFace:
    """The face entered when leaving a point of X toward a point of Y."""
    fx, fy = _as_face(A, X), _as_face(A, Y)
    if fx.point == fy.point:
        return fx
    vp, vq = _values(A, fx), _values(A, fy)
    return _as_face(A, _step(vp, [b - a for a, b in zip(vp, vq)]))


def geometric_restrict(A: RationalArrangement, X, Y) -> set[GeometricFace]:
    """Boundary faces F of X lying on a segment from the interior of X to a point of Y.

    F qualifies iff stepping from a point f of F directly away from a point q of Y
    lands in X (then f sits between that landing point and q).
    """
    fx, fy = _as_face(A, X), _as_face(A, Y)
    x, y = fx.covector, fy.covector
    if not x.separation(y):
        raise DomainError(f"{x} and {y} are not separated by any hyperplane")
    if y.support & x.zero_set:
        raise DomainError(f"{y} leaves a hyperplane that {x} lies on")
    vq = _values(A, fy)
    out = set()
    for f in A._faces:
        if f.covector == x or not f.covector <= x:
            continue
        vf = _values(A, f)
        if _step(vf, [a - b for a, b in zip(vf, vq)]) == x:
            out.add(f)
    return out


def abstract_vs_geometric_restrict(A: RationalArrangement, X, Y) -> tuple[set, set]:
    fx, fy = _as_face(A, X), _as_face(A, Y)
    abstract = restrict(fx.covector, fy.covector)
    geometric = {f.covector for f in geometric_restrict(A, fx, fy)}
    return abstract, geometric


# -- constructions ------------------------------------------------------

def cone(A: RationalArrangement) -> RationalArrangement:
    """Suspension: a.x = b becomes a.x - b*t = 0 in one more dimension, plus t = 0 (marked, last)."""
    hs = [Hyperplane(h.normal + (-h.offset,), 0) for h in A.hyperplanes]
    hs.append(Hyperplane((0,) * A.d + (1,), 0))
    return RationalArrangement(A.d + 1, hs)


def product_with_axis(L: RationalArrangement) -> RationalArrangement:
    """Extend every hyperplane along a new last coordinate axis."""
    return RationalArrangement(L.d + 1, [Hyperplane(h.normal + (0,), h.offset) for h in L.hyperplanes])


def bisect(P: RationalArrangement, offset=0) -> RationalArrangement:
    """Append the hyperplane x_d = offset, perpendicular to the last axis."""
    e = (0,) * (P.d - 1) + (1,)
    return RationalArrangement(P.d, list(P.hyperplanes) + [Hyperplane(e, offset)])


def trivial(n: int, d: int) -> RationalArrangement:
    """n parallel hyperplanes x_1 = 0, 1, ..., n-1."""
    return RationalArrangement(d, [Hyperplane((1,) + (0,) * (d - 1), i) for i in range(n)])


def general_position(n: int, d: int) -> RationalArrangement:
    """Moment-curve arrangement: normal (1, t, ..., t^(d-1)), offset t^d, t = 1..n."""
    return RationalArrangement(d, [Hyperplane(tuple(t ** k for k in range(d)), t ** d)
                                   for t in range(1, n + 1)])


def max_chambers(n: int, d: int) -> int:
    return sum(comb(n, i) for i in range(d + 1))


def max_vertices(n: int, d: int) -> int:
    return comb(n, d)


def face_counts(A: RationalArrangement) -> dict[str, int]:
    fs = faces(A)
    return {
        "chambers": sum(1 for f in fs if f.dimension == A.d),
        "bounded_chambers": sum(1 for f in fs if f.dimension == A.d and f.bounded),
        "vertices": sum(1 for f in fs if f.dimension == 0),
        "faces": len(fs),
    }


def line_through(p, q) -> Hyperplane:
    """Rational line through two points in the plane, a.x = b."""
    (x1, y1), (x2, y2) = [tuple(Fraction(v) for v in pt) for pt in (p, q)]
    a, b = y2 - y1, x1 - x2
    return Hyperplane((a, b), a * x1 + b * y1)


def plane_through(p, q, r) -> Hyperplane:
    p, q, r = [tuple(Fraction(v) for v in pt) for pt in (p, q, r)]
    u = [b - a for a, b in zip(p, q)]
    v = [b - a for a, b in zip(p, r)]
    nrm = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
    return Hyperplane(nrm, sum(a * b for a, b in zip(nrm, p)))


def collinearity_determinant(p, q, r) -> Fraction:
    """Zero iff the three plane points are collinear."""
    from .chirotope import determinant
    return determinant([tuple(Fraction(v) for v in pt) + (Fraction(1),) for pt in (p, q, r)])


def coplanarity_determinant(o, p, q, r) -> Fraction:
    """Zero iff the four space points are coplanar."""
    from .chirotope import determinant
    return determinant([tuple(Fraction(v) for v in pt) + (Fraction(1),) for pt in (o, p, q, r)])


def _meet(h: Hyperplane, g: Hyperplane) -> tuple[Fraction, ...]:
    pt = fm.solve([Constraint(h.normal, h.offset, "="), Constraint(g.normal, g.offset, "=")], 2)
    if pt is None:
        raise ValueError("parallel lines")
    return pt


def pappus_points() -> dict[str, tuple[Fraction, ...]]:
    """Points a1, a2, a3 on y = 0 and b1, b2, b3 on y = 2, and the three cross-joins x, y, z."""
    P = {k: tuple(Fraction(v) for v in pt) for k, pt in {
        "a1": (0, 0), "a2": (1, 0), "a3": (3, 0),
        "b1": (1, 2), "b2": (2, 2), "b3": (6, 2)}.items()}
    P["x"] = _meet(line_through(P["a1"], P["b2"]), line_through(P["a2"], P["b1"]))
    P["y"] = _meet(line_through(P["a1"], P["b3"]), line_through(P["a3"], P["b1"]))
    P["z"] = _meet(line_through(P["a2"], P["b3"]), line_through(P["a3"], P["b2"]))
    return P


def pappus() -> RationalArrangement:
    """Nine lines: the two carriers, the six cross lines a_i b_j (i != j), and the Pappus line."""
    P = pappus_points()
    if collinearity_determinant(P["x"], P["y"], P["z"]) != 0:
        raise AssertionError("Pappus points not collinear")
    lines = [line_through(P["a1"], P["a3"]), line_through(P["b1"], P["b3"])]
    for i, j in ((1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)):
        lines.append(line_through(P[f"a{i}"], P[f"b{j}"]))
    lines.append(line_through(P["x"], P["z"]))
    return RationalArrangement(2, lines)


def gp8_points() -> dict[str, tuple[Fraction, ...]]:
    """Tetrahedron O, A, B, C; A', B', C' on the edges OA, OB, OC; P, Q, R as cross-joins."""
    F = Fraction
    pts = {"O": (0, 0, 0), "A": (4, 0, 0), "B": (0, 4, 0), "C": (0, 0, 4)}
    pts = {k: tuple(F(v) for v in p) for k, p in pts.items()}

    def along(p, q, t):
        return tuple(a + t * (b - a) for a, b in zip(p, q))

    pts["A'"] = along(pts["O"], pts["A"], F(1, 2))
    pts["B'"] = along(pts["O"], pts["B"], F(1, 3))
    pts["C'"] = along(pts["O"], pts["C"], F(3, 4))

    def cross(p1, p2, q1, q2):
        # meet of the coplanar lines p1p2 and q1q2: solve p1 + s u = q1 + t v
        u = [b - a for a, b in zip(p1, p2)]
        v = [b - a for a, b in zip(q1, q2)]
        cons = [Constraint((u[k], -v[k]), q1[k] - p1[k], "=") for k in range(3)]
        st = fm.solve(cons, 2)
        if st is None:
            raise ValueError("lines do not meet")
        return tuple(a + st[0] * b for a, b in zip(p1, u))

    pts["P"] = cross(pts["B"], pts["C"], pts["B'"], pts["C'"])
    pts["Q"] = cross(pts["A"], pts["C"], pts["A'"], pts["C'"])
    pts["R"] = cross(pts["A"], pts["B"], pts["A'"], pts["B'"])
    return pts


def goodman_pollack8() -> RationalArrangement:
    """Four tetrahedron facets, the planes A'B'C, AB'C', A'BC', and the plane through O, P, Q, R."""
    p = gp8_points()
    if coplanarity_determinant(p["O"], p["P"], p["Q"], p["R"]) != 0:
        raise AssertionError("O, P, Q, R not coplanar")
    planes = [
        plane_through(p["O"], p["A"], p["B"]), plane_through(p["O"], p["B"], p["C"]),
        plane_through(p["O"], p["C"], p["A"]), plane_through(p["A"], p["B"], p["C"]),
        plane_through(p["A'"], p["B'"], p["C"]), plane_through(p["A"], p["B'"], p["C'"]),
        plane_through(p["A'"], p["B"], p["C'"]), plane_through(p["O"], p["P"], p["Q"]),
    ]
    return RationalArrangement(3, planes)
