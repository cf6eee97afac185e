"""Display exports: SVG for line arrangements, Wavefront OBJ for plane arrangements.

Coordinates are computed exactly and rounded to floats only when written.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .arrangement import RationalArrangement, faces
from .fm import Constraint, rank, solve


def _box(A: RationalArrangement, margin=Fraction(2)) -> list[tuple[Fraction, Fraction]]:
    pts = [f.point for f in faces(A) if f.dimension == 0]
    out = []
    for k in range(A.d):
        vals = [p[k] for p in pts] or [Fraction(0)]
        lo, hi = min(vals), max(vals)
        out.append((lo - margin, hi + margin))
    return out


def _clip(A: RationalArrangement, i: int, box) -> list[tuple[Fraction, ...]]:
    """Vertices of hyperplane i inside the box (corners of the clipped polygon or segment)."""
    h = A.hyperplanes[i]
    d = A.d
    walls = []
    for k, (lo, hi) in enumerate(box):
        e = tuple(Fraction(int(j == k)) for j in range(d))
        walls.append((e, lo))
        walls.append((e, hi))
    pts = []
    for combo in combinations(walls, d - 1):
        cons = [Constraint(h.normal, h.offset, "=")] + [Constraint(e, v, "=") for e, v in combo]
        if rank([c.coeffs for c in cons]) < d:
            continue
        p = solve(cons, d)
        if p is None:
            continue
        if all(lo <= p[k] <= hi for k, (lo, hi) in enumerate(box)) and p not in pts:
            pts.append(p)
    return pts


def _order_polygon(pts, normal):
    """Sort coplanar points around their centroid."""
    import math
    c = [sum(p[k] for p in pts) / len(pts) for k in range(3)]
    n = [float(x) for x in normal]
    # a basis of the plane
    a = [1.0, 0.0, 0.0] if abs(n[0]) < 0.9 * math.sqrt(sum(x * x for x in n)) else [0.0, 1.0, 0.0]
    u = [a[1] * n[2] - a[2] * n[1], a[2] * n[0] - a[0] * n[2], a[0] * n[1] - a[1] * n[0]]
    v = [n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]]

    def angle(p):
        w = [float(p[k] - c[k]) for k in range(3)]
        return math.atan2(sum(x * y for x, y in zip(w, v)), sum(x * y for x, y in zip(w, u)))

    return sorted(pts, key=angle)


def to_svg(A: RationalArrangement, size: int = 400) -> str:
    if A.d != 2:
        raise ValueError("SVG export needs a line arrangement (d=2)")
    box = _box(A)
    (x0, x1), (y0, y1) = box
    scale = size / float(max(x1 - x0, y1 - y0))

    def sx(x):
        return round(float(x - x0) * scale, 3)

    def sy(y):
        return round(float(y1 - y) * scale, 3)

    w, h = sx(x1), sy(y0)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
           f'<rect width="{w}" height="{h}" fill="white"/>']
    for i, hp in enumerate(A.hyperplanes):
        seg = _clip(A, i, box)
        if len(seg) < 2:
            continue
        p, q = seg[0], seg[-1]
        out.append(f'<line x1="{sx(p[0])}" y1="{sy(p[1])}" x2="{sx(q[0])}" y2="{sy(q[1])}" '
                   f'stroke="black" stroke-width="1.5"/>')
        # label near p, nudged to the plus side
        nx, ny = (float(c) for c in hp.normal)
        norm = (nx * nx + ny * ny) ** 0.5
        lx, ly = sx(p[0]) + 12 * nx / norm, sy(p[1]) - 12 * ny / norm
        lx = min(max(lx, 8), w - 8)
        ly = min(max(ly, 12), h - 4)
        out.append(f'<text x="{round(lx, 3)}" y="{round(ly, 3)}" font-size="12" fill="blue">{i + 1}+</text>')
    for f in faces(A):
        if f.dimension == 0:
            out.append(f'<circle cx="{sx(f.point[0])}" cy="{sy(f.point[1])}" r="2.5" fill="red"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_obj(A: RationalArrangement) -> str:
    """One polygon per plane, clipped to a box around all vertices of the arrangement."""
    if A.d != 3:
        raise ValueError("scene export needs a plane arrangement (d=3)")
    box = _box(A)
    lines = [f"# {A.n} planes clipped to the box " +
             " x ".join(f"[{float(lo)}, {float(hi)}]" for lo, hi in box)]
    count = 0
    for i, h in enumerate(A.hyperplanes):
        poly = _order_polygon(_clip(A, i, box), h.normal)
        if len(poly) < 3:
            continue
        lines.append(f"o plane{i + 1}")
        for p in poly:
            lines.append("v " + " ".join(f"{float(c):.6g}" for c in p))
        lines.append("f " + " ".join(str(count + k + 1) for k in range(len(poly))))
        count += len(poly)
    return "\n".join(lines) + "\n"
