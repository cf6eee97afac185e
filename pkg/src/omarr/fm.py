"""Exact Fourier-Motzkin elimination over the rationals with strict and weak inequalities.

Constraints read ``coeffs . x  (op)  rhs`` with op one of ``'='``, ``'>'``, ``'>='``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Vec = tuple[Fraction, ...]


@dataclass(frozen=True)
class Constraint:
    coeffs: Vec
    rhs: Fraction
    op: str  # '=', '>', '>='

    @classmethod
    def make(cls, coeffs: Sequence, rhs, op: str) -> "Constraint":
        if op not in ("=", ">", ">="):
            raise ValueError(f"bad operator {op!r}")
        return cls(tuple(Fraction(c) for c in coeffs), Fraction(rhs), op)


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def _solve_equalities(eqs: list[Constraint], d: int):
    """Reduced row echelon form of the equalities.

    Returns None if inconsistent, else (pivots, rows) where each row expresses
    pivot variable = rhs - sum(coeff_j x_j) over free variables j.
    """
    a = [list(e.coeffs) + [e.rhs] for e in eqs]
    pivots: list[int] = []
    r = 0
    for c in range(d):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    for row in a[r:]:
        if row[d] != 0:
            return None
    return pivots, a[:r]


def _normalize(coeffs: list[Fraction], rhs: Fraction):
    for c in coeffs:
        if c:
            s = abs(c)
            return tuple(x / s for x in coeffs), rhs / s
    return tuple(coeffs), rhs


def _prune(ineqs):
    """Drop trivial rows and keep the tightest row per direction. None if a trivial row fails."""
    best: dict[tuple, tuple[Fraction, bool]] = {}
    for coeffs, rhs, strict in ineqs:
        if not any(coeffs):
            if (strict and not 0 > rhs) or (not strict and not 0 >= rhs):
                return None
            continue
        key, rhs = _normalize(list(coeffs), rhs)
        old = best.get(key)
        if old is None or rhs > old[0] or (rhs == old[0] and strict and not old[1]):
            best[key] = (rhs, strict)
    return [(k, v[0], v[1]) for k, v in best.items()]


def _interval_value(lo, lo_strict, hi, hi_strict) -> Optional[Fraction]:
    if lo is not None and hi is not None:
        if lo > hi or (lo == hi and (lo_strict or hi_strict)):
            return None
        return (lo + hi) / 2
    if lo is not None:
        return lo + 1
    if hi is not None:
        return hi - 1
    return Fraction(0)


def _bounds(ineqs, k: int, x: list[Fraction]):
    """Bounds on variable k given values of variables < k (all higher coeffs are zero)."""
    lo = hi = None
    lo_s = hi_s = False
    for coeffs, rhs, strict in ineqs:
        a = coeffs[k]
        rest = rhs - sum(coeffs[j] * x[j] for j in range(k))
        if a > 0:
            v = rest / a
            if lo is None or v > lo or (v == lo and strict):
                lo, lo_s = v, strict
        elif a < 0:
            v = rest / a
            if hi is None or v < hi or (v == hi and strict):
                hi, hi_s = v, strict
        else:
            if (strict and not 0 > rest) or (not strict and not 0 >= rest):
                return None
    return lo, lo_s, hi, hi_s


def solve(constraints: Sequence[Constraint], d: int) -> Optional[tuple[Fraction, ...]]:
    """A feasible point, or None.

    Equalities are substituted away first; the remaining free variables are
    eliminated last-to-first and a point is recovered by back-substitution,
    taking interval midpoints (or bound +/- 1 for half-lines, 0 for lines).
    """
    eqs = [c for c in constraints if c.op == "="]
    solved = _solve_equalities(eqs, d)
    if solved is None:
        return None
    pivots, rows = solved
    free = [j for j in range(d) if j not in pivots]
    # x_p = row[d] - sum_{f in free} row[f] x_f
    ineqs = []
    for c in constraints:
        if c.op == "=":
            continue
        coeffs = [Fraction(0)] * len(free)
        rhs = c.rhs
        for j in range(d):
            a = c.coeffs[j]
            if not a:
                continue
            if j in pivots:
                row = rows[pivots.index(j)]
                rhs -= a * row[d]
                for t, f in enumerate(free):
                    coeffs[t] -= a * row[f]
            else:
                coeffs[free.index(j)] += a
        ineqs.append((tuple(coeffs), rhs, c.op == ">"))

    k = len(free)
    stages = []
    cur = _prune(ineqs)
    if cur is None:
        return None
    for var in range(k - 1, -1, -1):
        stages.append(cur)
        lower, upper, rest = [], [], []
        for row in cur:
            a = row[0][var]
            (lower if a > 0 else upper if a < 0 else rest).append(row)
        new = list(rest)
        for lc, lr, ls in lower:
            for uc, ur, us in upper:
                a, b = lc[var], -uc[var]
                coeffs = tuple(b * p + a * q for p, q in zip(lc, uc))
                new.append((coeffs, b * lr + a * ur, ls or us))
        cur = _prune(new)
        if cur is None:
            return None

    y = [Fraction(0)] * k
    for var, system in zip(range(k), reversed(stages)):
        b = _bounds(system, var, y)
        if b is None:
            return None
        v = _interval_value(*b)
        if v is None:
            return None
        y[var] = v

    x = [Fraction(0)] * d
    for t, f in enumerate(free):
        x[f] = y[t]
    for p, row in zip(pivots, rows):
        x[p] = row[d] - sum(row[f] * x[f] for f in free)
    return tuple(x)


def feasible(constraints: Sequence[Constraint], d: int) -> bool:
    return solve(constraints, d) is not None


def satisfies(point: Sequence[Fraction], c: Constraint) -> bool:
    v = sum(a * x for a, x in zip(c.coeffs, point))
    if c.op == "=":
        return v == c.rhs
    if c.op == ">":
        return v > c.rhs
    return v >= c.rhs


def cone_is_pointed_zero(constraints: Sequence[Constraint], d: int) -> bool:
    """True if the homogeneous system (rhs all zero, weak/equality rows) admits only v = 0.

    Decided by checking, for each coordinate j and sign s, infeasibility of the
    system with the extra row s * v_j >= 1.
    """
    for j in range(d):
        for s in (1, -1):
            e = [Fraction(0)] * d
            e[j] = Fraction(s)
            if feasible(list(constraints) + [Constraint(tuple(e), Fraction(1), ">=")], d):
                return False
    return True
