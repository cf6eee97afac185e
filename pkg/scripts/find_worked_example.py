"""Search four-line arrangements whose cone reproduces the five-plane worked example.

The faces X=(+++++), Y=(---++), W=(-+00+) must exist, and the geometric
restriction of X towards Y must be exactly {(0++++), (++0++), (0+0++)} while
the restriction towards W is {(0++++)}.
"""

from __future__ import annotations

import random
import sys

from omarr.arrangement import DomainError, RationalArrangement, cone, face_map, geometric_restrict
from omarr.formats import format_arrangement

WANT_XY = {"0++++", "++0++", "0+0++"}


def ok(A: RationalArrangement) -> bool:
    C = cone(A)
    fm_ = face_map(C)
    names = {str(v) for v in fm_}
    if not {"+++++", "---++", "-+00+", "-+-++", "-++++"} <= names:
        return False
    try:
        xy = {str(f.covector) for f in geometric_restrict(C, "+++++", "---++")}
        xw = {str(f.covector) for f in geometric_restrict(C, "+++++", "-+00+")}
    except DomainError:
        return False
    return xy == WANT_XY and xw == {"0++++"}


def main() -> int:
    rng = random.Random(4)
    for _ in range(200000):
        hs = []
        for _ in range(4):
            a = (rng.randint(-3, 3), rng.randint(-3, 3))
            if a == (0, 0):
                break
            hs.append((a, rng.randint(-3, 3)))
        if len(hs) < 4:
            continue
        try:
            A = RationalArrangement(2, hs)
        except ValueError:
            continue
        if A.rank() == 2 and ok(A):
            print(format_arrangement(A))
            return 0
    return 1


if __name__ == "__main__":
    sys.exit(main())
