"""Search small-integer arrangements until every affine class of given size and rank is realized.

Writes one arrangement file per class into the output directory, named by the
class position in sorted key order. Deterministic for a given seed.

    python scripts/find_realizations.py --n 5 --r 3 --out src/omarr/data/classes
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from pathlib import Path

from omarr.arrangement import Hyperplane, RationalArrangement
from omarr.enumeration import affine_classes
from omarr.formats import write_arrangement
from omarr.isomorphism import affine_class_key, chirotope_canonical

log = logging.getLogger("find_realizations")


def random_arrangement(rng: random.Random, n: int, d: int, bound: int):
    hs: list[Hyperplane] = []
    central = rng.random() < 0.1
    tries = 0
    while len(hs) < n:
        tries += 1
        if tries > 200:
            return None
        normal = tuple(rng.randint(-bound, bound) for _ in range(d))
        if not any(normal):
            continue
        offset = 0 if central or rng.random() < 0.3 else rng.randint(-bound, bound)
        h = Hyperplane(normal, offset)
        if any(h.same_locus(g) for g in hs):
            continue
        hs.append(h)
    A = RationalArrangement(d, hs)
    return A if A.rank() == d else None


def search(n: int, r: int, seed: int = 0, max_samples: int = 2_000_000) -> dict[str, RationalArrangement]:
    wanted = {chirotope_canonical(a.chirotope, marked=a.marked)[0] for a in affine_classes(n, r)}
    found: dict[str, RationalArrangement] = {}
    rng = random.Random(seed)
    for i in range(max_samples):
        bound = 1 + min(i // 20000, 3)
        A = random_arrangement(rng, n, r, bound)
        if A is None:
            continue
        key = affine_class_key(A)
        if key not in wanted:
            raise AssertionError(f"arrangement outside the enumerated classes: {key}")
        if key not in found:
            found[key] = A
            log.info("%d/%d classes after %d samples", len(found), len(wanted), i + 1)
            if len(found) == len(wanted):
                break
    missing = len(wanted) - len(found)
    if missing:
        log.warning("%d classes not realized", missing)
    return found


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--r", type=int, required=True)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, required=True)
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    found = search(args.n, args.r, args.seed)
    target = args.out / f"r{args.r}n{args.n}"
    target.mkdir(parents=True, exist_ok=True)
    for k, key in enumerate(sorted(found), 1):
        write_arrangement(found[key], target / f"{k:02d}.arr")
    total = len({chirotope_canonical(a.chirotope, marked=a.marked)[0] for a in affine_classes(args.n, args.r)})
    return 0 if len(found) == total else 1


if __name__ == "__main__":
    sys.exit(main())
