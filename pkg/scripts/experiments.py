"""Reproducible experiments with dataclass configs; results go to JSON.

    python3 scripts/experiments.py census --n-max 5 --workers 1
    python3 scripts/experiments.py enumeration --m-max 7 --rank 3
    python3 scripts/experiments.py canon-timing --max-faces 400

Every config field is also a command-line flag (underscores become dashes).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import platform
import time
from dataclasses import dataclass, field
from pathlib import Path

from omarr import catalog
from omarr.arrangement import cone, covectors, faces
from omarr.enumeration import CENSUS_COUNTS, census_diff, census_table, format_census, om_classes
from omarr.isomorphism import canonicalize_affine

log = logging.getLogger("experiments")


@dataclass
class CensusConfig:
    """Affine class counts against the published table."""
    n_max: int = 5
    workers: int = 1
    simple: bool = True
    allow_large: bool = False
    out: str = "results/census.json"


@dataclass
class EnumerationConfig:
    """Class counts of simple oriented matroids of one rank, growing the ground set."""
    rank: int = 3
    m_max: int = 6
    workers: int = 1
    out: str = "results/enumeration.json"


@dataclass
class CanonTimingConfig:
    """Time of canonicalizing each catalog entry's cone, marked at the added element."""
    max_faces: int = 400
    repeats: int = 1
    out: str = "results/canon_timing.json"


def run_census(cfg: CensusConfig) -> dict:
    t0 = time.perf_counter()
    rows = census_table(cfg.n_max, simple=cfg.simple, workers=cfg.workers, allow_large=cfg.allow_large)
    secs = time.perf_counter() - t0
    print("\n".join(format_census(rows)))
    problems = census_diff(rows)
    return {"rows": [dataclasses.asdict(r) for r in rows], "mismatches": problems, "seconds": round(secs, 2),
            "published": {r: {n: c for n, c in row.items() if n <= cfg.n_max} for r, row in CENSUS_COUNTS.items()}}


def run_enumeration(cfg: EnumerationConfig) -> dict:
    counts = {}
    for m in range(cfg.rank, cfg.m_max + 1):
        t0 = time.perf_counter()
        counts[m] = {"classes": len(om_classes(m, cfg.rank, workers=cfg.workers)),
                     "seconds": round(time.perf_counter() - t0, 2)}
        print(f"m={m} r={cfg.rank}: {counts[m]['classes']} classes ({counts[m]['seconds']}s)")
    return {"counts": counts}


def run_canon_timing(cfg: CanonTimingConfig) -> dict:
    rows = []
    for e in catalog.entries():
        A = e.arrangement
        if len(faces(A)) > cfg.max_faces:
            continue
        V = covectors(cone(A))
        best = None
        for _ in range(cfg.repeats):
            t0 = time.perf_counter()
            canonicalize_affine((V, A.n))
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        rows.append({"entry": e.name, "n": A.n + 1, "covectors": len(V), "seconds": round(best, 4)})
        print(f"{e.name:36s} {len(V):5d} covectors {best:8.4f}s")
    return {"entries": rows}


EXPERIMENTS = {
    "census": (CensusConfig, run_census),
    "enumeration": (EnumerationConfig, run_enumeration),
    "canon-timing": (CanonTimingConfig, run_canon_timing),
}


def _add_flags(p: argparse.ArgumentParser, cls) -> None:
    for f in dataclasses.fields(cls):
        flag = "--" + f.name.replace("_", "-")
        if f.type in ("bool", bool):
            p.add_argument(flag, action=argparse.BooleanOptionalAction, default=f.default)
        else:
            p.add_argument(flag, type=type(f.default), default=f.default)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="experiment", required=True)
    for name, (cls, _) in EXPERIMENTS.items():
        _add_flags(sub.add_parser(name, help=cls.__doc__), cls)
    args = vars(ap.parse_args(argv))
    cls, fn = EXPERIMENTS[args.pop("experiment")]
    cfg = cls(**args)
    logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s")
    result = {"config": dataclasses.asdict(cfg), "python": platform.python_version(), **fn(cfg)}
    out = Path(cfg.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(result, indent=2) + "\n")
    log.info("wrote %s", out)
    return 1 if result.get("mismatches") else 0


if __name__ == "__main__":
    raise SystemExit(main())
