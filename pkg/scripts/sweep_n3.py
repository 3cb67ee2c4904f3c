#!/usr/bin/env python3
"""Exhaustive n=3 sweep: full census plus the question-1 hunt.

Writes one JSON document holding both reports and prints a short summary.
A checkpoint file makes the census resumable; rerunning with the same
checkpoint skips completed shards.

    python3 scripts/sweep_n3.py --workers 8 --out sweep_n3.json --checkpoint n3.ckpt
"""
from __future__ import annotations

import argparse
import json
import logging
import time
from dataclasses import dataclass

from boolnet.frontend.reports import census_report_to_dict, dumps, hunt_to_dict
from boolnet.search import SearchScope, census, hunt_question1


@dataclass(frozen=True)
class SweepConfig:
    n: int = 3
    workers: int = 1
    prefix_rows: int | None = None
    checkpoint: str | None = None
    out: str = "sweep_n3.json"
    filters: tuple[str, ...] = ("property_p", "opposition", "hypothesis_h")


def run(cfg: SweepConfig) -> dict:
    scope = SearchScope(cfg.n, filters=cfg.filters)
    t0 = time.perf_counter()
    report = census(scope, workers=cfg.workers, prefix_rows=cfg.prefix_rows, checkpoint=cfg.checkpoint)
    t_census = time.perf_counter() - t0
    t0 = time.perf_counter()
    found = hunt_question1(SearchScope(cfg.n))
    t_hunt = time.perf_counter() - t0
    return {
        "census": census_report_to_dict(report),
        "hunt": hunt_to_dict(SearchScope(cfg.n), found),
        "seconds": {"census": round(t_census, 2), "hunt": round(t_hunt, 2)},
        "workers": cfg.workers,
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--shard-prefix", type=int)
    ap.add_argument("--checkpoint")
    ap.add_argument("--out", default="sweep_n3.json")
    a = ap.parse_args()
    logging.basicConfig(level=logging.INFO)
    cfg = SweepConfig(a.n, a.workers, a.shard_prefix, a.checkpoint, a.out)
    doc = run(cfg)
    with open(cfg.out, "w") as fh:
        fh.write(dumps(doc))
    c = doc["census"]
    print(f"n={cfg.n}: {c['total']} networks in {doc['seconds']['census']}s")
    for step in c["filters"]:
        print(f"  filter {step['name']}: {step['count']}")
    for tid, t in c["theorems"].items():
        print(f"  {tid}: hypothesis {t['hypothesis']}, failures {t['failures']}")
    print("question1:", "none" if doc["hunt"]["network"] is None else doc["hunt"]["network"])


if __name__ == "__main__":
    main()
