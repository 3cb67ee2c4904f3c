"""Versioned JSON documents for theorem checks, censuses and hunts.

Field names are fixed by ``report.schema.json`` in this directory.
"""
from __future__ import annotations

import json
from dataclasses import asdict
from functools import lru_cache
from importlib import resources
from typing import Any

from ..circuits import Circuit
from ..core import BooleanNetwork, State
from ..dynamics import OppositionPair
from ..search import CensusReport, SearchScope
from ..theorems import TheoremReport

SCHEMA_ID = "boolnet.report"
SCHEMA_VERSION = 1


def _network(F: BooleanNetwork) -> list[str]:
    return [format(v, f"0{F.n}b") for v in F.table]


def _witness(value: Any) -> Any:
    if isinstance(value, State):
        return str(value)
    if isinstance(value, Circuit):
        return {"vertices": list(value.vertices), "sign": value.sign}
    if isinstance(value, OppositionPair):
        return {"x": str(value.x), "y": str(value.y), "i": value.i}
    if isinstance(value, (list, tuple)):
        return [_witness(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _witness(v) for k, v in value.items()}
    return value


def _blocking(value: dict) -> dict:
    return {str(i): {"state": str(x), "circuit": _witness(c)} for i, (x, c) in value.items()}


def _header(kind: str) -> dict:
    return {"schema": SCHEMA_ID, "version": SCHEMA_VERSION, "kind": kind}


def theorem_report_to_dict(report: TheoremReport) -> dict:
    witnesses = {}
    for k, v in report.witnesses.items():
        witnesses[k] = _blocking(v) if k == "blocking" else _witness(v)
    return {
        **_header("theorem"),
        "theorem": report.theorem,
        "n": report.n,
        "hypothesis_holds": report.hypothesis_holds,
        "conclusion_holds": report.conclusion_holds,
        "consistent": report.consistent,
        "witnesses": witnesses,
    }


def _scope(scope: SearchScope) -> dict:
    d = asdict(scope)
    d["filters"] = list(scope.filters)
    return d


def census_report_to_dict(report: CensusReport) -> dict:
    return {
        **_header("census"),
        "scope": _scope(report.scope),
        "total": report.total,
        "filters": [{"name": k, "count": c} for k, c in report.filter_counts],
        "counts": dict(report.counts),
        "theorems": {k: dict(v) for k, v in report.theorems.items()},
        "failures": report.failures,
        "counterexamples": [_network(F) for F in report.counterexamples],
        "inconsistent": [{"theorem": t, "network": _network(F)} for t, F in report.inconsistent],
    }


def hunt_to_dict(scope: SearchScope, found: BooleanNetwork | None) -> dict:
    return {
        **_header("hunt"),
        "scope": _scope(scope),
        "found": found is not None,
        "network": _network(found) if found is not None else None,
    }


@lru_cache(maxsize=None)
def report_schema() -> dict:
    text = resources.files(__package__).joinpath("report.schema.json").read_text()
    return json.loads(text)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
