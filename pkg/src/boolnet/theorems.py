"""Hypothesis/conclusion checkers for the fixed-point theorems and lemmas.

Each checker is total: on any network it reports whether the hypothesis
holds, whether the conclusion holds, and witnesses for both.  Witnesses are
always the smallest-index state, pair or circuit, so reports are
deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .circuits import (
    Circuit,
    circuit_sign,
    common_negative_circuit,
    enumerate_circuits,
    has_negative_circuit,
    has_positive_circuit,
)
from .core import BooleanNetwork, State
from .dynamics import OppositionPair, fixed_points, opposition_pairs, property_P_violation
from .jacobian import local_graph

THEOREM_IDS = ("1", "2", "3", "4", "lemma2", "lemma3")


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    n: int
    hypothesis_holds: bool
    conclusion_holds: bool
    witnesses: dict[str, Any] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return not self.hypothesis_holds or self.conclusion_holds


def _first_negative(F: BooleanNetwork) -> tuple[State, Circuit] | None:
    for x in F.states():
        G = local_graph(F, x)
        if has_negative_circuit(G):
            return x, next(c for c in enumerate_circuits(G) if c.sign < 0)
    return None


def _first_circuit(F: BooleanNetwork, sign: int | None) -> tuple[State, Circuit] | None:
    for x in F.states():
        for c in enumerate_circuits(local_graph(F, x)):
            if sign is None or c.sign == sign:
                return x, c
    return None


def check_theorem1(F: BooleanNetwork) -> TheoremReport:
    """No circuit in any local graph implies a unique fixed point."""
    fps = fixed_points(F)
    w: dict[str, Any] = {"fixed_points": fps}
    hit = _first_circuit(F, None)
    if hit:
        w["state"], w["circuit"] = hit
    return TheoremReport("1", F.n, hit is None, len(fps) == 1, w)


def check_theorem2(F: BooleanNetwork) -> TheoremReport:
    """No positive circuit in any local graph implies at most one fixed point."""
    fps = fixed_points(F)
    w: dict[str, Any] = {"fixed_points": fps}
    hit = _first_circuit(F, +1)
    if hit:
        w["state"], w["circuit"] = hit
    return TheoremReport("2", F.n, hit is None, len(fps) <= 1, w)


def check_theorem3(F: BooleanNetwork) -> TheoremReport:
    """No negative circuit anywhere plus out-degree <= 1 everywhere implies a fixed point."""
    fps = fixed_points(F)
    w: dict[str, Any] = {"fixed_points": fps}
    neg = _first_negative(F)
    if neg:
        w["state"], w["circuit"] = neg
    bad = property_P_violation(F)
    if bad:
        w["outdegree_state"], w["outdegree_vertex"] = bad
    return TheoremReport("3", F.n, neg is None and bad is None, len(fps) >= 1, w)


def check_theorem4(F: BooleanNetwork) -> TheoremReport:
    """No negative circuit anywhere plus a vertex lying on every positive circuit
    of every local graph implies a fixed point.

    When no such vertex exists, ``blocking`` maps each vertex i to the first
    state and positive circuit avoiding i.
    """
    fps = fixed_points(F)
    w: dict[str, Any] = {"fixed_points": fps}
    neg = _first_negative(F)
    if neg:
        w["state"], w["circuit"] = neg
    positives = []
    for x in F.states():
        for c in enumerate_circuits(local_graph(F, x)):
            if c.sign > 0:
                positives.append((x, c))
    vertex = None
    blocking: dict[int, tuple[State, Circuit]] = {}
    for i in range(1, F.n + 1):
        avoid = next(((x, c) for x, c in positives if i not in c.vertices), None)
        if avoid is None:
            vertex = i
            break
        blocking[i] = avoid
    if vertex is not None:
        w["vertex"] = vertex
    else:
        w["blocking"] = blocking
    return TheoremReport("4", F.n, neg is None and vertex is not None, len(fps) >= 1, w)


def _shared_negative(F: BooleanNetwork) -> tuple[State, State, Circuit] | None:
    graphs = [local_graph(F, x) for x in F.states()]
    negative = [has_negative_circuit(G) for G in graphs]
    for a in range(len(graphs)):
        if not negative[a]:
            continue
        for b in range(a + 1, len(graphs)):
            if negative[b]:
                c = common_negative_circuit(graphs[a], graphs[b])
                if c is not None:
                    return State(F.n, a), State(F.n, b), c
    return None


def check_lemma2(F: BooleanNetwork) -> TheoremReport:
    """Out-degree property plus a pair in opposition implies two distinct states
    whose local graphs share a negative circuit."""
    w: dict[str, Any] = {}
    bad = property_P_violation(F)
    if bad:
        w["outdegree_state"], w["outdegree_vertex"] = bad
    pairs = opposition_pairs(F)
    if pairs:
        w["opposition"] = pairs[0]
    shared = _shared_negative(F)
    if shared:
        w["x"], w["y"], w["circuit"] = shared
    return TheoremReport("lemma2", F.n, bad is None and bool(pairs), shared is not None, w)


def check_lemma3(F: BooleanNetwork) -> TheoremReport:
    """Out-degree property and no negative circuit shared by two distinct states
    implies a fixed point."""
    fps = fixed_points(F)
    w: dict[str, Any] = {"fixed_points": fps}
    bad = property_P_violation(F)
    if bad:
        w["outdegree_state"], w["outdegree_vertex"] = bad
    shared = _shared_negative(F)
    if shared:
        w["x"], w["y"], w["circuit"] = shared
    return TheoremReport("lemma3", F.n, bad is None and shared is None, len(fps) >= 1, w)


CHECKERS = {
    "1": check_theorem1,
    "2": check_theorem2,
    "3": check_theorem3,
    "4": check_theorem4,
    "lemma2": check_lemma2,
    "lemma3": check_lemma3,
}


def check(F: BooleanNetwork, theorem: str) -> TheoremReport:
    return CHECKERS[str(theorem)](F)


def mirror(F: BooleanNetwork) -> BooleanNetwork:
    """Complement output coordinate n: F-bar(x) = F(x) with coordinate n flipped."""
    return BooleanNetwork(F.n, tuple(v ^ 1 for v in F.table))


def revalidate(F: BooleanNetwork, report: TheoremReport) -> bool:
    """Re-derive every witness in ``report`` from ``F``; False on any mismatch."""
    w = report.witnesses
    if "fixed_points" in w and w["fixed_points"] != fixed_points(F):
        return False
    if "circuit" in w:
        c: Circuit = w["circuit"]
        states = [w["state"]] if "state" in w else [w["x"], w["y"]]
        if any(circuit_sign(local_graph(F, s), c.vertices) != c.sign for s in states):
            return False
        if "x" in w and (w["x"] == w["y"] or c.sign > 0):
            return False
        if report.theorem in ("3", "4") and c.sign > 0:
            return False
        if report.theorem == "2" and c.sign < 0:
            return False
    if "outdegree_state" in w:
        G = local_graph(F, w["outdegree_state"])
        if len(G.successors(w["outdegree_vertex"])) <= 1:
            return False
    if "opposition" in w:
        p: OppositionPair = w["opposition"]
        if not p.is_valid_for(F):
            return False
    if "vertex" in w:
        i = w["vertex"]
        for x in F.states():
            if has_positive_circuit(local_graph(F, x).without_vertex(i)):
                return False
    for i, (x, c) in w.get("blocking", {}).items():
        if i in c.vertices or c.sign < 0 or circuit_sign(local_graph(F, x), c.vertices) != c.sign:
            return False
    return True
