"""Vectorized per-network features for exhaustive sweeps of small network spaces.

The signed local graph of an n-node network at any state is one of 3^(n*n)
sign matrices.  For n <= 3 every such matrix is classified once with the
library routines (double cover for negative circuits, enumeration for the
rest), after which a whole block of networks is classified with numpy
gathers: each coordinate function contributes the incoming-arc signs of its
vertex, so a graph code is a sum of per-coordinate codes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .circuits import Circuit, enumerate_circuits, has_negative_circuit, positive_circuits_all_through
from .core import BooleanNetwork, UsageError
from .jacobian import SignedDigraph, out_degree

MAX_TABLE_N = 3

FEATURES = (
    "property_p",
    "no_negative_circuit",
    "no_positive_circuit",
    "acyclic",
    "has_fixed_point",
    "no_fixed_point",
    "unique_fixed_point",
    "at_most_one_fixed_point",
    "opposition",
    "hypothesis_h",
    "shared_negative_circuit",
    "positive_through_vertex",
)


@dataclass(frozen=True)
class GraphClassTable:
    n: int
    negative: np.ndarray  # bool, double cover
    positive: np.ndarray  # bool, some positive circuit
    cyclic: np.ndarray  # bool, some circuit
    outdeg_ok: np.ndarray  # bool, every out-degree <= 1
    negmask: np.ndarray  # uint16, bit c set iff catalog[c] is a negative circuit
    through: np.ndarray  # uint8, bit i-1 set iff every positive circuit contains i
    catalog: tuple[tuple[int, ...], ...]


def graph_from_code(n: int, code: int) -> SignedDigraph:
    """Digit (i-1)*n + (j-1) in base 3 holds sign(j -> i) + 1."""
    arcs = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            s = code % 3 - 1
            code //= 3
            if s:
                arcs.append((j, i, s))
    return SignedDigraph(n, arcs)


@lru_cache(maxsize=None)
def graph_class_table(n: int) -> GraphClassTable:
    if not 1 <= n <= MAX_TABLE_N:
        raise UsageError(f"graph class tables exist for n <= {MAX_TABLE_N}, got {n}")
    complete = SignedDigraph(n, [(j, i, 1) for i in range(1, n + 1) for j in range(1, n + 1)])
    catalog = tuple(c.vertices for c in enumerate_circuits(complete))
    slot = {v: k for k, v in enumerate(catalog)}
    size = 3 ** (n * n)
    negative = np.zeros(size, dtype=bool)
    positive = np.zeros(size, dtype=bool)
    cyclic = np.zeros(size, dtype=bool)
    outdeg_ok = np.zeros(size, dtype=bool)
    negmask = np.zeros(size, dtype=np.uint16)
    through = np.zeros(size, dtype=np.uint8)
    for code in range(size):
        G = graph_from_code(n, code)
        circuits: list[Circuit] = enumerate_circuits(G)
        negative[code] = has_negative_circuit(G)
        positive[code] = any(c.sign > 0 for c in circuits)
        cyclic[code] = bool(circuits)
        outdeg_ok[code] = all(out_degree(G, j) <= 1 for j in range(1, n + 1))
        negmask[code] = sum(1 << slot[c.vertices] for c in circuits if c.sign < 0)
        through[code] = sum(1 << (i - 1) for i in range(1, n + 1) if positive_circuits_all_through(G, i))
    return GraphClassTable(n, negative, positive, cyclic, outdeg_ok, negmask, through, catalog)


@lru_cache(maxsize=None)
def in_code_table(n: int) -> np.ndarray:
    """``T[g, x]``: incoming-sign code of a vertex whose update function has truth table g.

    Bit x of g is the function's value at state x; the code is
    sum_j (f_ij(x) + 1) * 3^(j-1).
    """
    states = 1 << n
    g = np.arange(1 << states, dtype=np.int64)[:, None]
    x = np.arange(states, dtype=np.int64)[None, :]
    code = np.zeros((1 << states, states), dtype=np.int64)
    for j in range(1, n + 1):
        mj = 1 << (n - j)
        hi = (g >> (x | mj)) & 1
        lo = (g >> (x & ~mj)) & 1
        code += (hi - lo + 1) * 3 ** (j - 1)
    return code


def network_count(n: int) -> int:
    return 1 << (n << n)


def network_index(F: BooleanNetwork) -> int:
    """Concatenate output rows, row of state 0 most significant."""
    idx = 0
    for v in F.table:
        idx = (idx << F.n) | v
    return idx


def network_from_index(n: int, index: int) -> BooleanNetwork:
    rows = 1 << n
    mask = rows - 1
    return BooleanNetwork(n, tuple((index >> (n * (rows - 1 - x))) & mask for x in range(rows)))


def rows_from_indices(n: int, indices: np.ndarray) -> np.ndarray:
    rows = 1 << n
    shifts = n * (rows - 1 - np.arange(rows, dtype=np.int64))
    return (np.asarray(indices, dtype=np.int64)[:, None] >> shifts[None, :]) & (rows - 1)


def indices_from_rows(n: int, R: np.ndarray) -> np.ndarray:
    rows = 1 << n
    shifts = n * (rows - 1 - np.arange(rows, dtype=np.int64))
    return (np.asarray(R, dtype=np.int64) << shifts[None, :]).sum(axis=1)


def fixed_point_counts(n: int, R: np.ndarray) -> np.ndarray:
    return (R == np.arange(1 << n)[None, :]).sum(axis=1)


def graph_codes(n: int, R: np.ndarray) -> np.ndarray:
    """Local-graph code at every state, shape (networks, 2^n)."""
    states = np.arange(1 << n, dtype=np.int64)
    T = in_code_table(n)
    codes = np.zeros(R.shape, dtype=np.int64)
    for i in range(1, n + 1):
        bits = (R >> (n - i)) & 1
        g = (bits << states[None, :]).sum(axis=1)
        codes += T[g] * 3 ** (n * (i - 1))
    return codes


def features_from_rows(n: int, R: np.ndarray) -> dict[str, np.ndarray]:
    """Every entry of FEATURES as a bool vector over the networks in ``R``."""
    table = graph_class_table(n)
    states = np.arange(1 << n, dtype=np.int64)
    nfp = fixed_point_counts(n, R)
    codes = graph_codes(n, R)

    negmask = table.negmask[codes]
    shared = np.zeros(len(R), dtype=bool)
    for c in range(len(table.catalog)):
        shared |= ((negmask >> c) & 1).sum(axis=1) >= 2

    full = (1 << n) - 1
    d = R ^ states[None, :]
    opposition = np.zeros(len(R), dtype=bool)
    antipodal = np.ones(len(R), dtype=bool)
    for i in range(1, n + 1):
        m = 1 << (n - i)
        flips = d == m
        low = flips & ((states & m) == 0)[None, :]
        high = flips & ((states & m) != 0)[None, :]
        c0 = low.sum(axis=1)
        c1 = high.sum(axis=1)
        opp = (c0 > 0) & (c1 > 0)
        paired = (low & high[:, states ^ full]).sum(axis=1)
        opposition |= opp
        antipodal &= ~opp | ((c0 == 1) & (c1 == 1) & (paired == 1))

    return {
        "property_p": table.outdeg_ok[codes].all(axis=1),
        "no_negative_circuit": ~table.negative[codes].any(axis=1),
        "no_positive_circuit": ~table.positive[codes].any(axis=1),
        "acyclic": ~table.cyclic[codes].any(axis=1),
        "has_fixed_point": nfp >= 1,
        "no_fixed_point": nfp == 0,
        "unique_fixed_point": nfp == 1,
        "at_most_one_fixed_point": nfp <= 1,
        "opposition": opposition,
        "hypothesis_h": antipodal,
        "shared_negative_circuit": shared,
        "positive_through_vertex": np.bitwise_and.reduce(table.through[codes], axis=1) != 0,
    }


def question1_mask(n: int, R: np.ndarray) -> np.ndarray:
    """No negative circuit anywhere and no fixed point; fixed points are scanned first."""
    hits = fixed_point_counts(n, R) == 0
    cand = np.flatnonzero(hits)
    if len(cand):
        neg = graph_class_table(n).negative[graph_codes(n, R[cand])].any(axis=1)
        hits[cand[neg]] = False
    return hits
