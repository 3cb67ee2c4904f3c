"""Fixed points, synchronous trajectories, the out-degree property, oppositions,
and the constructive witnesses behind the no-fixed-point argument."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .circuits import Circuit, circuit_sign, iter_circuits
from .core import BooleanNetwork, State, UsageError, coord_mask, hamming
from .jacobian import local_graph, out_degree

PROPERTY_P_METHODS = ("outdegree", "neighbor", "lipschitz")


@dataclass(frozen=True)
class OppositionPair:
    """States x, y with F(x) = x flipped at i, F(y) = y flipped at i, and x_i != y_i."""

    x: State
    y: State
    i: int

    def is_valid_for(self, F: BooleanNetwork) -> bool:
        if self.x.width != F.n or self.y.width != F.n or not 1 <= self.i <= F.n:
            return False
        m = coord_mask(F.n, self.i)
        return (
            F.table[self.x.index] == self.x.index ^ m
            and F.table[self.y.index] == self.y.index ^ m
            and (self.x.index ^ self.y.index) & m != 0
        )


@dataclass(frozen=True)
class Trajectory:
    start: State
    points: tuple[State, ...]


def fixed_points(F: BooleanNetwork) -> list[State]:
    return [State(F.n, k) for k, v in enumerate(F.table) if k == v]


def trajectory(F: BooleanNetwork, x: State, k: int) -> Trajectory:
    """First ``k`` points x^1 = x, x^{m+1} = F(x^m)."""
    if k < 1:
        raise UsageError(f"trajectory length must be >= 1, got {k}")
    if x.width != F.n:
        raise UsageError(f"state width {x.width} does not match network dimension {F.n}")
    idx = x.index
    points = [x]
    for _ in range(k - 1):
        idx = F.table[idx]
        points.append(State(F.n, idx))
    return Trajectory(x, tuple(points))


def has_property_P(F: BooleanNetwork, method: str = "outdegree") -> bool:
    """Every vertex of every G_F(x) has out-degree at most one.

    ``neighbor`` and ``lipschitz`` test the equivalent Hamming formulations:
    neighbours map to points at distance <= 1, and F is 1-Lipschitz.
    """
    n, table = F.n, F.table
    if method == "outdegree":
        for x in F.states():
            G = local_graph(F, x)
            if any(out_degree(G, j) > 1 for j in range(1, n + 1)):
                return False
        return True
    if method == "neighbor":
        for k in range(1 << n):
            for i in range(n):
                if (table[k] ^ table[k ^ (1 << i)]).bit_count() > 1:
                    return False
        return True
    if method == "lipschitz":
        size = 1 << n
        for a in range(size):
            fa = table[a]
            for b in range(a + 1, size):
                if (fa ^ table[b]).bit_count() > (a ^ b).bit_count():
                    return False
        return True
    raise UsageError(f"unknown method {method!r}; choose from {PROPERTY_P_METHODS}")


def property_P_violation(F: BooleanNetwork) -> tuple[State, int] | None:
    """Smallest (state, vertex) whose out-degree exceeds one."""
    for x in F.states():
        G = local_graph(F, x)
        for j in range(1, F.n + 1):
            if out_degree(G, j) > 1:
                return x, j
    return None


def opposition_pairs(F: BooleanNetwork) -> list[OppositionPair]:
    """Unordered opposition pairs sorted by (i, index of x); x has the smaller index."""
    n = F.n
    pairs = []
    for i in range(1, n + 1):
        m = 1 << (n - i)
        low, high = [], []
        for k, v in enumerate(F.table):
            if k ^ v == m:
                (high if k & m else low).append(k)
        for a in low:
            for b in high:
                pairs.append((i, min(a, b), max(a, b)))
    pairs.sort()
    return [OppositionPair(State(n, a), State(n, b), i) for i, a, b in pairs]


def check_hypothesis_H(F: BooleanNetwork) -> bool:
    """Every pair of points in opposition is antipodal."""
    full = (1 << F.n) - 1
    return all(p.x.index ^ p.y.index == full for p in opposition_pairs(F))


class Lemma1Status(Enum):
    NOT_APPLICABLE = "not-applicable"
    HOLDS = "holds"
    VIOLATED = "violated"


@dataclass(frozen=True)
class Lemma1Verdict:
    status: Lemma1Status
    circuit: Circuit | None = None


def check_lemma1(F: BooleanNetwork, x: State) -> Lemma1Verdict:
    """When x and F(x) differ in one coordinate, every length-n circuit of G_F(x) is negative."""
    if hamming(x, F(x)) != 1:
        return Lemma1Verdict(Lemma1Status.NOT_APPLICABLE)
    for c in iter_circuits(local_graph(F, x)):
        if len(c) == F.n and c.sign > 0:
            return Lemma1Verdict(Lemma1Status.VIOLATED, c)
    return Lemma1Verdict(Lemma1Status.HOLDS)


def extract_permutation(F: BooleanNetwork, alpha: State) -> tuple[int, ...] | None:
    """Coordinates flipped along n steps from ``alpha``, if each step flips one new coordinate."""
    n = F.n
    if alpha.width != n:
        raise UsageError(f"state width {alpha.width} does not match network dimension {n}")
    idx = alpha.index
    order: list[int] = []
    for _ in range(n):
        nxt = F.table[idx]
        d = idx ^ nxt
        if d.bit_count() != 1:
            return None
        i = n - d.bit_length() + 1
        if i in order:
            return None
        order.append(i)
        idx = nxt
    return tuple(order)


def claim4_witness(F: BooleanNetwork, alpha: State, beta: State) -> Circuit | None:
    """The Hamiltonian circuit i_1 -> ... -> i_n -> i_1 of G_F(alpha^n).

    ``alpha`` and ``beta`` must be in opposition and F must have the
    out-degree property.  Returns None if the flipped-coordinate sequence
    cannot be extracted or some arc is missing from G_F(alpha^n).
    """
    if alpha.width != F.n or beta.width != F.n:
        raise UsageError("state widths do not match the network")
    if not any(OppositionPair(alpha, beta, i).is_valid_for(F) for i in range(1, F.n + 1)):
        raise UsageError(f"{alpha} and {beta} are not in opposition")
    if not has_property_P(F, "neighbor"):
        raise UsageError("network lacks the out-degree property")
    perm = extract_permutation(F, alpha)
    if perm is None:
        return None
    alpha_n = trajectory(F, alpha, F.n).points[-1]
    sign = circuit_sign(local_graph(F, alpha_n), perm)
    if sign == 0:
        return None
    return Circuit(perm, sign)
