"""Discrete partial derivatives and the signed local interaction graph G_F(x)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .core import BooleanNetwork, State, UsageError, coord_mask


@dataclass(frozen=True, init=False)
class SignedDigraph:
    """Signed digraph on vertices 1..n; ``arcs`` holds ``(source, target, sign)``.

    At most one arc per ordered pair, signs in {+1, -1}, self-arcs allowed.
    Adjacency views are built once at construction.
    """

    n: int
    arcs: frozenset[tuple[int, int, int]]
    _sign: dict = field(init=False, repr=False, compare=False, hash=False)
    _succ: tuple = field(init=False, repr=False, compare=False, hash=False)
    _pred: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, n: int, arcs: Iterable[tuple[int, int, int]] = ()):
        if n < 1:
            raise UsageError(f"a graph needs at least one vertex, got n={n}")
        arcs = frozenset((int(j), int(i), int(s)) for j, i, s in arcs)
        sign: dict[tuple[int, int], int] = {}
        succ: list[list[int]] = [[] for _ in range(n + 1)]
        pred: list[list[int]] = [[] for _ in range(n + 1)]
        for j, i, s in sorted(arcs):
            if not (1 <= j <= n and 1 <= i <= n):
                raise UsageError(f"arc {j}->{i} leaves vertex range 1..{n}")
            if s not in (1, -1):
                raise UsageError(f"arc {j}->{i} has sign {s}; signs are +1 or -1")
            if (j, i) in sign:
                raise UsageError(f"parallel arcs {j}->{i}")
            sign[(j, i)] = s
            succ[j].append(i)
            pred[i].append(j)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "_sign", sign)
        object.__setattr__(self, "_succ", tuple(tuple(v) for v in succ))
        object.__setattr__(self, "_pred", tuple(tuple(v) for v in pred))

    def _check(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise UsageError(f"vertex {v} out of range 1..{self.n}")

    def sign(self, j: int, i: int) -> int:
        """Sign of arc j->i, or 0 when absent."""
        return self._sign.get((j, i), 0)

    def successors(self, j: int) -> tuple[int, ...]:
        self._check(j)
        return self._succ[j]

    def predecessors(self, i: int) -> tuple[int, ...]:
        self._check(i)
        return self._pred[i]

    def sorted_arcs(self) -> list[tuple[int, int, int]]:
        return sorted(self.arcs)

    def without_vertex(self, v: int) -> SignedDigraph:
        """Same vertex set, with every arc touching ``v`` removed."""
        self._check(v)
        return SignedDigraph(self.n, ((j, i, s) for j, i, s in self.arcs if j != v and i != v))


def out_degree(G: SignedDigraph, j: int) -> int:
    return len(G.successors(j))


def predecessors(G: SignedDigraph, i: int) -> frozenset[int]:
    return frozenset(G.predecessors(i))


def is_subgraph(H: SignedDigraph, G: SignedDigraph) -> bool:
    """Signed containment: every arc of H is an arc of G with the same sign."""
    return H.n <= G.n and all(G.sign(j, i) == s for j, i, s in H.arcs)


def partial_derivative(F: BooleanNetwork, x: State, i: int, j: int) -> int:
    """f_ij(x) = (f_i(x with x_j flipped) - f_i(x)) / (flipped x_j - x_j)."""
    if x.width != F.n:
        raise UsageError(f"state width {x.width} does not match network dimension {F.n}")
    mi = coord_mask(F.n, i)
    mj = coord_mask(F.n, j)
    fi_x = 1 if F.table[x.index] & mi else 0
    fi_flipped = 1 if F.table[x.index ^ mj] & mi else 0
    denom = -1 if x.index & mj else 1
    return (fi_flipped - fi_x) * denom


def local_graph(F: BooleanNetwork, x: State) -> SignedDigraph:
    if x.width != F.n:
        raise UsageError(f"state width {x.width} does not match network dimension {F.n}")
    n = F.n
    arcs = []
    for j in range(1, n + 1):
        mj = 1 << (n - j)
        hi = F.table[x.index | mj]
        lo = F.table[x.index & ~mj]
        diff = hi ^ lo
        # sign is +1 exactly when f_i is 1 on the x_j = 1 side
        for i in range(1, n + 1):
            mi = 1 << (n - i)
            if diff & mi:
                arcs.append((j, i, 1 if hi & mi else -1))
    return SignedDigraph(n, arcs)


def jacobian_tensor(F: BooleanNetwork) -> np.ndarray:
    """All derivatives at once: ``J[x, i-1, j-1] = f_ij(x)`` as int8."""
    n = F.n
    table = np.asarray(F.table, dtype=np.int64)
    idx = np.arange(1 << n, dtype=np.int64)
    J = np.zeros((1 << n, n, n), dtype=np.int8)
    for j in range(1, n + 1):
        mj = 1 << (n - j)
        hi = table[idx | mj]
        lo = table[idx & ~mj]
        for i in range(1, n + 1):
            shift = n - i
            J[:, i - 1, j - 1] = ((hi >> shift) & 1) - ((lo >> shift) & 1)
    return J


def global_graph(F: BooleanNetwork) -> dict[tuple[int, int], frozenset[int]]:
    """Union of every G_F(x): ordered pair (j, i) -> set of signs seen.

    Display only; a pair may carry both signs.
    """
    seen: dict[tuple[int, int], set[int]] = {}
    for x in F.states():
        for j, i, s in local_graph(F, x).arcs:
            seen.setdefault((j, i), set()).add(s)
    return {k: frozenset(v) for k, v in sorted(seen.items())}
