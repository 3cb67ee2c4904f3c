"""Signed circuits: enumeration, double-cover negative-circuit test, positive-circuit queries."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import UsageError
from .jacobian import SignedDigraph

DEFAULT_MAX_VERTICES = 20


class EnumerationTooLarge(UsageError):
    pass


@dataclass(frozen=True)
class Circuit:
    """Simple directed cycle, stored from its smallest vertex.

    ``sign`` is relative to the graph the circuit was taken from.
    """

    vertices: tuple[int, ...]
    sign: int

    def __post_init__(self) -> None:
        v = tuple(int(k) for k in self.vertices)
        if not v or len(set(v)) != len(v):
            raise UsageError(f"circuit needs distinct vertices, got {v}")
        if self.sign not in (1, -1):
            raise UsageError(f"circuit sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "vertices", canonical_rotation(v))

    def __len__(self) -> int:
        return len(self.vertices)

    def arcs(self) -> list[tuple[int, int]]:
        v = self.vertices
        return [(v[k], v[(k + 1) % len(v)]) for k in range(len(v))]

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.vertices), self.vertices)

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.vertices)) + ") " + ("+" if self.sign > 0 else "-")


def canonical_rotation(vertices: Sequence[int]) -> tuple[int, ...]:
    k = vertices.index(min(vertices))
    return tuple(vertices[k:]) + tuple(vertices[:k])


def circuit_sign(G: SignedDigraph, vertices: Sequence[int]) -> int:
    """Product of arc signs along ``vertices`` (closed), or 0 if an arc is missing."""
    sign = 1
    p = len(vertices)
    for k in range(p):
        s = G.sign(vertices[k], vertices[(k + 1) % p])
        if s == 0:
            return 0
        sign *= s
    return sign


def _check_cap(G: SignedDigraph, max_vertices: int) -> None:
    if G.n > max_vertices:
        raise EnumerationTooLarge(
            f"enumeration too large: {G.n} vertices exceeds the cap of {max_vertices}"
        )


def iter_circuits(G: SignedDigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Iterator[Circuit]:
    """Johnson's algorithm; every simple cycle once, in discovery order.

    Start vertices are taken in increasing order and the search from ``s``
    stays inside vertices >= s, so each cycle is emitted from its smallest
    vertex.
    """
    _check_cap(G, max_vertices)
    succ = [G.successors(v) if v else () for v in range(G.n + 1)]
    for s in range(1, G.n + 1):
        yield from _circuits_from(G, s, succ)


def _circuits_from(G: SignedDigraph, s: int, succ) -> Iterator[Circuit]:
    blocked: set[int] = set()
    B: dict[int, set[int]] = {}
    path: list[int] = []

    def unblock(u: int) -> None:
        stack = [u]
        while stack:
            w = stack.pop()
            if w in blocked:
                blocked.discard(w)
                stack.extend(B.pop(w, ()))

    def circuit(v: int):
        found = False
        path.append(v)
        blocked.add(v)
        for w in succ[v]:
            if w < s:
                continue
            if w == s:
                yield Circuit(tuple(path), circuit_sign(G, path))
                found = True
            elif w not in blocked:
                if (yield from circuit(w)):
                    found = True
        if found:
            unblock(v)
        else:
            for w in succ[v]:
                if w >= s:
                    B.setdefault(w, set()).add(v)
        path.pop()
        return found

    yield from circuit(s)


def enumerate_circuits(G: SignedDigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[Circuit]:
    """All simple cycles sorted by (length, vertex sequence)."""
    return sorted(iter_circuits(G, max_vertices), key=Circuit.sort_key)


def has_negative_circuit(G: SignedDigraph) -> bool:
    """Negative-circuit existence via reachability in the signed double cover.

    Lifted vertex ``(v, p)`` is bit ``2*(v-1) + p``; an arc j->i of sign s
    lifts to ``(j, p) -> (i, p xor [s < 0])``.  A negative closed walk through
    v exists iff ``(v, 0)`` reaches ``(v, 1)``, and a negative closed walk
    decomposes into simple cycles at least one of which is negative.
    """
    n = G.n
    lifted = [0] * (2 * n)
    for j, i, s in G.arcs:
        flip = 1 if s < 0 else 0
        for p in (0, 1):
            lifted[2 * (j - 1) + p] |= 1 << (2 * (i - 1) + (p ^ flip))
    for v in range(n):
        start = 2 * v
        target = 1 << (start + 1)
        seen = 1 << start
        frontier = seen
        while frontier:
            step = 0
            f = frontier
            while f:
                low = f & -f
                step |= lifted[low.bit_length() - 1]
                f ^= low
            if step & target:
                return True
            frontier = step & ~seen
            seen |= step
    return False


def first_negative_circuit(G: SignedDigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Circuit | None:
    """Enumeration route: the first negative cycle met, or None."""
    for c in iter_circuits(G, max_vertices):
        if c.sign < 0:
            return c
    return None


def has_positive_circuit(G: SignedDigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    # closed walks cannot decide this: a negative cycle walked twice is positive
    return any(c.sign > 0 for c in iter_circuits(G, max_vertices))


def positive_circuits_all_through(G: SignedDigraph, i: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    _check_cap(G, max_vertices)
    return not has_positive_circuit(G.without_vertex(i), max_vertices)


def common_negative_circuit(
    G1: SignedDigraph, G2: SignedDigraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Circuit | None:
    """Smallest vertex cycle present in both graphs and negative in each."""
    if G1.n != G2.n:
        raise UsageError(f"graphs differ in order: {G1.n} vs {G2.n}")
    _check_cap(G2, max_vertices)
    for c in enumerate_circuits(G1, max_vertices):
        if c.sign < 0 and circuit_sign(G2, c.vertices) < 0:
            return c
    return None
