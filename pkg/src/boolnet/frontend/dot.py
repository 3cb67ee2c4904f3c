"""Graphviz DOT rendering of signed digraphs."""
from __future__ import annotations

from ..jacobian import SignedDigraph

_STYLE = {
    1: 'label="+", color="darkgreen", arrowhead="normal", style="solid"',
    -1: 'label="-", color="red", arrowhead="tee", style="dashed"',
}


def export_dot(G: SignedDigraph, name: str = "G") -> str:
    """Byte-deterministic: vertices ascending, arcs sorted by (source, target)."""
    lines = [f"digraph {name} {{"]
    lines.extend(f'  {v} [label="{v}"];' for v in range(1, G.n + 1))
    lines.extend(f"  {j} -> {i} [{_STYLE[s]}];" for j, i, s in G.sorted_arcs())
    lines.append("}")
    return "\n".join(lines) + "\n"
