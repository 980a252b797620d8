"""Outcome lattices: feasible short forms ordered by Left-favorability.

Nodes are the feasible (a, b) threshold pairs for a total budget; a directed
edge goes from (a, b) to (a', b') when a+b+1 = a'+b' with both components
non-decreasing, i.e. one step toward the Right-favorable bottom.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .outcomes import ShortForm, enumerate_feasible


PairLike = tuple[int, int]


def gamma_has_edge(n1: PairLike, n2: PairLike) -> bool:
    """Edge rule of the infinite threshold semilattice."""
    a1, b1 = n1
    a2, b2 = n2
    return a1 + b1 + 1 == a2 + b2 and a1 <= a2 and b1 <= b2


def order_leq(x: PairLike, y: PairLike) -> bool:
    """x <= y in the outcome order (smaller thresholds favor Left)."""
    return y[0] <= x[0] and y[1] <= x[1]


def join(x: PairLike, y: PairLike) -> ShortForm:
    return ShortForm(min(x[0], y[0]), min(x[1], y[1]))


def meet(x: PairLike, y: PairLike) -> ShortForm:
    return ShortForm(max(x[0], y[0]), max(x[1], y[1]))


@dataclass(frozen=True)
class Lattice:
    tb: int
    nodes: frozenset[ShortForm]
    edges: frozenset[tuple[ShortForm, ShortForm]]

    @property
    def top(self) -> ShortForm:
        return ShortForm(0, 0)

    @property
    def bottom(self) -> ShortForm:
        return ShortForm(self.tb + 1, self.tb + 1)

    def sorted_nodes(self) -> list[ShortForm]:
        return sorted(self.nodes)

    def sorted_edges(self) -> list[tuple[ShortForm, ShortForm]]:
        return sorted(self.edges)

    def _require(self, x: PairLike) -> ShortForm:
        sf = ShortForm(*x)
        if sf not in self.nodes:
            raise ValueError(f"{tuple(sf)} is not a node of L({self.tb})")
        return sf

    def leq(self, x: PairLike, y: PairLike) -> bool:
        return order_leq(self._require(x), self._require(y))

    def join(self, x: PairLike, y: PairLike) -> ShortForm:
        return join(self._require(x), self._require(y))

    def meet(self, x: PairLike, y: PairLike) -> ShortForm:
        return meet(self._require(x), self._require(y))

    def has_path(self, x: PairLike, y: PairLike) -> bool:
        """Directed reachability along the edges."""
        src = self._require(x)
        dst = self._require(y)
        if src == dst:
            return True
        succ: dict[ShortForm, list[ShortForm]] = {}
        for u, v in self.edges:
            succ.setdefault(u, []).append(v)
        seen = {src}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in succ.get(u, ()):
                if v == dst:
                    return True
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return False


def build_lattice(tb: int) -> Lattice:
    """Finite lattice on all feasible short forms with the inherited edges."""
    nodes = frozenset(enumerate_feasible(tb))
    edges = frozenset((x, y) for x in nodes for y in nodes
                      if gamma_has_edge(x, y))
    return Lattice(tb, nodes, edges)


def export_dot(lattice: Lattice) -> str:
    """Deterministic DOT rendering, nodes and edges in lexicographic order."""
    lines = [
        f"digraph outcome_lattice_tb{lattice.tb} {{",
        "  // top (0,0) is the most Left-favorable outcome; edges point",
        "  // toward larger a+b, i.e. toward the Right-favorable bottom",
        "  rankdir=TB;",
    ]
    for a, b in lattice.sorted_nodes():
        lines.append(f'  "{a},{b}";')
    for (a1, b1), (a2, b2) in lattice.sorted_edges():
        lines.append(f'  "{a1},{b1}" -> "{a2},{b2}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_record(lattice: Lattice) -> dict:
    """Serialized lattice record shared by the CLI and the service."""
    return {
        "tb": lattice.tb,
        "nodes": [[a, b] for a, b in lattice.sorted_nodes()],
        "edges": [[[a1, b1], [a2, b2]]
                  for (a1, b1), (a2, b2) in lattice.sorted_edges()],
    }
