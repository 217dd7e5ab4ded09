"""Graph algorithms on Hasse diagrams.

Everything here only needs an ``adjacency`` attribute (per-vertex sorted
neighbour tuples), so the same functions run on :class:`HasseGraph` and on
plain :class:`Graph` objects used as negative controls.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Protocol, Sequence

from .errors import Disconnected
from .poset import HasseGraph, orphans


class HasAdjacency(Protocol):
    adjacency: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Graph:
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(tuple(sorted(a)) for a in adj))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v)

    @property
    def n_vertices(self) -> int:
        return len(self.adjacency)


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def without_edge(g: HasAdjacency, u: int, v: int) -> Graph:
    adj = [list(a) for a in g.adjacency]
    adj[u].remove(v)
    adj[v].remove(u)
    return Graph(tuple(tuple(a) for a in adj))


def _edges(g: HasAdjacency):
    return [(u, v) for u, nb in enumerate(g.adjacency) for v in nb if u < v]


def bfs_distances(g: HasAdjacency, source: int) -> list[int]:
    """Distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * len(g.adjacency)
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs_distances(g: HasAdjacency) -> list[list[int]]:
    return [bfs_distances(g, s) for s in range(len(g.adjacency))]


def is_connected(g: HasAdjacency) -> bool:
    if not g.adjacency:
        return True
    return min(bfs_distances(g, 0)) >= 0


def diameter(g: HasAdjacency) -> int:
    best = 0
    for s in range(len(g.adjacency)):
        d = bfs_distances(g, s)
        if min(d) < 0:
            raise Disconnected("diameter is undefined for a disconnected graph")
        best = max(best, max(d))
    return best


def bipartition(g: HasseGraph) -> tuple[frozenset[int], frozenset[int]]:
    """Split vertices into (odd-weight cosets, even-weight cosets)."""
    w = g.table.weights
    odd = frozenset(v for v in range(len(w)) if w[v] % 2)
    even = frozenset(v for v in range(len(w)) if not w[v] % 2)
    return odd, even


def monochromatic_edges(g: HasAdjacency, colour: Sequence[int]) -> list[tuple[int, int]]:
    return [(u, v) for u, v in _edges(g) if colour[u] == colour[v]]


def two_colouring(g: HasAdjacency) -> list[int] | None:
    """BFS 2-colouring of every component, or None when an odd cycle exists."""
    n = len(g.adjacency)
    colour = [-1] * n
    for root in range(n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if colour[v] < 0:
                    colour[v] = colour[u] ^ 1
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    return colour


def components(g: HasAdjacency) -> list[list[int]]:
    n = len(g.adjacency)
    seen = [False] * n
    out = []
    for root in range(n):
        if seen[root]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, root)) if d >= 0]
        for v in comp:
            seen[v] = True
        out.append(comp)
    return out


def bipartition_problems(g: HasseGraph) -> list[str]:
    """Empty when the parity split is a proper colouring confirmed by BFS."""
    parity = [w % 2 for w in g.table.weights]
    problems = [f"edge C{u}-C{v} joins cosets of equal parity" for u, v in monochromatic_edges(g, parity)]
    bfs = two_colouring(g)
    if bfs is None:
        problems.append("BFS 2-colouring found an odd cycle")
        return problems
    for comp in components(g):
        flips = {parity[v] ^ bfs[v] for v in comp}
        if len(flips) > 1:
            problems.append(f"BFS colouring disagrees with parity on component of C{comp[0]}")
    return problems


def is_triangle_free(g: HasAdjacency) -> bool:
    nbrs = [set(a) for a in g.adjacency]
    return all(not (nbrs[u] & nbrs[v]) for u, v in _edges(g))


def is_star(g: HasAdjacency, center: int = 0) -> bool:
    """True for K_{1,m} centred at ``center`` (the zero coset) with m = |V| - 1."""
    n = len(g.adjacency)
    if n < 2:
        return False
    if len(g.adjacency[center]) != n - 1:
        return False
    return all(g.adjacency[v] == (center,) for v in range(n) if v != center)


# -- isomorphism -------------------------------------------------------------


@dataclass(frozen=True)
class IsoWitness:
    """``mapping[v]`` is the image in the second graph of vertex ``v``."""

    mapping: tuple[int, ...]

    def inverse(self) -> IsoWitness:
        inv = [0] * len(self.mapping)
        for v, u in enumerate(self.mapping):
            inv[u] = v
        return IsoWitness(tuple(inv))

    def then(self, other: IsoWitness) -> IsoWitness:
        return IsoWitness(tuple(other.mapping[u] for u in self.mapping))

    def verify(self, g1: HasAdjacency, g2: HasAdjacency) -> bool:
        n = len(g1.adjacency)
        if len(g2.adjacency) != n or sorted(self.mapping) != list(range(n)):
            return False
        e1 = {frozenset((self.mapping[u], self.mapping[v])) for u, v in _edges(g1)}
        e2 = {frozenset(e) for e in _edges(g2)}
        return e1 == e2


def refine_colours(adjs: Sequence[tuple[tuple[int, ...], ...]], seeds: Sequence[Sequence]) -> list[list[int]]:
    """Joint colour refinement of several graphs, so colours are comparable.

    ``seeds`` are per-vertex hashable start colours.  Returns the stable
    colouring with small integer colour ids shared across all graphs.
    """
    palette: dict = {}
    colours = [[palette.setdefault(s, len(palette)) for s in seed] for seed in seeds]
    n_classes = len(palette)
    while True:
        palette = {}
        colours = [
            [palette.setdefault((col[v], tuple(sorted(col[u] for u in adj[v]))), len(palette)) for v in range(len(adj))]
            for adj, col in zip(adjs, colours)
        ]
        if len(palette) == n_classes:
            return colours
        n_classes = len(palette)


def graph_isomorphic(
    g1: HasAdjacency,
    g2: HasAdjacency,
    hint1: Sequence[int] | None = None,
    hint2: Sequence[int] | None = None,
) -> IsoWitness | None:
    """Find an adjacency-preserving bijection from ``g1`` onto ``g2``.

    Individualisation-refinement: both graphs are refined jointly from their
    degrees; then a vertex of the smallest non-singleton colour class of
    ``g1`` is paired in turn with each same-coloured vertex of ``g2``, both
    get a fresh colour and refinement runs again.  A branch dies as soon as
    the colour class sizes disagree; a discrete colouring gives the mapping.
    ``hint1``/``hint2`` (coset weights for Hasse diagrams) only reorder the
    candidates; they never exclude one.  Any mapping found is re-checked edge
    by edge before it is returned.
    """
    a1, a2 = g1.adjacency, g2.adjacency
    n = len(a1)
    if len(a2) != n:
        return None
    if sorted(map(len, a1)) != sorted(map(len, a2)):
        return None
    if n == 0:
        return IsoWitness(())
    h1 = hint1 if hint1 is not None else [0] * n
    h2 = hint2 if hint2 is not None else [0] * n
    adjs = [a1, a2]

    def search(c1: list[int], c2: list[int]) -> list[int] | None:
        if sorted(c1) != sorted(c2):
            return None
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(c1):
            cells.setdefault(c, []).append(v)
        open_cells = [vs for vs in cells.values() if len(vs) > 1]
        if not open_cells:
            where = {c: u for u, c in enumerate(c2)}
            return [where[c] for c in c1]
        v = min(open_cells, key=lambda vs: (len(vs), vs[0]))[0]
        colour = c1[v]
        cands = sorted((u for u in range(n) if c2[u] == colour), key=lambda u: (h2[u] != h1[v], u))
        for u in cands:
            s1 = [(c, 0) for c in c1]
            s2 = [(c, 0) for c in c2]
            s1[v] = s2[u] = (colour, 1)
            found = search(*refine_colours(adjs, [s1, s2]))
            if found is not None:
                return found
        return None

    mapping = search(*refine_colours(adjs, [[len(a) for a in a1], [len(a) for a in a2]]))
    if mapping is None:
        return None
    witness = IsoWitness(tuple(mapping))
    if not witness.verify(g1, g2):
        raise AssertionError("isomorphism search produced an invalid mapping")
    return witness


def hasse_isomorphic(g1: HasseGraph, g2: HasseGraph) -> IsoWitness | None:
    return graph_isomorphic(g1, g2, g1.table.weights, g2.table.weights)


# -- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class GraphReport:
    connected: bool
    diameter: int
    bipartition: tuple[frozenset[int], frozenset[int]]
    triangle_free: bool
    is_star: bool
    orphan_count: int
    covering_radius: int

    @property
    def chromatic_number(self) -> int:
        # 2 is a theorem for these graphs once they have an edge
        odd, even = self.bipartition
        return 2 if odd and even else 1


def analyze(g: HasseGraph) -> GraphReport:
    connected = is_connected(g)
    return GraphReport(
        connected=connected,
        diameter=diameter(g) if connected else -1,
        bipartition=bipartition(g),
        triangle_free=is_triangle_free(g),
        is_star=is_star(g),
        orphan_count=len(orphans(g)),
        covering_radius=max(g.table.weights),
    )


def to_dot(g: HasseGraph, name: str = "Hasse") -> str:
    """Graphviz text with one rank per coset weight.

    The zero coset is filled red and orphans blue.
    """
    table = g.table
    blue = set(orphans(g))
    lines = [f"graph {name} {{", "  rankdir=BT;", '  node [shape=circle, style=filled, fillcolor=white];']
    levels: dict[int, list[int]] = {}
    for v, w in enumerate(table.weights):
        levels.setdefault(w, []).append(v)
    for w in sorted(levels):
        lines.append(f"  {{ rank=same; {' '.join(f'C{v};' for v in levels[w])} }}")
    for v, coset in enumerate(table.cosets):
        attrs = [f'label="C{v}\\nwt {coset.weight}"', f'tooltip="{coset.representative}"']
        if v == 0:
            attrs.append("fillcolor=red")
        elif v in blue:
            attrs.append("fillcolor=blue")
        lines.append(f"  C{v} [{', '.join(attrs)}];")
    for u, v in g.edges:
        lines.append(f"  C{u} -- C{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
