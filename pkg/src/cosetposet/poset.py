"""The leader-support order on cosets and its Hasse diagram."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .code import Coset, CosetTable
from .errors import TableMismatch
from .gf2 import popcount, support_subset


@dataclass(frozen=True)
class HasseGraph:
    """Cosets as vertices (table order), child/parent pairs as edges.

    ``edges`` holds ``(child, parent)`` index pairs; since the table is sorted
    by weight the child always has the smaller index.
    """

    table: CosetTable
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def n_vertices(self) -> int:
        return len(self.adjacency)

    def parents(self, v: int) -> list[int]:
        w = self.table.weights[v]
        return [u for u in self.adjacency[v] if self.table.weights[u] == w + 1]

    def children(self, v: int) -> list[int]:
        w = self.table.weights[v]
        return [u for u in self.adjacency[v] if self.table.weights[u] == w - 1]


def precedes(a: Coset, b: Coset, strict: bool = False) -> bool:
    """a precedes b when some leader of a has support inside some leader of b."""
    if a.syndrome.length != b.syndrome.length or a.leaders[0].length != b.leaders[0].length:
        raise TableMismatch("cosets come from codes of different shape")
    if strict and a == b:
        return False
    return any(support_subset(x, y) for x in a.leaders for y in b.leaders)


def descendant_masks(table: CosetTable) -> tuple[int, ...]:
    """Bitmask over vertex indices of the strict descendants of each coset.

    A coset lies below ``b`` exactly when it contains a sub-support of a
    leader of ``b`` (sub-supports of leaders are leaders), so the masks come
    from submask enumeration of the leaders.  Cached on the table.
    """
    cached = table._cache.get("descendants")
    if cached is not None:
        return cached
    index_of_word = table.index_of_word
    masks = []
    for v, leaders in enumerate(table.leader_bits):
        m = 0
        for x in leaders:
            s = x
            while True:
                m |= 1 << index_of_word(s)
                if not s:
                    break
                s = (s - 1) & x
        masks.append(m & ~(1 << v))
    out = tuple(masks)
    table._cache["descendants"] = out
    return out


def build_hasse(table: CosetTable) -> HasseGraph:
    index_of_word = table.index_of_word
    edge_set = set()
    for v, leaders in enumerate(table.leader_bits):
        for x in leaders:
            y = x
            while y:
                low = y & -y
                edge_set.add((index_of_word(x ^ low), v))
                y ^= low
    edges = tuple(sorted(edge_set))
    adj: list[list[int]] = [[] for _ in range(len(table))]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return HasseGraph(table, edges, tuple(tuple(sorted(a)) for a in adj))


def orphans(g: HasseGraph) -> list[int]:
    """Vertices without a parent, i.e. the maximal cosets."""
    w = g.table.weights
    return [v for v, nbrs in enumerate(g.adjacency) if all(w[u] < w[v] for u in nbrs)]


def _first_cover(lighter: tuple[int, ...], heavier: tuple[int, ...]) -> tuple[int, int] | None:
    for x in lighter:
        for y in heavier:
            if x & ~y == 0:
                return x, y
    return None


def _strip_path(table: CosetTable, light: int, heavy: int) -> list[int]:
    """Vertices met while removing supp(heavy) \\ supp(light) from ``heavy``.

    Coordinates are removed in increasing index order, i.e. from the most
    significant bit down.  Starts at the coset of ``heavy``.
    """
    path = [table.index_of_word(heavy)]
    diff = heavy & ~light
    cur = heavy
    while diff:
        top = 1 << (diff.bit_length() - 1)
        cur ^= top
        diff ^= top
        path.append(table.index_of_word(cur))
    return path


def corollary_distance(table: CosetTable, a: Coset | int, b: Coset | int) -> tuple[int, list[int]]:
    """Closed-form distance between two cosets together with a witness walk.

    Comparable cosets: the weight gap, realised by stripping coordinates off a
    covering leader.  Otherwise the walk goes down to the heaviest common
    descendant (ties to the smaller representative) and back up, and the value
    is ``d(x_a, x'') + d(x'', x_b)`` minimised over all leader choices.  The
    witness starts at ``a`` and ends at ``b``.
    """
    ia = a if isinstance(a, int) else table.index_of(a)
    ib = b if isinstance(b, int) else table.index_of(b)
    if not (0 <= ia < len(table) and 0 <= ib < len(table)):
        raise TableMismatch("vertex index outside the table")
    if ia == ib:
        raise ValueError("corollary_distance needs two distinct cosets")
    desc = descendant_masks(table)
    lead = table.leader_bits

    if desc[ib] >> ia & 1 or desc[ia] >> ib & 1:
        lo, hi = (ia, ib) if desc[ib] >> ia & 1 else (ib, ia)
        x_lo, x_hi = _first_cover(lead[lo], lead[hi])
        path = _strip_path(table, x_lo, x_hi)[::-1]
        if lo != ia:
            path.reverse()
        return popcount(x_hi ^ x_lo), path

    # the table is sorted by weight, so the heaviest common descendant with
    # the smallest representative is the first member of the top level hit
    omega = desc[ia] & desc[ib]
    top = table.weights[omega.bit_length() - 1]
    start = bisect_left(table.weights, top)
    rest = omega >> start
    mid = start + (rest & -rest).bit_length() - 1
    value = min(
        popcount(xa ^ xm) + popcount(xm ^ xb)
        for xa in lead[ia]
        for xm in lead[mid]
        for xb in lead[ib]
    )
    xm_a, xa = _first_cover(lead[mid], lead[ia])
    xm_b, xb = _first_cover(lead[mid], lead[ib])
    down = _strip_path(table, xm_a, xa)
    up = _strip_path(table, xm_b, xb)[::-1]
    return value, down + up[1:]
