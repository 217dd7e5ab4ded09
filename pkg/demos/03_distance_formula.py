"""Compare the closed-form coset distance with breadth-first search.

The formula is always an upper bound, but for the length-6 repetition code
two weight-2 cosets share a weight-3 parent, so the graph distance (2) is
shorter than the route through their common descendant (4).

Run: python3 demos/03_distance_formula.py
"""

from __future__ import annotations

from cosetposet import BinaryMatrix, build_code, build_hasse, corollary_distance, enumerate_cosets
from cosetposet.graph import all_pairs_distances

for rows in (["11110", "00111"], ["111111"]):
    table = enumerate_cosets(build_code(BinaryMatrix.from_strings(rows)))
    g = build_hasse(table)
    dist = all_pairs_distances(g)
    strict = []
    for a in range(len(table)):
        for b in range(a + 1, len(table)):
            value, walk = corollary_distance(table, a, b)
            assert dist[a][b] <= value
            if dist[a][b] < value:
                strict.append((a, b, dist[a][b], value, walk))
    print(f"{'/'.join(rows)}: {len(table)} cosets, {len(strict)} pairs where BFS beats the formula")
    for a, b, bfs, value, walk in strict[:3]:
        shared = sorted(set(g.parents(a)) & set(g.parents(b)))
        print(f"  C{a} {table[a].leaders[0]} and C{b} {table[b].leaders[0]}: BFS {bfs}, formula {value}, "
              f"formula walk {' '.join(f'C{v}' for v in walk)}, shared parents {['C%d' % v for v in shared]}")
