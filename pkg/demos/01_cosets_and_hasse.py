"""Walk through the coset table and Hasse diagram of a small [5, 2] code.

Run: python3 demos/01_cosets_and_hasse.py
"""

from __future__ import annotations

from cosetposet import BinaryMatrix, build_code, build_hasse, enumerate_cosets, orphans, rref, standard_form, to_dot
from cosetposet.graph import analyze

g = BinaryMatrix.from_strings(["11110", "00111"])
reduced, rank, pivots = rref(g)
std, perm = standard_form(g)
print("generator      ", [str(r) for r in g.rows])
print("rref           ", [str(r) for r in reduced.rows], "pivots", pivots)
print("standard form  ", [str(r) for r in std.rows], "permutation", perm)

code = build_code(g)
print("parity check   ", [str(r) for r in code.parity_check.rows])
print("codewords      ", [str(c) for c in code.codewords])

table = enumerate_cosets(code)
print("\ncosets:")
for i, c in enumerate(table):
    print(f"  C{i}  syndrome {c.syndrome}  weight {c.weight}  leaders {' '.join(map(str, c.leaders))}")

hasse = build_hasse(table)
print("\nedges:", " ".join(f"C{u}-C{v}" for u, v in hasse.edges))
print("orphans:", " ".join(f"C{v}" for v in orphans(hasse)))
report = analyze(hasse)
print(f"diameter {report.diameter}, covering radius {report.covering_radius}, "
      f"triangle free {report.triangle_free}, star {report.is_star}")
print("\n" + to_dot(hasse))
