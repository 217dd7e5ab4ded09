"""Two codes with isomorphic Hasse diagrams that are not permutation equivalent.

The first has minimum distance 3 and the second 2, so the diagram alone
does not determine the code up to coordinate permutation.

Run: python3 demos/02_isomorphic_not_equivalent.py
"""

from __future__ import annotations

from cosetposet import (
    BinaryMatrix,
    build_code,
    build_hasse,
    enumerate_cosets,
    hasse_isomorphic,
    minimum_distance,
    permutation_equivalent,
    weight_enumerator,
)

c = build_code(BinaryMatrix.from_strings(["100011", "010101", "001110"]))
d = build_code(BinaryMatrix.from_strings(["10000110", "01000101", "00100010", "00010001", "00001111"]))

for name, code in (("C", c), ("D", d)):
    print(f"{name}: n={code.n} k={code.k} d={minimum_distance(code)} weights {weight_enumerator(code)}")

gc, gd = build_hasse(enumerate_cosets(c)), build_hasse(enumerate_cosets(d))
witness = hasse_isomorphic(gc, gd)
print("diagram sizes:", gc.n_vertices, "and", gd.n_vertices, "vertices;", len(gc.edges), "and", len(gd.edges), "edges")
print("isomorphism:", " ".join(f"C{v}->C{u}" for v, u in enumerate(witness.mapping)))
print("witness checked edge by edge:", witness.verify(gc, gd))
print("permutation equivalent:", permutation_equivalent(c, d))
