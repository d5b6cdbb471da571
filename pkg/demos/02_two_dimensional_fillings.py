"""Filling 1-cycles by acyclic 2-chains.

Over F2 the size of any filling has the parity of the cycle, so a 0-deficit
filling of a cycle Z on n vertices needs |Z| = C(n-1, 2) (mod 2).  The engine
always reaches deficit 0 when that holds and deficit 1 otherwise, with two
distinct fillings.  Over Q only two small configurations miss deficit 0.

Run: python demos/02_two_dimensional_fillings.py
"""

from __future__ import annotations

from math import comb

from simplicial_fill import Chain, Field, fill_dim2_f2, fill_dim2_q
from simplicial_fill.fill import parity_status
from simplicial_fill.oracle import q_zero_deficit_fillings


def polygon(field, n, verts):
    terms = {}
    for a, b in zip(verts, verts[1:] + verts[:1]):
        terms[tuple(sorted((a, b)))] = 1 if a < b or field is Field.F2 else -1
    return Chain(field, 1, n, terms)


print("F2: triangle 1-2-3 on n vertices")
for n in range(4, 10):
    z = polygon(Field.F2, n, [1, 2, 3])
    certs = fill_dim2_f2(z, None, 2)
    held = parity_status(z, n).holds
    print(f"  n={n}: C(n-1,2)={comb(n - 1, 2):2d}  parity holds={held!s:5}  "
          f"deficits={[c.deficit for c in certs]}  sizes={[len(c.filling) for c in certs]}")

print("\nQ: the two exceptional cycles, and a search over all rational hypertrees")
for n, verts in [(4, [1, 2, 3, 4]), (5, [1, 2, 3])]:
    z = polygon(Field.Q, n, verts)
    cert = fill_dim2_q(z)[0]
    print(f"  n={n} cycle {verts}: engine deficit {cert.deficit}; "
          f"0-deficit fillings in all hypertrees: {len(q_zero_deficit_fillings(z, n))}")

z = polygon(Field.Q, 6, [1, 2, 3, 4, 5, 6])
certs = fill_dim2_q(z, None, 2)
print(f"  n=6 hexagon: deficits {[c.deficit for c in certs]} (two distinct fillings)")

print("\nA certificate records the recursion: (pivot, link deficit, rest deficit) per level")
print(" ", certs[0].recursion_records())
