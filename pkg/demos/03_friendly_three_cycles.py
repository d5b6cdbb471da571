"""Filling F2 2-cycles by 3-chains through friendly cycles.

A 2-cycle is friendly when two of its vertices have degrees of different
parity.  The engine pivots at a vertex whose link meets the parity condition
and steers the link filling so the reduced cycle stays friendly; every
level's degree split A(u) + B(u) is recorded in the certificate.

Run: python demos/03_friendly_three_cycles.py
"""

from __future__ import annotations

import random

from simplicial_fill import Field, fill_dim3_f2, is_friendly, simplex_boundary
from simplicial_fill.sampling import random_cycle

rng = random.Random(2)
for n in range(8, 12):
    z = random_cycle(rng, Field.F2, n, 3, 0.08)
    certs = fill_dim3_f2(z, None, 2)
    top = certs[0].transcript
    print(f"n={n}: |Z|={len(z):3d} friendly={is_friendly(z)!s:5}  deficits={[c.deficit for c in certs]}  "
          f"first steering case={top.extra.get('case')}")

print("\nThe tetrahedron boundary is never friendly (every vertex has degree 3).")
for n in (8, 9, 10):
    cert = fill_dim3_f2(simplex_boundary(Field.F2, n, (1, 2, 3, 4)))[0]
    print(f"  n={n}: deficit {cert.deficit}")
