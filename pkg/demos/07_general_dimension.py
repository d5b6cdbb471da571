"""Greedy fillings in any dimension.

The recursion pivots at a vertex, fills its link one dimension down, and
bottoms out on d + 2 vertices where all fillings are known explicitly.  The
deficit stays within a constant times n^(d-3).

Run: python demos/07_general_dimension.py
"""

from __future__ import annotations

from simplicial_fill import Field, fill_general, simplex_boundary

for field, d in [(Field.F2, 4), (Field.Q, 3), (Field.Q, 4)]:
    print(f"{field.value}, d={d}: boundary of a {d}-simplex")
    for n in range(7, 13):
        (cert,) = fill_general(simplex_boundary(field, n, tuple(range(1, d + 2))), None, field)
        print(f"  n={n:2d}: deficit {cert.deficit:2d}  deficit/n^(d-3) = {cert.deficit / n ** (d - 3):.3f}")
