"""Hypertrees that cannot be collapsed.

Removing a facet sigma from a Hamiltonian cycle leaves a hypertree.  If
every boundary face of sigma lies in at least four facets of the cycle, no
face of the tree is free, so not even one elementary collapse is possible.

Run: python demos/05_non_collapsible_trees.py
"""

from __future__ import annotations

from math import comb

from simplicial_fill import collapse_check, non_collapsible_tree
from simplicial_fill.hamiltonian import face_degrees
from simplicial_fill.linalg import faces

for n, d in [(8, 2), (8, 3), (11, 2)]:
    tree = non_collapsible_tree(n, d)
    rep = collapse_check(tree)
    print(f"n={n} d={d}: {len(tree)} facets (C(n-1,d)={comb(n - 1, d)}), "
          f"min face degree {min(face_degrees(tree).values())}, collapses performed {len(rep.sequence)}")

# For contrast, the star of a vertex collapses completely.
star = [s for s in faces(8, 2) if 1 in s]
rep = collapse_check(star)
print(f"star of vertex 1 in K_8^2: collapsed fully = {rep.collapsed_fully} in {len(rep.sequence)} steps")
