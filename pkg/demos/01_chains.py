"""Chains, boundaries, links and cones on the complete complex.

Run: python demos/01_chains.py
"""

from __future__ import annotations

from fractions import Fraction

from simplicial_fill import Chain, Field, boundary, cone, emit_chain, link, star

Q = Field.Q

# A rational 2-chain on [5]; simplices are ascending vertex tuples.
c = Chain(Q, 2, 5, {(1, 2, 3): 1, (1, 3, 4): Fraction(-2, 3), (2, 3, 5): 4})
print("c =")
print(emit_chain(c))

# The boundary of a boundary vanishes.
print("boundary(boundary(c)) is zero:", not boundary(boundary(c)))

# The link of vertex 3 drops 3 from every term that contains it, with the
# sign (-1)^(position of 3).
print("link(3, c) =", link(3, c))

# Coning from a fresh vertex inverts the link and lifts boundaries.
v = 6
c6 = c.with_n(6)
print("cone(v, link(v, .)) == star(v, .):", cone(3, link(3, c6)) == star(3, c6))
print("boundary(cone(6, c)) == c - cone(6, boundary(c)):", boundary(cone(v, c6)) == c6 - cone(v, boundary(c6)))

# Over F2 coefficients are 0/1 and addition is symmetric difference.
t = Chain(Field.F2, 2, 4, {(1, 2, 3): 1, (1, 2, 4): 1})
print("F2 boundary of two triangles sharing an edge:", boundary(t))
