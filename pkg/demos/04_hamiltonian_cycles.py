"""Hamiltonian simple cycles from fillings of a simplex boundary.

If F is a 0-deficit filling of the boundary of sigma, then F - sigma is a
simple cycle with C(n-1, d) + 1 facets, the most any simple d-cycle on n
vertices can have.

Run: python demos/04_hamiltonian_cycles.py
"""

from __future__ import annotations

from math import comb

from simplicial_fill import Field, hamiltonian_2cycle, hamiltonian_3cycle
from simplicial_fill.oracle import max_simple_cycle

print("2-cycles over F2 (exist iff n = 0 or 3 mod 4)")
for n in range(4, 13):
    r = hamiltonian_2cycle(n, Field.F2)
    print(f"  n={n:2d}: {r.outcome:11s} size {r.size:3d} of {comb(n - 1, 2) + 1}")

print("\nExhaustive check of the largest simple 2-cycle over F2")
for n in (5, 6):
    print(f"  n={n}: {max_simple_cycle(n, 2).max_size}")

print("\n2-cycles over Q (exist for every n >= 4 except 5)")
for n in range(4, 9):
    r = hamiltonian_2cycle(n, Field.Q)
    print(f"  n={n}: {r.outcome:11s} size {r.size}")

print("\n3-cycles over F2: a cycle when C(n-2,2) is odd, otherwise a near-cycle")
for n in range(7, 14):
    r = hamiltonian_3cycle(n)
    extra = " (a Hamiltonian cycle also exists here)" if r.meta.get("hamiltonian_exists") else ""
    print(f"  n={n:2d}: C(n-2,2)={comb(n - 2, 2):2d} {r.outcome:5s} size {r.size:3d}{extra}")
