"""Seeded random chains and cycles for tests and the ``--seed`` CLI option."""

from __future__ import annotations

import random
from fractions import Fraction

from .chains import Chain, Field, boundary
from .linalg import faces


def random_coefficient(rng: random.Random, field: Field, spread: int = 5):
    if field is Field.F2:
        return 1
    while True:
        c = Fraction(rng.randint(-spread, spread), rng.randint(1, spread))
        if c:
            return c


def random_chain(rng: random.Random, field: Field, n: int, dim: int, density: float = 0.3) -> Chain:
    """Each dim-simplex of [n] enters independently with probability ``density``."""
    field = Field(field)
    terms = {s: random_coefficient(rng, field) for s in faces(n, dim) if rng.random() < density}
    return Chain(field, dim, n, terms)


def random_cycle(rng: random.Random, field: Field, n: int, d: int, density: float = 0.3) -> Chain:
    """A nonzero (d-1)-cycle on [n], the boundary of a random d-chain."""
    while True:
        z = boundary(random_chain(rng, field, n, d, density))
        if z:
            return z
