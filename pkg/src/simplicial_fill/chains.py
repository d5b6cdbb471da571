"""Oriented simplices and field-weighted chains on the complete complex.

A simplex is a strictly increasing tuple of 1-based vertex labels; its
orientation is the one given by that ascending order.  A chain maps
simplices of one dimension to nonzero coefficients, either bits (F2) or
reduced :class:`fractions.Fraction` values (Q).  Chains are immutable.

The (-1)-dimensional chains ``c * ()`` are the scalar multiples of the
empty simplex; they appear as boundaries of 0-chains and as the bottom of
the recursive filling procedure.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import comb
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Tuple, Union

from .errors import ChainError

Simplex = Tuple[int, ...]
Coefficient = Union[int, Fraction]


class Field(str, Enum):
    F2 = "F2"
    Q = "Q"

    def coerce(self, value) -> Coefficient:
        if self is Field.F2:
            if isinstance(value, Fraction):
                if value.denominator % 2 == 0:
                    raise ChainError(f"{value} has no image in F2")
                value = value.numerator
            return int(value) & 1
        return Fraction(value)

    @property
    def one(self) -> Coefficient:
        return 1 if self is Field.F2 else Fraction(1)


def colex_key(s: Simplex) -> Simplex:
    return s[::-1]


def make_simplex(vertices: Iterable[int]) -> Simplex:
    s = tuple(vertices)
    if any(a >= b for a, b in zip(s, s[1:])):
        raise ChainError(f"simplex vertices must be strictly increasing: {s}")
    if s and s[0] < 1:
        raise ChainError(f"vertex labels are 1-based: {s}")
    return s


def incidence_sign(simplex: Simplex, v: int) -> int:
    """[simplex : simplex - {v}], i.e. (-1)**(position of v)."""
    return -1 if simplex.index(v) & 1 else 1


class SignedIncidence(NamedTuple):
    simplex: Simplex
    face: Simplex
    sign: int


def incidences(simplex: Simplex) -> list[SignedIncidence]:
    """The codimension-one faces of ``simplex`` with their incidence signs."""
    return [
        SignedIncidence(simplex, simplex[:i] + simplex[i + 1:], -1 if i & 1 else 1)
        for i in range(len(simplex))
    ]


class Chain:
    """A normalized field-weighted d-chain over the vertex universe ``[n]``."""

    __slots__ = ("field", "dim", "n", "_terms", "_hash")

    def __init__(self, field: Field, dim: int, n: int, terms: Mapping | Iterable = ()):
        field = Field(field)
        if dim < -1:
            raise ChainError(f"chain dimension {dim} < -1")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Simplex, Coefficient] = {}
        for s, c in items:
            s = make_simplex(s)
            if len(s) != dim + 1:
                raise ChainError(f"simplex {s} does not have dimension {dim}")
            if s and s[-1] > n:
                raise ChainError(f"vertex {s[-1]} exceeds n={n}")
            c = field.coerce(c)
            if s in acc:
                c = _add(field, acc[s], c)
            acc[s] = c
        self.field = field
        self.dim = dim
        self.n = n
        self._terms = {s: c for s, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _trusted(cls, field: Field, dim: int, n: int, terms: dict) -> "Chain":
        # terms must already be normalized: right dimension, no zero coefficients
        obj = cls.__new__(cls)
        obj.field = field
        obj.dim = dim
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, field: Field, dim: int, n: int) -> "Chain":
        return cls._trusted(Field(field), dim, n, {})

    @classmethod
    def from_simplices(cls, field: Field, n: int, simplices: Iterable[Iterable[int]]) -> "Chain":
        """Unit-coefficient chain; over Q repeated simplices accumulate."""
        simplices = [tuple(sorted(s)) for s in simplices]
        if not simplices:
            raise ChainError("cannot infer the dimension of an empty simplex list")
        return cls(field, len(simplices[0]) - 1, n, [(s, 1) for s in simplices])

    @classmethod
    def simplex(cls, field: Field, n: int, vertices: Iterable[int], coef: Coefficient = 1) -> "Chain":
        s = make_simplex(sorted(vertices))
        return cls(field, len(s) - 1, n, [(s, coef)])

    @property
    def terms(self) -> Mapping[Simplex, Coefficient]:
        return MappingProxyType(self._terms)

    @property
    def support(self) -> frozenset:
        return frozenset(self._terms)

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for s in self._terms for v in s)

    def sorted_support(self) -> list[Simplex]:
        return sorted(self._terms, key=colex_key)

    def coefficient(self, s: Iterable[int]) -> Coefficient:
        zero = 0 if self.field is Field.F2 else Fraction(0)
        return self._terms.get(tuple(s), zero)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Simplex, Coefficient]]:
        for s in self.sorted_support():
            yield s, self._terms[s]

    def __contains__(self, s) -> bool:
        return tuple(s) in self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return (
            self.field is other.field
            and self.dim == other.dim
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.dim, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other: "Chain") -> "Chain":
        return combine(self, other)

    def __sub__(self, other: "Chain") -> "Chain":
        return combine(self, other, 1, -1)

    def __neg__(self) -> "Chain":
        return scale(self, -1)

    def __rmul__(self, alpha) -> "Chain":
        return scale(self, alpha)

    def __repr__(self) -> str:
        if not self._terms:
            return f"Chain({self.field.value}, dim={self.dim}, n={self.n}, 0)"
        body = " ".join(f"{_fmt_coef(c)}{list(s)}" for s, c in self)
        return f"Chain({self.field.value}, dim={self.dim}, n={self.n}, {body})"

    def with_n(self, n: int) -> "Chain":
        if self._terms and max(max(s, default=0) for s in self._terms) > n:
            raise ChainError(f"chain uses vertices above n={n}")
        return Chain._trusted(self.field, self.dim, n, self._terms)


def _fmt_coef(c: Coefficient) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}*"
    return ""


def _add(field: Field, a: Coefficient, b: Coefficient) -> Coefficient:
    if field is Field.F2:
        return a ^ b
    return a + b


def _accumulate(field: Field, acc: dict, s: Simplex, c: Coefficient) -> None:
    if s in acc:
        c = _add(field, acc[s], c)
        if c:
            acc[s] = c
        else:
            del acc[s]
    elif c:
        acc[s] = c


def _check_compatible(a: Chain, b: Chain) -> None:
    if a.field is not b.field:
        raise ChainError(f"field mismatch: {a.field.value} vs {b.field.value}")
    if a.dim != b.dim:
        raise ChainError(f"dimension mismatch: {a.dim} vs {b.dim}")


def scale(c: Chain, alpha) -> Chain:
    alpha = c.field.coerce(alpha)
    if not alpha:
        return Chain.zero(c.field, c.dim, c.n)
    if c.field is Field.F2:
        return c
    return Chain._trusted(c.field, c.dim, c.n, {s: alpha * v for s, v in c._terms.items()})


def combine(a: Chain, b: Chain, alpha=1, beta=1) -> Chain:
    """Normalized ``alpha*a + beta*b``."""
    _check_compatible(a, b)
    field = a.field
    alpha, beta = field.coerce(alpha), field.coerce(beta)
    n = max(a.n, b.n)
    if field is Field.F2:
        if not alpha:
            return Chain._trusted(field, a.dim, n, dict(b._terms) if beta else {})
        if not beta:
            return Chain._trusted(field, a.dim, n, dict(a._terms))
        small, big = (a, b) if len(a) <= len(b) else (b, a)
        acc = dict(big._terms)
        for s in small._terms:
            if s in acc:
                del acc[s]
            else:
                acc[s] = 1
        return Chain._trusted(field, a.dim, n, acc)
    acc = {s: alpha * v for s, v in a._terms.items()} if alpha else {}
    if beta:
        for s, v in b._terms.items():
            _accumulate(field, acc, s, beta * v)
    return Chain._trusted(field, a.dim, n, {s: v for s, v in acc.items() if v})


def boundary(c: Chain) -> Chain:
    field = c.field
    acc: dict[Simplex, Coefficient] = {}
    if c.dim == -1:
        return _boundary_of_scalar(c)
    f2 = field is Field.F2
    for s, coef in c._terms.items():
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            if f2:
                if face in acc:
                    del acc[face]
                else:
                    acc[face] = 1
            else:
                _accumulate(field, acc, face, -coef if i & 1 else coef)
    return Chain._trusted(field, c.dim - 1, c.n, acc)


def _boundary_of_scalar(c: Chain) -> Chain:
    # the augmentation stops at dimension -1; its boundary is the zero map
    obj = Chain.__new__(Chain)
    obj.field, obj.dim, obj.n, obj._terms, obj._hash = c.field, -2, c.n, {}, None
    return obj


def star(v: int, c: Chain) -> Chain:
    return Chain._trusted(c.field, c.dim, c.n, {s: k for s, k in c._terms.items() if v in s})


def deletion(v: int, c: Chain) -> Chain:
    """``c - star(v, c)``: the terms avoiding ``v``."""
    return Chain._trusted(c.field, c.dim, c.n, {s: k for s, k in c._terms.items() if v not in s})


def link(v: int, c: Chain) -> Chain:
    if c.dim < 0:
        raise ChainError("link is undefined on (-1)-chains")
    f2 = c.field is Field.F2
    out = {}
    for s, k in c._terms.items():
        if v in s:
            i = s.index(v)
            out[s[:i] + s[i + 1:]] = k if (f2 or not i & 1) else -k
    return Chain._trusted(c.field, c.dim - 1, c.n, out)


def cone(v: int, c: Chain) -> Chain:
    if c.dim >= 0 and v in c.vertices:
        raise ChainError(f"cone apex {v} already lies in the chain")
    if v < 1:
        raise ChainError(f"vertex labels are 1-based: {v}")
    f2 = c.field is Field.F2
    out = {}
    for s, k in c._terms.items():
        i = 0
        while i < len(s) and s[i] < v:
            i += 1
        out[s[:i] + (v,) + s[i:]] = k if (f2 or not i & 1) else -k
    return Chain._trusted(c.field, c.dim + 1, max(c.n, v), out)


def degree(v: int, c: Chain) -> int:
    """Number of support simplices containing ``v``."""
    return sum(1 for s in c._terms if v in s)


def deficit(c: Chain, n: int | None = None) -> int:
    """``C(n-1, dim) - |supp(c)|`` with ``n`` defaulting to the chain's ambient size."""
    n = c.n if n is None else n
    return comb(n - 1, c.dim) - len(c)


def simplex_boundary(field: Field, n: int, s: Simplex) -> Chain:
    return boundary(Chain._trusted(Field(field), len(s) - 1, n, {tuple(s): Field(field).one}))
