"""Requests, certificates and the small value types reported alongside them."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from ..chains import Chain, Field, boundary, degree
from ..errors import ChainError, NotACycleError, VerificationError
from ..linalg import is_acyclic, is_cycle
from ..textio import emit_chain, parse_chain
from .frames import Frame

SCHEMA_VERSION = 1
STRATEGIES = ("smallest", "largest")


@dataclass(frozen=True)
class ParityStatus:
    """``|Z| = C(m-1, d) (mod 2)``, the F2 obstruction to 0-deficit fillings for even d."""

    applicable: bool
    holds: bool | None
    cycle_size_mod2: int
    target_binomial_mod2: int

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "holds": self.holds,
            "cycle_size_mod2": self.cycle_size_mod2,
            "target_binomial_mod2": self.target_binomial_mod2,
        }


def parity_status(z: Chain, m: int) -> ParityStatus:
    d = z.dim + 1
    size2, binom2 = len(z) % 2, comb(m - 1, d) % 2 if d >= 0 else 0
    if z.field is not Field.F2 or d % 2:
        return ParityStatus(False, None, size2, binom2)
    return ParityStatus(True, size2 == binom2, size2, binom2)


@dataclass(frozen=True)
class DegreeProfile:
    """Degree parities around one top-level pivot of a 3-filling.

    ``A[u]`` is ``deg(u, Z - St(v, Z)) mod 2`` and ``B[u]`` is
    ``deg(u, F) mod 2`` for the 2-filling ``F`` of the pivot's link.  The
    reduced cycle then has ``deg(u, Z') = A[u] + B[u] (mod 2)``.
    """

    pivot: int
    sub_pivot: int
    A: dict
    B: dict

    @classmethod
    def compute(cls, z: Chain, pivot: int, sub_pivot: int, link_filling: Chain, universe: Iterable[int]) -> "DegreeProfile":
        from ..chains import deletion

        rest = deletion(pivot, z)
        us = [u for u in universe if u != pivot]
        return cls(
            pivot,
            sub_pivot,
            {u: degree(u, rest) % 2 for u in us},
            {u: degree(u, link_filling) % 2 for u in us},
        )

    def predicts(self, reduced: Chain) -> bool:
        return all(degree(u, reduced) % 2 == self.A[u] ^ self.B[u] for u in self.A)

    def to_dict(self) -> dict:
        return {
            "pivot": self.pivot,
            "sub_pivot": self.sub_pivot,
            "A": {str(k): v for k, v in sorted(self.A.items())},
            "B": {str(k): v for k, v in sorted(self.B.items())},
        }


@dataclass(frozen=True)
class FillRequest:
    target: Chain
    universe: tuple | None = None
    field: Field | None = None
    want_distinct: int = 1
    strategy: str = "smallest"

    def resolved(self) -> "FillRequest":
        field_ = Field(self.field) if self.field is not None else self.target.field
        if field_ is not self.target.field:
            raise ChainError(f"request field {field_.value} differs from target field {self.target.field.value}")
        universe = tuple(sorted(set(self.universe))) if self.universe is not None else tuple(range(1, self.target.n + 1))
        if not self.target.vertices <= set(universe):
            raise ChainError("target uses vertices outside the universe")
        if self.target.dim >= 0 and not is_cycle(self.target):
            raise NotACycleError("fill target must be a cycle")
        if self.want_distinct < 1:
            raise ValueError("want_distinct must be positive")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}; choose from {STRATEGIES}")
        return FillRequest(self.target, universe, field_, self.want_distinct, self.strategy)


@dataclass
class FillCertificate:
    filling: Chain
    target: Chain
    universe: tuple
    deficit: int
    transcript: Frame
    parity: ParityStatus | None = None
    meta: dict = field(default_factory=dict)

    @property
    def field(self) -> Field:
        return self.target.field

    @property
    def d(self) -> int:
        return self.filling.dim

    @property
    def parity_condition_held(self) -> bool | None:
        return None if self.parity is None or not self.parity.applicable else self.parity.holds

    def recursion_records(self) -> list[tuple[int, int, int]]:
        return self.transcript.pivots()

    def verify(self) -> None:
        """Independent re-check; raises :class:`VerificationError` on any mismatch."""
        if boundary(self.filling) != self.target:
            raise VerificationError("boundary of the filling differs from the target")
        if not self.filling.vertices <= set(self.universe):
            raise VerificationError("filling leaves the universe")
        n = max(self.universe) if self.universe else 0
        if self.filling and not is_acyclic(self.filling.support, self.field, n):
            raise VerificationError("filling support is not acyclic")
        expected = comb(len(self.universe) - 1, self.filling.dim) - len(self.filling)
        if expected != self.deficit:
            raise VerificationError(f"recorded deficit {self.deficit}, actual {expected}")
        if self.transcript.size != len(self.filling):
            raise VerificationError("transcript root size disagrees with the filling")

    def payload(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "field": self.field.value,
            "d": self.d,
            "universe": list(self.universe),
            "target": emit_chain(self.target),
            "filling": emit_chain(self.filling),
            "deficit": self.deficit,
            "parity": None if self.parity is None else self.parity.to_dict(),
            "meta": self.meta,
            "transcript": self.transcript.to_dict(),
        }

    def digest(self) -> str:
        core = {k: self.payload()[k] for k in ("schema_version", "field", "universe", "target", "filling", "deficit")}
        return hashlib.sha256(json.dumps(core, sort_keys=True).encode()).hexdigest()

    def to_json(self) -> str:
        data = self.payload()
        data["digest"] = self.digest()
        return json.dumps(data, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "FillCertificate":
        data = json.loads(text)
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported certificate schema {data.get('schema_version')}")
        parity = data.get("parity")
        cert = cls(
            parse_chain(data["filling"]),
            parse_chain(data["target"]),
            tuple(data["universe"]),
            int(data["deficit"]),
            Frame.from_dict(data["transcript"]),
            None if parity is None else ParityStatus(**parity),
            data.get("meta", {}),
        )
        if "digest" in data and data["digest"] != cert.digest():
            raise VerificationError("certificate digest mismatch")
        return cert
