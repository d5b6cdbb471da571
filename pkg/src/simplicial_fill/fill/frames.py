"""Recursion records of the filling procedure.

Each call ``FILL(Z, V)`` with pivot ``v`` produces a frame whose two
children are the lower-dimensional filling of ``Lk(v, Z)`` and the
same-dimensional filling of the reduced cycle on ``V - v``.  Leaf frames
describe fillings obtained directly (trees, base cases, oracle lookups).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator, NamedTuple

from ..chains import Chain, cone


@dataclass(frozen=True)
class Frame:
    d: int  # dimension of the filling built in this frame
    m: int  # size of the vertex universe at this level
    pivot: int | None
    size: int  # support size of the filling returned by this frame
    note: str = ""
    link: "Frame | None" = None
    rest: "Frame | None" = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def deficit(self) -> int:
        return comb(self.m - 1, self.d) - self.size if self.d >= 0 else 0

    @property
    def is_leaf(self) -> bool:
        return self.pivot is None

    def walk(self) -> Iterator["Frame"]:
        yield self
        for child in (self.link, self.rest):
            if child is not None:
                yield from child.walk()

    def additive(self) -> bool:
        """Deficit of this frame equals the sum of its children's deficits."""
        if self.is_leaf:
            return True
        return (
            self.size == self.link.size + self.rest.size
            and self.deficit == self.link.deficit + self.rest.deficit
        )

    def to_dict(self) -> dict:
        out = {"d": self.d, "m": self.m, "pivot": self.pivot, "size": self.size, "deficit": self.deficit}
        if self.note:
            out["note"] = self.note
        if self.extra:
            out["extra"] = self.extra
        if self.link is not None:
            out["link"] = self.link.to_dict()
            out["rest"] = self.rest.to_dict()
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Frame":
        link = cls.from_dict(data["link"]) if "link" in data else None
        rest = cls.from_dict(data["rest"]) if "rest" in data else None
        return cls(data["d"], data["m"], data["pivot"], data["size"], data.get("note", ""),
                   link, rest, data.get("extra", {}))

    def pivots(self) -> list[tuple[int, int, int]]:
        """``(pivot, link deficit, rest deficit)`` for every recursive frame, pre-order."""
        return [(f.pivot, f.link.deficit, f.rest.deficit) for f in self.walk() if not f.is_leaf]


class Fill(NamedTuple):
    chain: Chain
    frame: Frame


def leaf(chain: Chain, m: int, note: str, **extra) -> Fill:
    return Fill(chain, Frame(chain.dim, m, None, len(chain), note, extra=extra))


def compose(v: int, link_fill: Fill, rest_fill: Fill, m: int, note: str = "", **extra) -> Fill:
    """``FILL(Z', V - v) - Cone(v, F_link)`` together with its frame."""
    chain = rest_fill.chain - cone(v, link_fill.chain)
    frame = Frame(rest_fill.chain.dim, m, v, len(chain), note, link_fill.frame, rest_fill.frame, extra)
    return Fill(chain, frame)
