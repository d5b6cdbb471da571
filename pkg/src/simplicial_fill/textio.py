"""Plain-text chain format.

::

    field=Q n=5 d=2
    # comment lines and blank lines are ignored
    2/3 1 2 3
    -1/1 2 3 5

One term per line: the coefficient, then the strictly increasing vertex
labels.  F2 coefficients are always ``1``; Q coefficients are written
``p/q`` in lowest terms (a bare integer is accepted on input).  Emission
lists terms in colex order, so ``emit_chain(parse_chain(t)) == t`` for any
canonically written ``t``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .chains import Chain, Field, colex_key
from .errors import ChainParseError

_HEADER = re.compile(r"^field=(F2|Q)\s+n=(\d+)\s+d=(-?\d+)$")
_QCOEF = re.compile(r"^-?\d+(/\d+)?$")


def parse_chain(text: str) -> Chain:
    header = None
    terms: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise ChainParseError(f"expected header 'field=<F2|Q> n=<n> d=<d>', got {line!r}", lineno)
            field, n, d = Field(m.group(1)), int(m.group(2)), int(m.group(3))
            if d < -1:
                raise ChainParseError(f"dimension {d} < -1", lineno)
            header = (field, n, d)
            continue
        field, n, d = header
        parts = line.split()
        coef = _parse_coef(parts[0], field, lineno)
        try:
            verts = tuple(int(p) for p in parts[1:])
        except ValueError:
            raise ChainParseError(f"vertex labels must be integers: {line!r}", lineno) from None
        if len(verts) != d + 1:
            raise ChainParseError(f"expected {d + 1} vertices, got {len(verts)}", lineno)
        if any(a >= b for a, b in zip(verts, verts[1:])):
            raise ChainParseError(f"vertices not strictly increasing: {verts}", lineno)
        if verts and (verts[0] < 1 or verts[-1] > n):
            raise ChainParseError(f"vertex outside [1, {n}]: {verts}", lineno)
        if verts in terms:
            raise ChainParseError(f"duplicate simplex {verts}", lineno)
        terms[verts] = coef
    if header is None:
        raise ChainParseError("missing header line")
    field, n, d = header
    return Chain(field, d, n, terms)


def _parse_coef(tok: str, field: Field, lineno: int):
    if field is Field.F2:
        if tok != "1":
            msg = "zero coefficient" if tok == "0" else f"F2 coefficient must be 1, got {tok!r}"
            raise ChainParseError(msg, lineno)
        return 1
    if not _QCOEF.match(tok):
        raise ChainParseError(f"malformed rational coefficient {tok!r}", lineno)
    num, _, den = tok.partition("/")
    if den and int(den) == 0:
        raise ChainParseError("zero denominator", lineno)
    value = Fraction(int(num), int(den) if den else 1)
    if not value:
        raise ChainParseError("zero coefficient", lineno)
    return value


def format_coef(c, field: Field) -> str:
    if field is Field.F2:
        return "1"
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def emit_chain(c: Chain, comment: str | None = None) -> str:
    lines = [f"field={c.field.value} n={c.n} d={c.dim}"]
    if comment:
        lines.extend(f"# {row}" for row in comment.splitlines())
    for s in sorted(c.terms, key=colex_key):
        lines.append(" ".join([format_coef(c.terms[s], c.field), *map(str, s)]))
    return "\n".join(lines) + "\n"


def read_chain(path) -> Chain:
    with open(path, encoding="utf-8") as fh:
        return parse_chain(fh.read())


def write_chain(c: Chain, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_chain(c, comment))
