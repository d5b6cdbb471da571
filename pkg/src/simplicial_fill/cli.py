"""Command-line front end.

Every command prints one JSON document on stdout (sorted keys, so equal
inputs give byte-identical output) and exits 0.  Failures print a JSON
object ``{"error": ..., "message": ...}`` on stderr and exit nonzero:
2 for bad usage or input, 1 when the requested object could not be
produced, 3 when a certificate fails its re-check (always a bug).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from .chains import Chain, Field, simplex_boundary
from .errors import BudgetExceeded, ChainError, FillError, NotAHypertreeError, VerificationError
from .oracle.census import CensusReport
from .textio import emit_chain, read_chain

BUDGET_ENV = "SIMPLICIAL_FILL_BUDGET"
COMMANDS = ("fill", "ham2", "ham3", "simple-cycle", "census", "max-cycle", "verify", "collapse")


class UsageError(ValueError):
    pass


def _default_budget() -> int | None:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="simplicial-fill", description="Acyclic fillings of simplicial cycles.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--field", choices=[f.value for f in Field])
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--in", dest="input", type=Path, help="chain file, or a certificate for simple-cycle")
    p.add_argument("--out", type=Path, help="output directory (fill) or file/stem (other commands)")
    p.add_argument("--distinct", type=int, default=1, help="number of distinct fillings wanted")
    p.add_argument("--strategy", choices=("smallest", "largest"), default="smallest")
    p.add_argument("--budget", type=int, help=f"node budget, or seconds for census (default ${BUDGET_ENV})")
    p.add_argument("--seed", type=int, help="fill a seeded random cycle instead of --in")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the census")
    p.add_argument("--simplex", help="comma separated vertices: fill its boundary / sigma for simple-cycle")
    p.add_argument("--sample", type=int, help="verify: engine runs on this many evenly spaced cycles")
    p.add_argument("--stretch", action="store_true", help="census: acknowledge stretch-goal sizes")
    p.add_argument("--exact", action="store_true", help="ham3: return a Hamiltonian cycle whenever one is found")
    return p


def _need(args, *names) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} requires {', '.join(missing)}")


def _simplex(text: str) -> tuple:
    try:
        return tuple(sorted(int(x) for x in text.split(",")))
    except ValueError:
        raise UsageError(f"bad simplex {text!r}") from None


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def _emit_certificates(certs, out: Path | None) -> list[dict]:
    from .fill.certificate import FillCertificate

    docs = []
    for k, cert in enumerate(certs, 1):
        cert.verify()
        text = cert.to_json()
        FillCertificate.from_json(text).verify()  # re-check what is actually written
        if out is not None:
            _write(out / f"certificate_{k}.json", text)
        docs.append(json.loads(text))
    return docs


def _target(args) -> Chain:
    from .sampling import random_cycle

    sources = [x is not None for x in (args.input, args.seed, args.simplex)]
    if sum(sources) != 1:
        raise UsageError("fill needs exactly one of --in, --seed, --simplex")
    if args.input is not None:
        z = read_chain(args.input)
        if args.field and Field(args.field) is not z.field:
            raise UsageError(f"--field {args.field} disagrees with the chain file ({z.field.value})")
        if args.d is not None and args.d != z.dim + 1:
            raise UsageError(f"--d {args.d} disagrees with the chain file (a {z.dim}-chain)")
        if args.n is not None:
            if args.n < z.n:
                raise UsageError(f"--n {args.n} is smaller than the chain's n={z.n}")
            z = z.with_n(args.n)
        return z
    _need(args, "n")
    field = Field(args.field or "F2")
    if args.simplex is not None:
        return simplex_boundary(field, args.n, _simplex(args.simplex))
    _need(args, "d")
    return random_cycle(random.Random(args.seed), field, args.n, args.d)


def cmd_fill(args) -> dict:
    from .fill import FillRequest, fill

    if args.distinct < 1:
        raise UsageError("--distinct must be positive")
    z = _target(args)
    certs = fill(FillRequest(z, None, z.field, args.distinct, args.strategy))
    docs = _emit_certificates(certs, args.out)
    return {
        "command": "fill",
        "target": emit_chain(z),
        "found": len(certs),
        "deficits": [c.deficit for c in certs],
        "certificates": docs if args.out is None else [f"certificate_{k}.json" for k in range(1, len(docs) + 1)],
    }


def _ham(result) -> dict:
    doc = result.to_dict()
    if result.certificate is not None:
        doc["certificate"] = _emit_certificates([result.certificate], None)[0]
    return doc


def cmd_ham2(args) -> dict:
    from .hamiltonian import hamiltonian_2cycle

    _need(args, "n")
    return _ham(hamiltonian_2cycle(args.n, Field(args.field or "F2")))


def cmd_ham3(args) -> dict:
    from .hamiltonian import hamiltonian_3cycle

    _need(args, "n")
    if args.field not in (None, "F2"):
        raise UsageError("ham3 works over F2 only")
    return _ham(hamiltonian_3cycle(args.n, follow_parity_rule=not args.exact))


def cmd_simple_cycle(args) -> dict:
    from .fill.certificate import FillCertificate
    from .hamiltonian import simple_cycle_from_filling
    from .linalg import is_simple_cycle

    _need(args, "input")
    cert = FillCertificate.from_json(args.input.read_text())
    cert.verify()
    sigma = _simplex(args.simplex) if args.simplex else tuple(sorted(cert.target.vertices))
    cycle = simple_cycle_from_filling(cert, sigma)
    return {
        "command": "simple-cycle",
        "sigma": list(sigma),
        "size": len(cycle),
        "simple": is_simple_cycle(cycle),
        "cycle": emit_chain(cycle),
    }


def cmd_census(args) -> dict:
    from .oracle.census import filling_census

    _need(args, "n", "d")
    if args.field not in (None, "F2"):
        raise UsageError("the census is over F2 only")
    budget = args.budget if args.budget is not None else _default_budget()
    rep = filling_census(args.n, args.d, jobs=args.jobs, time_budget=budget, allow_stretch=args.stretch)
    doc = rep.summary(timing=False)
    doc["every_cycle_has_two"] = rep.every_cycle_has_two()
    if args.out is not None:
        rep.save(args.out, timing=False)
    return doc


def cmd_max_cycle(args) -> dict:
    from .oracle.simple_cycles import max_simple_cycle

    _need(args, "n", "d")
    budget = args.budget if args.budget is not None else (_default_budget() or 5_000_000)
    rep = max_simple_cycle(args.n, args.d, Field(args.field or "F2"), budget)
    return {
        "command": "max-cycle",
        "n": rep.n,
        "d": rep.d,
        "field": rep.field.value,
        "max_size": rep.max_size,
        "examined": rep.examined,
        "witness": emit_chain(rep.witness),
    }


def cmd_verify(args) -> dict:
    from .oracle.verify import verify_engine_against_oracle

    _need(args, "n", "d")
    found = verify_engine_against_oracle(args.n, args.d, engine_sample=args.sample)
    return {
        "command": "verify",
        "n": args.n,
        "d": args.d,
        "discrepancies": [d._asdict() for d in found],
    }


def cmd_collapse(args) -> dict:
    from .hamiltonian import collapse_check, non_collapsible_tree

    if args.input is not None:
        facets = read_chain(args.input).sorted_support()
        source = str(args.input)
    else:
        _need(args, "n", "d")
        facets = non_collapsible_tree(args.n, args.d)
        source = f"non-collapsible tree n={args.n} d={args.d}"
    rep = collapse_check(facets)
    return {
        "command": "collapse",
        "source": source,
        "facets": [list(s) for s in facets],
        "collapsed_fully": rep.collapsed_fully,
        "order": rep.order,
        "sequence": [[list(f), list(s)] for f, s in rep.sequence],
        "residue": [list(s) for s in rep.residue],
    }


HANDLERS = {
    "fill": cmd_fill,
    "ham2": cmd_ham2,
    "ham3": cmd_ham3,
    "simple-cycle": cmd_simple_cycle,
    "census": cmd_census,
    "max-cycle": cmd_max_cycle,
    "verify": cmd_verify,
    "collapse": cmd_collapse,
}


def _fail(kind: str, exc: BaseException, code: int, **extra) -> int:
    doc = {"error": kind, "message": str(exc), **extra}
    print(json.dumps(doc, sort_keys=True), file=sys.stderr)
    return code


def run(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed usage
        return int(exc.code or 0) and 2
    try:
        doc = HANDLERS[args.command](args)
    except UsageError as exc:
        return _fail("usage", exc, 2)
    except VerificationError as exc:
        return _fail("verification", exc, 3)
    except (ChainError, NotAHypertreeError, OSError) as exc:
        return _fail("input", exc, 2, line=getattr(exc, "line", None))
    except BudgetExceeded as exc:
        partial = exc.partial.summary(timing=False) if isinstance(exc.partial, CensusReport) else None
        return _fail("budget", exc, 1, partial=partial)
    except (ValueError, FillError) as exc:
        return _fail(type(exc).__name__, exc, 1)
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.out is not None and args.command not in ("fill", "census"):
        _write(args.out, text)
    sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
