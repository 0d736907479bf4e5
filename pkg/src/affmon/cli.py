"""Command-line front end.

Monoids are written as semicolon-separated generator pairs ("0,1;1,2;3,5"),
vectors as a single pair ("6,13"); whitespace is ignored.  Each subcommand
parses, canonicalizes (except ``oracle``, which works on the raw generators),
routes to the matching solver, and prints a human-readable report, a JSON
report (--json), or CSV for ``scan``.

Exit codes: 0 when the query succeeded (member / value computed), 1 when the
answer is "not a member", 2 for input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import (
    AffmonError,
    DuplicateGeneratorError,
    MonoidParseError,
    NotMemberError,
    NotMinimallyGeneratedError,
    StarRequiredError,
    ZeroGeneratorError,
)
from .factorization import PHI_OUT_OF_RANGE, Factorization, Membership
from .monoids import (
    CanonicalMonoid2,
    CanonicalMonoid3,
    Monoid,
    canonical_coords,
    canonicalize,
    validate_minimal_generation,
)
from .asymptotics import SCAN_CSV_HEADER, rho_limit, scan_multiples
from .oracle import elasticity_oracle, enumerate_factorizations
from .rationals import ExtRat, Vec2
from .solve2 import elasticity2, member2
from .solve3 import elasticity3, extreme_factorizations, member3_general, member3_star

__all__ = ["Query", "Report", "parse_monoid", "parse_vector", "run", "main"]

SOLVER_DIM2 = "dim2-theorem"
SOLVER_DIM3_STAR = "dim3-star-theorem"
SOLVER_DIM3_GENERAL = "dim3-general"
SOLVER_ORACLE = "oracle"


# ---------------------------------------------------------------------------
# parsing


def _parse_component(part: str, base: int) -> int:
    stripped = part.strip()
    if not stripped:
        raise MonoidParseError("empty coordinate", base)
    pos = base + part.index(stripped[0])
    try:
        value = int(stripped)
    except ValueError:
        raise MonoidParseError(f"{stripped!r} is not an integer", pos) from None
    if value < 0:
        raise MonoidParseError("coordinates must be nonnegative", pos)
    return value


def _parse_pair(segment: str, base: int) -> tuple[int, int]:
    comma = segment.find(",")
    if comma < 0:
        raise MonoidParseError("expected a pair 'x,y'", base)
    x = _parse_component(segment[:comma], base)
    y = _parse_component(segment[comma + 1 :], base + comma + 1)
    return x, y


def parse_vector(text: str) -> Vec2:
    """Parse a single "x,y" pair into a vector."""
    x, y = _parse_pair(text, 0)
    return Vec2(x, y)


def parse_monoid(text: str) -> tuple[Vec2, ...]:
    """Parse "x,y;x,y;..." into a generator tuple, with positional errors."""
    gens: list[Vec2] = []
    seen: set[tuple[int, int]] = set()
    base = 0
    for segment in text.split(";"):
        x, y = _parse_pair(segment, base)
        if (x, y) == (0, 0):
            raise ZeroGeneratorError("(0, 0) is not a valid generator")
        if (x, y) in seen:
            raise DuplicateGeneratorError(f"generator ({x}, {y}) appears twice")
        seen.add((x, y))
        gens.append(Vec2(x, y))
        base += len(segment) + 1
    return tuple(gens)


# ---------------------------------------------------------------------------
# queries and reports


@dataclass(frozen=True)
class Query:
    """One CLI invocation, decoupled from argparse for in-process use."""

    command: str
    monoid_text: str
    vector_text: str
    k_max: Optional[int] = None
    mode: str = "one"  # factorize: one | all | extremes
    check_minimality: bool = True
    output: str = "human"  # human | json | csv
    approx: bool = False


@dataclass(frozen=True)
class Report:
    """The answer to a query, ready for rendering in any output format."""

    command: str
    generators: tuple[Vec2, ...]
    canonical: Optional[Monoid]
    input: Vec2
    result: dict
    solver_used: str
    exit_code: int

    @property
    def star(self) -> Optional[bool]:
        if isinstance(self.canonical, CanonicalMonoid3):
            return self.canonical.star
        return None


def _fact_payload(fact: Factorization) -> dict:
    return {"mults": list(fact.mults), "length": fact.length}


def _membership(m: Monoid, cs: Optional[Vec2]) -> tuple[Membership, str]:
    """Route membership to the right solver; cs is None when the transform
    already put the vector outside the monoid's cone."""
    if isinstance(m, CanonicalMonoid2):
        solver = SOLVER_DIM2
        query = member2
    elif m.star:
        solver = SOLVER_DIM3_STAR
        query = member3_star
    else:
        solver = SOLVER_DIM3_GENERAL
        query = member3_general
    if cs is None:
        return Membership(member=False, reason=PHI_OUT_OF_RANGE), solver
    return query(m, cs), solver


def _run_check(m: Monoid, cs: Optional[Vec2]) -> tuple[dict, str, int]:
    mem, solver = _membership(m, cs)
    if mem.member:
        assert mem.factorization is not None
        return (
            {"member": True, "factorization": _fact_payload(mem.factorization)},
            solver,
            0,
        )
    return {"member": False, "reason": mem.reason}, solver, 1


def _full_list(m: Monoid, cs: Vec2) -> tuple[tuple[Factorization, ...], str]:
    if isinstance(m, CanonicalMonoid2):
        mem = member2(m, cs)
        return (mem.factorizations or ()), SOLVER_DIM2
    mem = member3_general(m, cs)
    return (mem.factorizations or ()), SOLVER_DIM3_GENERAL


def _run_factorize(m: Monoid, cs: Optional[Vec2], mode: str) -> tuple[dict, str, int]:
    if mode == "one":
        return _run_check(m, cs)
    if cs is None:
        solver = _membership(m, cs)[1]
        return {"member": False, "reason": PHI_OUT_OF_RANGE}, solver, 1
    if mode == "all":
        facts, solver = _full_list(m, cs)
        if not facts:
            mem, _ = _membership(m, cs)
            return {"member": False, "reason": mem.reason}, solver, 1
        return (
            {
                "member": True,
                "count": len(facts),
                "factorizations": [_fact_payload(f) for f in facts],
                "lengths": sorted(f.length for f in facts),
            },
            solver,
            0,
        )
    assert mode == "extremes"
    if isinstance(m, CanonicalMonoid3) and m.star:
        mem = member3_star(m, cs)
        if not mem.member:
            return {"member": False, "reason": mem.reason}, SOLVER_DIM3_STAR, 1
        ext = extreme_factorizations(m, cs)
        short, long_ = sorted((ext.fact_t0, ext.fact_tmax), key=lambda f: f.length)
        return (
            {
                "member": True,
                "branch": ext.branch,
                "t_max": ext.t_max,
                "shortest": _fact_payload(short),
                "longest": _fact_payload(long_),
            },
            SOLVER_DIM3_STAR,
            0,
        )
    facts, solver = _full_list(m, cs)
    if not facts:
        mem, _ = _membership(m, cs)
        return {"member": False, "reason": mem.reason}, solver, 1
    by_length = sorted(facts, key=lambda f: f.length)
    return (
        {
            "member": True,
            "shortest": _fact_payload(by_length[0]),
            "longest": _fact_payload(by_length[-1]),
        },
        solver,
        0,
    )


def _rho_payload(value: ExtRat, approx: bool) -> dict:
    out = {"rho": str(value)}
    if approx:
        out["approx"] = value.approx()
    return out


def _run_elasticity(m: Monoid, cs: Optional[Vec2], approx: bool) -> tuple[dict, str, int]:
    if cs is None:
        raise NotMemberError("vector is outside the monoid's cone")
    if isinstance(m, CanonicalMonoid2):
        return _rho_payload(elasticity2(m, cs), approx), SOLVER_DIM2, 0
    if m.star:
        return _rho_payload(elasticity3(m, cs), approx), SOLVER_DIM3_STAR, 0
    return _rho_payload(elasticity_oracle(m.gens, cs), approx), SOLVER_ORACLE, 0


def _require_dim3(m: Monoid, what: str) -> CanonicalMonoid3:
    if not isinstance(m, CanonicalMonoid3) or not m.star:
        raise StarRequiredError(f"{what} needs three generators with b*c - a*d = 1")
    return m


def _run_limit(m: Monoid, cs: Optional[Vec2], approx: bool) -> tuple[dict, str, int]:
    m3 = _require_dim3(m, "the limit formula")
    if cs is None:
        raise NotMemberError("vector is outside the monoid's cone")
    lft, value = rho_limit(m3, cs)
    result = {
        "tau": lft.tau,
        "lft": {"p": lft.p, "q": lft.q, "r": lft.r, "t": lft.t},
        "rho_limit": str(value),
    }
    if approx:
        result["approx"] = value.approx()
    return result, SOLVER_DIM3_STAR, 0


def _run_scan(m: Monoid, cs: Optional[Vec2], k_max: Optional[int]) -> tuple[dict, str, int]:
    m3 = _require_dim3(m, "scanning multiples")
    if cs is None:
        raise NotMemberError("vector is outside the monoid's cone")
    if k_max is None or k_max < 1:
        raise ValueError("scan needs --k-max >= 1")
    rows = scan_multiples(m3, cs, k_max)
    return (
        {
            "rows": [
                {
                    "k": r.k,
                    "rho_exact": str(r.rho_exact),
                    "rho_limit": str(r.rho_limit),
                    "gap": str(r.gap),
                }
                for r in rows
            ]
        },
        SOLVER_DIM3_STAR,
        0,
    )


def _run_oracle(gens: tuple[Vec2, ...], vec: Vec2, approx: bool) -> Report:
    fs = enumerate_factorizations(gens, vec)
    result: dict = {
        "member": fs.member,
        "count": len(fs.facts),
        "factorizations": [_fact_payload(f) for f in fs.facts],
        "lengths": list(fs.lengths),
    }
    if fs.member and not vec.is_zero:
        lengths = fs.lengths
        rho = ExtRat(lengths[-1], lengths[0])
        result.update(_rho_payload(rho, approx))
    return Report(
        command="oracle",
        generators=gens,
        canonical=None,
        input=vec,
        result=result,
        solver_used=SOLVER_ORACLE,
        exit_code=0 if fs.member else 1,
    )


def run(query: Query) -> Report:
    """Execute a query in-process and return the full report."""
    gens = parse_monoid(query.monoid_text)
    vec = parse_vector(query.vector_text)
    if query.command == "oracle":
        return _run_oracle(gens, vec, query.approx)
    if len(gens) not in (2, 3):
        raise MonoidParseError(f"expected 2 or 3 generators, got {len(gens)}", 0)
    m = canonicalize(gens)
    if query.check_minimality and not validate_minimal_generation(m):
        raise NotMinimallyGeneratedError(
            "a generator is a combination of the others; "
            "rerun with --no-minimality-check to query anyway"
        )
    cs = canonical_coords(m, vec)
    if query.command == "check":
        result, solver, code = _run_check(m, cs)
    elif query.command == "factorize":
        result, solver, code = _run_factorize(m, cs, query.mode)
    elif query.command == "elasticity":
        result, solver, code = _run_elasticity(m, cs, query.approx)
    elif query.command == "limit":
        result, solver, code = _run_limit(m, cs, query.approx)
    elif query.command == "scan":
        result, solver, code = _run_scan(m, cs, query.k_max)
    else:
        raise ValueError(f"unknown command {query.command!r}")
    return Report(
        command=query.command,
        generators=gens,
        canonical=m,
        input=vec,
        result=result,
        solver_used=solver,
        exit_code=code,
    )


# ---------------------------------------------------------------------------
# rendering


def _monoid_json(report: Report) -> dict:
    m = report.canonical
    return {
        "generators": [[g.x, g.y] for g in report.generators],
        "canonical": None if m is None else [[g.x, g.y] for g in m.gens],
        "star": report.star,
        "transform": None if m is None else [list(r) for r in m.transform.as_rows()],
    }


def render_json(report: Report) -> str:
    payload = {
        "command": report.command,
        "monoid": _monoid_json(report),
        "input": [report.input.x, report.input.y],
        "result": report.result,
        "solver_used": report.solver_used,
    }
    return json.dumps(payload, indent=2)


def render_csv(report: Report) -> str:
    rows = report.result.get("rows")
    if rows is None:
        raise ValueError("CSV output is only defined for scan reports")
    lines = [SCAN_CSV_HEADER]
    lines.extend(f"{r['k']},{r['rho_exact']},{r['rho_limit']},{r['gap']}" for r in rows)
    return "\n".join(lines)


def _fact_line(payload: dict) -> str:
    mults = ", ".join(str(v) for v in payload["mults"])
    return f"({mults})  length={payload['length']}"


def render_human(report: Report) -> str:
    res = report.result
    if report.command == "scan":
        return render_csv(report)
    lines: list[str] = []
    if "member" in res:
        lines.append("member: " + ("yes" if res["member"] else "no"))
    if res.get("reason"):
        lines.append(f"reason: {res['reason']}")
    if "factorization" in res:
        lines.append("factorization: " + _fact_line(res["factorization"]))
    if "factorizations" in res:
        lines.append(f"factorizations ({res['count']}):")
        lines.extend("  " + _fact_line(p) for p in res["factorizations"])
    if "lengths" in res:
        lines.append("lengths: " + " ".join(str(n) for n in res["lengths"]))
    if "branch" in res:
        lines.append(f"branch: {res['branch']}")
        lines.append(f"t_max: {res['t_max']}")
    if "shortest" in res:
        lines.append("shortest: " + _fact_line(res["shortest"]))
        lines.append("longest: " + _fact_line(res["longest"]))
    if "tau" in res:
        lines.append(f"tau: {res['tau']}")
        lft = res["lft"]
        lines.append(f"lft: ({lft['p']}x{lft['q']:+d}y) / ({lft['r']}x{lft['t']:+d}y)")
    if "rho_limit" in res:
        lines.append(f"rho_limit = {res['rho_limit']}" + _approx_suffix(res))
    if "rho" in res:
        lines.append(f"rho = {res['rho']}" + _approx_suffix(res))
    lines.append(f"solver: {report.solver_used}")
    return "\n".join(lines)


def _approx_suffix(res: dict) -> str:
    if "approx" in res:
        return f" (~ {res['approx']:.6g})"
    return ""


def render(report: Report, output: str) -> str:
    if output == "json":
        return render_json(report)
    if output == "csv":
        return render_csv(report)
    return render_human(report)


# ---------------------------------------------------------------------------
# argparse entry point


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affmon",
        description="Exact membership, factorization, and elasticity queries "
        "on affine submonoids of N0^2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("monoid", help="generators, e.g. '0,1;1,2;3,5'")
        p.add_argument("vector", help="target vector, e.g. '6,13'")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument(
            "--approx", action="store_true", help="include decimal approximations"
        )
        p.add_argument(
            "--no-minimality-check",
            action="store_true",
            help="skip validating that no generator is redundant",
        )

    common(sub.add_parser("check", help="decide membership"))
    fact = sub.add_parser("factorize", help="compute factorizations")
    common(fact)
    mode = fact.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true", help="list every factorization")
    mode.add_argument(
        "--extremes", action="store_true", help="only the shortest and longest"
    )
    common(sub.add_parser("elasticity", help="max length over min length"))
    common(sub.add_parser("limit", help="limit elasticity of multiples k*s"))
    scan = sub.add_parser("scan", help="tabulate elasticity of k*s vs the limit (CSV)")
    common(scan)
    scan.add_argument("--k-max", type=_positive_int, required=True, help="scan k=1..N")
    common(sub.add_parser("oracle", help="brute-force enumeration (any generator count)"))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "scan":
        output = "json" if args.json else "csv"
    else:
        output = "json" if args.json else "human"
    mode = "one"
    if getattr(args, "all", False):
        mode = "all"
    elif getattr(args, "extremes", False):
        mode = "extremes"
    query = Query(
        command=args.command,
        monoid_text=args.monoid,
        vector_text=args.vector,
        k_max=getattr(args, "k_max", None),
        mode=mode,
        check_minimality=not args.no_minimality_check,
        output=output,
        approx=args.approx,
    )
    try:
        report = run(query)
    except AffmonError as exc:
        if output == "json":
            print(json.dumps({"error": {"code": exc.code, "message": str(exc)}}))
        else:
            print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1 if isinstance(exc, NotMemberError) else 2
    print(render(report, output))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
