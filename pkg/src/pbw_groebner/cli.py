"""Command-line front end.

Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage error, 3 resource error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import serialize
from .fflv import fflv_points, minimal_violators
from .groebner import (
    EnumerationLimitError,
    StraighteningError,
    build_groebner_basis,
    is_reduced,
    verify_degenerate,
    verify_groebner,
    verify_minimal,
)
from .oracle import OracleBudgetError
from .roots import DominantWeight, UnsupportedTypeError, root_system, weyl_dim
from .uea import enveloping_algebra

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
COMMANDS = ("compute", "verify", "basis", "dim", "paths")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class JobSpec:
    command: str
    cartan_type: str
    rank: int
    weight: tuple[int, ...]
    format: str = "text"
    out: str | None = None
    oracle: bool = True
    full_basis: bool = False

    def weight_obj(self) -> DominantWeight:
        try:
            rs = root_system(self.cartan_type, self.rank)
        except UnsupportedTypeError:
            raise
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if len(self.weight) != rs.rank:
            raise UsageError(f"weight needs {rs.rank} comma-separated coefficients, got {len(self.weight)}")
        if any(m < 0 for m in self.weight):
            raise UsageError("weight coefficients must be non-negative")
        return DominantWeight(rs, self.weight)


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise UsageError(f"malformed weight {text!r}; expected comma-separated integers like 1,0,2") from None


def _verify(job: JobSpec, lam: DominantWeight) -> tuple[str, bool]:
    G = build_groebner_basis(lam)
    rep = verify_groebner(lam, G, oracle=job.oracle)
    minimal = verify_minimal(G)
    reduced = is_reduced(G)
    degen = verify_degenerate(G)
    ok = rep.passed and minimal and degen.passed

    def flag(v):
        return "skipped" if v is None else ("PASS" if v else "FAIL")

    checks = {
        "standard_monomials": rep.standard_count,
        "weyl_dim": rep.weyl_dim,
        "count_matches": rep.standard_count == rep.weyl_dim,
        "standard_equals_polytope": rep.matches_polytope,
        "oracle_annihilation": rep.annihilates,
        "oracle_fflv_rank": rep.polytope_independent,
        "minimal": minimal,
        "reduced": reduced,
        "degenerate": degen.passed,
        "note": rep.note,
        "result": "PASS" if ok else "FAIL",
    }
    if job.format == "json":
        body = {"type": lam.system.type, "rank": lam.system.rank, "weight": list(lam.m), **checks}
        return serialize.dumps(body), ok
    lines = [
        f"verify {lam.system.name} weight {','.join(map(str, lam.m))}",
        f"standard monomials: {rep.standard_count} (weyl_dim {rep.weyl_dim}) {flag(checks['count_matches'])}",
        f"standard monomials = FFLV polytope: {flag(rep.matches_polytope)}",
        f"oracle annihilation of v_lambda: {flag(rep.annihilates)}",
        f"oracle FFLV vectors independent: {flag(rep.polytope_independent)}",
        f"minimal: {flag(minimal)}",
        f"reduced: {'yes' if reduced else 'no'}",
        f"degenerate leading monomials unchanged: {flag(degen.passed)}",
    ]
    if rep.note:
        lines.append(rep.note)
    lines.append(f"RESULT: {checks['result']}")
    return "\n".join(lines) + "\n", ok


def run(job: JobSpec) -> tuple[int, str]:
    """Execute one job; returns ``(exit status, output text)``."""
    if job.command not in COMMANDS:
        raise UsageError(f"unknown command {job.command!r}")
    lam = job.weight_obj()
    json_out = job.format == "json"
    if job.command == "dim":
        d = weyl_dim(lam)
        return EXIT_OK, serialize.dumps({"dim": d}) if json_out else f"{d}\n"
    if job.command == "paths":
        return EXIT_OK, serialize.dumps(serialize.paths_json(lam)) if json_out else serialize.paths_text(lam)
    if job.command == "basis":
        alg = enveloping_algebra(lam.system.type, lam.system.rank)
        pts = fflv_points(lam)
        if json_out:
            return EXIT_OK, serialize.dumps(serialize.points_json(alg, pts, minimal_violators(lam)))
        return EXIT_OK, serialize.points_text(alg, pts)
    if job.command == "compute":
        G = build_groebner_basis(lam)
        if json_out:
            return EXIT_OK, serialize.dumps(serialize.basis_to_json(G, full=job.full_basis))
        return EXIT_OK, serialize.basis_text(G, full=job.full_basis)
    text, ok = _verify(job, lam)
    return (EXIT_OK if ok else EXIT_FAIL), text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, help="Cartan type, A or C")
    common.add_argument("--rank", required=True, type=int)
    common.add_argument("--weight", required=True, help="comma-separated fundamental-weight coefficients m_1,...,m_n")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--no-oracle", action="store_true", help="skip the explicit-module checks in verify")
    common.add_argument("--full-basis", action="store_true", help="keep h_alpha - lambda(h_alpha) for every positive root")
    parser = argparse.ArgumentParser(prog="pbw-groebner", description="Groebner bases of simple modules in types A and C")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("compute", "print the minimal Groebner basis"),
        ("verify", "run all verification checks"),
        ("basis", "print the FFLV polytope points"),
        ("dim", "print the Weyl dimension"),
        ("paths", "print the Dyck paths and their bounds"),
    ]:
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        job = JobSpec(
            command=args.command,
            cartan_type=args.type,
            rank=args.rank,
            weight=parse_weight(args.weight),
            format=args.format,
            out=args.out,
            oracle=not args.no_oracle,
            full_basis=args.full_basis,
        )
        status, text = run(job)
    except (UsageError, UnsupportedTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EnumerationLimitError, OracleBudgetError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except StraighteningError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if job.out:
        with open(job.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
