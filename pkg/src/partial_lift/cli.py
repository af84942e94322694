"""Command-line entry point: build, analyze, verify and exercise partial-lift codes.

Exit codes: 0 pass, 1 invariant failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import counting
from ._validation import check_even_ell
from .descriptor import CodeDescriptor, DescriptorError, matrix_csv
from .field import PRIMITIVE_POLYS, FieldError, FieldSpec
from .lift import PartialLiftCode, exact_dimension, first_violation
from .monomial import good_mask
from .repair import check_repair_identity, min_drgp, simulate_erasures

logger = logging.getLogger("partial_lift")

WORKERS_ENV = "PARTIAL_LIFT_WORKERS"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- commands ----------------------------------------------------------------


def cmd_build(ell: int, s: int, t: int, out_path=None) -> tuple[CodeDescriptor, dict]:
    try:
        code = PartialLiftCode(ell=ell, s=s, t=t, compute_rank=False).fit()
    except (FieldError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    desc = CodeDescriptor.from_code(code)
    if out_path is not None:
        try:
            desc.save(out_path)
        except OSError as exc:
            raise UsageError(f"cannot write {out_path}: {exc}") from exc
    summary = {
        "N": code.n_points_,
        "basis": code.n_basis_,
        "e_st": code.e_st_,
        "K_bound": code.dimension_bound_,
    }
    return desc, summary


@dataclass(frozen=True)
class Analysis:
    N: int
    K: int
    K_bound: int
    e_st: int
    basis: int
    s_min: int
    codimension: int
    slack_used: bool

    @property
    def ok(self) -> bool:
        return self.K >= self.K_bound - 1

    def lines(self) -> list[str]:
        return [f"{k}={v}" for k, v in self.__dict__.items()]


def cmd_analyze(desc: CodeDescriptor) -> Analysis:
    code = _load_code(desc)
    K = exact_dimension(code)
    report = min_drgp(code)
    return Analysis(
        N=code.n_points_,
        K=K,
        K_bound=code.dimension_bound_,
        e_st=code.e_st_,
        basis=code.n_basis_,
        s_min=report.s_min,
        codimension=code.n_points_ - K,
        slack_used=K < code.n_basis_,
    )


def _brute_e(ell: int) -> int:
    return counting.brute_valid_pairs(ell)


def cmd_est_table(ell_max: int, brute_max: int = 12, workers: int | None = None) -> list[dict]:
    """Rows ``ell, e, bound, baseline, ratio`` for even ``ell <= ell_max``.

    ``e`` is the enumerated valid-pair count (blank above ``brute_max``);
    ``baseline`` is the trivial ``s (q - 1)`` codimension bound.
    """
    try:
        ell_max = check_even_ell(ell_max)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    ells = list(range(2, ell_max + 1, 2))
    brute_ells = [e for e in ells if e <= brute_max]
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    if workers > 1 and len(brute_ells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            brute = dict(zip(brute_ells, pool.map(_brute_e, brute_ells)))
    else:
        brute = {e: _brute_e(e) for e in brute_ells}
    rows = []
    for g in counting.growth_check(ell_max):
        q = 1 << g.ell
        s = (1 << (g.ell // 2)) - 1
        rows.append(
            {
                "ell": g.ell,
                "e": brute.get(g.ell, ""),
                "bound": g.bound,
                "baseline": s * (q - 1),
                "ratio": f"{g.ratio:.6f}",
            }
        )
    return rows


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def cmd_verify(desc: CodeDescriptor) -> list[Check]:
    """Run the invariant suite; stops after a failed field self-check."""
    checks = []
    expected = PRIMITIVE_POLYS.get(desc.ell)
    try:
        FieldSpec.from_modulus(desc.ell, desc.modulus)
        field_ok = desc.modulus == expected
        detail = "" if field_ok else f"modulus {desc.modulus:#x} differs from documented {expected:#x}"
    except FieldError as exc:
        field_ok, detail = False, str(exc)
    checks.append(Check("field self-check", field_ok, detail))
    if not field_ok:
        return checks

    try:
        code = desc.to_code(compute_rank=False)
    except (FieldError, ValueError) as exc:
        checks.append(Check("descriptor", False, str(exc)))
        return checks
    spec = code.field_

    mask = good_mask(spec)
    bad_binomials = [
        p for p in code.basis_ if p.kind == "binomial" and any(mask[a, b] for a, b in p.terms)
    ]
    checks.append(
        Check(
            "binomial terms not good",
            not bad_binomials,
            f"binomial {bad_binomials[0]} has a good term" if bad_binomials else "",
        )
    )

    hit = first_violation(code)
    checks.append(
        Check(
            "basis restricts nicely",
            hit is None,
            "" if hit is None else f"{hit[0]} on line {tuple(hit[1])}",
        )
    )

    checks.append(
        Check(
            "basis size bound",
            code.n_basis_ >= code.dimension_bound_,
            f"|basis|={code.n_basis_}, q^2-e={code.dimension_bound_}",
        )
    )

    K = exact_dimension(code)
    checks.append(
        Check("dimension bound", K >= code.dimension_bound_ - 1, f"K={K}, q^2-e-1={code.dimension_bound_ - 1}")
    )

    report = min_drgp(code)
    checks.append(Check("repair groups disjoint", report.disjoint))
    if code.family_.t == spec.order:
        need = code.family_.s - 1
        checks.append(Check("drgp", report.s_min >= need, f"s_min={report.s_min}, need {need}"))
    else:
        checks.append(Check("drgp", True, f"s_min={report.s_min}"))

    failures = check_repair_identity(code, code.generator_matrix_)
    detail = ""
    if failures:
        r, index, line = failures[0]
        detail = f"{len(failures)} failures, first: {code.basis_[r]} at point {index} via line {tuple(line)}"
    checks.append(Check("repair identity", not failures, detail))
    return checks


@dataclass(frozen=True)
class DemoResult:
    trials: int
    successes: int
    wrong: int
    trace: list[str]

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 1.0


def cmd_repair_demo(desc: CodeDescriptor, seed: int, erasure_count: int, trials: int) -> DemoResult:
    """Random codewords, a random target plus ``erasure_count`` other erasures per trial."""
    code = _load_code(desc, compute_rank=False)
    N = code.n_points_
    if not 0 <= erasure_count < N:
        raise UsageError(f"erasure count must be in [0, {N})")
    rng = np.random.default_rng(seed)
    words = code.transform(code.random_messages(trials, rng))
    trace = []
    successes = wrong = 0
    for k in range(trials):
        target = int(rng.integers(N))
        others = rng.choice(N - 1, size=erasure_count, replace=False)
        others = [int(v) + (v >= target) for v in others]
        attempt = simulate_erasures(code, words[k], set(others) | {target}, target)
        line = f"trial={k} {attempt.trace_line()}"
        if attempt.success:
            if attempt.value == int(words[k, target]):
                successes += 1
            else:
                wrong += 1
                line += " mismatch"
        trace.append(line)
    return DemoResult(trials, successes, wrong, trace)


def _load_code(desc: CodeDescriptor, compute_rank: bool = True) -> PartialLiftCode:
    try:
        return desc.to_code(compute_rank=compute_rank)
    except (FieldError, ValueError) as exc:
        raise DescriptorError(str(exc)) from exc


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partial-lift", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a code and write its descriptor")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("analyze", help="exact dimension, e(s,t) and DRGP of a descriptor")
    p.add_argument("descriptor")

    p = sub.add_parser("est-table", help="valid-pair counts against the carry-matrix bound")
    p.add_argument("--ell", type=int, required=True, help="largest even ell")
    p.add_argument("--format", choices=["csv"], default="csv")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run the invariant suite on a descriptor")
    p.add_argument("descriptor")

    p = sub.add_parser("repair-demo", help="simulate erasures and local repair")
    p.add_argument("descriptor")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--erasures", type=int, default=1)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--out", help="write the trace log here instead of stdout")

    p = sub.add_parser("export-matrix", help="write the generator matrix as CSV")
    p.add_argument("descriptor")
    p.add_argument("--format", choices=["csv"], default="csv")
    p.add_argument("--out")
    return parser


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return _dispatch(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DescriptorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    if args.command == "build":
        _, summary = cmd_build(args.ell, args.s, args.t, args.out)
        for k, v in summary.items():
            print(f"{k}={v}")
        return EXIT_OK

    if args.command == "est-table":
        rows = cmd_est_table(args.ell)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        _emit(buf.getvalue(), args.out)
        return EXIT_OK

    desc = _read_descriptor(args.descriptor)

    if args.command == "analyze":
        result = cmd_analyze(desc)
        print("\n".join(result.lines()))
        if not result.ok:
            print("FAIL dimension below q^2 - e(s,t) - 1", file=sys.stderr)
            return EXIT_FAIL
        return EXIT_OK

    if args.command == "verify":
        checks = cmd_verify(desc)
        for c in checks:
            print(c.line())
        return EXIT_OK if all(c.ok for c in checks) else EXIT_FAIL

    if args.command == "repair-demo":
        result = cmd_repair_demo(desc, args.seed, args.erasures, args.trials)
        text = "\n".join(result.trace) + "\n"
        _emit(text, args.out)
        print(
            f"trials={result.trials} successes={result.successes} "
            f"wrong={result.wrong} rate={result.success_rate:.4f}",
            file=sys.stderr if not args.out else sys.stdout,
        )
        return EXIT_FAIL if result.wrong else EXIT_OK

    if args.command == "export-matrix":
        code = _load_code(desc, compute_rank=False)
        _emit(matrix_csv(code.generator_matrix_), args.out)
        return EXIT_OK

    raise UsageError(f"unknown command {args.command}")


def _read_descriptor(path) -> CodeDescriptor:
    try:
        return CodeDescriptor.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


if __name__ == "__main__":
    sys.exit(main())
