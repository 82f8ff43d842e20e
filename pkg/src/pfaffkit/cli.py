"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
Payload goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from . import blockdiag, oracle, recurrence, sequences, structmat
from .errors import DomainError, PfaffkitError, ResourceError
from .scalar import Params, parse_rational
from .sequences import SequenceKind

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

VERIFY_ORACLE_KMAX = 6
_VALUE_FLAGS = ("--alpha", "--a-squared", "--b")


class UsageError(PfaffkitError):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _params_payload(k: int | None, p: Params) -> dict:
    out: dict = {"alpha": str(p.alpha), "b": str(p.b)}
    if k is not None:
        out = {"k": k, **out}
    return out


def _timed(fn: Callable[[], object]) -> tuple[object, int]:
    start = time.perf_counter_ns()
    value = fn()
    return value, time.perf_counter_ns() - start


def _require_oracle_order(n: int, cap: int) -> None:
    cap = min(cap, oracle.oracle_cap())
    if n > cap:
        raise ResourceError(f"oracle needs order {n}, cap is {cap}")


def _scalar_text(x: object) -> str:
    if isinstance(x, structmat.QuadScalar) and x.is_rational:
        return str(x.u)
    return str(x)


def cmd_pf(k: int, p: Params, method: str = "recurrence", with_g: bool = False,
           dump: bool = False) -> dict:
    """Pfaffian of F_2k (and G_2k when ``with_g``)."""
    if method == "recurrence":
        compute = lambda which: recurrence.pf_fast(k, p, which)  # noqa: E731
    elif method == "oracle":
        _require_oracle_order(2 * k, oracle.PFAFFIAN_ORDER_CAP)
        gens = {"F": structmat.gen_F, "G": structmat.gen_G}
        compute = lambda which: oracle.pfaffian_oracle(gens[which](k, p))  # noqa: E731
    else:
        raise UsageError(f"unknown pf method {method!r}")
    value, elapsed = _timed(lambda: compute("F"))
    report = {
        "command": "pf",
        "params": _params_payload(k, p),
        "method": method,
        "value": _scalar_text(value),
        "elapsed_ns": elapsed,
    }
    if with_g:
        g_value, g_elapsed = _timed(lambda: compute("G"))
        report["value_g"] = _scalar_text(g_value)
        report["elapsed_ns"] += g_elapsed
    if dump:
        report["matrix"] = structmat.gen_F(k, p).to_json()
    return report


DET_METHODS = ("closed", "blockdiag", "oracle", "pf-squared")


def cmd_det(k: int, p: Params, method: str = "closed", dump: bool = False) -> dict:
    """Determinant of F_2k."""
    if method == "closed":
        compute = lambda: blockdiag.det_closed(k, p)  # noqa: E731
    elif method == "blockdiag":
        compute = lambda: blockdiag.det_blockdiag(k, p)  # noqa: E731
    elif method == "oracle":
        _require_oracle_order(2 * k, oracle.DET_ORDER_CAP)
        compute = lambda: oracle.det_oracle(structmat.gen_F(k, p))  # noqa: E731
    elif method == "pf-squared":
        compute = lambda: recurrence.pf_fast(k, p) ** 2  # noqa: E731
    else:
        raise UsageError(f"unknown det method {method!r}")
    value, elapsed = _timed(compute)
    report = {
        "command": "det",
        "params": _params_payload(k, p),
        "method": method,
        "value": _scalar_text(value),
        "elapsed_ns": elapsed,
    }
    if dump:
        report["matrix"] = structmat.gen_F(k, p).to_json()
    return report


TABLE_FIELDS = ("k", "pf", "expected_pf", "det", "expected_det", "pf_match", "det_match")


def cmd_table(family: str, kmax: int) -> list[dict]:
    """Rows of Pf/det of F_2k next to the sequence values they should equal."""
    if kmax < 1:
        raise UsageError("kmax must be >= 1")
    try:
        kind = SequenceKind.parse(family)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    p = sequences.params_for(kind)
    rows = []
    for k in range(1, kmax + 1):
        pf = recurrence.pf_fast(k, p)
        det = blockdiag.det_closed(k, p)
        want_pf = sequences.expected_pf(kind, k)
        want_det = sequences.expected_det(kind, k)
        rows.append({
            "k": k,
            "pf": str(pf),
            "expected_pf": str(want_pf),
            "det": str(det),
            "expected_det": str(want_det),
            "pf_match": pf == want_pf,
            "det_match": det == want_det,
        })
    return rows


def _csv_text(fields: Sequence[str], rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({
            k: (str(v).lower() if isinstance(v, bool) else v) for k, v in row.items()
        })
    return buf.getvalue()


# --- verify -----------------------------------------------------------------


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    """Numerator and denominator drawn uniformly from ``[-bound, bound]``, denominator nonzero."""
    num = rng.randint(-bound, bound)
    den = 0
    while den == 0:
        den = rng.randint(-bound, bound)
    return Fraction(num, den)


def random_params(rng: random.Random, count: int) -> list[Params]:
    return [Params(random_rational(rng), random_rational(rng)) for _ in range(count)]


@dataclass
class CheckResult:
    name: str
    checks: int = 0
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None


@dataclass
class VerifyConfig:
    kmax_oracle: int = 5
    kmax_fast: int = 40
    trials: int = 20
    seed: int = 0
    params: list[Params] = field(default_factory=list)


Check = Callable[[VerifyConfig], Iterator[tuple[bool, str]]]


def _chk_structure(cfg: VerifyConfig) -> Iterator[tuple[bool, str]]:
    for p in cfg.params:
        for k in range(1, 9):
            for name, gen in (("F", structmat.gen_F), ("G", structmat.gen_G)):
                M = gen(k, p)
                ok = structmat.is_skew_symmetric(M) and structmat.is_skew_centrosymmetric(M)
                yield ok, f"{name}_{2 * k} not skew/skew-centrosymmetric, k={k}, p={p}"


def _chk_schur(cfg: VerifyConfig) -> Iterator[tuple[bool, str]]:
    for p in cfg.params:
        for k in range(1, 9):
            A, B = structmat.gen_A(k, p), structmat.gen_B(k, p)
            C = B if k % 2 == 0 else -B
            yield A @ C == C @ A, f"A C != C A, k={k}, p={p}"
            reduced = structmat.schur_reduce(structmat.gen_F(k, p), k)
            yield reduced == structmat.gen_T(k, p), f"schur_reduce != gen_T, k={k}, p={p}"


def _chk_permutation(cfg: VerifyConfig) -> Iterator[tuple[bool, str]]:
    for p in cfg.params:
        for k in range(1, 13):
            conj = structmat.permute_conjugate(
                structmat.gen_T(k, p), structmat.gen_permutation(k)
            )
            first, second = structmat.gen_split_blocks(k, p)
            yield conj == structmat.block_diag(first, second), (
                f"P^T T P != diag(split blocks), k={k}, p={p}"
            )
            if k % 2 == 0:
                d1 = oracle.det_oracle(first)
                d2 = oracle.det_oracle(second)
                yield d1 == d2, f"det(N) != det(Q): {d1} vs {d2}, k={k}, p={p}"


def _chk_theorem(cfg: VerifyConfig) -> Iterator[tuple[bool, str]]:
    for p in cfg.params:
        for k in range(1, cfg.kmax_oracle + 1):
            for which, gen in (("F", structmat.gen_F), ("G", structmat.gen_G)):
                fast = recurrence.pf_fast(k, p, which)
                brute = oracle.pfaffian_oracle(gen(k, p))
                yield brute == fast, f"Pf({which}_{2 * k}): oracle {brute} != recurrence {fast}, p={p}"


def _chk_cayley(cfg: VerifyConfig) -> Iterator[tuple[bool, str]]:
    for p in cfg.params:
        for k in range(1, cfg.kmax_oracle + 1):
            for which, gen in (("F", structmat.gen_F), ("G", structmat.gen_G)):
                yield oracle.cayley_check(gen(k, p)), f"det != Pf^2 for {which}_{2 * k}, p={p}"


def _chk_four_way(cfg: VerifyConfig) -> Iterator[tuple[bool, str]]:
    for p in cfg.params:
        for k in range(1, cfg.kmax_oracle + 1):
            values = (
                oracle.det_oracle(structmat.gen_F(k, p)),
                recurrence.pf_fast(k, p) ** 2,
                blockdiag.det_blockdiag(k, p),
                blockdiag.det_closed(k, p),
            )
            yield all(v == values[0] for v in values), (
                f"oracle/pf^2/blockdiag/closed disagree {tuple(map(str, values))}, k={k}, p={p}"
            )


def _chk_fast_paths(cfg: VerifyConfig) -> Iterator[tuple[bool, str]]:
    for p in cfg.params:
        for k in range(1, cfg.kmax_fast + 1):
            closed = blockdiag.det_closed(k, p)
            block = blockdiag.det_blockdiag(k, p)
            pf2 = recurrence.pf_fast(k, p) ** 2
            yield closed == block == pf2, (
                f"closed {closed}, blockdiag {block}, pf^2 {pf2} disagree, k={k}, p={p}"
            )


def _chk_corollary(cfg: VerifyConfig) -> Iterator[tuple[bool, str]]:
    for p in cfg.params:
        m = cfg.kmax_fast
        single = recurrence.single_f(m, p)
        coupled = recurrence.coupled_fg(m, p).f
        bad = next((i for i in single.indices() if single[i] != coupled[i]), None)
        yield bad is None, f"single_f != coupled f at index {bad}, p={p}"


def _chk_tables(cfg: VerifyConfig) -> Iterator[tuple[bool, str]]:
    for kind in SequenceKind:
        p = sequences.params_for(kind)
        for k in range(1, cfg.kmax_fast + 1):
            pf = recurrence.pf_fast(k, p)
            want = sequences.expected_pf(kind, k)
            yield pf == want, f"{kind.value} k={k}: Pf {pf} != {want}"
            det = blockdiag.det_closed(k, p)
            want = sequences.expected_det(kind, k)
            yield det == want, f"{kind.value} k={k}: det {det} != {want}"


def _chk_degenerate(cfg: VerifyConfig) -> Iterator[tuple[bool, str]]:
    rng = random.Random(cfg.seed + 1)
    cases = [Params(0, 0)]
    for _ in range(max(cfg.trials // 4, 1)):
        x = random_rational(rng)
        cases += [Params(0, x), Params(x, 0)]
    for p in cases:
        for k in range(1, max(cfg.kmax_fast, 20) + 1):
            closed = blockdiag.det_closed(k, p)
            block = blockdiag.det_blockdiag(k, p)
            pf2 = recurrence.pf_fast(k, p) ** 2
            ok = closed == block == pf2
            if ok and k <= min(cfg.kmax_oracle, 4):
                ok = oracle.det_oracle(structmat.gen_F(k, p)) == closed
            yield ok, f"degenerate parameters disagree, k={k}, p={p}"


CHECKS: list[tuple[str, Check]] = [
    ("structure-skew", _chk_structure),
    ("schur-commutation", _chk_schur),
    ("permutation-split", _chk_permutation),
    ("theorem-oracle", _chk_theorem),
    ("cayley", _chk_cayley),
    ("det-four-way", _chk_four_way),
    ("det-fast-paths", _chk_fast_paths),
    ("corollary", _chk_corollary),
    ("tables", _chk_tables),
    ("degenerate", _chk_degenerate),
]


def cmd_verify(kmax_oracle: int = 5, kmax_fast: int = 40, trials: int = 20,
               seed: int = 0) -> list[CheckResult]:
    """Run every cross-method invariant; stops each check at its first failure."""
    if not 1 <= kmax_oracle <= VERIFY_ORACLE_KMAX:
        raise UsageError(f"kmax-oracle must be in 1..{VERIFY_ORACLE_KMAX}, got {kmax_oracle}")
    if kmax_fast < 1 or trials < 1:
        raise UsageError("kmax-fast and trials must be >= 1")
    _require_oracle_order(2 * kmax_oracle, oracle.DET_ORDER_CAP)
    rng = random.Random(seed)
    cfg = VerifyConfig(kmax_oracle, kmax_fast, trials, seed, random_params(rng, trials))
    results = []
    for name, check in CHECKS:
        result = CheckResult(name)
        for ok, message in check(cfg):
            result.checks += 1
            if not ok:
                result.failure = message
                break
        results.append(result)
    return results


# --- bench ------------------------------------------------------------------

BENCH_FIELDS = ("k", "method", "elapsed_ns", "digits")


def _digits(value: object) -> int:
    return sum(ch.isdigit() for ch in _scalar_text(value))


def cmd_bench(kmax: int, step: int = 1, family: str = "fibonacci") -> list[dict]:
    """Time the O(k) paths at k = step, 2 step, ..., kmax; oracles only within caps."""
    if kmax < 1 or step < 1:
        raise UsageError("kmax and step must be >= 1")
    try:
        p = sequences.params_for(SequenceKind.parse(family))
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    pf_cap = oracle.oracle_cap()
    det_cap = min(oracle.DET_ORDER_CAP, pf_cap)
    methods: list[tuple[str, Callable[[int], object], int]] = [
        ("pf-recurrence", lambda k: recurrence.pf_fast(k, p), sys.maxsize),
        ("det-closed", lambda k: blockdiag.det_closed(k, p), sys.maxsize),
        ("pf-oracle", lambda k: oracle.pfaffian_oracle(structmat.gen_F(k, p)), pf_cap),
        ("det-oracle", lambda k: oracle.det_oracle(structmat.gen_F(k, p)), det_cap),
    ]
    rows = []
    for k in range(step, kmax + 1, step):
        for name, fn, cap in methods:
            if 2 * k > cap:
                continue
            value, elapsed = _timed(lambda: fn(k))
            rows.append({"k": k, "method": name, "elapsed_ns": elapsed, "digits": _digits(value)})
    return rows


# --- argument parsing -------------------------------------------------------


def _normalize_argv(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1/2" as an option; glue value flags to their argument.
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _add_param_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--k", type=_positive_int, required=True, help="half order: F has order 2k")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--alpha", type=_rational_arg, help="a**2 as p, -p or p/q")
    group.add_argument("--a-squared", dest="alpha", type=_rational_arg,
                       help="alias for --alpha")
    sp.add_argument("--b", type=_rational_arg, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--dump", action="store_true", help="also emit the matrix F_2k")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfaffkit",
        description="Exact Pfaffians and determinants of skew-centrosymmetric F_2k / G_2k.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("pf", help="Pfaffian of F_2k")
    _add_param_args(sp)
    sp.add_argument("--method", choices=("recurrence", "oracle"), default="recurrence")
    sp.add_argument("--g", action="store_true", help="also report Pf(G_2k)")

    sp = sub.add_parser("det", help="determinant of F_2k")
    _add_param_args(sp)
    sp.add_argument("--method", choices=DET_METHODS, default="closed")

    sp = sub.add_parser("table", help="Pf and det against Fibonacci/Pell/Jacobsthal numbers")
    sp.add_argument("--family", choices=[k.value for k in SequenceKind], required=True)
    sp.add_argument("--kmax", type=_positive_int, default=8)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")

    sp = sub.add_parser("verify", help="run every cross-method invariant")
    sp.add_argument("--kmax-oracle", type=int, default=5)
    sp.add_argument("--kmax-fast", type=_positive_int, default=40)
    sp.add_argument("--trials", type=_positive_int, default=20)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("bench", help="timing of fast paths versus oracles")
    sp.add_argument("--kmax", type=_positive_int, required=True)
    sp.add_argument("--step", type=_positive_int, default=1)
    sp.add_argument("--family", choices=[k.value for k in SequenceKind], default="fibonacci")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def _emit_report(report: dict, fmt: str, label: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report) + "\n")
        return
    params = report["params"]
    out.write(f"{label}: {report['value']}\n")
    if "value_g" in report:
        out.write(f"{label}_g: {report['value_g']}\n")
    out.write(f"k: {params['k']}\nalpha: {params['alpha']}\nb: {params['b']}\n")
    out.write(f"method: {report['method']}\nelapsed_ns: {report['elapsed_ns']}\n")
    if "matrix" in report:
        cells = report["matrix"]
        width = max(len(c) for r in cells for c in r)
        for r in cells:
            out.write(" ".join(c.rjust(width) for c in r) + "\n")


def _run(args: argparse.Namespace, out, err) -> int:
    if args.command in ("pf", "det"):
        p = Params(args.alpha, args.b)
        if args.command == "pf":
            report = cmd_pf(args.k, p, args.method, with_g=args.g, dump=args.dump)
            _emit_report(report, args.format, "pfaffian", out)
        else:
            report = cmd_det(args.k, p, args.method, dump=args.dump)
            _emit_report(report, args.format, "determinant", out)
        return EXIT_OK

    if args.command == "table":
        rows = cmd_table(args.family, args.kmax)
        if args.format == "json":
            out.write(json.dumps({"command": "table", "family": args.family, "rows": rows}) + "\n")
        else:
            out.write(_csv_text(TABLE_FIELDS, rows))
        mismatched = [r["k"] for r in rows if not (r["pf_match"] and r["det_match"])]
        if mismatched:
            err.write(f"table mismatch at k = {mismatched}\n")
            return EXIT_FAIL
        return EXIT_OK

    if args.command == "verify":
        results = cmd_verify(args.kmax_oracle, args.kmax_fast, args.trials, args.seed)
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            out.write(f"{status} {r.name} ({r.checks} checks)\n")
            if r.failure:
                out.write(f"  counterexample: {r.failure}\n")
        failed = [r for r in results if not r.passed]
        out.write(f"{len(results) - len(failed)}/{len(results)} invariants passed\n")
        return EXIT_FAIL if failed else EXIT_OK

    if args.command == "bench":
        rows = cmd_bench(args.kmax, args.step, args.family)
        if args.format == "json":
            out.write(json.dumps(rows) + "\n")
        else:
            out.write(_csv_text(BENCH_FIELDS, rows))
        return EXIT_OK

    raise UsageError(f"unknown command {args.command!r}")  # pragma: no cover


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_normalize_argv(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, out, err)
    except UsageError as exc:
        err.write(f"pfaffkit: usage error: {exc}\n")
        return EXIT_USAGE
    except ResourceError as exc:
        err.write(f"pfaffkit: resource cap: {exc}\n")
        return EXIT_RESOURCE
    except DomainError as exc:
        err.write(f"pfaffkit: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
