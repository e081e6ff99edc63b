"""Command-line verification harness.

Subcommands:

    girard-lab verify theorem1 --m M --r R
    girard-lab verify theorem2 (--graph PATH | --random --n N --k K
                                [--density D] [--weight-bound W]
                                [--trials T] [--seed S]) --r R [--literal-ell]
    girard-lab verify theorem3 --r R --n N
    girard-lab verify newton-girard --n N --r R (--roots CSV | --random
                                [--trials T] [--seed S])
    girard-lab verify lemma21 --alpha A (--c CSV | --random [--m M]
                                [--trials T] [--seed S])
    girard-lab involution audit (--graph PATH | --random ...) --r R
    girard-lab powersum --m M --n N --method {stirling,bernoulli,direct,all}

theorem1 is the symbolic generalized power-sum identity, theorem2 the
walk/cycle identity on colored digraphs, theorem3 its multi-alphabet
specialization, lemma21 the binomial-transform power-sum check.

Every run prints a text summary to stdout and, with --out FILE, writes a
JSON report {"command", "params", "trials", "failures", "elapsed_ms",
"seed", "notes"}.  Reports for identical argv and seed are byte-identical
except for elapsed_ms.  When --seed is omitted the GIRARD_LAB_SEED
environment variable is used, then 0.

Exit codes: 0 all checks passed, 1 verification failure, 2 usage error,
3 malformed graph file.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass, field

from .digraph import (
    ColoredDigraph,
    GraphFormatError,
    parse_digraph,
    random_digraph,
    validate,
)
from .involution import audit_involution
from .newton import (
    cross_check_against_loops,
    verify_classical_newton_girard,
    verify_colored_newton_girard,
    verify_walk_cycle_identity,
)
from .powersum import (
    good_word_sum,
    power_sum_direct,
    power_sum_lhs,
    power_sum_rhs,
    power_sum_via_bernoulli,
    power_sum_via_stirling,
    verify_binomial_transform,
)

__all__ = ["main", "build_parser", "RunReport"]

DEFAULT_SEED = 0
SEED_ENV_VAR = "GIRARD_LAB_SEED"

PREFACTOR_NOTE = (
    "stirling method uses the prefactor-free formula; the 1/(m+1)-scaled "
    "variant fails already at m = n = 1"
)
AGGREGATION_NOTE = (
    "closing term aggregates ell(r, S) over all size-r color sets; "
    "--literal-ell checks the single-set ell(r, C) form, valid when k = r"
)


class UsageError(Exception):
    """A parameter problem argparse cannot catch (exit code 2)."""


@dataclass
class RunReport:
    command: str
    params: dict
    trials: int = 0
    failures: list = field(default_factory=list)
    seed: int | None = None
    notes: list = field(default_factory=list)
    elapsed_ms: int = 0

    def to_json(self) -> str:
        obj = {
            "command": self.command,
            "params": self.params,
            "trials": self.trials,
            "failures": self.failures,
            "elapsed_ms": self.elapsed_ms,
            "seed": self.seed,
            "notes": self.notes,
        }
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _resolve_seed(args: argparse.Namespace) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{SEED_ENV_VAR} must be an integer, got {env!r}")
    return DEFAULT_SEED


def _parse_csv_ints(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"--{what} must be a comma-separated list of integers")


def _load_graph(path: str) -> ColoredDigraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}")
    g = parse_digraph(text)
    problems = validate(g)
    if problems:
        raise GraphFormatError("; ".join(problems))
    return g


def _random_graphs(args: argparse.Namespace, seed: int) -> list[tuple[int, ColoredDigraph]]:
    rng = random.Random(seed)
    out = []
    for _ in range(args.trials):
        graph_seed = rng.randrange(2**31)
        out.append(
            (graph_seed, random_digraph(args.n, args.k, args.density, args.weight_bound, graph_seed))
        )
    return out


# -- subcommand handlers ----------------------------------------------------


def _run_theorem1(args) -> RunReport:
    report = RunReport(
        command="verify theorem1", params={"m": args.m, "r": args.r}, trials=1
    )
    lhs = power_sum_lhs(args.m, args.r)
    rhs = power_sum_rhs(args.m, args.r)
    words = good_word_sum(args.m, args.r)
    if not (lhs == rhs == words):
        report.failures.append(
            {"m": args.m, "r": args.r, "lhs": str(lhs), "rhs": str(rhs),
             "good_words": str(words)}
        )
    return report


def _run_theorem2(args) -> RunReport:
    params = {"r": args.r, "literal_ell": bool(args.literal_ell)}
    report = RunReport(command="verify theorem2", params=params)
    report.notes.append(AGGREGATION_NOTE)
    if args.graph is not None:
        params["graph"] = args.graph
        instances = [(None, _load_graph(args.graph))]
    else:
        seed = _resolve_seed(args)
        report.seed = seed
        params.update(
            {"n": args.n, "k": args.k, "density": args.density,
             "weight_bound": args.weight_bound, "trials": args.trials}
        )
        instances = _random_graphs(args, seed)
    for idx, (graph_seed, g) in enumerate(instances):
        report.trials += 1
        res = verify_walk_cycle_identity(g, args.r)
        residual = res.literal_residual if args.literal_ell else res.residual
        if args.r > g.colors:
            report.notes.append(f"instance {idx}: vacuous: r exceeds color count")
        if not residual.is_zero:
            report.failures.append(
                {"instance": idx, "graph_seed": graph_seed, "n": g.n,
                 "k": g.colors, "case": res.case, "residual": str(residual)}
            )
    return report


def _run_theorem3(args) -> RunReport:
    report = RunReport(
        command="verify theorem3", params={"r": args.r, "n": args.n}, trials=1
    )
    res = verify_colored_newton_girard(args.r, args.n)
    report.notes.extend(res.notes)
    if not res.residual.is_zero:
        report.failures.append(
            {"r": args.r, "n": args.n, "residual": str(res.residual)}
        )
    elif not cross_check_against_loops(args.r, args.n):
        report.failures.append(
            {"r": args.r, "n": args.n,
             "residual": "symbolic and all-loops-graph paths disagree"}
        )
    return report


def _run_newton_girard(args) -> RunReport:
    params = {"n": args.n, "r": args.r}
    report = RunReport(command="verify newton-girard", params=params)
    if args.roots is not None:
        roots = _parse_csv_ints(args.roots, "roots")
        if len(roots) != args.n:
            raise UsageError(f"--roots must list exactly n = {args.n} integers")
        params["roots"] = roots
        trials = [roots]
    else:
        seed = _resolve_seed(args)
        report.seed = seed
        params["trials"] = args.trials
        rng = random.Random(seed)
        trials = [
            [rng.randint(-5, 5) for _ in range(args.n)] for _ in range(args.trials)
        ]
    for idx, roots in enumerate(trials):
        report.trials += 1
        if not verify_classical_newton_girard(roots, args.r):
            report.failures.append({"instance": idx, "roots": roots})
    return report


def _run_lemma21(args) -> RunReport:
    params = {"alpha": args.alpha}
    report = RunReport(command="verify lemma21", params=params)
    if args.c is not None:
        c = _parse_csv_ints(args.c, "c")
        if not c:
            raise UsageError("--c needs at least one entry")
        params["c"] = c
        trials = [c]
    else:
        seed = _resolve_seed(args)
        report.seed = seed
        params.update({"m": args.m, "trials": args.trials})
        rng = random.Random(seed)
        trials = [
            [rng.randint(-5, 5) for _ in range(args.m)] for _ in range(args.trials)
        ]
    for idx, c in enumerate(trials):
        report.trials += 1
        if not verify_binomial_transform(args.alpha, c):
            report.failures.append({"instance": idx, "c": c})
    return report


def _run_involution_audit(args) -> RunReport:
    params = {"r": args.r}
    report = RunReport(command="involution audit", params=params)
    if args.graph is not None:
        params["graph"] = args.graph
        instances = [(None, _load_graph(args.graph))]
    else:
        seed = _resolve_seed(args)
        report.seed = seed
        params.update(
            {"n": args.n, "k": args.k, "density": args.density,
             "weight_bound": args.weight_bound, "trials": args.trials}
        )
        instances = _random_graphs(args, seed)
    for idx, (graph_seed, g) in enumerate(instances):
        report.trials += 1
        audit = audit_involution(g, args.r)
        if not audit.ok:
            report.failures.append(
                {"instance": idx, "graph_seed": graph_seed,
                 "problems": list(audit.problems), "total": str(audit.total)}
            )
    return report


def _run_powersum(args) -> RunReport:
    params = {"m": args.m, "n": args.n, "method": args.method}
    report = RunReport(command="powersum", params=params, trials=1)
    values = {}
    if args.method in ("direct", "all"):
        values["direct"] = power_sum_direct(args.m, args.n)
    if args.method in ("stirling", "all"):
        values["stirling"] = power_sum_via_stirling(args.m, args.n)
        report.notes.append(PREFACTOR_NOTE)
    if args.method in ("bernoulli", "all"):
        below = power_sum_via_bernoulli(args.m, args.n)
        if below.denominator != 1:
            report.failures.append(
                {"m": args.m, "n": args.n,
                 "error": f"bernoulli formula not integer-valued: {below}"}
            )
        # the bernoulli formula sums k^m below n; add n^m for the full sum
        values["bernoulli"] = int(below) + args.n**args.m
    for name in sorted(values):
        report.notes.append(f"value {name} = {values[name]}")
    if len(set(values.values())) > 1:
        report.failures.append(
            {"m": args.m, "n": args.n,
             "values": {k: str(v) for k, v in sorted(values.items())}}
        )
    return report


# -- parser and driver -------------------------------------------------------


def _add_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", metavar="PATH", help="write a JSON report here")


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", metavar="PATH", help="graph JSON file")
    source.add_argument(
        "--random", action="store_true", help="verify seeded random graphs"
    )
    p.add_argument("--n", type=int, help="vertex count for --random")
    p.add_argument("--k", type=int, help="color count for --random")
    p.add_argument("--density", type=float, default=1.0,
                   help="edge probability for --random (default 1.0)")
    p.add_argument("--weight-bound", type=int, default=3,
                   help="weights drawn from nonzero [-W, W] (default 3)")
    p.add_argument("--trials", type=int, default=10,
                   help="number of random graphs (default 10)")
    p.add_argument("--seed", type=int, help=f"RNG seed (default ${SEED_ENV_VAR} or 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="girard-lab",
        description="Exact verification of power-sum and colored "
        "Newton-Girard identities.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    verify = top.add_parser("verify", help="verify one of the identities")
    which = verify.add_subparsers(dest="target", required=True)

    t1 = which.add_parser("theorem1", help="generalized power-sum identity")
    t1.add_argument("--m", type=int, required=True)
    t1.add_argument("--r", type=int, required=True)
    _add_out(t1)
    t1.set_defaults(run=_run_theorem1)

    t2 = which.add_parser("theorem2", help="walk/cycle identity on a digraph")
    _add_graph_source(t2)
    t2.add_argument("--r", type=int, required=True)
    t2.add_argument("--literal-ell", action="store_true",
                    help="use the single-set ell(r, C) closing term")
    _add_out(t2)
    t2.set_defaults(run=_run_theorem2)

    t3 = which.add_parser("theorem3", help="multi-alphabet Newton-Girard identity")
    t3.add_argument("--r", type=int, required=True)
    t3.add_argument("--n", type=int, required=True)
    _add_out(t3)
    t3.set_defaults(run=_run_theorem3)

    ng = which.add_parser("newton-girard", help="classical Newton-Girard on roots")
    ng.add_argument("--n", type=int, required=True)
    ng.add_argument("--r", type=int, required=True)
    source = ng.add_mutually_exclusive_group(required=True)
    source.add_argument("--roots", help="comma-separated integer roots")
    source.add_argument("--random", action="store_true")
    ng.add_argument("--trials", type=int, default=20)
    ng.add_argument("--seed", type=int)
    _add_out(ng)
    ng.set_defaults(run=_run_newton_girard)

    lm = which.add_parser("lemma21", help="binomial-transform power-sum check")
    lm.add_argument("--alpha", type=int, required=True)
    source = lm.add_mutually_exclusive_group(required=True)
    source.add_argument("--c", help="comma-separated integer sequence c_1..c_m")
    source.add_argument("--random", action="store_true")
    lm.add_argument("--m", type=int, default=6, help="sequence length for --random")
    lm.add_argument("--trials", type=int, default=20)
    lm.add_argument("--seed", type=int)
    _add_out(lm)
    lm.set_defaults(run=_run_lemma21)

    inv = top.add_parser("involution", help="involution machinery")
    inv_which = inv.add_subparsers(dest="target", required=True)
    audit = inv_which.add_parser("audit", help="exhaustive pairing audit")
    _add_graph_source(audit)
    audit.add_argument("--r", type=int, required=True)
    _add_out(audit)
    audit.set_defaults(run=_run_involution_audit)

    ps = top.add_parser("powersum", help="compute 1^m + ... + n^m several ways")
    ps.add_argument("--m", type=int, required=True)
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--method", required=True,
                    choices=["stirling", "bernoulli", "direct", "all"])
    _add_out(ps)
    ps.set_defaults(run=_run_powersum)

    return parser


def _check_random_args(args: argparse.Namespace) -> None:
    if getattr(args, "random", False) and hasattr(args, "n"):
        if getattr(args, "graph", None) is None and hasattr(args, "k"):
            if args.n is None or args.k is None:
                raise UsageError("--random needs --n and --k")
            if args.n < 1 or args.k < 1 or args.trials < 1:
                raise UsageError("--n, --k and --trials must be >= 1")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)

    started = time.perf_counter()
    try:
        _check_random_args(args)
        report = args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GraphFormatError as exc:
        print(f"graph error: {exc}", file=sys.stderr)
        return 3
    report.elapsed_ms = int((time.perf_counter() - started) * 1000)

    passed = not report.failures
    print(f"command: {report.command}")
    print(f"params: {json.dumps(report.params, sort_keys=True)}")
    if report.seed is not None:
        print(f"seed: {report.seed}")
    for note in report.notes:
        print(f"note: {note}")
    for failure in report.failures:
        print(f"FAIL: {json.dumps(failure, sort_keys=True)}")
    print(
        f"result: {'PASS' if passed else 'FAIL'} "
        f"({report.trials - len(report.failures)}/{report.trials} checks)"
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
