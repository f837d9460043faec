"""Command-line front end: generators, solvers, reductions, verification, bench.

Exit codes: 0 success, 2 verification failure, 3 budget exceeded,
4 parse/config error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import records_to_csv, records_to_json, run_bench
from .core import named_universe, parse_instance, serialize_instance
from .errors import (
    BoolsepError,
    BudgetExceeded,
    ConfigError,
    InfeasibleInput,
    InfeasiblePair,
    InvalidParams,
    ParseError,
    VerificationFailure,
)
from .forms import get_family, pair_from_json, pair_to_json, verify_pair
from .generate import gen_random_labeled_data, gen_random_setcover
from .reductions import (
    cover_to_dnf_pair,
    dnf_pair_to_cover,
    haussler_data,
    ratio_transfer_report,
)
from .setcover import (
    cover_cost,
    cover_from_obj,
    cover_to_obj,
    exact_set_cover,
    setcover_from_json,
    setcover_to_json,
)
from .solvers import (
    SolveBudget,
    approx_min_length_dnf,
    exact_partial_separation_dnf,
    negation_based_partial_solver,
    tight_instance,
)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}") from None


def _pair_metrics(pair) -> dict:
    fam = get_family(pair.family)
    metrics = {}
    for name, reg in fam.regularizers.items():
        metrics[name] = {
            "theta": reg(pair.theta),
            "theta_prime": reg(pair.theta_prime),
            "total": reg(pair.theta) + reg(pair.theta_prime),
        }
    if pair.family == "bdt":
        from .bdt import tree_internal_nodes

        metrics["internal_nodes"] = {
            "theta": tree_internal_nodes(pair.theta),
            "theta_prime": tree_internal_nodes(pair.theta_prime),
            "total": tree_internal_nodes(pair.theta)
            + tree_internal_nodes(pair.theta_prime),
        }
    return metrics


def _cmd_gen(args) -> int:
    if args.kind == "tight":
        universe = named_universe(args.vars)
        k = (args.k if args.k is not None else args.vars) - 1
        data = tight_instance(universe, k)
        _emit(serialize_instance(data), args.out)
    elif args.kind == "setcover":
        inst = gen_random_setcover(args.seed, args.elements, args.sets, args.density)
        _emit(setcover_to_json(inst), args.out)
    elif args.kind == "data":
        data = gen_random_labeled_data(args.seed, args.vars, args.a_size, args.b_size)
        _emit(serialize_instance(data), args.out)
    elif args.kind == "haussler":
        inst = gen_random_setcover(args.seed, args.elements, args.sets, args.density)
        hd = haussler_data(inst)
        _emit(serialize_instance(hd.data), args.out)
    return 0


def _cmd_solve(args) -> int:
    data = parse_instance(_read(args.instance))
    if args.mode == "exact":
        if args.family != "dnf":
            raise InvalidParams("exact search is available for the dnf family only")
        budget = SolveBudget(
            max_total_regularizer=args.max_reg, node_budget=args.node_budget
        )
        pair = exact_partial_separation_dnf(data, args.reg, budget)
    elif args.mode == "approx":
        if args.family != "dnf":
            raise InvalidParams("the prime-cover approximation applies to dnf only")
        pair = approx_min_length_dnf(data, cover_rule=args.cover_rule)
    else:  # negation
        if args.family == "dnf":
            raise InvalidParams("dnf has no complement operator; use bdt or obdd")
        pair = negation_based_partial_solver(data, args.family)
    _emit(pair_to_json(pair), args.out)
    print(json.dumps(_pair_metrics(pair), sort_keys=True), file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    data = parse_instance(_read(args.instance))
    pair = pair_from_json(_read(args.solution))
    if pair.universe.vars != data.universe.vars:
        raise VerificationFailure(
            "solution variables do not match the instance variables"
        )
    result = verify_pair(data, pair, require_totality=args.totality)
    for violation in result.violations:
        print(violation, file=sys.stderr)
    if not result.exhaustive:
        print("warning: overlap check was sampled, not exhaustive", file=sys.stderr)
    if not result.feasible:
        raise VerificationFailure(f"{len(result.violations)} violation(s)")
    print(json.dumps({"feasible": True, "metrics": _pair_metrics(pair)},
                     sort_keys=True))
    return 0


def _cmd_reduce(args) -> int:
    inst = setcover_from_json(_read(args.instance))
    if args.kind == "haussler":
        hd = haussler_data(inst)
        _emit(serialize_instance(hd.data), args.out)
    elif args.kind == "cover-to-pair":
        cover = cover_from_obj(_load_json(args.cover))
        pair = cover_to_dnf_pair(inst, cover)
        _emit(pair_to_json(pair), args.out)
    elif args.kind == "pair-to-cover":
        pair = pair_from_json(_read(args.pair))
        cover = dnf_pair_to_cover(inst, pair)
        _emit(json.dumps(cover_to_obj(cover), indent=2) + "\n", args.out)
    return 0


def _cmd_report(args) -> int:
    inst = setcover_from_json(_read(args.instance))
    hd = haussler_data(inst)
    pair = pair_from_json(_read(args.pair))
    mapped = dnf_pair_to_cover(inst, pair)  # verifies feasibility eagerly
    optimal_pair = exact_partial_separation_dnf(hd.data, args.reg)
    optimal_cover = exact_set_cover(inst)
    report = ratio_transfer_report(
        pair,
        optimal_pair,
        mapped_cost=cover_cost(inst, mapped),
        optimal_target_cost=cover_cost(inst, optimal_cover),
        regularizer=args.reg,
    )
    _emit(json.dumps(report.to_obj(), indent=2) + "\n", args.out)
    if not report.inequality_holds:
        raise VerificationFailure("ratio-transfer inequality violated")
    return 0


def _cmd_bench(args) -> int:
    config = _load_json(args.config)
    records = run_bench(config)
    text = records_to_csv(records) if args.format == "csv" else records_to_json(records)
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolsep",
        description="Pairs of Boolean forms separating labeled data: "
        "generators, solvers, reductions, verification, benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", help="output file (default: stdout)")

    gen = sub.add_parser("gen", help="generate instances")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    g_tight = gen_sub.add_parser("tight", help="worst-case unit-vector data")
    g_tight.add_argument("--vars", type=int, required=True)
    g_tight.add_argument(
        "--k", type=int, default=None,
        help="1-based position of the lone negative unit vector (default: last)",
    )
    add_out(g_tight)
    g_cov = gen_sub.add_parser("setcover", help="random coverable set-cover instance")
    g_data = gen_sub.add_parser("data", help="random labeled data")
    g_haus = gen_sub.add_parser(
        "haussler", help="labeled data derived from a random set-cover instance"
    )
    for p in (g_cov, g_haus):
        p.add_argument("--seed", type=int, required=True)
        p.add_argument("--elements", type=int, required=True)
        p.add_argument("--sets", type=int, required=True)
        p.add_argument("--density", type=float, required=True)
        add_out(p)
    g_data.add_argument("--seed", type=int, required=True)
    g_data.add_argument("--vars", type=int, required=True)
    g_data.add_argument("--a-size", type=int, required=True)
    g_data.add_argument("--b-size", type=int, required=True)
    add_out(g_data)
    gen.set_defaults(func=_cmd_gen)

    solve = sub.add_parser("solve", help="solve a labeled-data instance")
    solve.add_argument("--instance", required=True)
    solve.add_argument("--family", choices=["dnf", "bdt", "obdd"], default="dnf")
    solve.add_argument("--reg", choices=["length", "depth"], default="length")
    solve.add_argument("--mode", choices=["exact", "approx", "negation"],
                       default="exact")
    solve.add_argument("--max-reg", type=int, default=1_000_000_000,
                       help="ceiling on the total regularizer for exact search")
    solve.add_argument("--node-budget", type=int, default=5_000_000)
    solve.add_argument("--cover-rule", choices=["length", "count"], default="length",
                       help="greedy weighting for the prime-cover approximation")
    add_out(solve)
    solve.set_defaults(func=_cmd_solve)

    verify = sub.add_parser("verify", help="verify a solution pair against data")
    verify.add_argument("--instance", required=True)
    verify.add_argument("--solution", required=True)
    verify.add_argument("--totality", action="store_true",
                        help="additionally require the pair to be total")
    verify.set_defaults(func=_cmd_verify)

    reduce_p = sub.add_parser("reduce", help="apply instance/solution mappings")
    reduce_sub = reduce_p.add_subparsers(dest="kind", required=True)
    r_haus = reduce_sub.add_parser(
        "haussler", help="set-cover instance to labeled data"
    )
    r_haus.add_argument("--instance", required=True)
    add_out(r_haus)
    r_c2p = reduce_sub.add_parser("cover-to-pair", help="cover to DNF pair")
    r_c2p.add_argument("--instance", required=True)
    r_c2p.add_argument("--cover", required=True)
    add_out(r_c2p)
    r_p2c = reduce_sub.add_parser("pair-to-cover", help="DNF pair to cover")
    r_p2c.add_argument("--instance", required=True)
    r_p2c.add_argument("--pair", required=True)
    add_out(r_p2c)
    reduce_p.set_defaults(func=_cmd_reduce)

    report = sub.add_parser("report", help="ratio-transfer reports")
    report_sub = report.add_subparsers(dest="kind", required=True)
    r_ratio = report_sub.add_parser("ratio", help="compare mapped and pair ratios")
    r_ratio.add_argument("--instance", required=True, help="set-cover instance file")
    r_ratio.add_argument("--pair", required=True, help="feasible DNF pair file")
    r_ratio.add_argument("--reg", choices=["length", "depth"], default="length")
    add_out(r_ratio)
    report.set_defaults(func=_cmd_report)

    bench = sub.add_parser("bench", help="run a benchmark suite")
    bench.add_argument("--config", required=True)
    bench.add_argument("--format", choices=["csv", "json"], default="csv")
    add_out(bench)
    bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        if e.lower_bound is not None:
            print(f"certified lower bound: {e.lower_bound}", file=sys.stderr)
        return 3
    except (VerificationFailure, InfeasibleInput, InfeasiblePair) as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return 2
    except (ParseError, ConfigError, InvalidParams) as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except BoolsepError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
