"""Benchmark suites: deterministic records with exact rational ratios.

Records carry wall-clock timings, but timings are emitted only in the JSON
format; the CSV format is fully determined by the seed and configuration so
that repeated runs are byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import named_universe
from .errors import ConfigError, VerificationFailure
from .forms import verify_pair
from .generate import gen_random_setcover
from .reductions import (
    cover_to_dnf_pair,
    dnf_pair_to_cover,
    haussler_data,
    ratio_transfer_report,
)
from .setcover import cover_cost, exact_set_cover, greedy_set_cover
from .solvers import (
    approx_min_length_dnf,
    exact_partial_separation_dnf,
    tight_instance,
)

CSV_COLUMNS = [
    "instance_id",
    "params",
    "solver",
    "regularizer",
    "feasible_cost",
    "oracle_cost",
    "ratio_num",
    "ratio_den",
    "ratio_decimal",
    "seed",
]


@dataclass(frozen=True)
class BenchRecord:
    instance_id: str
    params: dict
    solver: str
    regularizer: str
    feasible_cost: int
    oracle_cost: Optional[int]
    ratio: Optional[Fraction]
    wall_time_ms: float
    seed: Optional[int]

    def csv_row(self) -> list:
        return [
            self.instance_id,
            json.dumps(self.params, sort_keys=True),
            self.solver,
            self.regularizer,
            self.feasible_cost,
            self.oracle_cost if self.oracle_cost is not None else "",
            self.ratio.numerator if self.ratio is not None else "",
            self.ratio.denominator if self.ratio is not None else "",
            repr(float(self.ratio)) if self.ratio is not None else "",
            self.seed if self.seed is not None else "",
        ]

    def to_obj(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "params": self.params,
            "solver": self.solver,
            "regularizer": self.regularizer,
            "feasible_cost": self.feasible_cost,
            "oracle_cost": self.oracle_cost,
            "ratio": (
                f"{self.ratio.numerator}/{self.ratio.denominator}"
                if self.ratio is not None
                else None
            ),
            "ratio_decimal": float(self.ratio) if self.ratio is not None else None,
            "wall_time_ms": self.wall_time_ms,
            "seed": self.seed,
        }


def _require(config: dict, key: str, kind, where: str):
    if key not in config:
        raise ConfigError(f"{where}: missing key {key!r}")
    value = config[key]
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ConfigError(f"{where}: key {key!r} must be a number")
        return float(value)
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ConfigError(f"{where}: key {key!r} must be of type {kind.__name__}")
    return value


def _bench_tight(config: dict) -> list[BenchRecord]:
    sizes = _require(config, "vars", list, "tight suite")
    records = []
    for n in sizes:
        if not isinstance(n, int) or n < 2:
            raise ConfigError(f"tight suite: bad universe size {n!r}")
        universe = named_universe(n)
        k = n - 1
        data = tight_instance(universe, k)
        start = time.perf_counter()
        pair = approx_min_length_dnf(data)
        optimal = exact_partial_separation_dnf(data, "length")
        elapsed = (time.perf_counter() - start) * 1000.0
        for solved in (pair, optimal):
            if not verify_pair(data, solved).feasible:
                raise VerificationFailure(f"tight-{n}: solver output failed verification")
        feasible_cost = pair.cost("length")
        oracle_cost = optimal.cost("length")
        records.append(
            BenchRecord(
                instance_id=f"tight-{n:02d}",
                params={"vars": n, "k": k + 1},
                solver="approx-prime-cover",
                regularizer="length",
                feasible_cost=feasible_cost,
                oracle_cost=oracle_cost,
                ratio=Fraction(feasible_cost, oracle_cost),
                wall_time_ms=elapsed,
                seed=None,
            )
        )
    return records


def _bench_haussler(config: dict) -> list[BenchRecord]:
    count = _require(config, "count", int, "haussler suite")
    seed = _require(config, "seed", int, "haussler suite")
    elements = _require(config, "elements", int, "haussler suite")
    sets = _require(config, "sets", int, "haussler suite")
    density = _require(config, "density", float, "haussler suite")
    if count < 0:
        raise ConfigError("haussler suite: count must be non-negative")
    records = []
    for i in range(count):
        inst_seed = seed + i
        inst = gen_random_setcover(inst_seed, elements, sets, density)
        hd = haussler_data(inst)
        params = {
            "elements": elements,
            "sets": sets,
            "density": density,
            "seed": inst_seed,
        }
        start = time.perf_counter()
        greedy = greedy_set_cover(inst)
        opt_cover = exact_set_cover(inst)
        feasible_pair = cover_to_dnf_pair(inst, greedy)
        optimal_pair = exact_partial_separation_dnf(hd.data, "length")
        elapsed = (time.perf_counter() - start) * 1000.0
        for solved in (feasible_pair, optimal_pair):
            if not verify_pair(hd.data, solved).feasible:
                raise VerificationFailure(
                    f"haussler-{i:03d}: solution failed verification"
                )
        mapped = dnf_pair_to_cover(inst, feasible_pair)
        report = ratio_transfer_report(
            feasible_pair,
            optimal_pair,
            mapped_cost=cover_cost(inst, mapped),
            optimal_target_cost=cover_cost(inst, opt_cover),
            regularizer="length",
        )
        if not report.inequality_holds:
            raise VerificationFailure(
                f"haussler-{i:03d}: ratio-transfer inequality violated"
            )
        records.append(
            BenchRecord(
                instance_id=f"haussler-{i:03d}",
                params=params,
                solver="greedy-cover-pair",
                regularizer="length",
                feasible_cost=feasible_pair.cost("length"),
                oracle_cost=optimal_pair.cost("length"),
                ratio=Fraction(
                    feasible_pair.cost("length"), optimal_pair.cost("length")
                ),
                wall_time_ms=elapsed,
                seed=inst_seed,
            )
        )
        records.append(
            BenchRecord(
                instance_id=f"haussler-{i:03d}",
                params=params,
                solver="exact-pair",
                regularizer="length",
                feasible_cost=optimal_pair.cost("length"),
                oracle_cost=2 * cover_cost(inst, opt_cover),
                ratio=Fraction(
                    optimal_pair.cost("length"), 2 * cover_cost(inst, opt_cover)
                ),
                wall_time_ms=elapsed,
                seed=inst_seed,
            )
        )
    return records


SUITES = {"tight": _bench_tight, "haussler": _bench_haussler}


def run_bench(config: dict) -> list[BenchRecord]:
    """Run a configured suite; every recorded solution is re-verified first."""
    if not isinstance(config, dict):
        raise ConfigError("configuration must be a JSON object")
    suite = config.get("suite")
    if suite not in SUITES:
        raise ConfigError(f"unknown suite {suite!r}; expected one of {sorted(SUITES)}")
    return SUITES[suite](config)


def records_to_csv(records: list[BenchRecord]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(record.csv_row())
    return out.getvalue()


def records_to_json(records: list[BenchRecord]) -> str:
    return json.dumps([r.to_obj() for r in records], indent=2) + "\n"
