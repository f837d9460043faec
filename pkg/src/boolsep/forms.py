"""Form families, solution pairs, three-valued evaluation, feasibility checks.

A pair (theta, theta_prime) of same-family forms encodes a partial Boolean
function: value 1 where the first form fires, 0 where the second fires,
undefined elsewhere; the pair must never fire together.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Optional

from . import bdt, dnf, obdd
from .core import Assignment, LabeledData, TriValue, VarUniverse, iter_assignments
from .errors import ContradictoryPair, ParseError

EXHAUSTIVE_WIDTH_LIMIT = 12
SAMPLE_POINTS = 4096


@dataclass(frozen=True)
class FormFamily:
    name: str
    evaluate: Callable[[Any, Assignment], int]
    negate: Optional[Callable[[Any], Any]]
    regularizers: Mapping[str, Callable[[Any], int]]
    to_obj: Callable[[Any, VarUniverse], Any]
    from_obj: Callable[[Any, VarUniverse], Any]


FAMILIES: dict[str, FormFamily] = {
    "dnf": FormFamily(
        name="dnf",
        evaluate=dnf.eval_dnf,
        negate=None,  # no complement operator that keeps DNF size bounded
        regularizers={"length": dnf.dnf_length, "depth": dnf.dnf_depth},
        to_obj=dnf.dnf_to_obj,
        from_obj=dnf.dnf_from_obj,
    ),
    "bdt": FormFamily(
        name="bdt",
        evaluate=bdt.eval_tree,
        negate=bdt.negate_tree,
        regularizers={"nodes": bdt.tree_nodes, "depth": bdt.tree_depth},
        to_obj=bdt.tree_to_obj,
        from_obj=bdt.tree_from_obj,
    ),
    "obdd": FormFamily(
        name="obdd",
        evaluate=obdd.eval_obdd,
        negate=obdd.negate_obdd,
        regularizers={"interior": obdd.obdd_interior_nodes, "width": obdd.obdd_width},
        to_obj=obdd.obdd_to_obj,
        from_obj=obdd.obdd_from_obj,
    ),
}


def get_family(name: str) -> FormFamily:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown form family {name!r}") from None


@dataclass(frozen=True)
class PairSolution:
    """Two forms of one family over a shared universe."""

    family: str
    universe: VarUniverse
    theta: Any
    theta_prime: Any

    def cost(self, regularizer: str) -> int:
        reg = get_family(self.family).regularizers[regularizer]
        return reg(self.theta) + reg(self.theta_prime)


def eval_partial(pair: PairSolution, x: Assignment) -> TriValue:
    """Three-valued evaluation of the partial function encoded by the pair."""
    fam = get_family(pair.family)
    f = fam.evaluate(pair.theta, x)
    g = fam.evaluate(pair.theta_prime, x)
    if f and g:
        raise ContradictoryPair(f"both forms fire at point {x.bits()}")
    if f:
        return TriValue.ONE
    if g:
        return TriValue.ZERO
    return TriValue.UNDEFINED


@dataclass(frozen=True)
class VerifyResult:
    feasible: bool
    violations: tuple[str, ...]
    exhaustive: bool  # False means the overlap sweep was sampled, not complete


def _sweep_points(universe: VarUniverse, data: LabeledData | None):
    """All points when the universe is small, otherwise a deterministic sample."""
    width = len(universe)
    if width <= EXHAUSTIVE_WIDTH_LIMIT:
        return iter_assignments(universe), True
    rng = random.Random(0)
    words = {x.word for x in data.a_points | data.b_points} if data else set()
    while len(words) < SAMPLE_POINTS:
        words.add(rng.getrandbits(width))
    return (Assignment(w, width) for w in sorted(words)), False


def verify_pair(
    d: LabeledData, pair: PairSolution, require_totality: bool = False
) -> VerifyResult:
    """Check exactness on A and B, non-overlap, and optionally totality.

    Non-overlap is decided exactly for DNF pairs via pairwise term
    compatibility; for trees and diagrams it is swept over all points when
    |J| <= 12 and over a fixed sample otherwise (``exhaustive=False``).
    """
    fam = get_family(pair.family)
    violations = []
    for x in sorted(d.a_points):
        if fam.evaluate(pair.theta, x) != 1:
            violations.append(f"exactness(A): theta is 0 at {x.bits()}")
    for x in sorted(d.b_points):
        if fam.evaluate(pair.theta_prime, x) != 1:
            violations.append(f"exactness(B): theta_prime is 0 at {x.bits()}")

    exhaustive = True
    need_sweep = require_totality
    if pair.family == "dnf":
        if not dnf.dnf_pair_noncontradictory(pair.theta, pair.theta_prime):
            violations.append("overlap: some assignment satisfies both forms")
    else:
        need_sweep = True
    if need_sweep:
        points, exhaustive = _sweep_points(pair.universe, d)
        for x in points:
            f = fam.evaluate(pair.theta, x)
            g = fam.evaluate(pair.theta_prime, x)
            if pair.family != "dnf" and f and g:
                violations.append(f"overlap: both forms fire at {x.bits()}")
                break
            if require_totality and not f and not g:
                violations.append(f"totality: value undefined at {x.bits()}")
                break

    return VerifyResult(not violations, tuple(violations), exhaustive)


def verify_separation(d: LabeledData, family: str, theta) -> VerifyResult:
    """Check that a single form is 1 on all of A and 0 on all of B."""
    fam = get_family(family)
    violations = []
    for x in sorted(d.a_points):
        if fam.evaluate(theta, x) != 1:
            violations.append(f"separation: theta is 0 at A point {x.bits()}")
    for x in sorted(d.b_points):
        if fam.evaluate(theta, x) != 0:
            violations.append(f"separation: theta is 1 at B point {x.bits()}")
    return VerifyResult(not violations, tuple(violations), True)


# ---------------------------------------------------------------------------
# Pair files: {"family": ..., "vars": [...], "theta": ..., "theta_prime": ...}


def pair_to_obj(pair: PairSolution) -> dict:
    fam = get_family(pair.family)
    return {
        "family": pair.family,
        "vars": list(pair.universe.vars),
        "theta": fam.to_obj(pair.theta, pair.universe),
        "theta_prime": fam.to_obj(pair.theta_prime, pair.universe),
    }


def pair_from_obj(obj) -> PairSolution:
    if not isinstance(obj, dict):
        raise ParseError("pair document must be a JSON object")
    expected = {"family", "vars", "theta", "theta_prime"}
    if set(obj) != expected:
        bad = (set(obj) ^ expected) or {"?"}
        raise ParseError(f"pair document must have keys {sorted(expected)}; "
                         f"problem near {sorted(bad)[0]!r}")
    if obj["family"] not in FAMILIES:
        raise ParseError(f"unknown form family {obj['family']!r}")
    fam = FAMILIES[obj["family"]]
    try:
        universe = VarUniverse(tuple(obj["vars"]))
    except (ValueError, TypeError) as e:
        raise ParseError(f"bad variable list: {e}") from None
    theta = fam.from_obj(obj["theta"], universe)
    theta_prime = fam.from_obj(obj["theta_prime"], universe)
    return PairSolution(obj["family"], universe, theta, theta_prime)


def pair_to_json(pair: PairSolution) -> str:
    return json.dumps(pair_to_obj(pair), indent=2) + "\n"


def pair_from_json(text: str) -> PairSolution:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}: {e.msg}") from None
    return pair_from_obj(obj)
