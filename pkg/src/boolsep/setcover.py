"""Set cover: instances, a greedy approximation, and an exact branch-and-bound.

The exact solver is meant for desk-scale instances (soft limit around 25
subsets); it branches on the uncovered element contained in the fewest
subsets and prunes with a per-element fractional lower bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import BudgetExceeded, ParseError, Uncoverable


@dataclass(frozen=True)
class SetCoverInstance:
    universe: tuple
    sets: tuple[frozenset, ...]
    weights: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(self.weights))
        if not self.universe:
            raise ValueError("universe must be non-empty")
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("universe elements must be distinct")
        if not self.sets:
            raise ValueError("family must contain at least one subset")
        elements = set(self.universe)
        for i, s in enumerate(self.sets):
            if not s <= elements:
                raise ValueError(f"subset {i} contains elements outside the universe")
        if self.weights is not None:
            if len(self.weights) != len(self.sets):
                raise ValueError("one weight per subset required")
            if any(w <= 0 for w in self.weights):
                raise ValueError("weights must be positive")

    def weight(self, i: int) -> int:
        return 1 if self.weights is None else self.weights[i]


@dataclass(frozen=True)
class Cover:
    chosen: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "chosen", frozenset(self.chosen))


def cover_is_feasible(inst: SetCoverInstance, cover: Cover) -> bool:
    covered = set()
    for i in cover.chosen:
        if not 0 <= i < len(inst.sets):
            return False
        covered |= inst.sets[i]
    return covered == set(inst.universe)


def cover_cost(inst: SetCoverInstance, cover: Cover) -> int:
    return sum(inst.weight(i) for i in cover.chosen)


def _check_coverable(inst: SetCoverInstance) -> None:
    covered = set().union(*inst.sets)
    missing = set(inst.universe) - covered
    if missing:
        raise Uncoverable(f"element {sorted(missing, key=repr)[0]!r} is in no subset")


def greedy_set_cover(inst: SetCoverInstance) -> Cover:
    """Feasible cover; picks the subset covering the most new elements, or, in
    weighted mode, the most new elements per unit cost. Ties go to the lowest
    subset index."""
    _check_coverable(inst)
    uncovered = set(inst.universe)
    chosen = set()
    while uncovered:
        best_i, best_gain = None, Fraction(0)
        for i, s in enumerate(inst.sets):
            if i in chosen:
                continue
            new = len(s & uncovered)
            if new == 0:
                continue
            gain = Fraction(new, inst.weight(i))
            if gain > best_gain:
                best_i, best_gain = i, gain
        chosen.add(best_i)
        uncovered -= inst.sets[best_i]
    return Cover(frozenset(chosen))


def _fractional_bound(inst: SetCoverInstance, uncovered: set) -> Fraction:
    """Valid lower bound on the cost of covering the given elements: each
    element pays at least the cheapest per-element rate of any subset."""
    total = Fraction(0)
    for e in uncovered:
        best = None
        for i, s in enumerate(inst.sets):
            if e in s:
                rate = Fraction(inst.weight(i), len(s & uncovered))
                if best is None or rate < best:
                    best = rate
        total += best
    return total


def exact_set_cover(inst: SetCoverInstance, node_budget: int = 1_000_000) -> Cover:
    """Minimum-cardinality (or minimum-weight) cover by branch and bound."""
    _check_coverable(inst)
    greedy = greedy_set_cover(inst)
    best_cost = cover_cost(inst, greedy)
    best = set(greedy.chosen)
    elements = list(inst.universe)
    nodes = 0

    def search(chosen: set, uncovered: set, cost: int) -> None:
        nonlocal best, best_cost, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(
                f"node budget {node_budget} exhausted",
                best_found=Cover(frozenset(best)),
                lower_bound=None,
            )
        if not uncovered:
            if cost < best_cost:
                best, best_cost = set(chosen), cost
            return
        if cost + _fractional_bound(inst, uncovered) >= best_cost:
            return
        # fail-first: branch on the element with the fewest candidate subsets
        branch_e, candidates = None, None
        for e in elements:
            if e not in uncovered:
                continue
            cands = [i for i, s in enumerate(inst.sets) if e in s and i not in chosen]
            if candidates is None or len(cands) < len(candidates):
                branch_e, candidates = e, cands
        for i in sorted(candidates, key=lambda i: (-len(inst.sets[i] & uncovered), i)):
            chosen.add(i)
            search(chosen, uncovered - inst.sets[i], cost + inst.weight(i))
            chosen.remove(i)

    search(set(), set(inst.universe), 0)
    return Cover(frozenset(best))


# ---------------------------------------------------------------------------
# Instance files: {"universe": [...], "sets": [[...], ...], "weights": [...]}


def setcover_to_obj(inst: SetCoverInstance) -> dict:
    obj = {
        "universe": list(inst.universe),
        "sets": [sorted(s, key=inst.universe.index) for s in inst.sets],
    }
    if inst.weights is not None:
        obj["weights"] = list(inst.weights)
    return obj


def setcover_from_obj(obj) -> SetCoverInstance:
    if not isinstance(obj, dict):
        raise ParseError("set-cover document must be a JSON object")
    unknown = set(obj) - {"universe", "sets", "weights"}
    if unknown:
        raise ParseError(f"unknown set-cover field {sorted(unknown)[0]!r}")
    if "universe" not in obj or "sets" not in obj:
        raise ParseError("set-cover document needs 'universe' and 'sets'")
    if not isinstance(obj["universe"], list) or not isinstance(obj["sets"], list):
        raise ParseError("'universe' and 'sets' must be lists")
    try:
        return SetCoverInstance(
            tuple(obj["universe"]),
            tuple(frozenset(s) for s in obj["sets"]),
            tuple(obj["weights"]) if "weights" in obj else None,
        )
    except (ValueError, TypeError) as e:
        raise ParseError(str(e)) from None


def setcover_to_json(inst: SetCoverInstance) -> str:
    return json.dumps(setcover_to_obj(inst), indent=2) + "\n"


def setcover_from_json(text: str) -> SetCoverInstance:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}: {e.msg}") from None
    return setcover_from_obj(obj)


def cover_to_obj(cover: Cover) -> dict:
    return {"chosen": sorted(cover.chosen)}


def cover_from_obj(obj) -> Cover:
    if not isinstance(obj, dict) or set(obj) != {"chosen"}:
        raise ParseError("cover document must be an object with key 'chosen'")
    if not isinstance(obj["chosen"], list) or not all(
        isinstance(i, int) and i >= 0 for i in obj["chosen"]
    ):
        raise ParseError("'chosen' must be a list of non-negative subset indices")
    return Cover(frozenset(obj["chosen"]))
