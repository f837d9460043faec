"""Binary decision trees: evaluation, size measures, negation, greedy induction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import Assignment, LabeledData
from .errors import IndexOutOfRange, ParseError


@dataclass(frozen=True)
class Leaf:
    value: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError(f"leaf value must be 0 or 1, got {self.value!r}")


@dataclass(frozen=True)
class Internal:
    var: int
    low: "DecisionTree"
    high: "DecisionTree"


DecisionTree = Union[Leaf, Internal]


def eval_tree(t: DecisionTree, x: Assignment) -> int:
    while isinstance(t, Internal):
        if not 0 <= t.var < x.width:
            raise IndexOutOfRange(f"tree variable {t.var} outside universe of size {x.width}")
        t = t.high if (x.word >> t.var) & 1 else t.low
    return t.value


def tree_nodes(t: DecisionTree) -> int:
    """Total node count, leaves included."""
    if isinstance(t, Leaf):
        return 1
    return 1 + tree_nodes(t.low) + tree_nodes(t.high)


def tree_internal_nodes(t: DecisionTree) -> int:
    """Internal-node count; reported alongside the full count."""
    if isinstance(t, Leaf):
        return 0
    return 1 + tree_internal_nodes(t.low) + tree_internal_nodes(t.high)


def tree_depth(t: DecisionTree) -> int:
    """Longest root-to-leaf path in edges; a lone leaf has depth 0."""
    if isinstance(t, Leaf):
        return 0
    return 1 + max(tree_depth(t.low), tree_depth(t.high))


def negate_tree(t: DecisionTree) -> DecisionTree:
    """Complement the tree by flipping every leaf label; shape is unchanged."""
    if isinstance(t, Leaf):
        return Leaf(1 - t.value)
    return Internal(t.var, negate_tree(t.low), negate_tree(t.high))


def induce_tree(d: LabeledData) -> DecisionTree:
    """Greedy consistent tree: 1 on all of A, 0 on all of B, exactly.

    Splits on the variable separating the most (A, B) point pairs, lowest
    index on ties. Pure regions become leaves labeled by the class present;
    empty regions get label 0.
    """
    width = len(d.universe)

    def grow(a_pts: list[int], b_pts: list[int]) -> DecisionTree:
        if not b_pts:
            return Leaf(1 if a_pts else 0)
        if not a_pts:
            return Leaf(0)
        best_j, best_sep = 0, -1
        for j in range(width):
            bit = 1 << j
            a1 = sum(1 for w in a_pts if w & bit)
            b1 = sum(1 for w in b_pts if w & bit)
            sep = a1 * (len(b_pts) - b1) + (len(a_pts) - a1) * b1
            if sep > best_sep:
                best_j, best_sep = j, sep
        bit = 1 << best_j
        return Internal(
            best_j,
            grow([w for w in a_pts if not w & bit], [w for w in b_pts if not w & bit]),
            grow([w for w in a_pts if w & bit], [w for w in b_pts if w & bit]),
        )

    return grow(sorted(x.word for x in d.a_points), sorted(x.word for x in d.b_points))


# ---------------------------------------------------------------------------
# Solution schema: nested {"leaf": 0|1} or {"var": "v", "low": ..., "high": ...}


def tree_to_obj(t: DecisionTree, universe) -> dict:
    if isinstance(t, Leaf):
        return {"leaf": t.value}
    return {
        "var": universe.vars[t.var],
        "low": tree_to_obj(t.low, universe),
        "high": tree_to_obj(t.high, universe),
    }


def tree_from_obj(obj, universe) -> DecisionTree:
    if not isinstance(obj, dict):
        raise ParseError("tree node must be a JSON object")
    if set(obj) == {"leaf"}:
        if obj["leaf"] not in (0, 1):
            raise ParseError(f"leaf value must be 0 or 1, got {obj['leaf']!r}")
        return Leaf(obj["leaf"])
    if set(obj) == {"var", "low", "high"}:
        return Internal(
            universe.index(obj["var"]),
            tree_from_obj(obj["low"], universe),
            tree_from_obj(obj["high"], universe),
        )
    raise ParseError("tree node must have key 'leaf' or keys 'var', 'low', 'high'")
