"""Ordered binary decision diagrams with a fixed variable order.

Node references are plain ints: 0 and 1 are the terminals, interior nodes
are numbered from 2 and live in ``Obdd.nodes`` (ref r is ``nodes[r - 2]``).
``reduce_obdd`` canonicalizes: after reduction, two diagrams over the same
order compute the same function iff they are structurally identical.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .core import Assignment, LabeledData, VarUniverse
from .errors import MalformedDiagram, ParseError

TERM_ZERO = 0
TERM_ONE = 1


@dataclass(frozen=True)
class Obdd:
    """Rooted diagram; ``nodes[i] = (level, low_ref, high_ref)``."""

    universe: VarUniverse
    nodes: tuple[tuple[int, int, int], ...]
    root: int

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(tuple(n) for n in self.nodes))


def _check_ref(b: Obdd, ref: int) -> None:
    if not 0 <= ref < len(b.nodes) + 2:
        raise MalformedDiagram(f"reference {ref} out of range")


def validate_obdd(b: Obdd) -> None:
    """Raise MalformedDiagram unless refs are valid and levels strictly increase."""
    width = len(b.universe)
    _check_ref(b, b.root)
    for i, (level, low, high) in enumerate(b.nodes):
        if not 0 <= level < width:
            raise MalformedDiagram(f"node {i + 2} tests level {level} outside universe")
        for child in (low, high):
            _check_ref(b, child)
            if child >= 2 and b.nodes[child - 2][0] <= level:
                raise MalformedDiagram(
                    f"node {i + 2} at level {level} points to level "
                    f"{b.nodes[child - 2][0]}; levels must strictly increase"
                )


def eval_obdd(b: Obdd, x: Assignment) -> int:
    ref = b.root
    steps = 0
    while ref >= 2:
        steps += 1
        if steps > len(b.universe) + 1 or ref - 2 >= len(b.nodes):
            raise MalformedDiagram("diagram walk does not terminate at a terminal")
        level, low, high = b.nodes[ref - 2]
        if level >= x.width:
            raise MalformedDiagram(f"level {level} outside universe of size {x.width}")
        ref = high if (x.word >> level) & 1 else low
    if ref not in (TERM_ZERO, TERM_ONE):
        raise MalformedDiagram(f"walk ended at invalid reference {ref}")
    return ref


def reduce_obdd(b: Obdd) -> Obdd:
    """Canonical reduction: merge duplicate nodes, drop redundant tests and
    unreachable nodes. Idempotent; node ids follow low-first discovery order."""
    validate_obdd(b)
    memo: dict[int, int] = {}
    unique: dict[tuple[int, int, int], int] = {}
    nodes: list[tuple[int, int, int]] = []

    def convert(ref: int) -> int:
        if ref < 2:
            return ref
        if ref in memo:
            return memo[ref]
        level, low, high = b.nodes[ref - 2]
        nlow, nhigh = convert(low), convert(high)
        if nlow == nhigh:
            out = nlow
        else:
            key = (level, nlow, nhigh)
            out = unique.get(key)
            if out is None:
                nodes.append(key)
                out = len(nodes) + 1
                unique[key] = out
        memo[ref] = out
        return out

    root = convert(b.root)
    return Obdd(b.universe, tuple(nodes), root)


def obdd_interior_nodes(b: Obdd) -> int:
    """Interior node count of a reduced diagram (terminals excluded)."""
    return len(b.nodes)


def obdd_width(b: Obdd) -> int:
    """Maximum number of interior nodes on any single variable level."""
    if not b.nodes:
        return 0
    counts = Counter(level for level, _, _ in b.nodes)
    return max(counts.values())


def negate_obdd(b: Obdd) -> Obdd:
    """Complement by swapping the two terminals; structure is unchanged."""

    def swap(ref: int) -> int:
        return 1 - ref if ref < 2 else ref

    return Obdd(
        b.universe,
        tuple((level, swap(low), swap(high)) for level, low, high in b.nodes),
        swap(b.root),
    )


def obdd_from_onset(universe: VarUniverse, points: Iterable[Assignment]) -> Obdd:
    """Reduced diagram of the indicator function of the given point set."""
    width = len(universe)
    words = set()
    for x in points:
        if x.width != width:
            raise ValueError("point width does not match universe")
        words.add(x.word)

    unique: dict[tuple[int, int, int], int] = {}
    nodes: list[tuple[int, int, int]] = []

    def make(level: int, low: int, high: int) -> int:
        if low == high:
            return low
        key = (level, low, high)
        out = unique.get(key)
        if out is None:
            nodes.append(key)
            out = len(nodes) + 1
            unique[key] = out
        return out

    memo: dict[tuple[int, frozenset[int]], int] = {}

    def build(level: int, suffixes: frozenset[int]) -> int:
        if not suffixes:
            return TERM_ZERO
        if level == width:
            return TERM_ONE
        key = (level, suffixes)
        out = memo.get(key)
        if out is None:
            low = build(level + 1, frozenset(s >> 1 for s in suffixes if not s & 1))
            high = build(level + 1, frozenset(s >> 1 for s in suffixes if s & 1))
            out = make(level, low, high)
            memo[key] = out
        return out

    root = build(0, frozenset(words))
    return Obdd(universe, tuple(nodes), root)


def build_obdd(d: LabeledData) -> Obdd:
    """Feasible separator for labeled data: the indicator of A, zero elsewhere."""
    return obdd_from_onset(d.universe, d.a_points)


# ---------------------------------------------------------------------------
# Solution schema: {"family": "obdd", "order": [...], "nodes": [...], "root": ref}
# with refs "T0"/"T1" for the terminals and integer ids for interior nodes.


def _ref_to_obj(ref: int):
    if ref == TERM_ZERO:
        return "T0"
    if ref == TERM_ONE:
        return "T1"
    return ref - 2


def _ref_from_obj(obj, n_nodes: int) -> int:
    if obj == "T0":
        return TERM_ZERO
    if obj == "T1":
        return TERM_ONE
    if isinstance(obj, int) and 0 <= obj < n_nodes:
        return obj + 2
    raise ParseError(f"invalid node reference {obj!r}")


def obdd_to_obj(b: Obdd, universe: VarUniverse | None = None) -> dict:
    universe = universe or b.universe
    return {
        "family": "obdd",
        "order": list(b.universe.vars),
        "nodes": [
            {
                "id": i,
                "var": b.universe.vars[level],
                "low": _ref_to_obj(low),
                "high": _ref_to_obj(high),
            }
            for i, (level, low, high) in enumerate(b.nodes)
        ],
        "root": _ref_to_obj(b.root),
    }


def obdd_from_obj(obj, universe: VarUniverse) -> Obdd:
    if not isinstance(obj, dict) or obj.get("family") != "obdd":
        raise ParseError("expected an object with family 'obdd'")
    unknown = set(obj) - {"family", "order", "nodes", "root"}
    if unknown:
        raise ParseError(f"unknown obdd field {sorted(unknown)[0]!r}")
    if tuple(obj.get("order", ())) != universe.vars:
        raise ParseError("obdd order does not match the instance variables")
    raw_nodes = obj.get("nodes")
    if not isinstance(raw_nodes, list):
        raise ParseError("field 'nodes' must be a list")
    n = len(raw_nodes)
    nodes = []
    for i, nd in enumerate(raw_nodes):
        if not isinstance(nd, dict) or set(nd) != {"id", "var", "low", "high"}:
            raise ParseError(f"nodes[{i}] must have keys id, var, low, high")
        if nd["id"] != i:
            raise ParseError(f"nodes[{i}] has id {nd['id']!r}; ids must be 0..{n - 1} in order")
        nodes.append(
            (
                universe.index(nd["var"]),
                _ref_from_obj(nd["low"], n),
                _ref_from_obj(nd["high"], n),
            )
        )
    b = Obdd(universe, tuple(nodes), _ref_from_obj(obj.get("root"), n))
    validate_obdd(b)
    return b
