"""Variable universes, assignments, labeled data, and the instance file format.

Assignments are packed into machine integers (bit j of ``word`` is the value
of the j-th universe variable), so exhaustive sweeps over {0,1}^J and set
membership stay cheap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import (
    EmptyLabelSet,
    IndexOutOfRange,
    LengthMismatch,
    OverlappingLabels,
    ParseError,
)


@dataclass(frozen=True)
class VarUniverse:
    """Ordered, duplicate-free tuple of variable identifiers."""

    vars: tuple

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if not self.vars:
            raise ValueError("universe must contain at least one variable")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("variable identifiers must be pairwise distinct")

    def __len__(self) -> int:
        return len(self.vars)

    def index(self, var) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise IndexOutOfRange(f"unknown variable {var!r}") from None

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vars)) - 1


def named_universe(n_vars: int, prefix: str = "x") -> VarUniverse:
    """Universe with variables ``x1 .. xN`` (or another prefix)."""
    if n_vars < 1:
        raise ValueError("n_vars must be positive")
    return VarUniverse(tuple(f"{prefix}{i + 1}" for i in range(n_vars)))


@dataclass(frozen=True, order=True)
class Assignment:
    """A point of {0,1}^J, packed LSB-first in universe order."""

    word: int
    width: int

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("width must be positive")
        if not 0 <= self.word < (1 << self.width):
            raise ValueError(f"word {self.word} out of range for width {self.width}")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "Assignment":
        bits = tuple(bits)
        word = 0
        for j, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"bit {j} is {b!r}, expected 0 or 1")
            word |= b << j
        return cls(word, len(bits))

    def bit(self, j: int) -> int:
        if not 0 <= j < self.width:
            raise IndexOutOfRange(f"bit index {j} out of range for width {self.width}")
        return (self.word >> j) & 1

    def bits(self) -> tuple[int, ...]:
        return tuple((self.word >> j) & 1 for j in range(self.width))


def iter_assignments(universe: VarUniverse) -> Iterator[Assignment]:
    """All 2^|J| points of the universe, in increasing word order."""
    width = len(universe)
    for word in range(1 << width):
        yield Assignment(word, width)


@dataclass(frozen=True)
class LabeledData:
    """Disjoint, non-empty point sets A and B over a shared universe."""

    universe: VarUniverse
    a_points: frozenset[Assignment]
    b_points: frozenset[Assignment]


def make_labeled_data(
    universe: VarUniverse,
    a: Iterable[Assignment],
    b: Iterable[Assignment],
) -> LabeledData:
    """Validate and build labeled data; duplicates are silently dropped."""
    a_set, b_set = frozenset(a), frozenset(b)
    if not a_set or not b_set:
        raise EmptyLabelSet("both label sets must be non-empty")
    width = len(universe)
    for x in a_set | b_set:
        if x.width != width:
            raise LengthMismatch(
                f"assignment of width {x.width} in universe of size {width}"
            )
    overlap = a_set & b_set
    if overlap:
        pt = min(overlap)
        raise OverlappingLabels(f"point {pt.bits()} is labeled both A and B")
    return LabeledData(universe, a_set, b_set)


class TriValue(Enum):
    """Value of a partial Boolean function at a point."""

    ONE = 1
    ZERO = 0
    UNDEFINED = None


# ---------------------------------------------------------------------------
# Instance files: {"vars": [...], "A": [[0,1,...], ...], "B": [[...], ...]}


def instance_to_obj(d: LabeledData) -> dict:
    return {
        "vars": list(d.universe.vars),
        "A": [list(x.bits()) for x in sorted(d.a_points)],
        "B": [list(x.bits()) for x in sorted(d.b_points)],
    }


def serialize_instance(d: LabeledData) -> str:
    return json.dumps(instance_to_obj(d), indent=2) + "\n"


def _parse_points(rows, label: str, width: int) -> list[Assignment]:
    if not isinstance(rows, list):
        raise ParseError(f"field {label!r} must be a list of bit rows")
    points = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ParseError(f"{label}[{i}] must be a list of bits")
        for j, bit in enumerate(row):
            if bit not in (0, 1):
                raise ParseError(f"{label}[{i}][{j}] is {bit!r}, expected 0 or 1")
        if len(row) != width:
            raise LengthMismatch(
                f"{label}[{i}] has {len(row)} bits, universe has {width} variables"
            )
        points.append(Assignment.from_bits(row))
    return points


def instance_from_obj(obj) -> LabeledData:
    if not isinstance(obj, dict):
        raise ParseError("instance document must be a JSON object")
    expected = {"vars", "A", "B"}
    unknown = set(obj) - expected
    if unknown:
        raise ParseError(f"unknown instance field {sorted(unknown)[0]!r}")
    missing = expected - set(obj)
    if missing:
        raise ParseError(f"missing instance field {sorted(missing)[0]!r}")
    if not isinstance(obj["vars"], list) or not obj["vars"]:
        raise ParseError("field 'vars' must be a non-empty list")
    try:
        universe = VarUniverse(tuple(obj["vars"]))
    except ValueError as e:
        raise ParseError(f"bad variable list: {e}") from None
    width = len(universe)
    a = _parse_points(obj["A"], "A", width)
    b = _parse_points(obj["B"], "B", width)
    return make_labeled_data(universe, a, b)


def parse_instance(text: str) -> LabeledData:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}: {e.msg}") from None
    return instance_from_obj(obj)
