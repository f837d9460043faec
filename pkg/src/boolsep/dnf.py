"""Disjunctive normal forms: evaluation, length/depth, compatibility, primes.

A term is a conjunction of positive and negated literals over variable
indices; a form is a set of terms read as their disjunction. The length of a
form is its total literal count, the depth its largest term size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Assignment, VarUniverse
from .errors import IndexOutOfRange, ParseError


@dataclass(frozen=True)
class Term:
    """Conjunction of literals: x_j for j in pos, not-x_j for j in neg."""

    pos: frozenset[int]
    neg: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "pos", frozenset(self.pos))
        object.__setattr__(self, "neg", frozenset(self.neg))
        if self.pos & self.neg:
            raise ValueError(
                f"literals {sorted(self.pos & self.neg)} appear both ways in one term"
            )

    def __len__(self) -> int:
        return len(self.pos) + len(self.neg)

    def sort_key(self) -> tuple:
        return (len(self), tuple(sorted(self.pos)), tuple(sorted(self.neg)))


@dataclass(frozen=True)
class DnfForm:
    """A set of terms, evaluated as their disjunction."""

    terms: frozenset[Term]

    def __post_init__(self):
        object.__setattr__(self, "terms", frozenset(self.terms))

    def sorted_terms(self) -> list[Term]:
        return sorted(self.terms, key=Term.sort_key)


def term_masks(term: Term) -> tuple[int, int]:
    pos = 0
    for j in term.pos:
        pos |= 1 << j
    neg = 0
    for j in term.neg:
        neg |= 1 << j
    return pos, neg


def term_satisfied(pos_mask: int, neg_mask: int, word: int) -> bool:
    return (word & pos_mask) == pos_mask and (word & neg_mask) == 0


def eval_dnf(theta: DnfForm, x: Assignment) -> int:
    """1 iff some term has all its positive vars 1 and negated vars 0 at x."""
    for term in theta.terms:
        hi = max(term.pos | term.neg, default=-1)
        if hi >= x.width:
            raise IndexOutOfRange(f"term index {hi} outside universe of size {x.width}")
        pos, neg = term_masks(term)
        if term_satisfied(pos, neg, x.word):
            return 1
    return 0


def dnf_length(theta: DnfForm) -> int:
    return sum(len(t) for t in theta.terms)


def dnf_depth(theta: DnfForm) -> int:
    # max over an empty form (or a lone empty term) is taken to be 0
    return max((len(t) for t in theta.terms), default=0)


def terms_compatible(t: Term, u: Term) -> bool:
    """True iff the conjunction of both terms is satisfiable."""
    return not (t.pos & u.neg) and not (t.neg & u.pos)


def dnf_pair_noncontradictory(theta: DnfForm, theta_prime: DnfForm) -> bool:
    """True iff no assignment satisfies both forms.

    The product of the two disjunctions is non-zero exactly when some term
    pair is jointly satisfiable, so no enumeration over {0,1}^J is needed.
    """
    for t in theta.terms:
        for u in theta_prime.terms:
            if terms_compatible(t, u):
                return False
    return True


def prime_implicants(universe: VarUniverse, on_set: Iterable[Assignment]) -> frozenset[Term]:
    """All prime implicants of the total function whose on-set is exactly on_set.

    Quine-McCluskey merging: cubes are (care_mask, value) pairs; two cubes
    with the same care mask differing in one cared bit merge into the cube
    that drops the bit. Cubes that never merge are prime.
    """
    width = len(universe)
    words = set()
    for x in on_set:
        if x.width != width:
            raise ValueError("on_set point width does not match universe")
        words.add(x.word)
    if not words:
        raise ValueError("on_set must be non-empty")

    full = (1 << width) - 1
    current = {(full, w) for w in words}
    primes: set[tuple[int, int]] = set()
    while current:
        used = set()
        nxt = set()
        for cube in current:
            care, val = cube
            for j in range(width):
                bit = 1 << j
                if not care & bit:
                    continue
                partner = (care, val ^ bit)
                if partner in current:
                    used.add(cube)
                    used.add(partner)
                    nxt.add((care ^ bit, val & ~bit))
        primes |= current - used
        current = nxt

    out = []
    for care, val in primes:
        pos = frozenset(j for j in range(width) if care & (1 << j) and val & (1 << j))
        neg = frozenset(j for j in range(width) if care & (1 << j) and not val & (1 << j))
        out.append(Term(pos, neg))
    return frozenset(out)


# ---------------------------------------------------------------------------
# Solution schema: {"family": "dnf", "terms": [{"pos": [...], "neg": [...]}]}


def dnf_to_obj(theta: DnfForm, universe: VarUniverse) -> dict:
    return {
        "family": "dnf",
        "terms": [
            {
                "pos": [universe.vars[j] for j in sorted(t.pos)],
                "neg": [universe.vars[j] for j in sorted(t.neg)],
            }
            for t in theta.sorted_terms()
        ],
    }


def dnf_from_obj(obj, universe: VarUniverse) -> DnfForm:
    if not isinstance(obj, dict) or obj.get("family") != "dnf":
        raise ParseError("expected an object with family 'dnf'")
    unknown = set(obj) - {"family", "terms"}
    if unknown:
        raise ParseError(f"unknown dnf field {sorted(unknown)[0]!r}")
    if not isinstance(obj.get("terms"), list):
        raise ParseError("field 'terms' must be a list")
    terms = []
    for i, t in enumerate(obj["terms"]):
        if not isinstance(t, dict) or set(t) - {"pos", "neg"}:
            raise ParseError(f"terms[{i}] must have exactly the keys 'pos' and 'neg'")
        try:
            pos = frozenset(universe.index(v) for v in t.get("pos", []))
            neg = frozenset(universe.index(v) for v in t.get("neg", []))
            terms.append(Term(pos, neg))
        except (ValueError, IndexOutOfRange) as e:
            raise ParseError(f"terms[{i}]: {e}") from None
    return DnfForm(frozenset(terms))


