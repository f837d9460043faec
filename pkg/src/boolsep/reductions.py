"""Mappings between set cover and pair separation, and ratio-transfer reports.

The set-cover side is connected to DNF pairs through Haussler data: one
variable per subset, one positive point per element (its incidence vector
over the family), and the all-zeros point as the only negative. Negatable
families (trees, diagrams) are connected to single-form separation through
the complement operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import Assignment, LabeledData, VarUniverse, make_labeled_data
from .dnf import DnfForm, Term
from .errors import InfeasibleInput, InfeasiblePair
from .forms import PairSolution, get_family, verify_pair, verify_separation
from .setcover import Cover, SetCoverInstance, cover_is_feasible


@dataclass(frozen=True)
class HausslerData:
    """Labeled data derived from a set-cover instance, with back references.

    Variables are named s0, s1, ... after subset indices; elements sharing an
    incidence vector collapse to one positive point.
    """

    data: LabeledData
    element_points: Mapping  # element id -> its positive point


def haussler_data(inst: SetCoverInstance) -> HausslerData:
    universe = VarUniverse(tuple(f"s{i}" for i in range(len(inst.sets))))
    width = len(universe)
    element_points = {}
    for u in inst.universe:
        word = 0
        for i, s in enumerate(inst.sets):
            if u in s:
                word |= 1 << i
        element_points[u] = Assignment(word, width)
    a = set(element_points.values())
    b = {Assignment(0, width)}
    return HausslerData(make_labeled_data(universe, a, b), element_points)


def cover_to_dnf_pair(inst: SetCoverInstance, cover: Cover) -> PairSolution:
    """Map a feasible cover to a DNF pair on the Haussler data.

    The first form is one positive singleton term per chosen subset; the
    second is the single all-negated term over the chosen subsets. Total
    length is 2|cover| and total depth |cover| + 1.
    """
    if not cover_is_feasible(inst, cover):
        raise InfeasibleInput("the given subsets do not cover the universe")
    hd = haussler_data(inst)
    theta = DnfForm(frozenset(Term(frozenset({i}), frozenset()) for i in cover.chosen))
    theta_prime = DnfForm(frozenset({Term(frozenset(), frozenset(cover.chosen))}))
    return PairSolution("dnf", hd.data.universe, theta, theta_prime)


def dnf_pair_to_cover(inst: SetCoverInstance, pair: PairSolution) -> Cover:
    """Map a feasible DNF pair on the Haussler data back to a cover.

    Returns the smaller of: the union of positive literals of the first form,
    and the smallest all-negated term of the second form. The result covers
    the universe, with size at most half the pair's total length and at most
    its total depth minus one.
    """
    if pair.family != "dnf":
        raise ValueError("pair-to-cover mapping is defined for DNF pairs")
    hd = haussler_data(inst)
    result = verify_pair(hd.data, pair)
    if not result.feasible:
        raise InfeasiblePair(
            "pair is not feasible on the derived labeled data: "
            + "; ".join(result.violations)
        )
    sigma0 = frozenset(i for t in pair.theta.terms for i in t.pos)
    negated_terms = [t.neg for t in pair.theta_prime.terms if not t.pos]
    if negated_terms:
        sigma1 = min(negated_terms, key=lambda s: (len(s), tuple(sorted(s))))
    else:
        sigma1 = frozenset()
    chosen = sigma0 if len(sigma0) <= len(sigma1) else sigma1
    return Cover(frozenset(chosen))


def negatable_h(d: LabeledData, theta, family: str) -> PairSolution:
    """Pair a feasible separating form with its complement."""
    fam = get_family(family)
    if fam.negate is None:
        raise ValueError(f"family {family!r} has no complement operator")
    result = verify_separation(d, family, theta)
    if not result.feasible:
        raise InfeasibleInput(
            "form does not separate the data: " + "; ".join(result.violations)
        )
    return PairSolution(family, d.universe, theta, fam.negate(theta))


def negatable_g(d: LabeledData, pair: PairSolution, regularizer: str):
    """Collapse a feasible pair to one separating form.

    Returns whichever of the first form and the complement of the second is
    smaller under the regularizer (the first on ties); its size is at most
    half the pair's total.
    """
    fam = get_family(pair.family)
    if fam.negate is None:
        raise ValueError(f"family {pair.family!r} has no complement operator")
    result = verify_pair(d, pair)
    if not result.feasible:
        raise InfeasiblePair(
            "pair is not feasible on the data: " + "; ".join(result.violations)
        )
    reg = fam.regularizers[regularizer]
    neg_prime = fam.negate(pair.theta_prime)
    return pair.theta if reg(pair.theta) <= reg(neg_prime) else neg_prime


@dataclass(frozen=True)
class RatioReport:
    """Both sides of the ratio-transfer inequality, as exact rationals."""

    feasible_cost: int
    optimal_cost: int
    mapped_cost: int
    optimal_target_cost: int
    ratio_lhs: Fraction
    ratio_rhs: Fraction
    inequality_holds: bool

    def to_obj(self) -> dict:
        return {
            "feasible_cost": self.feasible_cost,
            "optimal_cost": self.optimal_cost,
            "mapped_cost": self.mapped_cost,
            "optimal_target_cost": self.optimal_target_cost,
            "ratio_lhs": f"{self.ratio_lhs.numerator}/{self.ratio_lhs.denominator}",
            "ratio_rhs": f"{self.ratio_rhs.numerator}/{self.ratio_rhs.denominator}",
            "inequality_holds": self.inequality_holds,
        }


def ratio_transfer_report(
    feasible_pair: PairSolution,
    optimal_pair: PairSolution,
    mapped_cost: int,
    optimal_target_cost: int,
    regularizer: str,
) -> RatioReport:
    """Compare the mapped solution's ratio against the pair ratio.

    The caller supplies oracle-verified optima. The left side is the mapped
    cost over the target optimum; the right side is the feasible pair cost
    over the optimal pair cost.
    """
    if feasible_pair.family != optimal_pair.family:
        raise ValueError("pairs must belong to the same family")
    feasible_cost = feasible_pair.cost(regularizer)
    optimal_cost = optimal_pair.cost(regularizer)
    if optimal_cost < 1 or optimal_target_cost < 1:
        raise ValueError("optimal costs must be at least 1")
    lhs = Fraction(mapped_cost, optimal_target_cost)
    rhs = Fraction(feasible_cost, optimal_cost)
    return RatioReport(
        feasible_cost=feasible_cost,
        optimal_cost=optimal_cost,
        mapped_cost=mapped_cost,
        optimal_target_cost=optimal_target_cost,
        ratio_lhs=lhs,
        ratio_rhs=rhs,
        inequality_holds=lhs <= rhs,
    )
