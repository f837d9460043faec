"""Solvers for minimum-complexity DNF pairs, plus negation-based pair solvers.

The exact solver runs iterative deepening on the total regularizer: at each
budget it searches, point by point, for terms that cover the positive side
while avoiding the negative points, then terms covering the negative side
that additionally oppose every chosen first-side term. The first pair found
is optimal. The approximate solver covers each side's on-set exactly with
prime implicants chosen greedily.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bdt import induce_tree
from .core import Assignment, LabeledData, VarUniverse, make_labeled_data
from .dnf import (
    DnfForm,
    Term,
    prime_implicants,
    term_masks,
    term_satisfied,
)
from .errors import BudgetExceeded, IndexOutOfRange, InvalidParams
from .forms import PairSolution, VerifyResult, verify_pair, verify_separation
from .obdd import build_obdd
from .reductions import negatable_h
from .setcover import SetCoverInstance, greedy_set_cover

__all__ = [
    "SolveBudget",
    "VerifyResult",
    "verify_pair",
    "verify_separation",
    "exact_partial_separation_dnf",
    "approx_min_length_dnf_total",
    "approx_min_length_dnf",
    "negation_based_partial_solver",
    "tight_instance",
]


@dataclass(frozen=True)
class SolveBudget:
    """Limits for the exact search: total-regularizer ceiling and node count."""

    max_total_regularizer: int = 1_000_000_000
    node_budget: int = 5_000_000

    def __post_init__(self):
        if self.max_total_regularizer < 1 or self.node_budget < 1:
            raise InvalidParams("budgets must be positive")


def tight_instance(universe: VarUniverse, k: int) -> LabeledData:
    """Unit-vector data: all unit vectors are positive except the k-th.

    On this data the prime-implicant approximation is forced onto full
    minterms while a single-literal pair is optimal, so its ratio meets the
    worst-case bound exactly.
    """
    width = len(universe)
    if width < 2:
        raise InvalidParams("tight instance needs at least two variables")
    if not 0 <= k < width:
        raise IndexOutOfRange(f"k={k} is not a variable position (0..{width - 1})")
    a = {Assignment(1 << i, width) for i in range(width) if i != k}
    b = {Assignment(1 << k, width)}
    return make_labeled_data(universe, a, b)


def approx_min_length_dnf_total(
    universe: VarUniverse, on_set, cover_rule: str = "length"
) -> DnfForm:
    """DNF whose on-set is exactly ``on_set``, built greedily from primes.

    The result uses at most |on_set| terms and at most |J|*|on_set| literals.
    ``cover_rule`` picks the greedy weighting: per-literal ("length") or
    per-term ("count").
    """
    if cover_rule not in ("length", "count"):
        raise InvalidParams(f"unknown cover rule {cover_rule!r}")
    words = sorted({x.word for x in on_set})
    primes = sorted(prime_implicants(universe, on_set), key=Term.sort_key)
    if any(len(p) == 0 for p in primes):
        # the empty term is an implicant only when the on-set is all of X
        return DnfForm(frozenset({Term(frozenset(), frozenset())}))
    coverage = []
    for p in primes:
        pos, neg = term_masks(p)
        coverage.append(frozenset(w for w in words if term_satisfied(pos, neg, w)))
    weights = tuple(len(p) for p in primes) if cover_rule == "length" else None
    inst = SetCoverInstance(tuple(words), tuple(coverage), weights)
    cover = greedy_set_cover(inst)
    return DnfForm(frozenset(primes[i] for i in cover.chosen))


def approx_min_length_dnf(d: LabeledData, cover_rule: str = "length") -> PairSolution:
    """Apply the exact-on-set approximation to both sides of the data.

    The two on-sets are disjoint, so the pair never fires together; its total
    length is within a factor of |J|*|A u B|/2 of the optimum.
    """
    theta = approx_min_length_dnf_total(d.universe, d.a_points, cover_rule)
    theta_prime = approx_min_length_dnf_total(d.universe, d.b_points, cover_rule)
    pair = PairSolution("dnf", d.universe, theta, theta_prime)
    check = verify_pair(d, pair)
    if not check.feasible:  # exact on-sets are disjoint; this cannot happen
        raise AssertionError(
            "exact-on-set construction produced an infeasible pair: "
            + "; ".join(check.violations)
        )
    return pair


def negation_based_partial_solver(d: LabeledData, family: str) -> PairSolution:
    """Heuristically separate the data with one form, then pair it with its
    complement. The pair's total regularizer is exactly twice the form's."""
    if family == "bdt":
        theta = induce_tree(d)
    elif family == "obdd":
        theta = build_obdd(d)
    else:
        raise ValueError(f"no negation-based solver for family {family!r}")
    return negatable_h(d, theta, family)


# ---------------------------------------------------------------------------
# Exact search


class _NodeBudgetHit(Exception):
    pass


def _mask_term(pos: int, neg: int, width: int) -> Term:
    return Term(
        frozenset(j for j in range(width) if pos & (1 << j)),
        frozenset(j for j in range(width) if neg & (1 << j)),
    )


def exact_partial_separation_dnf(
    d: LabeledData,
    regularizer: str = "length",
    budget: SolveBudget | None = None,
) -> PairSolution:
    """Minimum total-length or total-depth DNF pair separating the data.

    Iterative deepening over the total regularizer; the search is complete,
    so the first pair found is optimal. Intended for small universes (soft
    limit |J| <= 8). Raises BudgetExceeded with the best known feasible pair
    and a certified lower bound when a budget runs out first.
    """
    if regularizer not in ("length", "depth"):
        raise ValueError(f"unknown regularizer {regularizer!r}")
    budget = budget or SolveBudget()
    universe = d.universe
    width = len(universe)
    full = (1 << width) - 1
    a_words = sorted(x.word for x in d.a_points)
    b_words = sorted(x.word for x in d.b_points)

    def sat(pos: int, neg: int, w: int) -> bool:
        return (w & pos) == pos and (w & neg) == 0

    def candidates(word: int, other: list[int]) -> list[tuple[int, int, int]]:
        # terms covering `word` that cover no point of the opposite side,
        # sorted by (length, positive mask, negative mask)
        out = []
        for lits in range(1 << width):
            pos = lits & word
            neg = lits & ~word & full
            if any(sat(pos, neg, o) for o in other):
                continue
            out.append((bin(lits).count("1"), pos, neg))
        out.sort()
        return out

    cand_a = {w: candidates(w, b_words) for w in a_words}
    cand_b = {w: candidates(w, a_words) for w in b_words}
    minlen_a = {w: cand_a[w][0][0] for w in a_words}
    minlen_b = {w: cand_b[w][0][0] for w in b_words}

    def shareable(w1: int, w2: int, other: list[int]) -> bool:
        # the weakest term covering both is the conjunction of their agreeing
        # literals; if even that hits the opposite side, no shared term exists
        pos = w1 & w2
        neg = ~w1 & ~w2 & full
        return not any(sat(pos, neg, o) for o in other)

    share_a = {(u, v): shareable(u, v, b_words) for u in a_words for v in a_words}
    share_b = {(u, v): shareable(u, v, a_words) for u in b_words for v in b_words}

    def unshare_sum(uncovered, share, minlen, floor: int = 0) -> int:
        # points that pairwise cannot share a term each need their own
        chosen = []
        total = 0
        for w in uncovered:
            if all(not share[(w, c)] for c in chosen):
                chosen.append(w)
                total += max(minlen[w], floor)
        return total

    def opposing_floor(theta) -> int:
        # each second-side term needs one opposing literal per first-side
        # term; terms with pairwise-disjoint literal slots force distinct ones
        count = used_pos = used_neg = 0
        for pos, neg in theta:
            if pos & used_pos or neg & used_neg:
                continue
            used_pos |= pos
            used_neg |= neg
            count += 1
        return count

    def opposes_all(pos: int, neg: int, theta) -> bool:
        return all((pos & tn) or (neg & tp) for tp, tn in theta)

    nodes_left = budget.node_budget

    def tick():
        nonlocal nodes_left
        nodes_left -= 1
        if nodes_left < 0:
            raise _NodeBudgetHit

    def search_length(m: int):
        def dfs(uncov_a, uncov_b, theta, theta_p, cost):
            tick()
            if uncov_a:
                w = uncov_a[0]
                for length, pos, neg in cand_a[w]:
                    ncost = cost + length
                    if ncost > m:
                        break
                    rest_a = [x for x in uncov_a if not sat(pos, neg, x)]
                    ntheta = theta + [(pos, neg)]
                    lb = unshare_sum(rest_a, share_a, minlen_a)
                    if uncov_b:
                        lb += unshare_sum(
                            uncov_b, share_b, minlen_b, opposing_floor(ntheta)
                        )
                    if ncost + lb > m:
                        continue
                    found = dfs(rest_a, uncov_b, ntheta, theta_p, ncost)
                    if found:
                        return found
                return None
            if uncov_b:
                w = uncov_b[0]
                floor = opposing_floor(theta)
                for length, pos, neg in cand_b[w]:
                    ncost = cost + length
                    if ncost > m:
                        break
                    if length < floor or not opposes_all(pos, neg, theta):
                        continue
                    rest_b = [x for x in uncov_b if not sat(pos, neg, x)]
                    lb = unshare_sum(rest_b, share_b, minlen_b, floor)
                    if ncost + lb > m:
                        continue
                    found = dfs([], rest_b, theta, theta_p + [(pos, neg)], ncost)
                    if found:
                        return found
                return None
            return theta, theta_p

        root_lb = unshare_sum(a_words, share_a, minlen_a) + unshare_sum(
            b_words, share_b, minlen_b
        )
        if root_lb > m:
            return None
        return dfs(a_words, b_words, [], [], 0)

    def search_depth(cap_a: int, cap_b: int):
        if any(minlen_a[w] > cap_a for w in a_words):
            return None
        if any(minlen_b[w] > cap_b for w in b_words):
            return None

        def dfs(uncov_a, uncov_b, theta, theta_p):
            tick()
            if uncov_a:
                w = uncov_a[0]
                for length, pos, neg in cand_a[w]:
                    if length > cap_a:
                        break
                    ntheta = theta + [(pos, neg)]
                    if uncov_b and opposing_floor(ntheta) > cap_b:
                        continue
                    rest_a = [x for x in uncov_a if not sat(pos, neg, x)]
                    found = dfs(rest_a, uncov_b, ntheta, theta_p)
                    if found:
                        return found
                return None
            if uncov_b:
                w = uncov_b[0]
                floor = opposing_floor(theta)
                if floor > cap_b:
                    return None
                for length, pos, neg in cand_b[w]:
                    if length > cap_b:
                        break
                    if length < floor or not opposes_all(pos, neg, theta):
                        continue
                    rest_b = [x for x in uncov_b if not sat(pos, neg, x)]
                    found = dfs([], rest_b, theta, theta_p + [(pos, neg)])
                    if found:
                        return found
                return None
            return theta, theta_p

        return dfs(a_words, b_words, [], [])

    def to_pair(found) -> PairSolution:
        theta, theta_p = found
        return PairSolution(
            "dnf",
            universe,
            DnfForm(frozenset(_mask_term(p, n, width) for p, n in theta)),
            DnfForm(frozenset(_mask_term(p, n, width) for p, n in theta_p)),
        )

    ub_pair = approx_min_length_dnf(d)
    ub = ub_pair.cost(regularizer)
    limit = min(ub - 1, budget.max_total_regularizer)
    exhausted = 1
    try:
        for m in range(2, limit + 1):
            if regularizer == "length":
                found = search_length(m)
            else:
                found = None
                for cap_a in range(1, m):
                    found = search_depth(cap_a, m - cap_a)
                    if found:
                        break
            if found:
                return to_pair(found)
            exhausted = m
    except _NodeBudgetHit:
        raise BudgetExceeded(
            f"node budget exhausted; no pair with total {regularizer} "
            f"<= {exhausted} exists",
            best_found=ub_pair,
            lower_bound=exhausted + 1,
        ) from None
    if ub - 1 <= budget.max_total_regularizer:
        # every smaller total was exhausted, so the approximate pair is optimal
        return ub_pair
    raise BudgetExceeded(
        f"regularizer ceiling {budget.max_total_regularizer} reached",
        best_found=ub_pair,
        lower_bound=budget.max_total_regularizer + 1,
    )
