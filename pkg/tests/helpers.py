"""Independent oracles and random generators shared across the test suite.

Everything here recomputes expected values from first principles (explicit
enumeration over terms, points, subsets) so the package's algorithms are
checked against a second, dumber code path.
"""

from __future__ import annotations

import itertools

from boolsep import Assignment, DnfForm, Internal, Leaf, PairSolution, Term


def sat(pos: int, neg: int, word: int) -> bool:
    return (word & pos) == pos and (word & neg) == 0


def popcount(x: int) -> int:
    return bin(x).count("1")


def all_terms(width: int) -> list[tuple[int, int]]:
    """All 3^width terms as (pos_mask, neg_mask) pairs."""
    out = []
    for pattern in itertools.product((2, 1, 0), repeat=width):
        pos = neg = 0
        for j, p in enumerate(pattern):
            if p == 1:
                pos |= 1 << j
            elif p == 0:
                neg |= 1 << j
        out.append((pos, neg))
    return out


def term_onset(pos: int, neg: int, width: int) -> set[int]:
    return {w for w in range(1 << width) if sat(pos, neg, w)}


def masks_to_term(pos: int, neg: int, width: int) -> Term:
    return Term(
        frozenset(j for j in range(width) if pos >> j & 1),
        frozenset(j for j in range(width) if neg >> j & 1),
    )


def term_to_masks(t: Term) -> tuple[int, int]:
    pos = neg = 0
    for j in t.pos:
        pos |= 1 << j
    for j in t.neg:
        neg |= 1 << j
    return pos, neg


def brute_primes(width: int, on_words) -> set[tuple[int, int]]:
    """Prime implicants by definition: every term is tested for containment of
    its satisfying set in the on-set and for maximality under literal drops."""
    on = set(on_words)
    primes = set()
    for pos, neg in all_terms(width):
        if not term_onset(pos, neg, width) <= on:
            continue
        maximal = True
        for j in range(width):
            bit = 1 << j
            if pos & bit and term_onset(pos ^ bit, neg, width) <= on:
                maximal = False
                break
            if neg & bit and term_onset(pos, neg ^ bit, width) <= on:
                maximal = False
                break
        if maximal:
            primes.add((pos, neg))
    return primes


def minlen_exact(width: int, on_words) -> int:
    """Minimum total literal count of a DNF whose on-set is exactly on_words.

    Optimal forms can be assumed to consist of prime implicants, so this is
    an exact covering search over the brute-forced primes.
    """
    on = frozenset(on_words)
    assert on
    primes = sorted(brute_primes(width, on))
    onsets = {p: frozenset(term_onset(*p, width)) for p in primes}
    lengths = {p: popcount(p[0]) + popcount(p[1]) for p in primes}
    best = [sum(width for _ in on)]  # one full minterm per point always works

    def dfs(uncovered: frozenset[int], cost: int) -> None:
        if cost >= best[0]:
            return
        if not uncovered:
            best[0] = cost
            return
        w = min(uncovered)
        for p in primes:
            if w in onsets[p]:
                dfs(uncovered - onsets[p], cost + lengths[p])

    dfs(on, 0)
    return best[0]


def mindepth_exact(width: int, on_words) -> int:
    """Minimum largest-term size of an exact-on-set DNF: every point can take
    its shortest covering prime, and no form can do better at any point."""
    on = set(on_words)
    assert on
    primes = brute_primes(width, on)
    worst = 0
    for w in on:
        shortest = min(
            popcount(pos) + popcount(neg)
            for pos, neg in primes
            if sat(pos, neg, w)
        )
        worst = max(worst, shortest)
    return worst


def pair_opt_by_onsets(data, regularizer: str) -> int:
    """Optimal pair cost by enumerating both exact on-sets.

    Every never-both-firing pair corresponds to a disjoint pair of on-sets
    (S containing A, S' containing B); the cost of an on-set is the exact
    minimum for a DNF realizing it. Exponential in 2^|J| minus the labeled
    points; intended for |J| <= 4.
    """
    width = len(data.universe)
    a = frozenset(x.word for x in data.a_points)
    b = frozenset(x.word for x in data.b_points)
    rest = [w for w in range(1 << width) if w not in a and w not in b]
    cache: dict[frozenset[int], int] = {}

    def cost(words: frozenset[int]) -> int:
        if words not in cache:
            cache[words] = (
                minlen_exact(width, words)
                if regularizer == "length"
                else mindepth_exact(width, words)
            )
        return cache[words]

    best = None
    for r1 in range(len(rest) + 1):
        for extra1 in itertools.combinations(rest, r1):
            s = a | frozenset(extra1)
            remaining = [w for w in rest if w not in s]
            for r2 in range(len(remaining) + 1):
                for extra2 in itertools.combinations(remaining, r2):
                    c = cost(s) + cost(b | frozenset(extra2))
                    if best is None or c < best:
                        best = c
    return best


def exhaustive_cover_opt(inst, weighted: bool = False):
    """Minimum cover by trying every one of the 2^|family| subfamilies."""
    universe = set(inst.universe)
    n = len(inst.sets)
    best = None
    for r in range(n + 1):
        for combo in itertools.combinations(range(n), r):
            covered = set()
            for i in combo:
                covered |= inst.sets[i]
            if covered == universe:
                cost = sum(inst.weight(i) for i in combo) if weighted else r
                if best is None or cost < best:
                    best = cost
        if best is not None and not weighted:
            return best  # larger subfamilies cannot be smaller
    return best


def overlap_exhaustive(theta: DnfForm, theta_prime: DnfForm, width: int) -> bool:
    """True iff some point satisfies both forms, by sweeping all of {0,1}^J."""
    first = [term_to_masks(t) for t in theta.terms]
    second = [term_to_masks(t) for t in theta_prime.terms]
    for w in range(1 << width):
        if any(sat(p, n, w) for p, n in first) and any(
            sat(p, n, w) for p, n in second
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# Random generators (all driven by a caller-provided random.Random)


def random_dnf(rng, width: int, max_terms: int = 4) -> DnfForm:
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        pos, neg = set(), set()
        for j in range(width):
            r = rng.random()
            if r < 0.25:
                pos.add(j)
            elif r < 0.5:
                neg.add(j)
        terms.append(Term(frozenset(pos), frozenset(neg)))
    return DnfForm(frozenset(terms))


def random_tree(rng, width: int, depth: int = 4):
    if depth == 0 or rng.random() < 0.3:
        return Leaf(rng.randrange(2))
    return Internal(
        rng.randrange(width),
        random_tree(rng, width, depth - 1),
        random_tree(rng, width, depth - 1),
    )


def random_onset(rng, width: int, p: float = 0.5) -> set[Assignment]:
    return {Assignment(w, width) for w in range(1 << width) if rng.random() < p}


def perturb_cover_pair(rng, pair: PairSolution) -> PairSolution:
    """Grow a cover-derived pair while keeping it feasible: extra positive
    terms anchored on a chosen subset, and a padded negated term."""
    width = len(pair.universe)
    chosen = sorted(i for t in pair.theta.terms for i in t.pos)
    new_terms = set(pair.theta.terms)
    for _ in range(rng.randint(1, 2)):
        anchor = rng.choice(chosen)
        extra = {j for j in range(width) if rng.random() < 0.3}
        new_terms.add(Term(frozenset({anchor} | extra), frozenset()))
    pad = {j for j in range(width) if rng.random() < 0.3}
    theta_prime = DnfForm(
        frozenset({Term(frozenset(), frozenset(set(chosen) | pad))})
    )
    return PairSolution(pair.family, pair.universe, DnfForm(frozenset(new_terms)), theta_prime)
