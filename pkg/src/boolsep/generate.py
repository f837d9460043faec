"""Seeded random instance generators."""

from __future__ import annotations

import random

from .core import Assignment, LabeledData, make_labeled_data, named_universe
from .errors import InvalidParams
from .setcover import SetCoverInstance


def gen_random_setcover(
    seed: int, n_elements: int, n_sets: int, density: float
) -> SetCoverInstance:
    """Random coverable instance; identical seeds give identical instances.

    Each element joins each subset independently with the given density;
    elements left uncovered are then added to a random subset so the
    instance is always coverable.
    """
    if n_elements < 1 or n_sets < 1:
        raise InvalidParams("element and set counts must be positive")
    if not 0 < density <= 1:
        raise InvalidParams("density must lie in (0, 1]")
    rng = random.Random(seed)
    elements = tuple(f"u{i + 1}" for i in range(n_elements))
    sets = [set() for _ in range(n_sets)]
    for e in elements:
        for s in sets:
            if rng.random() < density:
                s.add(e)
    covered = set().union(*sets)
    for e in elements:
        if e not in covered:
            sets[rng.randrange(n_sets)].add(e)
    return SetCoverInstance(elements, tuple(frozenset(s) for s in sets))


def gen_random_labeled_data(
    seed: int, n_vars: int, n_a: int, n_b: int
) -> LabeledData:
    """Random labeled data with disjoint A and B of the requested sizes."""
    if n_vars < 1 or n_a < 1 or n_b < 1:
        raise InvalidParams("sizes must be positive")
    if n_a + n_b > (1 << n_vars):
        raise InvalidParams(
            f"cannot place {n_a + n_b} distinct points in a space of {1 << n_vars}"
        )
    rng = random.Random(seed)
    universe = named_universe(n_vars)
    words = rng.sample(range(1 << n_vars), n_a + n_b)
    a = {Assignment(w, n_vars) for w in words[:n_a]}
    b = {Assignment(w, n_vars) for w in words[n_a:]}
    return make_labeled_data(universe, a, b)
