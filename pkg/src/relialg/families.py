"""Constructors for benchmark system families and seeded random instances."""
from __future__ import annotations

import itertools
import random

from .monomials import minimal_generators
from .systems import ProbabilityModel, SystemSpec, make_system, probability_model


def k_out_of_n(n: int, k: int) -> SystemSpec:
    """Binary system working whenever at least k of n components work."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    paths = [
        tuple(1 if i in chosen else 0 for i in range(n))
        for chosen in itertools.combinations(range(n), k)
    ]
    return make_system((1,) * n, [paths])


def consecutive_k_out_of_n(n: int, k: int, cyclic: bool = False) -> SystemSpec:
    """Binary system whose paths are runs of k consecutive components."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    starts = range(n) if cyclic else range(n - k + 1)
    paths = set()
    for s in starts:
        path = [0] * n
        for d in range(k):
            path[(s + d) % n] = 1
        paths.add(tuple(path))
    return make_system((1,) * n, [minimal_generators(paths)])


def threshold_with_joker(n: int, k: int, max_level: int) -> SystemSpec:
    """Works when k components reach level 1, or any one reaches the top level."""
    if not 1 <= k <= n or max_level < 1:
        raise ValueError(f"bad parameters n={n}, k={k}, M={max_level}")
    paths = [
        tuple(1 if i in chosen else 0 for i in range(n))
        for chosen in itertools.combinations(range(n), k)
    ]
    paths += [
        tuple(max_level if j == i else 0 for j in range(n)) for i in range(n)
    ]
    return make_system((max_level,) * n, [minimal_generators(paths)])


def bridge_system() -> SystemSpec:
    """The five-component two-terminal bridge network."""
    paths = [
        (1, 1, 0, 0, 0),
        (0, 0, 0, 1, 1),
        (1, 0, 1, 0, 1),
        (0, 1, 1, 1, 0),
    ]
    return make_system((1,) * 5, [paths])


def random_system(seed: int, n: int, max_level: int, path_budget: int) -> SystemSpec:
    """Deterministic random monotone system that passes validation.

    Levels are built top-down: each lower level reuses the paths above it
    plus fresh draws, so the level ideals nest; components that end up in
    no path get a single-component level-1 path appended.
    """
    rng = random.Random(seed)
    levels: list[tuple] = []
    current: list[tuple[int, ...]] = []
    for _ in range(max_level):
        draws = max(1, path_budget - len(current) // 2)
        for _ in range(draws):
            state = tuple(rng.randint(0, max_level) for _ in range(n))
            if any(state):
                current.append(state)
        if not current:
            current.append(tuple(1 if i == 0 else 0 for i in range(n)))
        current = list(minimal_generators(current))
        levels.append(tuple(current))
    levels.reverse()
    seen = [False] * n
    for lvl in levels:
        for p in lvl:
            for i, e in enumerate(p):
                seen[i] = seen[i] or e > 0
    base = list(levels[0])
    for i, ok in enumerate(seen):
        if not ok:
            base.append(tuple(1 if j == i else 0 for j in range(n)))
    levels[0] = minimal_generators(base)
    return make_system((max_level,) * n, levels)


def random_probabilities(seed: int, component_levels) -> ProbabilityModel:
    """Seeded non-increasing probability rows matching the component levels."""
    rng = random.Random(seed)
    rows = []
    for m in component_levels:
        vals = sorted((rng.uniform(0.05, 0.99) for _ in range(m)), reverse=True)
        rows.append(vals)
    return probability_model(rows)
