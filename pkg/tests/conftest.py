"""Shared fixtures and small independent oracles used across the suite."""
from __future__ import annotations

import random
from math import prod

import pytest

from relialg import (
    MonomialIdeal,
    binary_probabilities,
    bridge_system,
    make_system,
    minimalize,
    probability_model,
)
from relialg.monomials import box_states, total_degree


@pytest.fixture
def bridge():
    return bridge_system()


@pytest.fixture
def bridge_p9():
    return binary_probabilities([0.9] * 5)


@pytest.fixture
def ms3():
    """Three multi-state components, two system levels."""
    return make_system(
        (2, 2, 2),
        {
            1: [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
            2: [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 2)],
        },
    )


@pytest.fixture
def ms3_probs():
    return probability_model([[0.9, 0.8], [0.85, 0.8], [0.75, 0.7]])


@pytest.fixture
def four_component():
    """Binary system on a, b, c, d with paths ab, ac, bc, cd."""
    return make_system(
        (1, 1, 1, 1),
        {1: [(1, 1, 0, 0), (1, 0, 1, 0), (0, 1, 1, 0), (0, 0, 1, 1)]},
    )


@pytest.fixture
def four_component_ideal():
    return minimalize(4, [(1, 1, 0, 0), (1, 0, 1, 0), (0, 1, 1, 0), (0, 0, 1, 1)])


@pytest.fixture
def ah4_ideal():
    return minimalize(4, [(1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0)])


def random_ideal(rng: random.Random, n: int, max_degree: int = 3,
                 max_gens: int = 5, squarefree: bool = False) -> MonomialIdeal:
    """Seeded random non-zero monomial ideal with small total degrees."""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        for _ in range(50):
            if squarefree:
                m = tuple(rng.randint(0, 1) for _ in range(n))
            else:
                m = tuple(rng.randint(0, max_degree) for _ in range(n))
            if any(m) and total_degree(m) <= max_degree:
                gens.append(m)
                break
    if not gens:
        gens = [tuple(1 if i == 0 else 0 for i in range(n))]
    return minimalize(n, gens)


def brute_count_in_box(ideal: MonomialIdeal, bounds) -> int:
    """Number of box monomials inside the ideal, by direct enumeration."""
    return sum(1 for s in box_states(bounds) if ideal.contains(s))


def numerator_count_in_box(numerator, bounds) -> int:
    """Box count implied by a signed multidegree list (exact integers)."""
    total = 0
    for deg, mu in numerator.terms:
        cnt = prod(max(0, b - e) for b, e in zip(bounds, mu))
        total += cnt if deg % 2 == 0 else -cnt
    return total


def assert_cones_partition(basis, ideal, bounds, rng, samples: int = 150):
    """Sampled check that involutive cones are disjoint and cover the ideal."""
    for _ in range(samples):
        m = tuple(rng.randrange(b) for b in bounds)
        hits = 0
        for e, mult in zip(basis.elements, basis.multiplicative):
            if all(x <= y for x, y in zip(e, m)) and all(
                i in mult for i, (x, y) in enumerate(zip(e, m)) if y > x
            ):
                hits += 1
        assert hits == (1 if ideal.contains(m) else 0), (m, basis.elements)
