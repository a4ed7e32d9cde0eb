from __future__ import annotations

import random

import pytest

from relialg import (
    NotQuasiStable,
    involutive_divisor,
    janet_completion,
    janet_completion_iterative,
    janet_multiplicative,
    minimalize,
    pommaret_completion,
    pommaret_multiplicative,
    reliability_ideal,
    strongly_stable_closure,
    threshold_with_joker,
)

from conftest import assert_cones_partition, random_ideal

BRIDGE_GENS = [(1, 1, 0, 0, 0), (0, 0, 0, 1, 1), (1, 0, 1, 0, 1), (0, 1, 1, 1, 0)]

BRIDGE_NONMULT = {
    (1, 1, 0, 0, 0): set(),
    (0, 0, 0, 1, 1): {0, 1},
    (1, 0, 1, 0, 1): {1},
    (0, 1, 1, 1, 0): {0},
    (1, 0, 0, 1, 1): {1, 2},
    (0, 1, 0, 1, 1): {0, 2},
}


def test_janet_multiplicative_bridge_basis():
    assign = janet_multiplicative(BRIDGE_NONMULT, 5)
    for m, nonmult in BRIDGE_NONMULT.items():
        assert set(range(5)) - assign[m] == nonmult


def test_janet_multiplicative_singleton():
    assign = janet_multiplicative([(1, 0, 2)], 3)
    assert assign[(1, 0, 2)] == frozenset({0, 1, 2})


def test_janet_agrees_with_pommaret_on_quasi_stable_basis():
    elems = [(2, 0), (1, 3), (0, 3)]
    assign = janet_multiplicative(elems, 2)
    for e in elems:
        assert assign[e] == pommaret_multiplicative(e, 2)


@pytest.mark.parametrize(
    "m, nvars, expected",
    [
        ((2, 0), 2, {0, 1}),
        ((0, 3), 2, {1}),
        ((1, 0, 2), 3, {2}),
        ((0, 0), 2, {0, 1}),
    ],
)
def test_pommaret_multiplicative(m, nvars, expected):
    assert pommaret_multiplicative(m, nvars) == frozenset(expected)


def test_involutive_divisor_pommaret():
    basis = pommaret_completion(minimalize(2, [(2, 0), (0, 3)]))
    assert involutive_divisor(basis, (1, 4)) == (1, 3)
    assert involutive_divisor(basis, (1, 1)) is None
    assert involutive_divisor(basis, (2, 0)) == (2, 0)


def test_involutive_divisor_janet(bridge):
    basis = janet_completion(reliability_ideal(bridge, 1))
    assert involutive_divisor(basis, (1, 0, 1, 1, 1)) == (1, 0, 1, 0, 1)
    assert involutive_divisor(basis, (1, 0, 0, 1, 1)) == (1, 0, 0, 1, 1)
    assert involutive_divisor(basis, (1, 0, 0, 0, 1)) is None


def test_janet_completion_bridge(bridge):
    basis = janet_completion(reliability_ideal(bridge, 1))
    assert set(basis.elements) == set(BRIDGE_NONMULT)
    for e, mult in zip(basis.elements, basis.multiplicative):
        assert set(range(5)) - mult == BRIDGE_NONMULT[e]


def test_janet_completion_squarefree_stable_adds_nothing(ah4_ideal):
    basis = janet_completion(ah4_ideal)
    assert set(basis.elements) == set(ah4_ideal.gens)


def test_janet_completion_principal():
    ideal = minimalize(3, [(1, 2, 0)])
    assert janet_completion(ideal).elements == ((1, 2, 0),)


def test_janet_iterative_matches_fast_on_goldens(bridge):
    for ideal in [
        reliability_ideal(bridge, 1),
        reliability_ideal(threshold_with_joker(10, 2, 2), 1),
        minimalize(2, [(2, 0), (0, 3)]),
    ]:
        assert janet_completion_iterative(ideal) == janet_completion(ideal)


def test_janet_iterative_matches_fast_random():
    rng = random.Random(23)
    for _ in range(40):
        ideal = random_ideal(rng, rng.randint(2, 4), max_degree=3)
        assert janet_completion_iterative(ideal) == janet_completion(ideal)


def test_pommaret_completion_quasi_stable_example():
    basis = pommaret_completion(minimalize(2, [(2, 0), (0, 3)]))
    assert basis.elements == ((2, 0), (1, 3), (0, 3))


def test_pommaret_completion_stable_ideal_adds_nothing():
    ideal = minimalize(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 2)])
    basis = pommaret_completion(ideal)
    assert set(basis.elements) == set(ideal.gens)


def test_pommaret_not_noetherian_case():
    with pytest.raises(NotQuasiStable):
        pommaret_completion(minimalize(2, [(1, 1)]))


def test_pommaret_within_janet_when_bases_coincide():
    for gens, n in [
        ([(2, 0), (0, 3)], 2),
        ([(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 2)], 3),
    ]:
        ideal = minimalize(n, gens)
        pom = pommaret_completion(ideal)
        jan = janet_completion(ideal)
        assert set(pom.elements) == set(jan.elements)
        jan_assign = dict(zip(jan.elements, jan.multiplicative))
        for e, mult in zip(pom.elements, pom.multiplicative):
            assert mult <= jan_assign[e]


def test_stable_closures_are_their_own_bases():
    # Stable ideals are Pommaret bases; squarefree stable ideals Janet bases.
    rng = random.Random(31)
    for _ in range(20):
        ideal = strongly_stable_closure(random_ideal(rng, 3), "stable")
        basis = pommaret_completion(ideal)
        assert set(basis.elements) == set(ideal.gens)
    for _ in range(20):
        ideal = strongly_stable_closure(
            random_ideal(rng, 4, squarefree=True), "stable", squarefree=True
        )
        basis = janet_completion(ideal)
        assert set(basis.elements) == set(ideal.gens)


def test_cone_partition_sampling(bridge):
    rng = random.Random(41)
    ideal = reliability_ideal(bridge, 1)
    assert_cones_partition(janet_completion(ideal), ideal, (2,) * 5, rng)
    ms_ideal = minimalize(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 2)])
    assert_cones_partition(pommaret_completion(ms_ideal), ms_ideal, (4, 4, 4), rng)
    for seed in range(5):
        ideal = random_ideal(random.Random(seed), 4, max_degree=3)
        bounds = tuple(e + 2 for e in ideal.exponent_maxima())
        assert_cones_partition(janet_completion(ideal), ideal, bounds, rng)


def test_table_sizes():
    for n, k, m, expected in [(10, 2, 2, 55), (10, 2, 6, 235), (10, 4, 2, 385)]:
        ideal = reliability_ideal(threshold_with_joker(n, k, m), 1)
        assert janet_completion(ideal).size == expected
