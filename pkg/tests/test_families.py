from __future__ import annotations

from math import comb

import pytest

from relialg import (
    binary_probabilities,
    consecutive_k_out_of_n,
    fully_stable_closure_binary,
    k_out_of_n,
    pommaret_completion,
    random_probabilities,
    random_system,
    reliability_ideal,
    reliability_oracle,
    system_stability,
    threshold_with_joker,
    validate,
)


def test_k_out_of_n_counts():
    assert len(k_out_of_n(5, 2).paths(1)) == 10
    assert k_out_of_n(4, 4).paths(1) == ((1, 1, 1, 1),)
    assert len(k_out_of_n(4, 1).paths(1)) == 4


def test_k_out_of_n_reliability():
    spec = k_out_of_n(4, 2)
    value = reliability_oracle(spec, 1, binary_probabilities([0.5] * 4)).value
    assert value == pytest.approx(11 / 16, abs=1e-12)


@pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (5, 3), (6, 4), (7, 3), (8, 4)])
def test_k_out_of_n_fully_stable(n, k):
    assert system_stability(k_out_of_n(n, k), 1).fully_stable


def test_consecutive_windows():
    spec = consecutive_k_out_of_n(5, 2)
    assert set(spec.paths(1)) == {
        (1, 1, 0, 0, 0), (0, 1, 1, 0, 0), (0, 0, 1, 1, 0), (0, 0, 0, 1, 1)
    }
    cyclic = consecutive_k_out_of_n(5, 2, cyclic=True)
    assert len(cyclic.paths(1)) == 5
    assert (1, 0, 0, 0, 1) in cyclic.paths(1)
    series = consecutive_k_out_of_n(4, 4)
    assert series.paths(1) == ((1, 1, 1, 1),)


@pytest.mark.parametrize(
    "n,k,m,expected",
    [(10, 2, 2, comb(10, 2) + 10), (10, 2, 6, 55), (15, 2, 2, 120)],
)
def test_threshold_generator_counts(n, k, m, expected):
    spec = threshold_with_joker(n, k, m)
    assert len(spec.paths(1)) == expected
    assert validate(spec) == []


def test_threshold_reduces_to_parallel_for_unit_levels():
    spec = threshold_with_joker(6, 3, 1)
    assert len(spec.paths(1)) == 6
    assert all(sum(p) == 1 for p in spec.paths(1))


def test_threshold_ideals_are_quasi_stable():
    for n, k, m in [(4, 2, 2), (5, 2, 3), (6, 3, 2), (6, 2, 3)]:
        ideal = reliability_ideal(threshold_with_joker(n, k, m), 1)
        pommaret_completion(ideal)  # must terminate within the default cap


def test_bridge_paths_and_closure(bridge):
    assert set(bridge.paths(1)) == {
        (1, 1, 0, 0, 0), (0, 0, 0, 1, 1), (1, 0, 1, 0, 1), (0, 1, 1, 1, 0)
    }
    assert validate(bridge) == []
    closure = fully_stable_closure_binary(bridge)
    assert len(closure.paths(1)) == 10


def test_random_system_deterministic():
    assert random_system(42, 5, 2, 4) == random_system(42, 5, 2, 4)
    assert random_system(42, 5, 2, 4) != random_system(43, 5, 2, 4)


def test_random_system_validates():
    for seed in range(40):
        spec = random_system(seed, 3 + seed % 3, 1 + seed % 2, 3 + seed % 3)
        assert validate(spec) == []


def test_random_system_respects_budget():
    spec = random_system(7, 5, 1, 4)
    assert len(spec.paths(1)) <= 4


def test_random_probabilities_shape():
    model = random_probabilities(3, (2, 1, 3))
    assert model.levels(0) == 2 and model.levels(1) == 1 and model.levels(2) == 3
    for i in range(3):
        row = model.tables[i]
        assert all(row[j] >= row[j + 1] for j in range(len(row) - 1))
