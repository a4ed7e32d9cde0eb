from __future__ import annotations

import pytest

from relialg import (
    NotStable,
    bonferroni_bounds,
    binary_probabilities,
    cross_validate,
    k_out_of_n,
    make_system,
    random_probabilities,
    random_system,
    reliability_iie,
    reliability_oracle,
    reliability_sdp,
)


def test_iie_ek_multistate(ms3, ms3_probs):
    res = reliability_iie(ms3, 2, ms3_probs, "ek")
    assert res.value == pytest.approx(0.9755, abs=1e-10)
    assert res.method == "IIE-EK"
    assert res.term_count == 9


def test_iie_classical_bridge(bridge, bridge_p9):
    res = reliability_iie(bridge, 1, bridge_p9, "classical")
    assert res.value == pytest.approx(0.97848, abs=1e-10)
    assert res.term_count == 15


def test_iie_ah_four_components():
    # Oracle and the printed resolution polynomial both give 0.9801 at p=0.9.
    spec = make_system(
        (1, 1, 1, 1),
        {1: [(1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0)]},
    )
    model = binary_probabilities([0.9] * 4)
    res = reliability_iie(spec, 1, model, "ah")
    assert res.value == pytest.approx(0.9801, abs=1e-10)
    assert res.value == pytest.approx(
        reliability_oracle(spec, 1, model).value, abs=1e-12
    )
    assert res.method == "IIE-AH"


def test_iie_source_errors(bridge, bridge_p9):
    with pytest.raises(NotStable):
        reliability_iie(bridge, 1, bridge_p9, "ek")


def test_iie_auto_picks_applicable_source(bridge, bridge_p9, ms3, ms3_probs):
    assert reliability_iie(bridge, 1, bridge_p9, "auto").method == "IIE-classical"
    assert reliability_iie(ms3, 2, ms3_probs, "auto").method == "IIE-EK"


def test_sdp_janet_bridge(bridge, bridge_p9):
    res = reliability_sdp(bridge, 1, bridge_p9, "janet")
    assert res.value == pytest.approx(0.97848, abs=1e-10)
    assert res.method == "SDP-Janet"
    assert res.term_count == 6


def test_sdp_pommaret_multistate(ms3, ms3_probs):
    res = reliability_sdp(ms3, 2, ms3_probs, "pommaret")
    assert res.value == pytest.approx(0.9755, abs=1e-10)
    assert res.method == "SDP-Pommaret"
    assert res.term_count == 4


def test_sdp_parallel_system():
    for n in (2, 4, 6):
        spec = k_out_of_n(n, 1)
        model = binary_probabilities([0.5] * n)
        res = reliability_sdp(spec, 1, model, "janet")
        assert res.value == pytest.approx(1 - 0.5**n, abs=1e-12)


def test_bounds_multistate(ms3, ms3_probs):
    value, kind = bonferroni_bounds(ms3, 2, ms3_probs, 0, "ek")
    assert value == pytest.approx(2.995, abs=1e-10)
    assert kind == "upper"
    value, kind = bonferroni_bounds(ms3, 2, ms3_probs, 1, "ek")
    assert kind == "lower"
    assert value <= 0.9755
    value, kind = bonferroni_bounds(ms3, 2, ms3_probs, 2, "ek")
    assert kind == "exact"
    assert value == pytest.approx(0.9755, abs=1e-10)


def test_bounds_bridge_first_order(bridge, bridge_p9):
    value, kind = bonferroni_bounds(bridge, 1, bridge_p9, 0, "classical")
    assert value == pytest.approx(0.81 + 0.81 + 0.729 + 0.729, abs=1e-10)
    assert kind == "upper"
    assert value >= 0.97848


def test_bounds_out_of_range(ms3, ms3_probs):
    with pytest.raises(ValueError):
        bonferroni_bounds(ms3, 2, ms3_probs, 9, "ek")


def test_bounds_bracket_exact_value():
    for seed in range(20):
        spec = random_system(seed, 4, 2, 4)
        model = random_probabilities(seed + 100, spec.component_levels)
        for level in range(1, spec.system_levels + 1):
            exact = reliability_oracle(spec, level, model).value
            t = 0
            while True:
                value, kind = bonferroni_bounds(spec, level, model, t)
                if kind == "exact":
                    assert value == pytest.approx(exact, abs=1e-10)
                    break
                if kind == "upper":
                    assert value >= exact - 1e-10
                else:
                    assert value <= exact + 1e-10
                t += 1


def test_cross_validate_goldens(bridge, bridge_p9, ms3, ms3_probs):
    report = cross_validate(bridge, 1, bridge_p9)
    assert report.passed and report.max_delta < 1e-10
    report = cross_validate(ms3, 2, ms3_probs)
    assert report.passed
    for res in report.results:
        assert res.value == pytest.approx(0.9755, abs=1e-10)


def test_cross_validate_random_systems():
    for seed in range(30):
        spec = random_system(seed, 5, 2, 4)
        model = random_probabilities(seed + 500, spec.component_levels)
        for level in range(1, spec.system_levels + 1):
            assert cross_validate(spec, level, model).passed


def test_monotone_in_single_probability(ms3, ms3_probs):
    base = reliability_sdp(ms3, 2, ms3_probs, "pommaret").value
    rows = [list(r[1:]) for r in ms3_probs.tables]
    rows[2][0] = 0.9  # raise p_{3,1}, keeping the row non-increasing
    from relialg import probability_model

    bumped = probability_model(rows)
    assert reliability_sdp(ms3, 2, bumped, "pommaret").value >= base - 1e-12
