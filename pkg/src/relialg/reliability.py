"""Reliability evaluation: inclusion-exclusion, disjoint products, bounds.

Two algebraic routes to the same number: evaluate a Hilbert-numerator
(improved inclusion-exclusion) or sum the probabilities of the disjoint
involutive cones of a basis (sum of disjoint products). Truncating the
alternating numerator gives Bonferroni-style brackets.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import fsum

from .involutive import InvolutiveBasis, janet_completion, pommaret_completion
from .monomials import MonomialIdeal, is_squarefree
from .resolution import (
    HilbertNumerator,
    ResolutionSummary,
    ah_symbols,
    classical_ie_summary,
    ek_symbols,
    hilbert_numerator,
)
from .stability import is_squarefree_stable_ideal, is_stable_ideal
from .systems import (
    ProbabilityModel,
    ReliabilityResult,
    SystemSpec,
    ensure_compatible,
    reliability_ideal,
    reliability_oracle,
    upset_probability,
)

IIE_SOURCES = ("ek", "ah", "classical", "auto")
SDP_DIVISIONS = ("janet", "pommaret")


def evaluate_numerator(model: ProbabilityModel, numerator: HilbertNumerator) -> float:
    """Probability substitution: each multidegree becomes its upset probability."""
    return fsum(
        (upset_probability(model, mu) if deg % 2 == 0 else -upset_probability(model, mu))
        for deg, mu in numerator.terms
    )


def summary_for_source(
    ideal: MonomialIdeal, source: str
) -> tuple[ResolutionSummary, str]:
    """Resolve an inclusion-exclusion source name to a summary and method tag."""
    if source == "ek":
        return ek_symbols(ideal), "IIE-EK"
    if source == "ah":
        return ah_symbols(ideal), "IIE-AH"
    if source == "classical":
        return classical_ie_summary(ideal), "IIE-classical"
    if source == "auto":
        if is_stable_ideal(ideal).stable:
            return ek_symbols(ideal), "IIE-EK"
        if all(is_squarefree(g) for g in ideal.gens):
            if is_squarefree_stable_ideal(ideal).stable:
                return ah_symbols(ideal), "IIE-AH"
        return classical_ie_summary(ideal), "IIE-classical"
    raise ValueError(f"source must be one of {IIE_SOURCES}")


def reliability_iie(
    spec: SystemSpec,
    level: int,
    model: ProbabilityModel,
    source: str = "auto",
) -> ReliabilityResult:
    """Level reliability as the alternating sum over resolution multidegrees."""
    ensure_compatible(spec, model)
    ideal = reliability_ideal(spec, level)
    summary, method = summary_for_source(ideal, source)
    numerator = hilbert_numerator(summary)
    return ReliabilityResult(
        evaluate_numerator(model, numerator), method, len(numerator.terms)
    )


def cone_probability(
    model: ProbabilityModel, element, multiplicative: frozenset[int]
) -> float:
    """Probability of one involutive cone.

    Multiplicative positions contribute "at least this level", the rest
    "exactly this level"; disjointness of the cones makes the plain sum of
    these products the reliability.
    """
    p = 1.0
    for i, e in enumerate(element):
        p *= model.at_least(i, e) if i in multiplicative else model.exactly(i, e)
    return p


def sdp_value(model: ProbabilityModel, basis: InvolutiveBasis) -> float:
    return fsum(
        cone_probability(model, h, mult)
        for h, mult in zip(basis.elements, basis.multiplicative)
    )


def reliability_sdp(
    spec: SystemSpec,
    level: int,
    model: ProbabilityModel,
    division: str = "janet",
) -> ReliabilityResult:
    """Level reliability as a sum of disjoint involutive-cone probabilities."""
    ensure_compatible(spec, model)
    ideal = reliability_ideal(spec, level)
    if division == "janet":
        basis = janet_completion(ideal)
        method = "SDP-Janet"
    elif division == "pommaret":
        basis = pommaret_completion(ideal)
        method = "SDP-Pommaret"
    else:
        raise ValueError(f"division must be one of {SDP_DIVISIONS}")
    return ReliabilityResult(sdp_value(model, basis), method, basis.size)


def bonferroni_bounds(
    spec: SystemSpec,
    level: int,
    model: ProbabilityModel,
    t: int,
    source: str = "auto",
) -> tuple[float, str]:
    """Partial alternating sum through homological degree t, with its side.

    Degree 0 alone over-counts (it is the plain sum of the path
    probabilities), so even t gives an upper bound and odd t a lower bound;
    t equal to the resolution length is the exact value.
    """
    ensure_compatible(spec, model)
    ideal = reliability_ideal(spec, level)
    summary, _ = summary_for_source(ideal, source)
    if not 0 <= t <= summary.length:
        raise ValueError(f"truncation {t} out of range 0..{summary.length}")
    value = fsum(
        (upset_probability(model, mu) if deg % 2 == 0 else -upset_probability(model, mu))
        for deg, group in enumerate(summary.by_degree[: t + 1])
        for mu in group
    )
    if t == summary.length:
        kind = "exact"
    else:
        kind = "upper" if t % 2 == 0 else "lower"
    return value, kind


@dataclass(frozen=True)
class CrossValidation:
    results: tuple[ReliabilityResult, ...]
    max_delta: float
    passed: bool


def cross_validate(
    spec: SystemSpec,
    level: int,
    model: ProbabilityModel,
    tol: float = 1e-10,
) -> CrossValidation:
    """Run the oracle, SDP-Janet, and auto IIE; compare all pairs."""
    results = (
        reliability_oracle(spec, level, model),
        reliability_sdp(spec, level, model, "janet"),
        reliability_iie(spec, level, model, "auto"),
    )
    values = [r.value for r in results]
    max_delta = max(abs(a - b) for a in values for b in values)
    return CrossValidation(results, max_delta, max_delta < tol)
