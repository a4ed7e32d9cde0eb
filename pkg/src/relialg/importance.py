"""Component importance measures and ordering-based design helpers.

Structural importance counts the states where a binary component is
critical; multiplicity importance counts, via a variable deletion and an
Artinian closure, how much of the state box a component's ideal controls.
For strongly stable systems these rankings agree with the stability
ordering, which in turn pins the optimal assignment of a probability pool.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import BoxTooLarge, NotBinarySystem, NotStronglyStable
from .monomials import (
    MonomialIdeal,
    artinian_closure,
    delete_variable,
    multiplicity,
)
from .reliability import reliability_sdp
from .stability import system_stability
from .systems import (
    ProbabilityModel,
    SystemSpec,
    binary_probabilities,
    ensure_compatible,
    phi,
    reliability_ideal,
)

I_DOMINATES = "i_dominates"
J_DOMINATES = "j_dominates"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


def structural_importance(spec: SystemSpec, comp: int) -> Fraction:
    """Fraction of other-component states where the component is critical.

    Exact rational (critical count over 2^(n-1)), so rank ties are exact.
    """
    if not spec.is_binary:
        raise NotBinarySystem("structural importance is defined for binary systems")
    n = spec.n
    others = [i for i in range(n) if i != comp]
    critical = 0
    for bits in itertools.product((0, 1), repeat=n - 1):
        state = [0] * n
        for i, b in zip(others, bits):
            state[i] = b
        state[comp] = 1
        up = phi(spec, tuple(state))
        state[comp] = 0
        down = phi(spec, tuple(state))
        critical += up - down
    return Fraction(critical, 2 ** (n - 1))


def permutation_compare(
    spec: SystemSpec, i: int, j: int, cap: int = 10**7
) -> str:
    """Exhaustively compare two components by state swaps.

    Component i dominates j when swapping a higher level into position i
    never lowers the structure function, over every pair of levels and
    every configuration of the other components.
    """
    if i == j:
        raise ValueError("components must be distinct")
    bounds = spec.box()
    others = [k for k in range(spec.n) if k not in (i, j)]
    top = min(spec.component_levels[i], spec.component_levels[j])
    pairs = top * (top + 1) // 2
    if prod(bounds[k] for k in others) * max(pairs, 1) > cap:
        raise BoxTooLarge("comparison would enumerate too many states")
    weak_i = weak_j = True
    for rest in itertools.product(*(range(bounds[k]) for k in others)):
        state = [0] * spec.n
        for k, v in zip(others, rest):
            state[k] = v
        for hi in range(1, top + 1):
            for lo in range(hi):
                state[i], state[j] = hi, lo
                a = phi(spec, tuple(state))
                state[i], state[j] = lo, hi
                b = phi(spec, tuple(state))
                if a < b:
                    weak_i = False
                if b < a:
                    weak_j = False
        if not (weak_i or weak_j):
            return INCOMPARABLE
    if weak_i and weak_j:
        return EQUAL
    return I_DOMINATES if weak_i else J_DOMINATES


def deleted_multiplicity(
    ideal: MonomialIdeal, comp: int, bounds: tuple[int, ...] | None = None
) -> int:
    """Multiplicity after deleting one variable and closing Artinian-ly.

    ``bounds`` are the level counts of the surviving variables; by default
    they come from the per-variable exponent maxima of the original
    generators (plus one).
    """
    if bounds is None:
        maxima = ideal.exponent_maxima()
        bounds = tuple(maxima[k] + 1 for k in range(ideal.nvars) if k != comp)
    deleted = delete_variable(ideal, comp)
    closed = artinian_closure(deleted, bounds)
    return multiplicity(closed, bounds)


def multiplicity_importance(spec: SystemSpec, level: int, comp: int) -> int:
    """Box size minus the deleted-variable multiplicity, per declared levels."""
    ideal = reliability_ideal(spec, level)
    bounds = tuple(m + 1 for k, m in enumerate(spec.component_levels) if k != comp)
    total = prod(m + 1 for m in spec.component_levels)
    return total - deleted_multiplicity(ideal, comp, bounds)


@dataclass(frozen=True)
class Assignment:
    probabilities: tuple[float, ...]
    reliability: float


def optimal_assignment(
    spec: SystemSpec, tau: tuple[int, ...], pool
) -> Assignment:
    """Assign a probability pool descending along a strongly stable ordering.

    For strongly stable binary systems this maximises reliability over all
    permutations of the pool.
    """
    if not spec.is_binary:
        raise NotBinarySystem("assignment optimisation is for binary systems")
    pool = list(pool)
    if len(pool) != spec.n:
        raise ValueError(f"pool has {len(pool)} values for {spec.n} components")
    if not system_stability(spec, 1, tuple(tau)).strongly_stable:
        raise NotStronglyStable(f"system is not strongly stable for ordering {tau}")
    probs = [0.0] * spec.n
    for slot, p in zip(tau, sorted(pool, reverse=True)):
        probs[slot] = p
    model = binary_probabilities(probs)
    value = reliability_sdp(spec, 1, model, "janet").value
    return Assignment(tuple(probs), value)


def swap_monotonicity(
    spec: SystemSpec, model: ProbabilityModel, i: int, j: int
) -> bool:
    """Whether swapping the tables of components i and j does not hurt.

    Evaluates both reliabilities exactly and reports the comparison; no
    stability assumption is made here, so this doubles as a counterexample
    probe for systems that are not strongly stable.
    """
    if not spec.is_binary:
        raise NotBinarySystem("probability swaps are compared on binary systems")
    ensure_compatible(spec, model)
    rows = list(model.tables)
    rows[i], rows[j] = rows[j], rows[i]
    swapped = ProbabilityModel(tuple(rows))
    before = reliability_sdp(spec, 1, model, "janet").value
    after = reliability_sdp(spec, 1, swapped, "janet").value
    return after >= before - 1e-12
