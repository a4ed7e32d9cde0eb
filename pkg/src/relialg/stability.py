"""Stability predicates for ideals and systems, and stable-closure algorithms.

An ideal is stable when the exchange move x_j * m / x_i keeps monomials
inside it; the variants differ in which positions i may donate. For binary
systems the squarefree variants apply: the receiving position j must be
empty, since a working binary component cannot be improved further.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    CompletionOverflow,
    EmptyIdeal,
    NotBinarySystem,
    NotSquarefree,
    TooManyComponents,
)
from .monomials import (
    Mono,
    MonomialIdeal,
    cumulative,
    divides,
    exchange,
    from_cumulative,
    is_squarefree,
    max_index,
    minimal_generators,
    minimalize,
    permute,
    total_degree,
)
from .systems import SystemSpec


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of the three nested stability checks for one ordering.

    ``fully_stable`` implies ``strongly_stable`` implies ``stable``.
    ``witness`` is a failing (generator, i, j) move for the weakest failed
    predicate, with 0-based positions; None when everything holds.
    """

    fully_stable: bool
    strongly_stable: bool
    stable: bool
    witness: tuple[Mono, int, int] | None = None
    ordering: tuple[int, ...] | None = None


def _first_failure(ideal, pairs_of, squarefree):
    for m in ideal.gens:
        for i, j in pairs_of(m):
            if m[i] == 0:
                continue
            if squarefree and m[j] > 0:
                continue
            if not ideal.contains(exchange(m, i, j)):
                return (m, i, j)
    return None


def _report(ideal: MonomialIdeal, squarefree: bool) -> StabilityReport:
    """Run the stable / strongly stable / fully stable checks on generators.

    Checking minimal generators suffices: if every generator admits the
    exchange moves, so does every monomial of the ideal (verified against a
    full-box brute force in the test suite).
    """
    n = ideal.nvars

    def stable_pairs(m):
        top = max_index(m)
        return ((top, j) for j in range(top))

    def strong_pairs(m):
        return ((i, j) for i in range(1, n) for j in range(i))

    def full_pairs(m):
        return ((i, j) for i in range(n) for j in range(n) if i != j)

    stable_w = _first_failure(ideal, stable_pairs, squarefree)
    strong_w = stable_w or _first_failure(ideal, strong_pairs, squarefree)
    full_w = strong_w or _first_failure(ideal, full_pairs, squarefree)
    return StabilityReport(
        fully_stable=full_w is None,
        strongly_stable=strong_w is None,
        stable=stable_w is None,
        witness=stable_w or strong_w or full_w,
        ordering=tuple(range(n)),
    )


def _require_squarefree(ideal: MonomialIdeal) -> None:
    for g in ideal.gens:
        if not is_squarefree(g):
            raise NotSquarefree(f"generator {g} is not squarefree")


def is_stable_ideal(ideal: MonomialIdeal) -> StabilityReport:
    """Exchange moves from the largest occupied position only."""
    return _report(ideal, squarefree=False)


def is_strongly_stable_ideal(ideal: MonomialIdeal) -> StabilityReport:
    """Exchange moves from every occupied position to any smaller one."""
    return _report(ideal, squarefree=False)


def is_squarefree_stable_ideal(ideal: MonomialIdeal) -> StabilityReport:
    _require_squarefree(ideal)
    return _report(ideal, squarefree=True)


def is_squarefree_strongly_stable_ideal(ideal: MonomialIdeal) -> StabilityReport:
    _require_squarefree(ideal)
    return _report(ideal, squarefree=True)


def system_stability(
    spec: SystemSpec, level: int, tau: tuple[int, ...] | None = None
) -> StabilityReport:
    """Stability of one system level under a component ordering.

    The variables are relabelled so that tau ordering becomes the natural
    one, then the ideal predicates run; binary components switch to the
    squarefree variants.
    """
    if tau is None:
        tau = spec.ordering or tuple(range(spec.n))
    paths = [permute(p, tau) for p in spec.paths(level)]
    ideal = minimalize(spec.n, paths)
    squarefree = all(m == 1 for m in spec.component_levels)
    rep = _report(ideal, squarefree)
    return StabilityReport(
        rep.fully_stable, rep.strongly_stable, rep.stable, rep.witness, tuple(tau)
    )


_VARIANTS = ("strongly-stable", "stable")


def strongly_stable_closure(
    ideal: MonomialIdeal,
    variant: str = "strongly-stable",
    squarefree: bool = False,
) -> MonomialIdeal:
    """Smallest (strongly) stable ideal containing the input, minimalized.

    Worklist over cumulative-exponent vectors: repeatedly take the
    lexicographically largest pending vector; if its monomial is not yet
    dominated, keep it and push the vector of every exchange move the
    variant demands of it (moving one exponent unit from position i to a
    smaller position j decrements the cumulative entries j+1..i). The
    stable variant donates only from the last occupied position; the
    squarefree variant skips moves that would square a variable. Pushed
    vectors are strictly lexicographically smaller than the one popped, so
    the loop terminates; the divisor prune is sound because exchange moves
    of dominated monomials are implied by those of the generators.
    """
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}")
    if ideal.is_zero:
        raise EmptyIdeal("closure of the zero ideal is undefined")
    if squarefree:
        _require_squarefree(ideal)
    n = ideal.nvars
    pending = {cumulative(g) for g in ideal.gens}
    found: list[Mono] = []
    while pending:
        sigma = max(pending)
        pending.remove(sigma)
        g = from_cumulative(sigma)
        if any(divides(d, g) for d in found):
            continue
        found.append(g)
        if variant == "stable":
            top = max_index(g)
            donors = [top] if top >= 1 and g[top] > 0 else []
        else:
            donors = [i for i in range(1, n) if g[i] > 0]
        for i in donors:
            for j in range(i):
                if squarefree and g[j] > 0:
                    continue
                gc = exchange(g, i, j)
                if any(divides(d, gc) for d in found):
                    continue
                pending.add(cumulative(gc))
    return minimalize(n, found)


def closure_oracle(
    ideal: MonomialIdeal,
    variant: str = "strongly-stable",
    squarefree: bool = False,
    max_generators: int = 20000,
) -> MonomialIdeal:
    """Closure by saturation: apply every admissible move until nothing new.

    Independent of :func:`strongly_stable_closure`; intended for
    cross-checking on small inputs.
    """
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}")
    if ideal.is_zero:
        raise EmptyIdeal("closure of the zero ideal is undefined")
    if squarefree:
        _require_squarefree(ideal)
    n = ideal.nvars
    current = MonomialIdeal(n, minimal_generators(ideal.gens))
    while True:
        fresh = []
        for m in current.gens:
            if variant == "stable":
                top = max_index(m)
                donors = [top] if top >= 1 and m[top] > 0 else []
            else:
                donors = [i for i in range(1, n) if m[i] > 0]
            for i in donors:
                for j in range(i):
                    if squarefree and m[j] > 0:
                        continue
                    moved = exchange(m, i, j)
                    if not current.contains(moved):
                        fresh.append(moved)
        if not fresh:
            return current
        current = MonomialIdeal(n, minimal_generators(list(current.gens) + fresh))
        if len(current.gens) > max_generators:
            raise CompletionOverflow(f"saturation exceeded {max_generators} generators")


def fully_stable_closure_binary(spec: SystemSpec) -> SystemSpec:
    """The k-out-of-n system with k the smallest path size of the input."""
    from .families import k_out_of_n

    if not spec.is_binary:
        raise NotBinarySystem("fully stable closure is defined for binary systems")
    k = min(total_degree(p) for p in spec.paths(1))
    return k_out_of_n(spec.n, k)


def find_stable_orderings(
    spec: SystemSpec,
    level: int,
    kind: str = "strongly-stable",
    max_components: int = 10,
) -> list[tuple[int, ...]]:
    """All component orderings for which the requested stability kind holds."""
    flags = {
        "stable": lambda r: r.stable,
        "strongly-stable": lambda r: r.strongly_stable,
        "fully-stable": lambda r: r.fully_stable,
    }
    if kind not in flags:
        raise ValueError(f"kind must be one of {sorted(flags)}")
    if spec.n > max_components:
        raise TooManyComponents(f"{spec.n} components exceed the cap {max_components}")
    picked = flags[kind]
    return [
        tau
        for tau in itertools.permutations(range(spec.n))
        if picked(system_stability(spec, level, tau))
    ]
