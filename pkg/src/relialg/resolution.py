"""Admissible-symbol resolutions and inclusion-exclusion numerators.

For stable ideals the Eliahou-Kervaire resolution is minimal and is indexed
by symbols [m; u]: a minimal generator m together with a set u of positions
strictly below its largest occupied one. Squarefree stable ideals use the
Aramova-Herzog variant, which additionally forbids positions already
occupied in m. Either way, only ranks and multidegrees are needed here:
they produce the Hilbert-series numerator, whose probability substitution
is the compact inclusion-exclusion reliability formula.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotSquarefreeStable, NotStable, TooManyGenerators
from .monomials import Mono, MonomialIdeal, bump, is_squarefree, lcm, max_index
from .stability import is_stable_ideal, is_squarefree_stable_ideal


@dataclass(frozen=True)
class AdmissibleSymbol:
    """A minimal generator plus a strictly increasing tuple of 0-based indices."""

    generator: Mono
    indices: tuple[int, ...]

    @property
    def multidegree(self) -> Mono:
        m = self.generator
        for i in self.indices:
            m = bump(m, i)
        return m


@dataclass(frozen=True)
class ResolutionSummary:
    """Multidegrees per homological degree; ranks are the group sizes."""

    nvars: int
    by_degree: tuple[tuple[Mono, ...], ...]
    symbols: tuple[AdmissibleSymbol, ...] = ()

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.by_degree)

    @property
    def length(self) -> int:
        return len(self.by_degree) - 1


@dataclass(frozen=True)
class HilbertNumerator:
    """Signed multidegrees: term (i, mu) carries the coefficient (-1)^i."""

    nvars: int
    terms: tuple[tuple[int, Mono], ...]


def _symbols(ideal: MonomialIdeal, squarefree_guard: bool):
    for m in ideal.gens:
        cls = max_index(m)
        allowed = [i for i in range(cls) if not (squarefree_guard and m[i] > 0)]
        for r in range(len(allowed) + 1):
            for u in itertools.combinations(allowed, r):
                yield AdmissibleSymbol(m, u)


def _summarize(ideal: MonomialIdeal, squarefree_guard: bool) -> ResolutionSummary:
    symbols = tuple(
        sorted(
            _symbols(ideal, squarefree_guard),
            key=lambda s: (len(s.indices), _gen_rank(ideal, s.generator), s.indices),
        )
    )
    top = max((len(s.indices) for s in symbols), default=0)
    by_degree = tuple(
        tuple(s.multidegree for s in symbols if len(s.indices) == i)
        for i in range(top + 1)
    )
    return ResolutionSummary(ideal.nvars, by_degree, symbols)


def _gen_rank(ideal: MonomialIdeal, g: Mono) -> int:
    return ideal.gens.index(g)


def ek_symbols(ideal: MonomialIdeal) -> ResolutionSummary:
    """Eliahou-Kervaire symbols of a stable ideal, grouped by |u|."""
    if not is_stable_ideal(ideal).stable:
        raise NotStable(f"{ideal.gens} is not a stable generating set")
    return _summarize(ideal, squarefree_guard=False)


def ah_symbols(ideal: MonomialIdeal) -> ResolutionSummary:
    """Aramova-Herzog symbols of a squarefree stable ideal."""
    if any(not is_squarefree(g) for g in ideal.gens):
        raise NotSquarefreeStable(f"{ideal.gens} contains a non-squarefree generator")
    if not is_squarefree_stable_ideal(ideal).stable:
        raise NotSquarefreeStable(f"{ideal.gens} is not squarefree stable")
    return _summarize(ideal, squarefree_guard=True)


def classical_ie_summary(ideal: MonomialIdeal, cap: int = 25) -> ResolutionSummary:
    """Full inclusion-exclusion over generator subsets, graded by |T| - 1.

    No cancellation is performed; a subset of size k contributes its lcm at
    homological degree k - 1, so Bonferroni truncation applies uniformly.
    """
    gens = ideal.gens
    if len(gens) > cap:
        raise TooManyGenerators(f"{len(gens)} generators exceed the cap {cap}")
    by_degree = []
    for size in range(1, len(gens) + 1):
        group = []
        for subset in itertools.combinations(gens, size):
            acc = subset[0]
            for g in subset[1:]:
                acc = lcm(acc, g)
            group.append(acc)
        by_degree.append(tuple(group))
    return ResolutionSummary(ideal.nvars, tuple(by_degree))


def hilbert_numerator(summary: ResolutionSummary, cancel: bool = False) -> HilbertNumerator:
    """Signed multidegree list of a resolution, optionally cancelled.

    With ``cancel`` the net coefficient of each multidegree is computed and
    re-emitted with homological degree 0 (positive) or 1 (negative); the
    original grading is lost, so cancellation is off by default.
    """
    terms = tuple(
        (i, mu) for i, group in enumerate(summary.by_degree) for mu in group
    )
    if not cancel:
        return HilbertNumerator(summary.nvars, terms)
    net: dict[Mono, int] = {}
    for i, mu in terms:
        net[mu] = net.get(mu, 0) + (1 if i % 2 == 0 else -1)
    flat = []
    for mu in sorted(net, reverse=True):
        coeff = net[mu]
        flat.extend([(0 if coeff > 0 else 1, mu)] * abs(coeff))
    return HilbertNumerator(summary.nvars, tuple(flat))


def classical_ie(ideal: MonomialIdeal, cap: int = 25) -> HilbertNumerator:
    return hilbert_numerator(classical_ie_summary(ideal, cap))
