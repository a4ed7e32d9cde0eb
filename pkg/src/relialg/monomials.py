"""Exponent-tuple monomials, cumulative encodings, and monomial ideals.

A state of an n-component system is an exponent tuple; the monomials that
are componentwise >= some generator form a monomial ideal. All values here
are immutable tuples, all operations are pure, so everything can be shared
freely between threads.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from .errors import BoxTooLarge, DimensionMismatch, EmptyIdeal, InvalidCumulative

Mono = tuple[int, ...]


def unit_monomial(nvars: int) -> Mono:
    return (0,) * nvars


def total_degree(m: Mono) -> int:
    return sum(m)


def is_squarefree(m: Mono) -> bool:
    return all(e <= 1 for e in m)


def support(m: Mono) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(m) if e)


def max_index(m: Mono) -> int:
    """Largest position (0-based) with a positive exponent; 0 for the unit."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i
    return 0


def divides(a: Mono, b: Mono) -> bool:
    if len(a) != len(b):
        raise DimensionMismatch(f"{len(a)} vs {len(b)} variables")
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Mono, b: Mono) -> Mono:
    if len(a) != len(b):
        raise DimensionMismatch(f"{len(a)} vs {len(b)} variables")
    return tuple(max(x, y) for x, y in zip(a, b))


def bump(m: Mono, i: int) -> Mono:
    """Multiply by the i-th variable."""
    return m[:i] + (m[i] + 1,) + m[i + 1:]


def exchange(m: Mono, i: int, j: int) -> Mono:
    """Move one unit of exponent from position i to position j."""
    out = list(m)
    out[i] -= 1
    out[j] += 1
    return tuple(out)


def cumulative(m: Mono) -> tuple[int, ...]:
    """Suffix sums of the exponents; entry 0 is the total degree.

    The result is non-increasing, and the encoding is a bijection onto
    non-increasing tuples of non-negative integers.
    """
    out: list[int] = []
    acc = 0
    for e in reversed(m):
        acc += e
        out.append(acc)
    return tuple(reversed(out))


def from_cumulative(sigma: tuple[int, ...]) -> Mono:
    """Inverse of :func:`cumulative`."""
    n = len(sigma)
    for k in range(n - 1):
        if sigma[k] < sigma[k + 1]:
            raise InvalidCumulative(f"entry {k + 1} increases: {sigma}")
    if n and sigma[-1] < 0:
        raise InvalidCumulative(f"negative entry: {sigma}")
    return tuple(sigma[k] - sigma[k + 1] for k in range(n - 1)) + sigma[-1:]


def permute(m: Mono, tau: tuple[int, ...]) -> Mono:
    """Reorder positions so that slot k holds the exponent of component tau[k]."""
    return tuple(m[t] for t in tau)


def inverse_permutation(tau: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(tau)
    for k, t in enumerate(tau):
        inv[t] = k
    return tuple(inv)


def canonical(gens) -> tuple[Mono, ...]:
    """Deduplicate and sort lexicographically descending (fixed output order)."""
    return tuple(sorted(set(gens), reverse=True))


def minimal_generators(gens) -> tuple[Mono, ...]:
    """Divisibility-minimal elements of a set of monomials, canonically ordered."""
    items = sorted(set(gens), key=lambda m: (total_degree(m), m))
    kept: list[Mono] = []
    for m in items:
        if not any(all(x <= y for x, y in zip(g, m)) for g in kept):
            kept.append(m)
    return tuple(sorted(kept, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held by its minimal generating set.

    ``gens`` must be mutually non-dividing; use :func:`minimalize` to build
    an ideal from an arbitrary generating set. An empty ``gens`` is the zero
    ideal (contains nothing).
    """

    nvars: int
    gens: tuple[Mono, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, m: Mono) -> bool:
        if len(m) != self.nvars:
            raise DimensionMismatch(f"{len(m)} vs {self.nvars} variables")
        return any(all(x <= y for x, y in zip(g, m)) for g in self.gens)

    def __contains__(self, m: Mono) -> bool:
        return self.contains(m)

    def exponent_maxima(self) -> tuple[int, ...]:
        """Per-variable maximum exponent over the generators."""
        return tuple(
            max((g[i] for g in self.gens), default=0) for i in range(self.nvars)
        )


def minimalize(nvars: int, gens) -> MonomialIdeal:
    gens = list(gens)
    if not gens:
        raise EmptyIdeal("a monomial ideal needs at least one generator")
    for g in gens:
        if len(g) != nvars:
            raise DimensionMismatch(f"generator {g} does not have {nvars} entries")
    return MonomialIdeal(nvars, minimal_generators(gens))


def zero_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, ())


def permute_ideal(ideal: MonomialIdeal, tau: tuple[int, ...]) -> MonomialIdeal:
    # Relabelling variables preserves minimality, so no re-minimalization.
    return MonomialIdeal(ideal.nvars, canonical(permute(g, tau) for g in ideal.gens))


def delete_variable(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """Set exponent i to zero in every generator and drop the position.

    The result lives in the remaining nvars - 1 variables.
    """
    if not 0 <= i < ideal.nvars:
        raise ValueError(f"variable index {i} out of range for {ideal.nvars} variables")
    if ideal.is_zero:
        return MonomialIdeal(ideal.nvars - 1, ())
    dropped = [g[:i] + g[i + 1:] for g in ideal.gens]
    return MonomialIdeal(ideal.nvars - 1, minimal_generators(dropped))


def artinian_closure(ideal: MonomialIdeal, bounds: tuple[int, ...]) -> MonomialIdeal:
    """Add the pure power x_i^bounds[i] for every variable.

    ``bounds[i]`` is the number of levels of variable i (its exponents range
    over 0..bounds[i]-1), so the added powers are the smallest outside the box.
    """
    _check_bounds(ideal.nvars, bounds)
    powers = [
        tuple(bounds[i] if k == i else 0 for k in range(ideal.nvars))
        for i in range(ideal.nvars)
    ]
    return MonomialIdeal(ideal.nvars, minimal_generators(list(ideal.gens) + powers))


def box_states(bounds: tuple[int, ...]):
    """All exponent tuples with 0 <= m_i < bounds[i]."""
    return itertools.product(*(range(b) for b in bounds))


def multiplicity(ideal: MonomialIdeal, bounds: tuple[int, ...], cap: int = 10**8) -> int:
    """Number of box monomials outside the ideal, by exhaustive enumeration."""
    _check_bounds(ideal.nvars, bounds)
    if prod(bounds) > cap:
        raise BoxTooLarge(f"box has {prod(bounds)} states, cap is {cap}")
    gens = ideal.gens
    count = 0
    for m in box_states(bounds):
        if not any(all(x <= y for x, y in zip(g, m)) for g in gens):
            count += 1
    return count


def _check_bounds(nvars: int, bounds: tuple[int, ...]) -> None:
    if len(bounds) != nvars:
        raise DimensionMismatch(f"{len(bounds)} bounds for {nvars} variables")
    if any(b < 1 for b in bounds):
        raise ValueError(f"box bounds must be positive: {bounds}")
