"""Janet and Pommaret divisions, involutive completion, basis queries.

An involutive basis splits the monomials of an ideal into pairwise disjoint
cones, one per basis element: the element times any product of its
multiplicative variables. That disjointness is what turns a basis directly
into a sum-of-disjoint-products reliability formula.
"""
from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass

from .errors import CompletionOverflow, NotQuasiStable
from .monomials import (
    Mono,
    MonomialIdeal,
    bump,
    canonical,
    max_index,
    minimal_generators,
    total_degree,
)


@dataclass(frozen=True)
class InvolutiveBasis:
    division: str
    nvars: int
    elements: tuple[Mono, ...]
    multiplicative: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def multiplicative_of(self, element: Mono) -> frozenset[int]:
        return self.multiplicative[self.elements.index(element)]

    def nonmultiplicative_of(self, element: Mono) -> frozenset[int]:
        return frozenset(range(self.nvars)) - self.multiplicative_of(element)


def janet_multiplicative(monomials, nvars: int) -> dict[Mono, frozenset[int]]:
    """Multiplicative index sets under the Janet grouping rule.

    Position k is multiplicative for an element when its k-th exponent is
    maximal among the elements sharing its exponents at positions < k.
    """
    elems = list(set(monomials))
    mult: dict[Mono, list[int]] = {m: [] for m in elems}

    def walk(group, k):
        if k == nvars:
            return
        vmax = max(m[k] for m in group)
        buckets = defaultdict(list)
        for m in group:
            if m[k] == vmax:
                mult[m].append(k)
            buckets[m[k]].append(m)
        for sub in buckets.values():
            walk(sub, k + 1)

    if elems:
        walk(elems, 0)
    return {m: frozenset(v) for m, v in mult.items()}


def pommaret_multiplicative(m: Mono, nvars: int) -> frozenset[int]:
    """Indices from the largest occupied position onward (all for the unit)."""
    return frozenset(range(max_index(m), nvars))


def _janet_divisor(elements, m: Mono):
    """The unique Janet involutive divisor of m among elements, or None.

    Descends coordinate by coordinate: within the current group the divisor
    must either match m's exponent exactly or sit at the group maximum
    (making the coordinate multiplicative), so each step is forced.
    """
    group = list(elements)
    if not group:
        return None
    for k in range(len(m)):
        vmax = max(e[k] for e in group)
        want = vmax if vmax < m[k] else m[k]
        group = [e for e in group if e[k] == want]
        if not group:
            return None
    return group[0]


def _pommaret_divisor(elements, m: Mono):
    for e in elements:
        c = max_index(e)
        if e[c] <= m[c] and e[:c] == m[:c]:
            return e
    return None


def involutive_divisor(basis: InvolutiveBasis, m: Mono):
    """The basis element whose involutive cone contains m, if any."""
    if basis.division == "janet":
        return _janet_divisor(basis.elements, m)
    return _pommaret_divisor(basis.elements, m)


def _finish(division: str, nvars: int, elements) -> InvolutiveBasis:
    elems = canonical(elements)
    if division == "janet":
        assign = janet_multiplicative(elems, nvars)
        mult = tuple(assign[e] for e in elems)
    else:
        mult = tuple(pommaret_multiplicative(e, nvars) for e in elems)
    return InvolutiveBasis(division, nvars, elems, mult)


def _janet_slices(gens: tuple[Mono, ...], memo) -> tuple[Mono, ...]:
    """Minimal Janet basis by slicing on the first variable.

    For v up to the maximal first exponent d, the monomials of the ideal
    with first exponent exactly v are, after stripping that variable, the
    ideal generated by the tails of generators with first exponent <= v.
    Gluing the recursive bases of those slices (the last slice keeps the
    first variable multiplicative) yields disjoint cones covering the whole
    ideal, and every element is needed because it is the only cover of
    itself. Identical sub-ideals are memoized.
    """
    if not gens:
        return ()
    cached = memo.get(gens)
    if cached is not None:
        return cached
    if len(gens[0]) == 0:
        return ((),)
    d = max(g[0] for g in gens)
    acc: list[Mono] = []
    for v in range(d + 1):
        tails = [g[1:] for g in gens if g[0] <= v]
        if not tails:
            continue
        sub = minimal_generators(tails)
        acc.extend((v,) + b for b in _janet_slices(sub, memo))
    out = tuple(acc)
    memo[gens] = out
    return out


def janet_completion(ideal: MonomialIdeal) -> InvolutiveBasis:
    """Minimal Janet basis of the ideal (contains the minimal generators)."""
    return _finish("janet", ideal.nvars, _janet_slices(ideal.gens, {}))


def janet_completion_iterative(
    ideal: MonomialIdeal, max_insertions: int = 10**6
) -> InvolutiveBasis:
    """Janet basis by one-at-a-time insertion of uncovered prolongations.

    Reference implementation: after each insertion the assignment is
    recomputed and the graded-lex smallest non-multiplicative product
    without an involutive divisor is inserted next. Slower than
    :func:`janet_completion` but checks the same minimal basis.
    """
    n = ideal.nvars
    elems = set(ideal.gens)
    if not elems:
        return _finish("janet", n, ())
    for _ in range(max_insertions + 1):
        assign = janet_multiplicative(elems, n)
        elem_list = sorted(elems, reverse=True)
        missing = set()
        for h in elem_list:
            for i in range(n):
                if i in assign[h]:
                    continue
                product = bump(h, i)
                if _janet_divisor(elem_list, product) is None:
                    missing.add(product)
        if not missing:
            return _finish("janet", n, elems)
        elems.add(min(missing, key=lambda t: (sum(t), t)))
    raise CompletionOverflow(f"janet completion exceeded {max_insertions} insertions")


def pommaret_completion(
    ideal: MonomialIdeal, degree_cap: int | None = None
) -> InvolutiveBasis:
    """Pommaret basis, or NotQuasiStable if completion climbs past the cap.

    The Pommaret assignment is global, so coverage is monotone under
    insertions; processing candidate products by increasing degree keeps
    the result minimal. The default cap (max generator degree + nvars + 5)
    is a heuristic: exceeding it diagnoses, but does not prove, that no
    finite basis exists.
    """
    n = ideal.nvars
    if ideal.is_zero:
        return _finish("pommaret", n, ())
    cap = degree_cap
    if cap is None:
        cap = max(total_degree(g) for g in ideal.gens) + n + 5
    # A divisor must match m exactly below its class and sit at or below
    # m there, so indexing (class, prefix) -> least class exponent makes
    # coverage a handful of dictionary probes.
    least_by_prefix: list[dict[Mono, int]] = [{} for _ in range(n)]
    elems: set[Mono] = set()
    heap: list[tuple[int, Mono]] = []

    def covered(m: Mono) -> bool:
        for c in range(n):
            least = least_by_prefix[c].get(m[:c])
            if least is not None and least <= m[c]:
                return True
        return False

    def add(h: Mono) -> None:
        elems.add(h)
        c = max_index(h)
        key = h[:c]
        least = least_by_prefix[c].get(key)
        if least is None or h[c] < least:
            least_by_prefix[c][key] = h[c]
        for i in range(c):
            m = bump(h, i)
            heapq.heappush(heap, (total_degree(m), m))

    for g in ideal.gens:
        add(g)
    while heap:
        deg, m = heapq.heappop(heap)
        if m in elems or covered(m):
            continue
        if deg > cap:
            raise NotQuasiStable(f"completion passed degree cap {cap}")
        add(m)
    return _finish("pommaret", n, elems)
