"""Coherent-system specifications, probability models, and the state oracle.

A system is stored extensionally: its minimal working states (paths) per
performance level. The structure function is derived from them, which keeps
validation decidable and ties the system directly to its level ideals.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import fsum, prod

from .errors import BoxTooLarge
from .monomials import (
    Mono,
    MonomialIdeal,
    box_states,
    canonical,
    divides,
    minimalize,
)


@dataclass(frozen=True)
class SystemSpec:
    """Components, level bounds, and minimal paths for each system level.

    ``minimal_paths[l - 1]`` holds the minimal l-paths as exponent tuples.
    ``ordering`` optionally records a component ordering used for stability.
    """

    component_levels: tuple[int, ...]
    system_levels: int
    minimal_paths: tuple[tuple[Mono, ...], ...]
    ordering: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.component_levels)

    @property
    def is_binary(self) -> bool:
        return self.system_levels == 1 and all(m == 1 for m in self.component_levels)

    def paths(self, level: int) -> tuple[Mono, ...]:
        if not 1 <= level <= self.system_levels:
            raise ValueError(f"level {level} out of range 1..{self.system_levels}")
        return self.minimal_paths[level - 1]

    def box(self) -> tuple[int, ...]:
        """Number of states per component (level count, M_i + 1)."""
        return tuple(m + 1 for m in self.component_levels)


def make_system(component_levels, paths_by_level, ordering=None) -> SystemSpec:
    """Build a spec from per-level path collections.

    ``paths_by_level`` is either a sequence indexed by level - 1 or a mapping
    from level to paths. Paths are stored verbatim (deduplicated, canonically
    ordered); redundancy is reported by :func:`validate`, not silently fixed.
    """
    component_levels = tuple(int(m) for m in component_levels)
    if isinstance(paths_by_level, dict):
        levels = sorted(paths_by_level)
        if levels != list(range(1, len(levels) + 1)):
            raise ValueError(f"levels must be 1..M, got {levels}")
        seq = [paths_by_level[l] for l in levels]
    else:
        seq = list(paths_by_level)
    paths = tuple(canonical(tuple(int(e) for e in p) for p in lvl) for lvl in seq)
    tau = tuple(ordering) if ordering is not None else None
    return SystemSpec(component_levels, len(paths), paths, tau)


def validate(spec: SystemSpec) -> list[str]:
    """Return all violations of minimality, nesting, bounds, and relevance."""
    problems: list[str] = []
    n = spec.n
    seen = [False] * n
    for level in range(1, spec.system_levels + 1):
        paths = spec.paths(level)
        if not paths:
            problems.append(f"level {level} has no paths")
            continue
        for p in paths:
            if len(p) != n:
                problems.append(f"path {p} at level {level} has wrong length")
                continue
            for i, e in enumerate(p):
                if e < 0 or e > spec.component_levels[i]:
                    problems.append(
                        f"path {p} at level {level} exceeds bounds of component {i + 1}"
                    )
                if e > 0:
                    seen[i] = True
            if any(q != p and divides(q, p) for q in paths):
                problems.append(f"non-minimal path {p} at level {level}")
        if level >= 2 and spec.paths(level - 1):
            for p in paths:
                if not any(divides(q, p) for q in spec.paths(level - 1)):
                    problems.append(
                        f"level {level} path {p} is not a level {level - 1} path"
                    )
    for i, ok in enumerate(seen):
        if not ok:
            problems.append(f"irrelevant component {i + 1}")
    return problems


def phi(spec: SystemSpec, state: Mono) -> int:
    """Structure function: highest level whose path set reaches the state."""
    if len(state) != spec.n:
        raise ValueError(f"state {state} has wrong length")
    for i, e in enumerate(state):
        if e < 0 or e > spec.component_levels[i]:
            raise ValueError(f"state {state} outside component {i + 1} bounds")
    for level in range(spec.system_levels, 0, -1):
        if any(divides(p, state) for p in spec.paths(level)):
            return level
    return 0


def reliability_ideal(spec: SystemSpec, level: int) -> MonomialIdeal:
    """The monomial ideal minimally generated by the minimal level paths."""
    return minimalize(spec.n, spec.paths(level))


@dataclass(frozen=True)
class ProbabilityModel:
    """Per-component tables p[i][j] = probability component i reaches level j.

    Row i is (1.0, p_{i,1}, ..., p_{i,M_i}); levels above M_i have
    probability zero by convention.
    """

    tables: tuple[tuple[float, ...], ...]

    @property
    def n(self) -> int:
        return len(self.tables)

    def levels(self, i: int) -> int:
        return len(self.tables[i]) - 1

    def at_least(self, i: int, j: int) -> float:
        if j <= 0:
            return 1.0
        row = self.tables[i]
        return row[j] if j < len(row) else 0.0

    def exactly(self, i: int, j: int) -> float:
        return self.at_least(i, j) - self.at_least(i, j + 1)


def probability_model(rows) -> ProbabilityModel:
    """Build a model from rows [p_{i,1}, ..., p_{i,M_i}] (leading 1 implied)."""
    tables = []
    for i, row in enumerate(rows):
        row = [float(p) for p in row]
        full = [1.0] + row
        for j in range(len(full) - 1):
            if full[j + 1] > full[j]:
                raise ValueError(f"row {i} increases at level {j + 1}: {row}")
        if row and row[-1] < 0.0:
            raise ValueError(f"row {i} has a negative probability: {row}")
        tables.append(tuple(full))
    return ProbabilityModel(tuple(tables))


def binary_probabilities(ps) -> ProbabilityModel:
    return probability_model([[p] for p in ps])


def ensure_compatible(spec: SystemSpec, model: ProbabilityModel) -> None:
    if model.n != spec.n:
        raise ValueError(f"{model.n} probability rows for {spec.n} components")
    for i in range(spec.n):
        if model.levels(i) != spec.component_levels[i]:
            raise ValueError(
                f"component {i + 1} has {spec.component_levels[i]} levels "
                f"but probability row gives {model.levels(i)}"
            )


def state_probability(model: ProbabilityModel, state: Mono) -> float:
    """Probability that every component sits at exactly the given level."""
    for i, e in enumerate(state):
        if e < 0 or e > model.levels(i):
            raise ValueError(f"state {state} outside component {i + 1} bounds")
    return prod(model.exactly(i, e) for i, e in enumerate(state))


def upset_probability(model: ProbabilityModel, mu: Mono) -> float:
    """Probability that every component performs at least at the given level.

    Exponents above a component's top level make the product zero, which is
    exactly what resolution multidegrees beyond the state box require.
    """
    return prod(model.at_least(i, e) for i, e in enumerate(mu))


@dataclass(frozen=True)
class ReliabilityResult:
    value: float
    method: str
    term_count: int


def reliability_oracle(
    spec: SystemSpec,
    level: int,
    model: ProbabilityModel,
    cap: int = 10**7,
) -> ReliabilityResult:
    """Exact reliability by summing the probability of every working state."""
    ensure_compatible(spec, model)
    if not 1 <= level <= spec.system_levels:
        raise ValueError(f"level {level} out of range 1..{spec.system_levels}")
    bounds = spec.box()
    if prod(bounds) > cap:
        raise BoxTooLarge(f"box has {prod(bounds)} states, cap is {cap}")
    terms = [
        state_probability(model, s)
        for s in box_states(bounds)
        if phi(spec, s) >= level
    ]
    return ReliabilityResult(fsum(terms), "oracle", len(terms))
