"""Rank deduction for long exact sequences of finite-dimensional vector spaces.

A sequence ``V_0 -> V_1 -> ... -> V_n`` is described only by the dimensions
``d_i``.  The unknowns are the ranks ``r_i`` of the maps ``V_i -> V_{i+1}``.
Exactness at ``V_i`` says the kernel of the outgoing map equals the image of
the incoming one, i.e. ``d_i - r_i == r_{i-1}``.  At ``V_0`` the incoming map
is ``0 -> V_0`` (so ``r_{-1} = 0``) and at ``V_n`` the outgoing map is
``V_n -> 0`` (so ``r_n = 0``); those two end conditions are imposed only when
the sequence is closed at that end.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import EmptySequence, NegativeDimension, SearchSpaceTooLarge

BRUTE_FORCE_LIMIT = 10**7

PROPERTIES = ("injective", "surjective", "zero")

FORCED = "forced"
EXCLUDED = "excluded"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class ExactSequenceSpec:
    dims: tuple[int, ...]
    left_closed: bool = True
    right_open: bool = True
    # optional display names; purely cosmetic
    map_labels: tuple[str, ...] | None = None
    node_labels: tuple[str, ...] | None = None

    @property
    def n_maps(self) -> int:
        return len(self.dims) - 1

    def exact_at(self, i: int) -> bool:
        if i == 0:
            return self.left_closed
        if i == len(self.dims) - 1:
            return not self.right_open
        return 0 < i < len(self.dims) - 1

    def map_label(self, i: int) -> str:
        if self.map_labels is not None:
            return self.map_labels[i]
        return f"f{i}"

    def search_space(self) -> int:
        d = self.dims
        return math.prod(min(d[i], d[i + 1]) + 1 for i in range(self.n_maps))


@dataclass(frozen=True)
class MapClassification:
    """Status of each property of one map across all feasible profiles."""

    injective: str
    surjective: str
    zero: str
    ranks: tuple[int, ...]

    @property
    def forced(self) -> tuple[str, ...]:
        """Labels of the properties holding in every profile, plus ``bijective``."""
        out = [p for p in PROPERTIES if getattr(self, p) == FORCED]
        if self.injective == FORCED and self.surjective == FORCED:
            out.insert(2, "bijective")
        return tuple(out)

    @property
    def summary(self) -> str:
        forced = self.forced
        if not forced:
            return UNDETERMINED
        return "+".join(f"forced_{p}" for p in forced)


@dataclass(frozen=True)
class RankSolution:
    spec: ExactSequenceSpec
    profiles: frozenset[tuple[int, ...]]
    classification: tuple[MapClassification, ...]
    notes: list[str] = field(default_factory=list, compare=False)

    @property
    def feasible(self) -> bool:
        return bool(self.profiles)

    def sorted_profiles(self) -> list[tuple[int, ...]]:
        return sorted(self.profiles)

    def by_label(self, label: str) -> MapClassification:
        for i, c in enumerate(self.classification):
            if self.spec.map_label(i) == label:
                return c
        raise KeyError(label)


def build_sequence(
    dims: Sequence[int],
    left_closed: bool = True,
    right_open: bool = True,
    map_labels: Sequence[str] | None = None,
    node_labels: Sequence[str] | None = None,
) -> ExactSequenceSpec:
    dims = tuple(int(d) for d in dims)
    if len(dims) < 2:
        raise EmptySequence(
            f"a sequence needs at least two spaces to contain a map, got {len(dims)}"
        )
    for i, d in enumerate(dims):
        if d < 0:
            raise NegativeDimension(f"dims[{i}] = {d} is negative", field=f"dims[{i}]")
    if map_labels is not None and len(map_labels) != len(dims) - 1:
        raise ValueError("need one label per map")
    if node_labels is not None and len(node_labels) != len(dims):
        raise ValueError("need one label per space")
    return ExactSequenceSpec(
        dims,
        bool(left_closed),
        bool(right_open),
        tuple(map_labels) if map_labels is not None else None,
        tuple(node_labels) if node_labels is not None else None,
    )


def is_feasible_profile(spec: ExactSequenceSpec, ranks: Sequence[int]) -> bool:
    d = spec.dims
    n = spec.n_maps
    if len(ranks) != n:
        return False
    for i, r in enumerate(ranks):
        if not 0 <= r <= min(d[i], d[i + 1]):
            return False
    for i in range(len(d)):
        if not spec.exact_at(i):
            continue
        incoming = ranks[i - 1] if i > 0 else 0
        outgoing = ranks[i] if i < n else 0
        if d[i] - outgoing != incoming:
            return False
    return True


def _propagate(spec: ExactSequenceSpec, r0: int) -> tuple[int, ...] | None:
    d = spec.dims
    ranks = [r0]
    # every interior node is exact, so each rank fixes the next one
    for i in range(1, spec.n_maps):
        ranks.append(d[i] - ranks[-1])
    if is_feasible_profile(spec, ranks):
        return tuple(ranks)
    return None


def _classify(
    spec: ExactSequenceSpec, profiles: frozenset[tuple[int, ...]]
) -> tuple[MapClassification, ...]:
    if not profiles:
        return ()
    d = spec.dims

    def status(values: set[bool]) -> str:
        if values == {True}:
            return FORCED
        if values == {False}:
            return EXCLUDED
        return UNDETERMINED

    out = []
    for i in range(spec.n_maps):
        ranks = {p[i] for p in profiles}
        out.append(
            MapClassification(
                injective=status({r == d[i] for r in ranks}),
                surjective=status({r == d[i + 1] for r in ranks}),
                zero=status({r == 0 for r in ranks}),
                ranks=tuple(sorted(ranks)),
            )
        )
    return tuple(out)


def solve_ranks(spec: ExactSequenceSpec) -> RankSolution:
    """All rank profiles compatible with exactness, with per-map classification.

    Exactness at interior nodes turns the ranks into the recurrence
    ``r_i = d_i - r_{i-1}``, so a profile is determined by ``r_0``.  A closed
    left end pins ``r_0 = d_0``; otherwise every admissible ``r_0`` is tried.
    An empty profile set means the dimensions cannot form such a sequence.
    """
    d = spec.dims
    if spec.left_closed:
        starts = [d[0]]
    else:
        starts = range(min(d[0], d[1]) + 1)
    profiles = frozenset(
        p for p in (_propagate(spec, r0) for r0 in starts) if p is not None
    )
    notes = []
    if not profiles:
        notes.append("infeasible: no rank assignment makes these dimensions exact")
    return RankSolution(spec, profiles, _classify(spec, profiles), notes)


def brute_force_profiles(spec: ExactSequenceSpec) -> frozenset[tuple[int, ...]]:
    """Exhaustive enumeration of every rank tuple, filtered by the constraints."""
    size = spec.search_space()
    if size > BRUTE_FORCE_LIMIT:
        raise SearchSpaceTooLarge(
            f"{size} candidate rank tuples exceeds the cap of {BRUTE_FORCE_LIMIT}",
            field="dims",
        )
    d = spec.dims
    n = spec.n_maps
    bounds = [min(d[i], d[i + 1]) + 1 for i in range(n)]
    grid = np.indices(bounds, dtype=np.int32).reshape(n, -1)
    ok = np.ones(grid.shape[1], dtype=bool)
    zero = np.zeros(grid.shape[1], dtype=np.int32)
    for i in range(n + 1):
        if not spec.exact_at(i):
            continue
        incoming = grid[i - 1] if i > 0 else zero
        outgoing = grid[i] if i < n else zero
        ok &= d[i] - outgoing == incoming
    return frozenset(tuple(int(x) for x in col) for col in grid[:, ok].T)


def euler_characteristic(dims: Sequence[int]) -> int:
    return sum((-1) ** i * d for i, d in enumerate(dims))


# -- explicit witnesses over F_p ------------------------------------------


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def matmul_mod_p(x: list[list[int]], y: list[list[int]], p: int) -> list[list[int]]:
    if not x or not y:
        return [[0] * (len(y[0]) if y else 0) for _ in x]
    return [
        [sum(a * b for a, b in zip(row, colv)) % p for colv in zip(*y)] for row in x
    ]


def _random_invertible(n: int, p: int, rng: random.Random) -> list[list[int]]:
    while True:
        m = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        if rank_mod_p(m, p) == n:
            return m


def _inverse_mod_p(m: list[list[int]], p: int) -> list[list[int]]:
    n = len(m)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] % p)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] % p:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def realize(
    spec: ExactSequenceSpec,
    ranks: Sequence[int],
    modulus: int = 101,
    rng: random.Random | None = None,
) -> list[list[list[int]]]:
    """Matrices over F_modulus with the given ranks, exact wherever ``spec`` demands.

    Matrix ``i`` has shape ``d_{i+1} x d_i``.  The canonical block form sends
    the complement of the incoming image onto the first basis vectors of the
    next space; a random change of basis in every space then hides the blocks.
    """
    if not is_feasible_profile(spec, ranks):
        raise ValueError(f"{tuple(ranks)} is not a feasible profile for {spec.dims}")
    rng = rng or random.Random(0)
    d = spec.dims
    canonical = []
    for i, r in enumerate(ranks):
        start = ranks[i - 1] if i > 0 else 0
        m = [[0] * d[i] for _ in range(d[i + 1])]
        for j in range(r):
            m[j][start + j] = 1
        canonical.append(m)
    bases = [_random_invertible(k, modulus, rng) if k else [] for k in d]
    out = []
    for i, m in enumerate(canonical):
        if d[i] == 0 or d[i + 1] == 0:
            out.append(m)
            continue
        conj = matmul_mod_p(bases[i + 1], m, modulus)
        out.append(matmul_mod_p(conj, _inverse_mod_p(bases[i], modulus), modulus))
    return out


def check_witness(
    spec: ExactSequenceSpec, maps: list[list[list[int]]], modulus: int = 101
) -> tuple[int, ...]:
    """Verify exactness of explicit matrices; returns their ranks.

    Raises AssertionError when a composite is nonzero or a node fails exactness.
    """
    d = spec.dims
    ranks = tuple(rank_mod_p(m, modulus) if d[i] and d[i + 1] else 0 for i, m in enumerate(maps))
    for i in range(1, len(maps)):
        if d[i - 1] and d[i] and d[i + 1]:
            comp = matmul_mod_p(maps[i], maps[i - 1], modulus)
            if any(any(row) for row in comp):
                raise AssertionError(f"composite at node {i} is nonzero")
    n = spec.n_maps
    for i in range(n + 1):
        if not spec.exact_at(i):
            continue
        image = ranks[i - 1] if i > 0 else 0
        kernel = d[i] - (ranks[i] if i < n else 0)
        if image != kernel:
            raise AssertionError(f"not exact at node {i}: image {image}, kernel {kernel}")
    return ranks

