import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from avlift.errors import EmptySequence, NegativeDimension, SearchSpaceTooLarge
from avlift.exact_seq import (
    EXCLUDED,
    FORCED,
    UNDETERMINED,
    brute_force_profiles,
    build_sequence,
    check_witness,
    euler_characteristic,
    realize,
    solve_ranks,
)


def test_build_elliptic():
    spec = build_sequence([1, 2, 1, 1, 1], True, True)
    assert spec.dims == (1, 2, 1, 1, 1)
    assert spec.left_closed and spec.right_open
    assert [spec.exact_at(i) for i in range(5)] == [True, True, True, True, False]


def test_build_trivial():
    spec = build_sequence([0, 0], True, False)
    assert solve_ranks(spec).sorted_profiles() == [(0,)]


@pytest.mark.parametrize("dims", [[3], []])
def test_build_too_short(dims):
    with pytest.raises(EmptySequence):
        build_sequence(dims, True, True)


def test_build_negative():
    with pytest.raises(NegativeDimension) as exc:
        build_sequence([1, -1, 0])
    assert exc.value.field == "dims[1]"


def test_elliptic_sequence_forced_chain():
    sol = solve_ranks(build_sequence([1, 2, 1, 1, 1], True, True))
    assert sol.profiles == {(1, 1, 0, 1)}
    first, alpha, beta, gamma = sol.classification
    assert first.injective == FORCED
    assert alpha.surjective == FORCED and alpha.zero == EXCLUDED
    assert beta.zero == FORCED
    assert gamma.injective == FORCED
    assert gamma.forced == ("injective", "surjective", "bijective")


def test_zero_5_zero_infeasible():
    sol = solve_ranks(build_sequence([0, 5, 0], True, False))
    assert not sol.feasible
    assert sol.classification == ()
    assert sol.notes


def test_short_exact_iso():
    assert brute_force_profiles(build_sequence([2, 2], True, False)) == {(2,)}
    assert solve_ranks(build_sequence([2, 2], True, False)).classification[0].forced == (
        "injective",
        "surjective",
        "bijective",
    )


def test_odd_euler_infeasible():
    spec = build_sequence([1, 1, 1], True, False)
    assert brute_force_profiles(spec) == frozenset()
    assert not solve_ranks(spec).feasible


def test_open_both_ends_undetermined():
    # V0 -> V1 -> V2, exact only in the middle
    sol = solve_ranks(build_sequence([2, 2, 2], False, True))
    assert sol.profiles == {(0, 2), (1, 1), (2, 0)}
    assert all(c.injective == UNDETERMINED for c in sol.classification)
    assert sol.classification[0].summary == UNDETERMINED


def test_elliptic_matches_oracle():
    spec = build_sequence([1, 2, 1, 1, 1], True, True)
    assert brute_force_profiles(spec) == solve_ranks(spec).profiles


def test_search_space_cap():
    with pytest.raises(SearchSpaceTooLarge):
        brute_force_profiles(build_sequence([100] * 6))


@pytest.mark.parametrize(
    "dims, gamma_rank",
    [((3, 6, 3, 9, 15), 9), ((3, 6, 3, 6, 15), 6)],
)
def test_general_g3_gamma_by_oracle(dims, gamma_rank):
    # frozen from brute_force_profiles: exactness alone pins every rank
    spec = build_sequence(dims, True, True)
    profiles = brute_force_profiles(spec)
    assert profiles == {(3, 3, 0, gamma_rank)}
    gamma = solve_ranks(spec).classification[3]
    assert gamma.injective == FORCED


specs = st.builds(
    build_sequence,
    st.lists(st.integers(0, 6), min_size=2, max_size=7),
    st.booleans(),
    st.booleans(),
)


@settings(max_examples=300, deadline=None)
@given(specs)
def test_solver_equals_brute_force(spec):
    assert solve_ranks(spec).profiles == brute_force_profiles(spec)


@settings(max_examples=300, deadline=None)
@given(specs)
def test_profiles_satisfy_invariants(spec):
    d = spec.dims
    for r in solve_ranks(spec).profiles:
        for i, ri in enumerate(r):
            assert 0 <= ri <= min(d[i], d[i + 1])
        for i in range(1, len(d) - 1):
            assert d[i] - r[i] == r[i - 1]


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=2, max_size=7))
def test_closed_sequence_euler(dims):
    sol = solve_ranks(build_sequence(dims, True, False))
    if sol.feasible:
        assert euler_characteristic(dims) == 0


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=2, max_size=7), st.booleans())
def test_left_closed_is_deterministic(dims, right_open):
    sol = solve_ranks(build_sequence(dims, True, right_open))
    assert len(sol.profiles) <= 1
    # the recurrence from the left end
    r, expected = 0, []
    for d in dims[:-1]:
        r = d - r
        expected.append(r)
    if sol.feasible:
        assert sol.sorted_profiles() == [tuple(expected)]


def test_classification_matches_profiles():
    spec = build_sequence([3, 4, 4, 3], False, True)
    sol = solve_ranks(spec)
    for i, c in enumerate(sol.classification):
        ranks = {p[i] for p in sol.profiles}
        assert set(c.ranks) == ranks
        inj = {r == spec.dims[i] for r in ranks}
        assert (c.injective == FORCED) == (inj == {True})


def test_realizability_small_exhaustive():
    rng = random.Random(7)
    checked = 0
    for length in range(2, 6):
        for dims in itertools.product(range(5), repeat=length):
            for left_closed, right_open in itertools.product((True, False), repeat=2):
                spec = build_sequence(dims, left_closed, right_open)
                for prof in solve_ranks(spec).profiles:
                    maps = realize(spec, prof, modulus=101, rng=rng)
                    assert check_witness(spec, maps, 101) == prof
                    checked += 1
    assert checked > 1000


def test_realize_rejects_infeasible():
    spec = build_sequence([1, 1, 1], True, False)
    with pytest.raises(ValueError):
        realize(spec, (1, 0))


def test_witness_detects_nonexact():
    spec = build_sequence([1, 1, 1], False, True)
    ident = [[1]]
    with pytest.raises(AssertionError):
        check_witness(spec, [ident, ident], 101)
