import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from collatz_lab.core import (
    backward_tree,
    delay,
    delay_sieve,
    glide,
    preimages_c,
    records_sweep,
    step_c,
    step_t,
    trajectory,
)
from collatz_lab.errors import DomainError, LimitExceeded


def brute_c(z, n):
    for _ in range(n):
        z = 3 * z + 1 if z % 2 else z // 2
    return z


def test_step_c_basics():
    assert step_c(1) == 4
    assert step_c(2) == 1
    assert step_c(6) == 3
    assert step_c(7) == 22


def test_step_t_basics():
    assert step_t(1) == 2
    assert step_t(7) == 11
    assert step_t(10) == 5


@pytest.mark.parametrize("fn", [step_c, step_t, delay, trajectory])
def test_domain_guards(fn):
    with pytest.raises(DomainError):
        fn(0)
    with pytest.raises(DomainError):
        fn(-3)


@given(st.integers(min_value=1, max_value=10**40))
def test_t_is_compressed_c(z):
    # one T step is one C step for evens, two C steps for odds
    if z % 2:
        assert step_t(z) == step_c(step_c(z))
    else:
        assert step_t(z) == step_c(z)


def test_trajectory_of_6():
    t = trajectory(6)
    assert t.values == [6, 3, 10, 5, 16, 8, 4, 2, 1]
    assert t.steps == 8
    assert t.reached_one


def test_trajectory_of_1_is_a_point():
    t = trajectory(1)
    assert t.values == [1] and t.steps == 0


def test_trajectory_step_limit_carries_partial():
    with pytest.raises(LimitExceeded) as exc:
        trajectory(27, step_limit=10)
    partial = exc.value.partial
    assert partial.values[0] == 27
    assert len(partial.values) == 11
    assert not partial.reached_one
    assert partial.values[-1] == brute_c(27, 10)


@given(st.integers(min_value=1, max_value=5000))
def test_trajectory_matches_brute_force(z):
    t = trajectory(z)
    for i, v in enumerate(t.values):
        assert v == brute_c(z, i)
    assert t.values[-1] == 1


def test_delay_spots():
    assert delay(1) == 0
    assert delay(2) == 1
    assert delay(6) == 8
    assert delay(27) == 111


def test_glide_spots():
    assert glide(2) == 1
    assert glide(3) == 6  # 3 -> 10 -> 5 -> 16 -> 8 -> 4 -> 2
    assert glide(7) == 11
    assert glide(27) == 96


def test_glide_of_1_is_undefined():
    with pytest.raises(DomainError):
        glide(1)


@given(st.integers(min_value=2, max_value=20000))
def test_glide_is_first_drop(n):
    g = glide(n)
    assert brute_c(n, g) < n
    assert all(brute_c(n, j) >= n for j in range(g))


def test_preimages():
    assert preimages_c(1) == {2}
    assert preimages_c(16) == {32, 5}
    assert preimages_c(4) == {8, 1}
    # 7 = 3*2+1 but 2 is even, so only the doubling preimage
    assert preimages_c(7) == {14}


@given(st.integers(min_value=1, max_value=10**30))
def test_preimages_really_map_back(z):
    for p in preimages_c(z):
        assert step_c(p) == z


def test_backward_tree_depth_2():
    t = backward_tree(2)
    assert set(t.nodes) == {1, 2, 4}
    assert t.depth_of(4) == 2


def test_backward_tree_depth_5():
    t = backward_tree(5)
    assert set(t.nodes) == {1, 2, 4, 8, 16, 5, 32}
    assert t.values_at(5) == {5, 32}
    assert t.depth_of(5) == 5


@given(st.integers(min_value=0, max_value=12))
def test_backward_tree_depth_equals_delay(depth):
    t = backward_tree(depth)
    for value, node in t.nodes.items():
        assert delay(value) == node.depth
        if node.parent is not None:
            assert step_c(value) == node.parent


def test_delay_sieve_agrees_with_delay():
    table = delay_sieve(500)
    for n in range(2, 501):
        assert table[n] == delay(n)


def test_delay_records_small():
    table = records_sweep(100, "delay")
    assert table.entries == [(2, 1), (3, 7), (6, 8), (7, 16), (9, 19), (18, 20), (25, 23), (27, 111), (54, 112), (73, 115), (97, 118)]


def test_glide_records_small():
    table = records_sweep(100, "glide")
    assert table.entries == [(2, 1), (3, 6), (7, 11), (27, 96)]


def test_records_rejects_unknown_kind():
    with pytest.raises(DomainError):
        records_sweep(100, "stopping")


@settings(max_examples=25)
@given(st.integers(min_value=2, max_value=4000))
def test_records_are_strict_maxima(n_max):
    entries = records_sweep(n_max, "delay").entries
    values = [v for _, v in entries]
    ns = [n for n, _ in entries]
    assert values == sorted(set(values))
    assert ns == sorted(set(ns))
