from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from collatz_lab.blocks import (
    Block,
    BlockSequence,
    affine_coefficients,
    block_counterexample,
    block_path,
    closed_form_k,
    decompose,
    decompose_until_trivial,
    iterate_affine,
    make_block,
    recurrence_holds,
    verify_recurrence,
)
from collatz_lab.core import step_c
from collatz_lab.errors import DomainError, LimitExceeded


@pytest.mark.parametrize(
    "k0,expected",
    [
        (1, Block(1, 1, 1, 3, 3, 0)),
        (0, Block(0, 0, 0, 0, 1, 0)),
        (4, Block(4, 0, 2, 6, 1, 3)),
    ],
)
def test_make_block_spots(k0, expected):
    assert make_block(k0) == expected


def test_block_paths():
    assert block_path(make_block(0)) == [2, 1, 4, 2]
    assert block_path(make_block(4)) == [18, 9, 28, 14]
    assert block_path(make_block(1)) == [6, 3, 10, 5, 16, 8, 4, 2]


@given(st.integers(min_value=0, max_value=30000))
def test_block_invariants(k0):
    b = make_block(k0)
    assert b.g == 3 * b.h
    assert b.e >= 1
    assert recurrence_holds(b)
    a, off = affine_coefficients(b)
    assert a * b.k_in + off == b.k_out


@given(st.integers(min_value=0, max_value=5000))
def test_block_path_matches_map(k0):
    b = make_block(k0)
    path = block_path(b)
    assert len(path) == b.steps + 1
    v = b.beta_in
    for expected in path:
        assert v == expected
        v = step_c(v)


def test_decompose_chains():
    bs = decompose(4, 2)
    assert bs.k_seq == [4, 3, 6]
    assert bs.m_seq == [0, 2]
    assert bs.e_seq == [1, 1]


def test_decompose_requires_a_block():
    with pytest.raises(DomainError):
        decompose(4, 0)


def test_decompose_past_zero_repeats_trivial_block():
    bs = decompose(1, 4)
    assert bs.k_seq == [1, 0, 0, 0, 0]
    assert bs.blocks[1:] == [Block(0, 0, 0, 0, 1, 0)] * 3


def test_block_sequence_rejects_broken_chain():
    with pytest.raises(DomainError):
        BlockSequence([make_block(4), make_block(7)])


def test_decompose_until_trivial():
    bs = decompose_until_trivial(7)
    assert bs.blocks[-1].k_out == 0
    assert 0 not in [b.k_in for b in bs.blocks[1:]]
    # budget too small -> partial attached
    with pytest.raises(LimitExceeded) as exc:
        decompose_until_trivial(7, max_blocks=1)
    assert len(exc.value.partial.blocks) == 1


def test_verify_recurrence_passes():
    report = verify_recurrence(decompose(6, 5))
    assert report.passed and report.checked == 5


def test_verify_recurrence_flags_tampering():
    bs = decompose(6, 3)
    bs.blocks[1] = bs.blocks[1]._replace(k_out=bs.blocks[1].k_out + 1)
    bs.blocks[2] = bs.blocks[2]._replace(k_in=bs.blocks[2].k_in + 1)
    report = verify_recurrence(bs)
    assert not report.passed
    assert len(report.counterexamples) == 2
    assert report.counterexamples[0].input.startswith("block 1")


def test_closed_form_spots():
    assert closed_form_k(1, [1], [3]) == 0
    assert closed_form_k(0, [0, 0], [1, 1]) == 0
    assert closed_form_k(4, [0, 2], [1, 1]) == 6


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=4000), st.integers(min_value=1, max_value=12))
def test_closed_form_equals_real_decomposition(k0, n):
    bs = decompose(k0, n)
    assert closed_form_k(k0, bs.m_seq, bs.e_seq) == bs.blocks[-1].k_out


@given(
    st.integers(min_value=0, max_value=10**9),
    st.lists(
        st.tuples(st.integers(min_value=0, max_value=8), st.integers(min_value=1, max_value=8)),
        min_size=1,
        max_size=6,
    ),
)
def test_closed_form_equals_iterated_affine(k0, pairs):
    # formal parameter lists: closed form == step-by-step affine iteration
    m_seq = [m for m, _ in pairs]
    e_seq = [e for _, e in pairs]
    ks = iterate_affine(k0, m_seq, e_seq)
    assert closed_form_k(k0, m_seq, e_seq) == ks[-1]
    assert isinstance(ks[-1], Fraction)


def test_block_counterexample_sweep():
    assert all(block_counterexample(k) is None for k in range(3000))
