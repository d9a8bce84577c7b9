import random

import pytest
from hypothesis import given, strategies as st

from oracles import rational_cf_denominator
from surdcf.continuant import (
    continuant,
    determinant_check,
    matrix_product,
    reversal_check,
)

words = st.lists(st.integers(1, 50), min_size=1, max_size=25)


def test_empty_word():
    assert continuant(()) == 1
    m = matrix_product(())
    assert (m.E, m.F_top, m.F_bot, m.G) == (1, 0, 0, 1)


def test_spec_values():
    assert continuant((1, 1, 1)) == 3
    assert continuant((2, 4)) == 9


def test_single_letter_matrix():
    m = matrix_product((7,))
    assert (m.E, m.F_top, m.F_bot, m.G) == (7, 1, 1, 0)


def test_matrix_spec_value():
    m = matrix_product((1, 1, 1))
    assert (m.E, m.F_top, m.F_bot, m.G) == (3, 2, 2, 1)


def test_reversal_spec_values():
    assert continuant((1, 2, 3)) == continuant((3, 2, 1)) == 10
    assert reversal_check((1, 2, 1))


def test_determinant_spec_values():
    assert determinant_check((1, 1, 1))  # 3*1 - 2*2 = -1
    assert determinant_check((5,))  # 5*0 - 1*1 = -1
    assert determinant_check((2, 4))  # 9*1 - 2*4 = +1
    with pytest.raises(ValueError):
        determinant_check(())


@given(words)
def test_matrix_entries_are_continuants(seq):
    m = matrix_product(seq)
    assert m.E == continuant(seq)
    assert m.F_top == continuant(seq[:-1])
    assert m.F_bot == continuant(seq[1:])
    assert m.G == continuant(seq[1:-1])


@given(words)
def test_det_sign(seq):
    assert matrix_product(seq).det() == (-1) ** len(seq)


@given(words)
def test_reversal(seq):
    assert reversal_check(seq)


@given(words)
def test_rational_fold_oracle(seq):
    assert continuant(seq) == rational_cf_denominator(seq)


def test_seeded_identity_run():
    # smaller cousin of the acceptance-scale randomized run
    rng = random.Random(12345)
    for _ in range(500):
        n = rng.randint(1, 25)
        seq = [rng.randint(1, 50) for _ in range(n)]
        m = matrix_product(seq)
        assert m.E == continuant(seq) and m.G == continuant(seq[1:-1])
        assert reversal_check(seq)
        assert determinant_check(seq)
