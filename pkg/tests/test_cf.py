import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import word_squares_to_D
from surdcf.cf import (
    Convergent,
    QuadraticSurd,
    convergents,
    expand_sqrt,
    expand_surd,
    expansion_record,
    norm_identity_check,
    occurrence_count,
    sqrt_period,
    period_length,
    count_in_period,
    step,
    validate_expansion,
)
from surdcf.kernel import is_square

nonsquares = st.integers(2, 10**6).filter(lambda n: not is_square(n))


class TestStep:
    def test_sqrt7_chain(self):
        a, s1 = step(QuadraticSurd(7, 0, 1))
        assert a == 2 and (s1.P, s1.Q) == (2, 3)
        a, s2 = step(s1)
        assert a == 1 and (s2.P, s2.Q) == (1, 2)

    def test_sqrt2_fixed_point(self):
        a, s = step(QuadraticSurd(2, 1, 1))
        assert a == 2 and (s.P, s.Q) == (1, 1)

    def test_non_normalized_rejected(self):
        with pytest.raises(ValueError):
            QuadraticSurd(7, 1, 4)  # 4 does not divide 7 - 1

    def test_square_D_rejected(self):
        with pytest.raises(ValueError):
            QuadraticSurd(9, 0, 1)

    @given(nonsquares)
    def test_inverse_floor_map(self, D):
        # 1/(w - a) == w' as exact surd arithmetic, along the whole period
        e = expand_sqrt(D)
        states = list(e.trace) + [e.trace[0]]
        for k in range(e.T):
            P, Q, a = states[k]
            Pn, Qn, _ = states[k + 1]
            # w - a = (P - aQ + sqrt(D))/Q; its reciprocal must be (Pn + sqrt(D))/Qn
            assert Pn == a * Q - P
            assert Qn * Q == D - Pn * Pn


class TestExpandSqrt:
    @pytest.mark.parametrize(
        "D,a0,period",
        [
            (6, 2, (2, 4)),
            (34, 5, (1, 4, 1, 10)),
            (2, 1, (2,)),
            (7, 2, (1, 1, 1, 4)),
            (13, 3, (1, 1, 1, 1, 6)),
            (23, 4, (1, 3, 1, 8)),
        ],
    )
    def test_known_periods(self, D, a0, period):
        e = expand_sqrt(D)
        assert (e.a0, e.period, e.T) == (a0, period, len(period))

    def test_square_rejected(self):
        with pytest.raises(ValueError):
            expand_sqrt(16)
        with pytest.raises(ValueError):
            expand_sqrt(1)

    def test_trace_optional(self):
        assert expand_sqrt(7, with_trace=False).trace is None

    def test_invariants_sweep(self):
        for D in range(2, 10**5):
            if not is_square(D):
                validate_expansion(expand_sqrt(D))

    def test_fast_paths_agree(self):
        for D in range(2, 3000):
            if is_square(D):
                continue
            e = expand_sqrt(D, with_trace=False)
            a0, word = sqrt_period(D)
            assert (a0, tuple(word)) == (e.a0, e.period)
            assert period_length(D) == e.T
            assert count_in_period(D, 1) == e.period.count(1)

    @given(nonsquares)
    def test_word_roundtrip_oracle(self, D):
        e = expand_sqrt(D, with_trace=False)
        assert word_squares_to_D(e.a0, e.period, D)


class TestExpandSurd:
    def test_golden_ratio(self):
        assert expand_surd(QuadraticSurd(5, 1, 2)) == ((), (1,))

    def test_omega1_of_sqrt7(self):
        assert expand_surd(QuadraticSurd(7, 2, 3)) == ((), (1, 1, 1, 4))

    def test_sqrt7_preperiod(self):
        assert expand_surd(QuadraticSurd(7, 0, 1)) == ((2,), (1, 1, 1, 4))

    def test_negative_P(self):
        # conjugate-flavored state still expands; cycle letters end up >= 1
        pre, per = expand_surd(QuadraticSurd(5, -1, 2))
        assert per
        assert all(a >= 1 for a in per)


class TestConvergents:
    def test_seed(self):
        assert convergents(7, -1)[0] == Convergent(-1, 1, 0)

    def test_spec_values(self):
        cv = convergents(7, 3)
        assert (cv[-1].p, cv[-1].q) == (8, 3)
        cv2 = convergents(2, 1)
        assert (cv2[-1].p, cv2[-1].q) == (3, 2)

    @given(nonsquares, st.integers(0, 40))
    def test_determinant_identity(self, D, n):
        cv = convergents(D, n)
        for a, b in zip(cv, cv[1:]):
            assert b.p * a.q - a.p * b.q in (1, -1)


class TestOccurrenceAndNorm:
    def test_occurrence_spec_values(self):
        assert occurrence_count(expand_sqrt(7), 1) == 3
        assert occurrence_count(expand_sqrt(3), 1) == 1
        assert occurrence_count(expand_sqrt(6), 3) == 0

    def test_norm_identity_spec_values(self):
        assert norm_identity_check(7)
        assert norm_identity_check(2)
        assert norm_identity_check(13)

    def test_norm_identity_sweep(self):
        for D in range(2, 2000):
            if not is_square(D):
                assert norm_identity_check(D), D


def test_expansion_record_schema():
    rec = expansion_record(expand_sqrt(34))
    assert list(rec.keys()) == ["D", "a0", "period", "T"]
    assert json.loads(json.dumps(rec)) == {
        "D": 34,
        "a0": 5,
        "period": [1, 4, 1, 10],
        "T": 4,
    }
