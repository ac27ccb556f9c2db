import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orlicz import (
    E0,
    E,
    DomainError,
    InputError,
    YoungFunction,
    check_young,
    compare,
    default_grid,
)

# Frozen ahead of implementation from 50-digit arithmetic.
EVAL_LOGBUMP_P2_Q3_T2 = 9.059699961077427  # 4 * ln(e+1)^3
LOG_EVAL_Q1E5_T_HALF = -22724.266298986155  # 1e5 * ln(ln(e - 1/2)) + ln(1/2)
INVERSE_Y2 = 1.6477904473437898  # root of t * ln(e0 + t) = 2
COMPARE_E_IN_E0 = 1.8473165850739819  # grid sup of B11^-1(Bbar11(t)) / t


def grid_scan_inverse_y2():
    """Stated oracle for the inverse golden: 1e-6-step scan of t*ln(e0+t)
    on [1, 2], refined by bisection on the bracketing step."""
    t = np.arange(1.0, 2.0, 1e-6)
    g = t * np.log(E0 + t) - 2.0
    i = int(np.searchsorted(g > 0.0, True))
    lo, hi = t[i - 1], t[i]
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if mid * math.log(E0 + mid) < 2.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class TestEval:
    @pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 4.0])
    @pytest.mark.parametrize("q", [0.0, 0.5, 1.0, 5.0, 50.0, 1000.0])
    def test_normalized_at_one(self, p, q):
        # log(e0 + 1) = 1, so the whole family passes through (1, 1)
        assert abs(YoungFunction.log_bump(p, q).value(1.0) - 1.0) <= 1e-14

    def test_power(self):
        assert YoungFunction.power(2).value(3.0) == 9.0

    def test_log_bump_golden(self):
        v = YoungFunction.log_bump(2, 3).value(2.0)
        assert v == pytest.approx(EVAL_LOGBUMP_P2_Q3_T2, rel=1e-12)

    def test_zero_at_zero(self):
        assert YoungFunction.log_bump(2, 5).value(0.0) == 0.0
        assert YoungFunction.power(3).value(0.0) == 0.0

    def test_negative_t_rejected(self):
        with pytest.raises(DomainError):
            YoungFunction.log_bump(1, 1).value(-0.5)

    def test_extreme_q_does_not_overflow(self):
        A = YoungFunction.log_bump(1, 1e5)
        assert A.value(0.5) == 0.0  # true value ~ 1e-9869
        assert A.value(10.0) == math.inf  # true value ~ 1e40203
        assert A.value(1.0) == 1.0

    def test_array_matches_scalar(self):
        A = YoungFunction.log_bump(1.5, 7)
        ts = np.geomspace(1e-5, 1e5, 11)
        arr = A.value_array(ts)
        assert arr == pytest.approx([A.value(t) for t in ts], rel=1e-15)

    def test_parameter_validation(self):
        with pytest.raises(DomainError):
            YoungFunction.log_bump(0.5, 1)
        with pytest.raises(DomainError):
            YoungFunction.log_bump(1, -1)
        with pytest.raises(DomainError):
            YoungFunction.log_bump(1, 1, shift=0.0)


class TestLogEval:
    def test_normalized_zero(self):
        assert YoungFunction.log_bump(1, 1).log_value(1.0) == 0.0

    def test_power(self):
        assert YoungFunction.power(3).log_value(math.e) == pytest.approx(3.0, abs=1e-14)

    def test_extreme_q_golden(self):
        lv = YoungFunction.log_bump(1, 1e5).log_value(0.5)
        assert lv == pytest.approx(LOG_EVAL_Q1E5_T_HALF, rel=1e-12)

    def test_nonpositive_t_rejected(self):
        with pytest.raises(DomainError):
            YoungFunction.log_bump(1, 1).log_value(0.0)

    @pytest.mark.parametrize("p,q", [(1, 0), (1, 1), (2, 7), (3, 30), (1.5, 12.5)])
    def test_agrees_with_direct_eval(self, p, q):
        # q <= 30 keeps the direct product in range on [1e-3, 1e3]
        A = YoungFunction.log_bump(p, q)
        for t in np.geomspace(1e-3, 1e3, 25):
            direct = A.value(float(t))
            assert math.exp(A.log_value(float(t))) == pytest.approx(direct, rel=1e-12)


class TestInverse:
    def test_normalization_fixed_point(self):
        assert YoungFunction.log_bump(1, 7).inverse(1.0) == pytest.approx(1.0, abs=1e-12)

    def test_power(self):
        assert YoungFunction.power(2).inverse(4.0) == pytest.approx(2.0, rel=1e-11)

    def test_golden_and_oracle(self):
        root = YoungFunction.log_bump(1, 1).inverse(2.0)
        assert root == pytest.approx(INVERSE_Y2, rel=1e-11)
        assert root == pytest.approx(grid_scan_inverse_y2(), abs=1e-9)

    def test_zero(self):
        assert YoungFunction.log_bump(2, 3).inverse(0.0) == 0.0

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            YoungFunction.power(2).inverse(-1.0)

    @pytest.mark.parametrize(
        "A",
        [
            YoungFunction.power(1),
            YoungFunction.power(2.5),
            YoungFunction.log_bump(1, 1),
            YoungFunction.log_bump(2, 5, shift=E),
            YoungFunction.log_bump(1, 100),
            YoungFunction.log_bump(1.5, 1e5),
        ],
    )
    def test_round_trip(self, A):
        for y in np.geomspace(1e-8, 1e8, 33):
            y = float(y)
            t = A.inverse(y, tol=1e-9)
            assert abs(A.value(t) - y) <= 1e-9 * max(1.0, y)


@settings(max_examples=50, deadline=None)
@given(
    p=st.floats(1.0, 4.0),
    q=st.floats(0.0, 50.0),
    t=st.floats(1e-6, 1e5),
    k=st.floats(1.01, 10.0),
)
def test_strictly_increasing_property(p, q, t, k):
    A = YoungFunction.log_bump(p, q)
    assert A.log_value(t) < A.log_value(k * t)


@settings(max_examples=50, deadline=None)
@given(
    p=st.floats(1.0, 3.0),
    q=st.floats(0.0, 20.0),
    y=st.floats(1e-6, 1e6),
)
def test_inverse_round_trip_property(p, q, y):
    A = YoungFunction.log_bump(p, q)
    t = A.inverse(y)
    assert A.value(t) == pytest.approx(y, rel=1e-9)


class TestQMonotonicityAtKnee:
    """Pointwise engine of the limit: below the knee (shift + t < e) the
    value decreases in q, above it increases."""

    def test_below_knee_decreasing(self):
        values = [YoungFunction.log_bump(1, q).value(0.5) for q in (1, 2, 5, 10, 20)]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_above_knee_increasing(self):
        values = [YoungFunction.log_bump(1, q).value(2.0) for q in (1, 2, 5, 10, 20)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_shift_e_always_above_knee(self):
        values = [YoungFunction.log_bump(1, q, shift=E).value(0.5) for q in (1, 2, 5)]
        assert all(b > a for a, b in zip(values, values[1:]))


class TestCheckYoung:
    def test_log_bump_passes(self):
        assert check_young(YoungFunction.log_bump(1, 1), default_grid()).all_passed

    def test_power_one_fails_superlinearity(self):
        report = check_young(YoungFunction.power(1), default_grid())
        assert not report.superlinear.passed
        assert report.superlinear.violation_t is not None
        assert report.zero_at_zero.passed
        assert report.strictly_increasing.passed
        assert report.midpoint_convex.passed

    def test_fractional_q_shift_e_passes(self):
        assert check_young(YoungFunction.log_bump(1, 0.5, shift=E), default_grid()).all_passed

    def test_huge_q_passes_in_log_domain(self):
        # values overflow doubles at the top of the grid; the checks must not
        assert check_young(YoungFunction.log_bump(4, 1000), default_grid()).all_passed

    def test_unsorted_grid_rejected(self):
        with pytest.raises(InputError):
            check_young(YoungFunction.power(2), [1.0, 0.5, 2.0])

    def test_nonpositive_grid_rejected(self):
        with pytest.raises(InputError):
            check_young(YoungFunction.power(2), [0.0, 1.0])

    def test_empty_grid_rejected(self):
        with pytest.raises(InputError):
            check_young(YoungFunction.power(2), [])


class TestCompare:
    def test_identical_function(self):
        res = compare(YoungFunction.log_bump(1, 1), YoungFunction.log_bump(1, 1), default_grid())
        assert res.certified
        assert res.c_estimate == pytest.approx(1.0, abs=1e-9)

    def test_e0_fits_inside_e_with_c_one(self):
        # log(e-1+t) <= log(e+t) pointwise, so c = 1 suffices
        res = compare(
            YoungFunction.log_bump(1, 1, shift=E0),
            YoungFunction.log_bump(1, 1, shift=E),
            default_grid(),
        )
        assert res.certified
        assert res.c_estimate <= 1.0 + 1e-12

    def test_e_inside_e0_golden(self):
        res = compare(
            YoungFunction.log_bump(1, 1, shift=E),
            YoungFunction.log_bump(1, 1, shift=E0),
            default_grid(),
        )
        assert res.certified
        assert res.c_estimate > 1.0
        assert res.c_estimate == pytest.approx(COMPARE_E_IN_E0, rel=1e-9)

    def test_symmetric_comparison_gives_equivalence(self):
        A = YoungFunction.log_bump(2, 3, shift=E0)
        B = YoungFunction.log_bump(2, 3, shift=E)
        forward = compare(A, B, default_grid())
        backward = compare(B, A, default_grid())
        assert forward.certified and backward.certified

    def test_empty_grid_rejected(self):
        with pytest.raises(InputError):
            compare(YoungFunction.power(1), YoungFunction.power(2), [])
