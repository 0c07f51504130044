import math
from fractions import Fraction

import pytest

from eudoxus.core.exceptions import DefectViolationError, ValidationError
from eudoxus.models.cfseq import CFSeq
from eudoxus.services.endo_core import (
    CFPiecewise,
    Compose,
    EndoNode,
    IntSlope,
    Inverse,
    Neg,
    RatSlope,
    Sum,
    approx,
    certify_defect,
    configure_memo,
    defect_bound,
    evaluate,
)


class Square(EndoNode):
    """Not a near-endomorphism; claims a defect it cannot honour."""

    kind = "square"

    def _evaluate(self, x: int) -> int:
        return x * x

    def _defect(self) -> int:
        return 1


class TestLeaves:
    def test_int_slope_is_odd(self):
        f = IntSlope(3)
        assert (f(5), f(-5), f(0)) == (15, -15, 0)
        assert f.c == 1

    def test_rat_slope_floors_and_reduces(self):
        f = RatSlope(2, 4)
        assert (f.p, f.q) == (1, 2)
        assert f.slope == Fraction(1, 2)
        assert (f(3), f(-3)) == (1, -1)
        assert f.c == 2

    def test_rat_slope_needs_positive_denominator(self):
        with pytest.raises(ValidationError):
            RatSlope(1, 0)

    def test_cf_piecewise_follows_convergents(self, sqrt2):
        f = CFPiecewise(sqrt2)
        assert [f(1), f(2), f(5), f(10), f(100)] == [1, 3, 7, 14, 141]
        assert f.c == 4

    def test_finite_cf_uses_last_convergent(self):
        half = CFPiecewise(CFSeq.finite([0, 2]))
        assert [half(1), half(2), half(5), half(1000)] == [0, 1, 2, 500]
        assert CFPiecewise(CFSeq.finite([2]))(9) == 18


class TestCombinators:
    def test_sum_and_neg(self):
        f = Sum(IntSlope(2), RatSlope(1, 2))
        assert f(4) == 10
        assert f.c == 3
        assert Neg(IntSlope(2))(3) == -6

    def test_compose_defect(self):
        f = Compose(IntSlope(2), IntSlope(3))
        assert f(4) == 24
        assert f.c == 2 * 1 + 1 * (2 + 1) + 1

    def test_monotone_flags(self):
        assert IntSlope(0).monotone
        assert not IntSlope(-1).monotone
        assert Sum(IntSlope(1), RatSlope(1, 2)).monotone
        assert not Neg(IntSlope(1)).monotone
        assert not Compose(IntSlope(2), Neg(IntSlope(1))).monotone

    def test_children(self):
        inner = IntSlope(2)
        assert Neg(inner).children == (inner,)
        assert IntSlope(1).children == ()


class TestInverse:
    def test_least_preimage(self):
        g = Inverse(IntSlope(2), Fraction(2))
        assert [g(4), g(5), g(-5), g(0)] == [2, 3, -3, 0]
        assert g.window == 4
        assert g.c == 7

    def test_non_monotone_inner_scans_window(self):
        wiggly = Sum(IntSlope(3), Neg(RatSlope(1, 2)))
        g = Inverse(wiggly, Fraction(1))
        for x in range(1, 200):
            y = g(x)
            assert wiggly(y) >= x
            assert all(wiggly(z) < x or wiggly(z - 1) >= x for z in range(1, y))

    def test_needs_positive_slope_floor(self):
        with pytest.raises(ValidationError):
            Inverse(IntSlope(2), Fraction(0))

    def test_ceiling_below_floor(self):
        with pytest.raises(ValidationError):
            Inverse(IntSlope(2), Fraction(2), Fraction(1))


class TestQueries:
    def test_evaluate_and_defect_bound(self):
        f = RatSlope(7, 3)
        assert evaluate(f, 6) == 14
        assert defect_bound(f).c == 2

    def test_approx_contains_slope(self):
        interval = approx(RatSlope(7, 3), 10_000)
        assert interval.contains(Fraction(7, 3))
        assert interval.radius == Fraction(2, 10_000)

    def test_approx_needs_positive_point(self):
        with pytest.raises(ValidationError):
            approx(IntSlope(1), 0)

    def test_certify_defect_reports_observed_maximum(self):
        assert certify_defect(IntSlope(5), 10) == 0
        assert certify_defect(RatSlope(1, 2), 10) == 1

    def test_certify_defect_catches_false_claims(self):
        with pytest.raises(DefectViolationError) as info:
            certify_defect(Square(), 5)
        assert info.value.details["bound"] == 1
        assert info.value.details["defect"] >= 1


class TestMemo:
    def test_values_are_memoized(self):
        f = RatSlope(3, 7)
        f(100)
        assert f._memo == {100: 42}

    def test_memo_cap_evicts_largest_arguments(self):
        configure_memo(16)
        f = IntSlope(2)
        for x in range(1, 18):
            f(x)
        assert len(f._memo) == 12
        assert max(f._memo) == 12


class TestWorkedExamples:
    def test_piecewise_uses_bracketing_convergent(self):
        assert CFPiecewise(CFSeq.finite([1, 2, 2]))(3) == 4

    def test_compose_bound_is_sound(self):
        f = Compose(RatSlope(3, 2), RatSlope(3, 2))
        assert f.c == 11
        assert certify_defect(f, 100) <= 2

    def test_floor_slopes(self):
        assert certify_defect(RatSlope(7, 3), 100) == 1
        assert certify_defect(Sum(RatSlope(1, 2), RatSlope(1, 3)), 50) < 4

    def test_golden_ratio(self):
        s = math.isqrt(5 * 10**24)
        scale = 2 * 10**12
        interval = approx(CFPiecewise(CFSeq.periodic((1,), (1,))), 10**6)
        assert interval.lower < Fraction(10**12 + s + 1, scale)
        assert interval.upper > Fraction(10**12 + s, scale)
