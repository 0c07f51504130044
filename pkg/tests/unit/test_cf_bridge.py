from fractions import Fraction

import pytest

from eudoxus.core.exceptions import FiniteExhaustedError, ValidationError
from eudoxus.models.cfseq import CFSeq
from eudoxus.models.domain import CFStatus, Inconclusive
from eudoxus.services.cf_bridge import (
    cf_to_endo,
    convergents,
    diagonal,
    endo_to_cf,
    integer_part,
    rational_cf,
    reciprocal_cf,
)
from eudoxus.services.endo_core import IntSlope, RatSlope
from eudoxus.services.real_ops import add


class TestConvergents:
    def test_sqrt2(self, sqrt2):
        assert [c.as_fraction() for c in convergents(sqrt2, 4)] == [
            Fraction(1),
            Fraction(3, 2),
            Fraction(7, 5),
            Fraction(17, 12),
        ]

    def test_determinant_identity(self, sqrt2):
        cs = convergents(sqrt2, 12)
        for k in range(1, 12):
            assert cs[k].p * cs[k - 1].q - cs[k - 1].p * cs[k].q == (-1) ** (k + 1)

    def test_finite_sequence_runs_out(self):
        with pytest.raises(FiniteExhaustedError):
            convergents(CFSeq.finite([1, 2]), 3)

    def test_needs_one_convergent(self, sqrt2):
        with pytest.raises(ValidationError):
            convergents(sqrt2, 0)


class TestRationalExpansions:
    def test_rational_cf(self):
        assert rational_cf(Fraction(7, 12)).prefix(10) == [0, 1, 1, 2, 2]
        assert rational_cf(Fraction(-7, 3)).prefix(10) == [-3, 1, 2]
        assert rational_cf(5).prefix(10) == [5]

    def test_reciprocal_prepends_or_drops_zero(self):
        assert reciprocal_cf(CFSeq.finite([2, 3])).prefix(5) == [0, 2, 3]
        assert reciprocal_cf(CFSeq.finite([0, 2, 3])).prefix(5) == [2, 3]

    def test_reciprocal_of_periodic(self, sqrt2):
        assert reciprocal_cf(sqrt2).prefix(4) == [0, 1, 2, 2]

    def test_reciprocal_rejects_negative_and_zero(self):
        with pytest.raises(ValidationError):
            reciprocal_cf(CFSeq.finite([-1, 2]))
        with pytest.raises(ValidationError):
            reciprocal_cf(CFSeq.finite([0]))


class TestIntegerPart:
    def test_irrational(self, sqrt2):
        assert integer_part(cf_to_endo(sqrt2)) == 1

    def test_negative_rational(self):
        assert integer_part(RatSlope(-7, 3)) == -3

    def test_integer_boundary_is_settled(self):
        assert integer_part(IntSlope(3), fuel=20) == 3

    def test_fuel_runs_out_before_the_interval_narrows(self):
        assert integer_part(IntSlope(0), fuel=1) == Inconclusive(bound=Fraction(1, 2))


class TestEndoToCF:
    def test_stored_terms_of_periodic(self, sqrt2):
        expansion = endo_to_cf(cf_to_endo(sqrt2), 5)
        assert expansion.terms == (1, 2, 2, 2, 2)
        assert expansion.status == CFStatus.PREFIX

    def test_stored_terms_of_finite(self):
        expansion = endo_to_cf(cf_to_endo(CFSeq.finite([1, 2, 3])), 5)
        assert expansion.terms == (1, 2, 3)
        assert expansion.status == CFStatus.TERMINATED
        assert endo_to_cf(cf_to_endo(CFSeq.finite([1, 2, 3])), 3).status == CFStatus.TERMINATED

    def test_generic_node(self):
        expansion = endo_to_cf(add(IntSlope(0), RatSlope(7, 12)), 2, fuel=40)
        assert expansion.terms == (0, 1)
        assert expansion.status == CFStatus.PREFIX

    def test_generic_node_of_finite_expansion(self):
        node = add(IntSlope(0), cf_to_endo(CFSeq.finite([2, 3, 4])))
        assert endo_to_cf(node, 2, fuel=40).terms == (2, 3)

    def test_generic_irrational_reads_many_terms(self, sqrt2):
        expansion = endo_to_cf(add(IntSlope(0), cf_to_endo(sqrt2)), 12)
        assert expansion.terms == (1,) + (2,) * 11
        assert expansion.status == CFStatus.PREFIX

    def test_sum_of_rationals_terminates(self):
        expansion = endo_to_cf(add(RatSlope(1, 3), RatSlope(1, 7)), 5)
        assert expansion.terms == (0, 2, 10)
        assert expansion.status == CFStatus.TERMINATED
        assert expansion.bound < Fraction(1, 2**50)

    def test_negative_rational(self):
        expansion = endo_to_cf(add(IntSlope(0), RatSlope(-7, 3)), 5)
        assert expansion.terms == (-3, 1, 2)
        assert expansion.status == CFStatus.TERMINATED

    def test_integer_slope_terminates(self):
        expansion = endo_to_cf(add(IntSlope(0), IntSlope(3)), 3, fuel=20)
        assert expansion.terms == (3,)
        assert expansion.status == CFStatus.TERMINATED
        assert expansion.bound == Fraction(3, 2**20)

    def test_needs_one_term(self, sqrt2):
        with pytest.raises(ValidationError):
            endo_to_cf(cf_to_endo(sqrt2), 0)


class TestDiagonal:
    def test_differs_from_every_row(self):
        rows = [CFSeq.finite([1, 2, 3]), CFSeq.finite([4]), CFSeq.periodic((1,), (5,))]
        assert diagonal(rows, 3).prefix(3) == [2, 1, 6]

    def test_callable_rows(self, sqrt2):
        assert diagonal(lambda i: sqrt2, 3).prefix(3) == [2, 3, 3]


class TestWorkedExamples:
    def test_integer_parts(self):
        assert integer_part(RatSlope(7, 2)) == 3
        assert integer_part(IntSlope(4)) == 4

    def test_convergents_of_a_short_sequence(self):
        pairs = [(c.p, c.q) for c in convergents(CFSeq.finite([1, 2, 2, 2]), 4)]
        assert pairs == [(1, 1), (3, 2), (7, 5), (17, 12)]

    def test_single_term_behaves_as_integer_slope(self):
        f = cf_to_endo(CFSeq.finite([2]))
        assert all(f(x) == 2 * x for x in range(1, 50))
