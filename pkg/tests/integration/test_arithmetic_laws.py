"""Randomised checks of the defect bounds and the ordered-field laws."""

import random
from fractions import Fraction

import pytest

from eudoxus.models.cfseq import CFSeq
from eudoxus.models.domain import CertifiedApprox, Inconclusive, Negative, Positive
from eudoxus.services.cf_bridge import cf_to_endo
from eudoxus.services.endo_core import (
    Compose,
    EndoNode,
    IntSlope,
    Inverse,
    Neg,
    RatSlope,
    Sum,
    approx,
    certify_defect,
)
from eudoxus.services.real_ops import add, from_rational, invert, mul, neg, sign, sub

N = 10_000


def random_leaf(rng: random.Random) -> EndoNode:
    match rng.randrange(3):
        case 0:
            return IntSlope(rng.randint(-50, 50))
        case 1:
            return RatSlope(rng.randint(-50, 50), rng.randint(1, 50))
    return cf_to_endo(CFSeq.periodic((1,), (2,)))


def nonzero_leaf(rng: random.Random) -> EndoNode:
    while isinstance(sign(leaf := random_leaf(rng)), Inconclusive):
        pass
    return leaf


def random_dag(rng: random.Random, depth: int) -> EndoNode:
    if depth == 0 or rng.random() < 0.3:
        return random_leaf(rng)
    match rng.randrange(3):
        case 0:
            return Sum(random_dag(rng, depth - 1), random_dag(rng, depth - 1))
        case 1:
            return Neg(random_dag(rng, depth - 1))
    return Compose(random_dag(rng, depth - 1), random_dag(rng, depth - 1))


def nonzero_dag(rng: random.Random, depth: int) -> EndoNode:
    while isinstance(sign(node := random_dag(rng, depth)), Inconclusive):
        pass
    return node


def agree(f: EndoNode, g: EndoNode, n: int = N) -> bool:
    """The certified interval of f - g contains zero."""
    return approx(sub(f, g), n).contains(0)


class TestDefectSoundness:
    def test_random_dags(self, rng):
        for _ in range(200):
            node = random_dag(rng, 4)
            assert certify_defect(node, 500) < node.c

    def test_inverse_nodes(self, rng):
        for _ in range(20):
            node = invert(nonzero_dag(rng, 2))
            assert certify_defect(node, 200) < node.c

    def test_inverse_of_unbounded_inner_search(self, sqrt2):
        node = Inverse(Sum(cf_to_endo(sqrt2), RatSlope(1, 3)), Fraction(1))
        assert certify_defect(node, 300) < node.c


class TestSlopeEstimates:
    def test_linear_bound(self, rng):
        for _ in range(100):
            f = random_dag(rng, 2)
            for _ in range(20):
                n, a = rng.choice((1, -1)) * rng.randint(1, 50), rng.randint(-200, 200)
                assert abs(f(n * a) - n * f(a)) < abs(n) * f.c

    def test_mn_bound(self, rng):
        for _ in range(100):
            f = random_dag(rng, 2)
            for _ in range(20):
                m, n = (rng.choice((1, -1)) * rng.randint(1, 10**6) for _ in range(2))
                assert abs(m * f(n) - n * f(m)) < (abs(m) + abs(n)) * f.c

    def test_slopes_form_a_cauchy_sequence(self, rng):
        for _ in range(100):
            f = random_dag(rng, 2)
            for _ in range(20):
                m, n = rng.randint(1, 10**6), rng.randint(1, 10**6)
                gap = abs(Fraction(f(n), n) - Fraction(f(m), m))
                assert gap < (Fraction(1, n) + Fraction(1, m)) * f.c


class TestSignCertificates:
    def test_witness_reevaluates_beyond_the_bound(self, rng):
        for _ in range(200):
            f = random_dag(rng, 3)
            match sign(f):
                case Positive(witness=n, slope_floor=floor):
                    assert f(n) > f.c
                    assert approx(f, N).upper >= floor
                case Negative(witness=n, slope_ceiling=ceiling):
                    assert f(n) < -f.c
                    assert approx(f, N).lower <= ceiling
                case Inconclusive(bound=bound):
                    near_zero = CertifiedApprox(value=Fraction(0), radius=bound)
                    assert approx(f, N).intersects(near_zero)


class TestFieldLaws:
    @pytest.fixture
    def operands(self, rng) -> list[tuple[EndoNode, EndoNode, EndoNode]]:
        return [(random_leaf(rng), random_leaf(rng), random_leaf(rng)) for _ in range(100)]

    def test_addition(self, operands):
        for f, g, h in operands:
            assert agree(add(f, g), add(g, f))
            assert agree(add(add(f, g), h), add(f, add(g, h)))
            assert agree(add(f, neg(f)), IntSlope(0))
            assert agree(add(f, IntSlope(0)), f)

    def test_multiplication(self, operands):
        for f, g, h in operands:
            assert agree(mul(f, g), mul(g, f))
            assert agree(mul(mul(f, g), h), mul(f, mul(g, h)))
            assert agree(mul(f, add(g, h)), add(mul(f, g), mul(f, h)))
            assert agree(mul(f, IntSlope(1)), f)

    def test_multiplicative_inverse(self, rng):
        for _ in range(100):
            f = nonzero_leaf(rng)
            assert agree(mul(f, invert(f)), IntSlope(1))
            assert agree(mul(invert(f), f), IntSlope(1))

    def test_order_is_compatible_with_addition(self, operands):
        for f, g, h in operands:
            if isinstance(sign(sub(f, g)), Positive):
                assert isinstance(sign(sub(add(f, h), add(g, h))), Positive)

    def test_composition_commutes_up_to_bounded_residual(self, operands, rng):
        for f, g, _ in operands:
            bound_c = max(f.c, g.c)
            residual = (2 + abs(f(1)) + abs(g(1)) + 2 * bound_c) * bound_c
            for _ in range(1000):
                n = rng.randint(-(10**6), 10**6)
                assert abs(f(g(n)) - g(f(n))) < residual


class TestInverseContract:
    def test_least_preimage(self, rng):
        for _ in range(100):
            p, q = rng.randint(1, 1000), rng.randint(1, 1000)
            f = RatSlope(p, q)
            g = invert(f)
            for x in range(1, N + 1):
                y = g(x)
                assert f(y) >= x > f(y - 1)
                assert abs(f(y) - x) <= f.c + abs(f(1))
            assert approx(g, N).contains(Fraction(q, p))

    def test_slope_is_reciprocal(self, rng):
        for _ in range(100):
            q = Fraction(rng.randint(1, 1000), rng.randint(1, 1000)) * rng.choice((1, -1))
            assert approx(invert(from_rational(q)), N).contains(1 / q)
