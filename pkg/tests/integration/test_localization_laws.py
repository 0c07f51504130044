"""Randomised checks of saturation, the CRT splitting and the p-adic actions."""

import random
from fractions import Fraction

import pytest

from eudoxus.models.localization import MultSet, PadicTrunc, PrimeSet, PruferFrac
from eudoxus.services.localization import (
    crt_join,
    crt_split,
    padic_act,
    padic_extract,
    padic_sqrt,
    saturate,
)

TWO, THREE = PrimeSet.of([2]), PrimeSet.of([3])


class TestCRT:
    def test_join_inverts_split(self):
        for k in range(216):
            x = PruferFrac.of(Fraction(k, 216))
            a, b = crt_split(x, TWO, THREE)
            assert crt_join(a, b).as_fraction() == x.as_fraction()

    def test_split_is_additive_at_a_fixed_level(self, rng):
        for _ in range(200):
            x, y = (
                PruferFrac.of(Fraction(rng.randrange(36), rng.choice((1, 2, 4, 6, 9, 12, 18, 36))))
                for _ in range(2)
            )
            ax, bx = crt_split(x, TWO, THREE, level=864)
            ay, by = crt_split(y, TWO, THREE, level=864)
            a, b = crt_split(x + y, TWO, THREE, level=864)
            assert a.as_fraction() == (ax + ay).as_fraction()
            assert b.as_fraction() == (bx + by).as_fraction()


def random_padic(rng: random.Random, p: int, precision: int) -> PadicTrunc:
    unit = rng.randrange(1, p**precision)
    while unit % p == 0:
        unit = rng.randrange(1, p**precision)
    return PadicTrunc.from_unit(p, rng.randint(0, 2), unit, precision)


class TestPadic:
    def test_minus_one_squared(self):
        minus_one = PadicTrunc.from_rational(-1, 5, 8)
        assert minus_one.digits == (4,) * 8
        assert minus_one * minus_one == PadicTrunc.from_rational(1, 5, 8)

    def test_rational_images_add(self):
        third = PadicTrunc.from_rational(Fraction(1, 3), 5, 8)
        two_thirds = PadicTrunc.from_rational(Fraction(2, 3), 5, 8)
        assert third + two_thirds == PadicTrunc.from_rational(1, 5, 8)

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_extraction_recovers_the_multiplier(self, rng, p):
        for _ in range(25):
            x = random_padic(rng, p, 8)
            assert padic_extract(lambda a, x=x: padic_act(x, a), p, 8) == x

    def test_square_root_of_two_in_q7(self):
        root = padic_sqrt(2, 7, 6)
        assert root.unit**2 % 7**6 == 2
        assert root * root == PadicTrunc.from_rational(2, 7, 6)


def random_prufer(rng: random.Random, p: int, depth: int) -> PruferFrac:
    return PruferFrac.of(rng.randrange(p**depth), p**depth, support=PrimeSet.of([p]))


class TestPadicRingLaws:
    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_action_is_additive(self, rng, p):
        for _ in range(25):
            x, y = random_padic(rng, p, 8), random_padic(rng, p, 8)
            a = random_prufer(rng, p, rng.randint(1, 8))
            lhs = padic_act(x + y, a)
            assert lhs.as_fraction() == (padic_act(x, a) + padic_act(y, a)).as_fraction()

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_action_is_multiplicative(self, rng, p):
        for _ in range(25):
            x, y = random_padic(rng, p, 8), random_padic(rng, p, 8)
            a = random_prufer(rng, p, rng.randint(1, 8))
            assert padic_act(x * y, a) == padic_act(x, padic_act(y, a))


class TestSaturationLaws:
    def test_saturate_is_idempotent(self, rng):
        for _ in range(100):
            generators = tuple(rng.choice((1, -1)) * rng.randint(1, 10**6) for _ in range(4))
            primes = saturate(MultSet(generators=generators))
            if not primes.primes:
                continue
            assert saturate(MultSet(generators=primes.primes)) == primes
