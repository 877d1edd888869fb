"""Exact Laurent-coefficient arithmetic."""

import random
from fractions import Fraction

import pytest

from qmv.scalar import LaurentScalar, ScalarFraction, ONE, Q, QINV, ZERO

mq = LaurentScalar.minus_q_power
qp = LaurentScalar.q_power


def test_additive_inverse_cancels():
    assert (Q - QINV) + (QINV - Q) == ZERO
    assert not (Q - QINV) + (QINV - Q)


def test_add_merges_terms():
    assert Q + Q == LaurentScalar({1: 2})
    assert (qp(2) + ONE) + LaurentScalar.from_int(-1) == qp(2)


def test_difference_of_squares():
    assert (Q - QINV) * (Q + QINV) == qp(2) - qp(-2)


def test_reduction_scalar_for_smallest_square():
    # (-q)^(1-n) at n = 2
    assert mq(1 - 2) == -qp(-1)
    assert mq(-1) * Q == LaurentScalar.from_int(-1)


def test_zero_absorbs():
    assert ZERO * qp(5) == ZERO
    assert not ZERO * qp(5)


def test_minus_q_power_is_multiplicative():
    for a in range(-6, 7):
        for b in range(-6, 7):
            assert mq(a) * mq(b) == mq(a + b)


@pytest.mark.parametrize("q0,expected", [(1, 0), (2, Fraction(3, 2))])
def test_eval_examples(q0, expected):
    assert (Q - QINV).evaluate(q0) == expected


def test_eval_more_examples():
    assert (ONE - qp(2)).evaluate(1) == 0
    assert qp(2).evaluate(2) == 4
    with pytest.raises(ValueError):
        Q.evaluate(0)


def test_eval_is_ring_homomorphism():
    rng = random.Random(11)
    points = [Fraction(1), Fraction(2), Fraction(-3, 5)]
    for _ in range(200):
        a = LaurentScalar({rng.randint(-4, 4): rng.randint(-5, 5) for _ in range(3)})
        b = LaurentScalar({rng.randint(-4, 4): rng.randint(-5, 5) for _ in range(3)})
        for q0 in points:
            assert (a + b).evaluate(q0) == a.evaluate(q0) + b.evaluate(q0)
            assert (a * b).evaluate(q0) == a.evaluate(q0) * b.evaluate(q0)


def test_ring_axioms_on_random_triples():
    rng = random.Random(5)
    for _ in range(300):
        a, b, c = (
            LaurentScalar({rng.randint(-3, 3): rng.randint(-4, 4) for _ in range(2)})
            for _ in range(3)
        )
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + b == b + a


def test_render_increasing_and_decreasing():
    s = -qp(-1) + LaurentScalar.from_int(2) + qp(3)
    assert s.render() == "-q^-1 + 2 + q^3"
    assert s.render(increasing=False) == "q^3 + 2 - q^-1"
    assert str(ZERO) == "0"
    assert (Q - QINV).render(increasing=False) == "q - q^-1"


def test_as_minus_q_power():
    assert mq(3).as_minus_q_power() == 3
    assert mq(-2).as_minus_q_power() == -2
    assert (Q + ONE).as_minus_q_power() is None
    assert LaurentScalar({1: 2}).as_minus_q_power() is None


def test_power():
    assert (Q + QINV) ** 2 == qp(2) + LaurentScalar.from_int(2) + qp(-2)
    assert (Q - QINV) ** 0 == ONE
    with pytest.raises(ValueError):
        (Q + ONE) ** -1


class TestScalarFraction:
    def test_equality_by_cross_multiplication(self):
        # q / 1 == q^2 / q without any reduction
        assert ScalarFraction(Q) == ScalarFraction(qp(2), Q)
        assert ScalarFraction(Q, Q - QINV) != ScalarFraction(ONE)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            ScalarFraction(ONE, ZERO)

    def test_field_arithmetic(self):
        a = ScalarFraction(ONE, Q - QINV)
        b = ScalarFraction(Q, Q - QINV)
        assert a + b == ScalarFraction(ONE + Q, Q - QINV)
        assert (a * b) / b == a
        assert a - a == ScalarFraction(ZERO)

    def test_as_scalar(self):
        assert ScalarFraction(qp(3), -Q).as_scalar() == -qp(2)
        assert ScalarFraction(Q * (Q - QINV), Q - QINV).as_scalar() == Q
        assert ScalarFraction(ONE, Q + ONE).as_scalar() is None
