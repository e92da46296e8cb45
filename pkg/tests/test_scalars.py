import json
import random
from fractions import Fraction

from nwalg.scalars import ONE, Q, QINV, ZERO, DeltaPoly, LaurentScalar, bar, qint, qpow, random_delta_poly, random_laurent


def test_bar_examples():
    assert bar(Q) == QINV
    assert bar(ONE) == ONE
    assert bar(QINV + 2) == Q + 2


def test_render_and_json():
    p = LaurentScalar({-2: 3, 0: 1, 1: -1})
    assert str(p) == "3*q^-2 + 1 - q"
    assert json.loads(json.dumps(p.to_json())) == [[-2, 3], [0, 1], [1, -1]]
    assert LaurentScalar.from_json(p.to_json()) == p
    assert str(ZERO) == "0"


def test_normal_form_drops_zeros():
    assert LaurentScalar({3: 0, 1: 2}).terms == ((1, 2),)
    assert Q - Q == ZERO
    assert not ZERO


def test_qpow_and_qint():
    assert qpow(3, -1) == LaurentScalar({3: -1})
    assert qpow(-2) == LaurentScalar({-2: 1})
    assert qint(2) == Q + QINV
    assert qint(3).evaluate(1) == 3


def test_bar_laws_random():
    rng = random.Random(1)
    for _ in range(10000):
        p = random_laurent(rng)
        assert p.bar().bar() == p
    for _ in range(500):
        p, r = random_laurent(rng), random_laurent(rng)
        assert (p * r).bar() == p.bar() * r.bar()
        assert (p + r).bar() == p.bar() + r.bar()


def test_ring_laws_random():
    rng = random.Random(2)
    for _ in range(300):
        a, b, c = (random_laurent(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * ONE == a


def test_delta_poly_evaluation_is_homomorphism():
    rng = random.Random(3)
    for _ in range(300):
        p, r = random_delta_poly(rng), random_delta_poly(rng)
        x = rng.randint(-5, 5)
        assert (p * r).evaluate(x) == p.evaluate(x) * r.evaluate(x)
        assert (p + r).evaluate(x) == p.evaluate(x) + r.evaluate(x)
    assert DeltaPoly.delta(2).evaluate(Fraction(1, 2)) == Fraction(1, 4)
