import random

import pytest

from nwalg.brauer import (BrauerDiagram, BrauerElement, SizeGuardError, compose, double_factorial,
                          enumerate_diagrams, is_semisimple_brauer, multiply, random_element)
from nwalg.scalars import DeltaPoly

S, E = BrauerDiagram.s, BrauerDiagram.e


def test_enumeration_counts():
    assert [len(enumerate_diagrams(d)) for d in range(0, 5)] == [1, 1, 3, 15, 105]
    assert enumerate_diagrams(1) == [BrauerDiagram.identity(1)]
    assert enumerate_diagrams(3) == enumerate_diagrams(3)


def test_size_guard():
    with pytest.raises(SizeGuardError):
        enumerate_diagrams(9)


def test_compose_examples():
    assert compose(E(2, 1), E(2, 1)) == (E(2, 1), 1)
    assert compose(S(2, 1), S(2, 1)) == (BrauerDiagram.identity(2), 0)
    b, loops = compose(E(3, 1), E(3, 2))
    assert compose(b, E(3, 1)) == (E(3, 1), loops)
    assert loops == 0


def test_multiply_examples():
    d = DeltaPoly.delta()
    e1 = BrauerElement.e(2, 1)
    assert multiply(e1, e1) == e1.scale(d)
    assert multiply(BrauerElement.s(2, 1), e1) == e1
    rng = random.Random(1)
    x = random_element(3, rng)
    assert multiply(BrauerElement.one(3), x) == x == multiply(x, BrauerElement.one(3))


def test_mismatched_sizes():
    with pytest.raises(ValueError):
        compose(E(2, 1), E(3, 1))


@pytest.mark.parametrize("d", [3, 4])
def test_relations(d):
    one = BrauerElement.one(d)
    delta = DeltaPoly.delta()
    s = [None] + [BrauerElement.s(d, i) for i in range(1, d)]
    e = [None] + [BrauerElement.e(d, i) for i in range(1, d)]
    for i in range(1, d):
        assert s[i] * s[i] == one
        assert e[i] * e[i] == e[i].scale(delta)
        assert s[i] * e[i] == e[i] == e[i] * s[i]
    for i in range(1, d - 1):
        assert s[i] * s[i + 1] * s[i] == s[i + 1] * s[i] * s[i + 1]
        assert e[i] * e[i + 1] * e[i] == e[i]
        assert e[i + 1] * e[i] * e[i + 1] == e[i + 1]
        assert s[i] * e[i + 1] * e[i] == s[i + 1] * e[i]
        assert e[i] * e[i + 1] * s[i] == e[i] * s[i + 1]
    for i in range(1, d):
        for j in range(1, d):
            if abs(i - j) > 1:
                assert s[i] * e[j] == e[j] * s[i]
                assert e[i] * e[j] == e[j] * e[i]


def test_associativity_and_transpose():
    rng = random.Random(7)
    for _ in range(200):
        d = rng.randint(1, 4)
        x, y, z = (random_element(d, rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert (x * y).transpose() == y.transpose() * x.transpose()


def test_json_labels():
    assert E(2, 1).to_json() == [["1", "2"], ["1*", "2*"]]


def test_semisimplicity():
    assert is_semisimple_brauer(3, 4)
    assert is_semisimple_brauer(0, 5)
    assert not is_semisimple_brauer(0, 2)
    assert double_factorial(7) == 105
