from fractions import Fraction

import pytest

from nwalg import vw
from nwalg.brauer import BrauerDiagram


def alg(delta=0, n=3, d=2):
    return vw.VWAlgebra(vw.make_params(delta, n), d)


def test_params():
    p = vw.make_params(0, 3)
    assert (p.alpha, p.beta) == (Fraction(1, 2), Fraction(5, 2))
    p = vw.make_params(1, 2)
    assert (p.alpha, p.beta) == (0, 2)
    p = vw.make_params(-2, 2)
    assert (p.alpha, p.beta) == (Fraction(3, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        vw.make_params(0, 1)


def test_w_values():
    p = vw.make_params(0, 3)
    assert [vw.w_value(p, a) for a in range(3)] == [6, 15, Fraction(75, 2)]
    assert vw.w_value(p, 2, "explicit") == Fraction(75, 2) == 6 * Fraction(5, 2) ** 2
    assert vw.w_value(p, 5, "u_admissible") == vw.w_value(p, 5)


def test_u_admissible_restriction():
    with pytest.raises(vw.URestrictionError):
        vw.w_value(vw.make_params(1, 2), 3, "u_admissible")


def test_admissibility():
    N = 6
    assert vw.is_admissible([N * Fraction(N - 1, 2) ** a for a in range(10)], 4)
    assert vw.is_admissible(vw.make_params(0, 3).w_list(10), 4)
    assert not vw.is_admissible([1] * 6, 1)
    with pytest.raises(ValueError):
        vw.is_admissible([1, 2], 1)


def test_basis_counts():
    assert [len(vw.enumerate_regular_basis(d)) for d in (1, 2, 3)] == [2, 12, 120]
    assert [str(m) for m in vw.enumerate_regular_basis(1)] == [str(m) for m in vw.enumerate_regular_basis(1)]
    with pytest.raises(Exception):
        vw.enumerate_regular_basis(6)


def test_cyclotomic_square():
    A = alg(d=1)
    y = A.generator(("y", 1))
    assert A.multiply(y, y) == y.scale(3) - A.one().scale(Fraction(5, 4))


def test_generator_products():
    A = alg()
    s, e, y1, y2 = (A.generator(g) for g in (("s", 1), ("e", 1), ("y", 1), ("y", 2)))
    assert A.multiply(s, s) == A.one()
    assert A.multiply(e, e) == e.scale(6)
    assert A.multiply(A.multiply(e, y1), e) == e.scale(15)
    assert A.multiply(s, y1) - A.multiply(y2, s) == e - A.one()
    assert A.multiply(e, y1 + y2).is_zero()
    x = A.word([("e", 1), ("y", 2), ("s", 1)])
    assert A.multiply(A.one(), x) == x


def test_generator_range():
    with pytest.raises(IndexError):
        alg().generator(("s", 2))


def test_rewriting_suite_small_grid():
    for delta, n in ((0, 3), (1, 2), (-2, 4), (5, 2)):
        for d in (2, 3):
            failed = [name for name, ok in vw.vw_rewriting_suite(vw.make_params(delta, n), d) if not ok]
            assert not failed


def test_predicates():
    assert not vw.is_quasi_hereditary_truncated(0, 2)
    assert vw.is_quasi_hereditary_truncated(1, 6)
    assert vw.is_quasi_hereditary_truncated(0, 0)
    assert vw.is_semisimple_vw(3, 4) and not vw.is_semisimple_vw(1, 3)
    assert vw.is_semisimple_truncated(0, 5) and not vw.is_semisimple_truncated(0, 4)


def test_binomial_identity():
    for m in (1, 3, 5, 7):
        for s in range(1, 5):
            left, right = vw.binomial_identity_sides(m, s)
            assert left == right


def test_monomial_json():
    m = vw.enumerate_regular_basis(2)[0]
    data = m.to_json()
    assert set(data) == {"gamma", "matching", "eta"}
