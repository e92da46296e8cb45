from fractions import Fraction

import pytest

from nwalg import boxdiag as X
from nwalg.scalars import ONE, Q, LaurentScalar

P = X.BoxDiagram.parse
EXAMPLE = "◦+−◦/±◦◦◦/◦+◦−/−◦+◦/◦+◦◦"
YOUNG = r"\circ +-\circ,\mp\circ\circ\circ,\circ+\circ-,-\circ+\circ,\circ+\circ\circ"


def one(b):
    return X.BoxVector.basis(b)


def test_example_from_weight():
    lie = [Fraction(x, 2) for x in (-5, 3, -1, 1, -7, 3, -1, 5, 3)]
    b = X.box_from_weight(lie, (2, 2, 2, 2, 1), 4)
    assert b == P(EXAMPLE) == X.parse_young(YOUNG)
    assert X.box_to_weight(b) == (tuple(lie), (2, 2, 2, 2, 1))
    assert b.type_triple() == ((2, 2, 2, 2, 1), (3, 3, 2, 1), 0)


def test_trivial_dictionary_cases():
    assert X.box_from_weight([Fraction(1, 2)], [1]).text() == "+"
    with pytest.raises(X.BoxError):
        X.box_from_weight([Fraction(7, 2)], [1], 2)


def test_round_trip_small():
    for b in X.boxes_up_to(2, 3, 4):
        lie, k = X.box_to_weight(b)
        assert X.box_from_weight(lie, k, b.m) == b


def test_transpose():
    b = P(EXAMPLE)
    t = X.box_transpose(b)
    assert t.text() == "◦±◦+◦\n−◦−◦−\n+◦◦−◦\n◦◦+◦◦"
    assert X.box_transpose(t) == b
    assert X.box_transpose(P("±±/±±")) == P("±±/±±")


def test_transpose_parity():
    for b in X.boxes_up_to(2, 2, 4):
        eb, et = b.type_triple()[2], X.box_transpose(b).type_triple()[2]
        assert (eb != et) == (b.n % 2 == 1)


def test_statistics():
    b = P(EXAMPLE)
    assert X.box_stat(b, 1, 2, "+", "→") == 0
    assert X.box_stat(b, 1, 2, "-", "↕") == 0
    assert X.box_stat(b, 1, 1, "-", "↕") == 2
    assert X.box_stat(b, 2, 1, "+", "↔") == 1
    e = P("◦◦/◦◦")
    assert all(X.box_stat(e, 1, 1, s, d) == 0 for s in "+-" for d in "→←↑↓↔↕")
    with pytest.raises(X.BoxError):
        X.box_stat(e, 3, 1, "+", "→")


def test_column_action_examples():
    assert X.act_col(1, one(P("◦+"))) == one(P("+◦"))
    assert X.act_col(0, one(P("+"))) == one(P("−"))
    assert X.act_col(1, one(P("++/+◦"))) == X.BoxVector()
    got = X.act_col(1, one(P("+◦/◦+")))
    assert got == one(P("+◦/+◦")).scale(Q)
    assert got == X.BoxVector(X.tensor_col_box(1, P("+◦/◦+")))


def test_row_action_examples():
    assert X.act_row(1, "+", one(P("◦/+"))) == one(P("+/◦"))
    assert X.act_row(0, "+", one(P("+◦/◦◦"))) == one(P("−◦/◦◦"))
    assert X.act_row(1, "+", one(P("+/+"))) == X.BoxVector()


def test_wedge_model_agrees_small():
    for r in (1, 2):
        for m in (1, 2, 3):
            for b in X.boxes_up_to(r, m, 3):
                for i, s in X.row_generators(r):
                    assert X.act_row(i, s, one(b)) == X.wedge_model(i, s, one(b))


def test_wedge_zero_cases():
    h, t = Fraction(1, 2), Fraction(3, 2)
    assert X.merge_right((h, t), h) is None
    assert X.merge_left(t, (h, t)) is None
    assert X.merge_right((h,), t) == (ONE, (h, t))
    assert [c for c, _, _ in X.split_right((h, t))] == [LaurentScalar({1: -1}), ONE]
    assert X.wedge_model(1, "+", one(P("◦◦/◦◦"))) == X.BoxVector()


def test_checks_small():
    assert not X.check_koszul(2, 2, 3)
    assert not X.check_commutation(2, 2, 3)
    assert not X.check_block_transitions(2, 2, 3)


def test_json():
    b = P("+−/±◦")
    data = b.to_json()
    assert data == {"r": 2, "m": 2, "grid": ["+−", "±◦"]}
    assert X.BoxDiagram.from_json(data) == b
