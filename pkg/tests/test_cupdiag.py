import itertools
from fractions import Fraction

from nwalg import cupdiag as C
from nwalg import weights as W
from nwalg.weights import HALF, INTEGER


def hw(text):
    return W.parse_weight(text, HALF)


def test_cup_construction():
    assert C.cup(hw("v^")).cups == frozenset({(Fraction(1, 2), Fraction(3, 2), False)})
    assert C.cup(hw("^^")).cups == frozenset({(Fraction(1, 2), Fraction(3, 2), True)})
    d = C.cup(hw("v"))
    assert not d.cups and d.rays == frozenset({(Fraction(1, 2), False)})
    assert C.cup(hw("^")).rays == frozenset({(Fraction(1, 2), True)})


def test_cup_round_trip():
    for n in range(1, 5):
        for w in C.cup(hw("v" * n)).frame.weights():
            assert C.cup(w).weight() == w


def test_orientation_mult():
    lam = hw("v^")
    assert C.orientation_mult(lam, lam) == 1
    assert C.orientation_mult(hw("^v"), lam) == 1
    assert C.orientation_mult(hw("vv"), lam) == 0
    assert C.orientation_mult(W.parse_weight(".v", INTEGER), lam) == 0


def test_multiplicities_zero_one():
    for w in W.block_of(hw("v^v^v")).weights():
        for mu in W.block_of(w).weights():
            assert C.orientation_mult(mu, w) in (0, 1)


def test_hom_and_end_dims():
    lam = hw("v^v^")
    assert C.hom_dim(lam, lam) >= 1
    assert C.end_dim(C.ProjectiveSum.of(W.delta_weight(2, 2))) == 1
    assert C.end_dim(C.projective_tower(2, 4, 2)) == 12
    assert C.end_dim(C.projective_tower(0, 6, 3)) == 120


def test_tangle_examples():
    P = C.ProjectiveSum.of(hw("v^"))
    assert str(C.f_diag(Fraction(1), "-", P)) == "2*cup[◦×]"
    P = C.ProjectiveSum.of(hw("^v"))
    assert str(C.f_diag(Fraction(1), "-", P)) == "1*cup[◦×]"
    P = C.ProjectiveSum.of(hw("vv"))
    assert len(C.f_diag(Fraction(1), "-", P)) == 0


def test_tower_small():
    delta, n = 3, 4
    assert C.projective_tower(delta, n, 0) == C.ProjectiveSum.of(W.delta_weight(delta, n))
    one = C.projective_tower(delta, n, 1)
    assert one.support() == set(W.successors(W.delta_weight(delta, n)))
    assert all(v == 1 for v in one.terms.values())


def test_tower_support_law():
    for delta in range(4):
        d = 2
        P = C.projective_tower(delta, 4, d)
        for mu in P.support():
            h = W.dht(delta, mu)
            assert h <= d and (d - h) % 2 == 0


def test_verma_flag_matches_paths():
    for delta in range(3):
        for d in (1, 2, 3):
            n = 2 * d
            assert C.projective_tower(delta, n, d).verma_flag() == W.verma_paths(delta, n, d)


def test_two_routes_agree():
    """Tangle calculus against the Verma-flag peeling route."""
    for flavor in (INTEGER, HALF):
        for n in range(1, 4):
            start = Fraction(0) if flavor == INTEGER else Fraction(1, 2)
            pos = [start + k for k in range(n + 2)]
            seen = set()
            for vals in itertools.combinations(pos + [-p for p in pos if p != 0], n):
                try:
                    w = W.weight_encode(sorted(vals))
                except W.WeightError:
                    continue
                if w in seen:
                    continue
                seen.add(w)
                P = C.ProjectiveSum.of(w)
                for i, sign in C.functor_labels(flavor, w.maxpos() + 1):
                    assert C.f_diag(i, sign, P) == C.f_lie(i, sign, P), (w.text(), i, sign)


def test_truncated_tower():
    for d in range(4):
        assert C.truncated_end_dim(1, 2 * max(d, 1), d) == [1, 1, 3, 15][d]


def test_json_and_ascii():
    d = C.cup(hw("v^^"))
    data = d.to_json()
    assert data["weight"] == "∨∧∧"
    assert data["cups"] == [["1/2", "3/2", False]]
    assert data["rays"] == [["5/2", True]]
    assert d.ascii().splitlines()[0] == "∨∧∧"
