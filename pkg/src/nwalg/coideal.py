"""Coideal generators acting on diagrammatic weights over Laurent scalars.

The action on a weight is read off local case tables (``act``).  An
independent route builds the quantum exterior power inside tensor space and
applies the Chevalley generators through the coproduct (``wedge_act``).
Relations are checked as operator identities on finite windows of weights.
The bar involution follows the two-case recursion on Bruhat height, and the
canonical basis is the unitriangular bar-invariant basis on a block.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .scalars import ONE, Q, QINV, ZERO, LaurentScalar, qint, qpow
from .weights import (
    CIRCLE,
    CROSS,
    DIAMOND,
    DOWN,
    HALF,
    INTEGER,
    RIGHT,
    UP,
    Block,
    DiagrammaticWeight,
    WeightError,
    block_of,
    block_minimum,
    bruhat_height,
    bruhat_less,
    weight_decode,
    weight_encode,
)

H = Fraction(1, 2)
ORDER = RIGHT


class CoidealError(ValueError):
    """Raised on incompatible generators or failed recursion guards."""


# generators


@dataclass(frozen=True, order=True)
class Gen:
    """``kind`` is "B" (signed index), "B0" or "DD" (index j >= 0)."""

    kind: str
    index: Fraction = Fraction(0)

    def __str__(self) -> str:
        if self.kind == "B0":
            return "B0"
        if self.kind == "DD":
            return f"DD{self.index}"
        sign = "+" if self.index > 0 else "-"
        return f"B{sign}{abs(self.index)}"

    def flavor(self) -> str:
        if self.kind == "B0":
            return HALF
        if self.kind == "B":
            return INTEGER if self.index.denominator == 2 else HALF
        return INTEGER if self.index.denominator == 1 else HALF


def B(i) -> Gen:
    i = Fraction(i)
    if i == 0:
        raise CoidealError("use B0 for the generator at 0")
    return Gen("B", i)


B0 = Gen("B0")


def DD(j) -> Gen:
    j = Fraction(j)
    if j < 0:
        raise CoidealError("DD takes j >= 0")
    return Gen("DD", j)


def parse_gen(text: str) -> Gen:
    t = text.strip()
    if t == "B0":
        return B0
    if t.startswith("DD"):
        return DD(Fraction(t[2:]))
    if t.startswith("B") and len(t) > 2 and t[1] in "+-":
        v = Fraction(t[2:])
        return B(v if t[1] == "+" else -v)
    raise CoidealError(f"cannot parse generator {text!r}")


def generators_for(flavor: str, top: int) -> List[Gen]:
    """Generators acting on positions up to ``top``."""
    out: List[Gen] = []
    if flavor == INTEGER:
        i = H
        while i + H <= top:
            out += [B(i), B(-i)]
            i += 1
        out += [DD(j) for j in range(0, top + 1)]
    else:
        out.append(B0)
        i = Fraction(1)
        while i + H <= top:
            out += [B(i), B(-i)]
            i += 1
        j = H
        while j <= top:
            out.append(DD(j))
            j += 1
    return out


# module vectors


class ModuleVector:
    """Finite combination of diagrammatic weights with Laurent coefficients."""

    def __init__(self, terms: Optional[Dict[DiagrammaticWeight, LaurentScalar]] = None):
        self.terms: Dict[DiagrammaticWeight, LaurentScalar] = {}
        for w, c in (terms or {}).items():
            c = LaurentScalar.coerce(c)
            if c:
                self.terms[w] = c
        kinds = {(w.flavor, w.n) for w in self.terms}
        if len(kinds) > 1:
            raise CoidealError("mixed flavor or rank in one vector")

    @classmethod
    def basis(cls, w: DiagrammaticWeight) -> "ModuleVector":
        return cls({w: ONE})

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return ModuleVector(out)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + other.scale(LaurentScalar(-1))

    def scale(self, c) -> "ModuleVector":
        c = LaurentScalar.coerce(c)
        return ModuleVector({w: c * v for w, v in self.terms.items()})

    def coefficient(self, w: DiagrammaticWeight) -> LaurentScalar:
        return self.terms.get(w, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def support(self) -> set:
        return set(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"({c})*{w.text()}" for w, c in sorted(self.terms.items(), key=lambda kv: kv[0].items)]
        return " + ".join(parts)

    def to_json(self) -> list:
        return [
            {"weight": w.text(), "flavor": w.flavor, "coef": c.to_json()}
            for w, c in sorted(self.terms.items(), key=lambda kv: kv[0].items)
        ]


def _relabel(w: DiagrammaticWeight, changes: Dict[Fraction, str]) -> DiagrammaticWeight:
    return w.replace(changes)


_TABLE_PLUS = {
    (CIRCLE, DOWN): [((DOWN, CIRCLE), 0)],
    (CIRCLE, UP): [((UP, CIRCLE), 0)],
    (UP, CROSS): [((CROSS, UP), 0)],
    (DOWN, CROSS): [((CROSS, DOWN), 0)],
    (UP, DOWN): [((CROSS, CIRCLE), 1)],
    (DOWN, UP): [((CROSS, CIRCLE), 0)],
    (CIRCLE, CROSS): [((DOWN, UP), -1), ((UP, DOWN), 0)],
}

_TABLE_MINUS = {
    (UP, CIRCLE): [((CIRCLE, UP), 0)],
    (DOWN, CIRCLE): [((CIRCLE, DOWN), 0)],
    (CROSS, DOWN): [((DOWN, CROSS), 0)],
    (CROSS, UP): [((UP, CROSS), 0)],
    (UP, DOWN): [((CIRCLE, CROSS), 1)],
    (DOWN, UP): [((CIRCLE, CROSS), 0)],
    (CROSS, CIRCLE): [((DOWN, UP), -1), ((UP, DOWN), 0)],
}

_TABLE_HALF_PLUS = {
    (CIRCLE, DOWN): [((DIAMOND, CIRCLE), 0)],
    (CIRCLE, UP): [((DIAMOND, CIRCLE), 0)],
    (CIRCLE, CROSS): [((DIAMOND, UP), -1), ((DIAMOND, DOWN), 0)],
}

_TABLE_HALF_MINUS = {
    (DIAMOND, CIRCLE): [((CIRCLE, UP), 0), ((CIRCLE, DOWN), 0)],
    (DIAMOND, DOWN): [((CIRCLE, CROSS), 1)],
    (DIAMOND, UP): [((CIRCLE, CROSS), 0)],
}


def _check_flavor(g: Gen, w: DiagrammaticWeight) -> None:
    if g.flavor() != w.flavor:
        raise CoidealError(f"generator {g} does not act on {w.flavor} weights")


def act_weight(g: Gen, w: DiagrammaticWeight) -> Dict[DiagrammaticWeight, LaurentScalar]:
    """Case-table action of one generator on one weight."""
    _check_flavor(g, w)
    if g.kind == "DD":
        s = w.at(g.index)
        e = {CIRCLE: 0, DOWN: 1, UP: 1, CROSS: 2, DIAMOND: 2}[s]
        return {w: LaurentScalar.q(e)}
    if g.kind == "B0":
        s = w.at(H)
        if s == DOWN:
            return {_relabel(w, {H: UP}): ONE}
        if s == UP:
            return {_relabel(w, {H: DOWN}): ONE}
        return {}
    i = abs(g.index)
    a, b = i - H, i + H
    if w.flavor == INTEGER and i == H:
        table = _TABLE_HALF_PLUS if g.index > 0 else _TABLE_HALF_MINUS
    else:
        table = _TABLE_PLUS if g.index > 0 else _TABLE_MINUS
    hit = table.get((w.at(a), w.at(b)))
    if not hit:
        return {}
    out: Dict[DiagrammaticWeight, LaurentScalar] = {}
    for (x, y), e in hit:
        v = _relabel(w, {a: x, b: y})
        out[v] = out.get(v, ZERO) + LaurentScalar.q(e)
    return out


def act(g: Gen, v: ModuleVector) -> ModuleVector:
    out: Dict[DiagrammaticWeight, LaurentScalar] = {}
    for w, c in v.terms.items():
        for u, s in act_weight(g, w).items():
            out[u] = out.get(u, ZERO) + c * s
    return ModuleVector(out)


def act_word(word: Sequence[Gen], v: ModuleVector) -> ModuleVector:
    """Apply ``word`` right to left, as an operator product."""
    for g in reversed(word):
        v = act(g, v)
    return v


# the quantum exterior power inside tensor space

Tensor = Dict[Tuple[Fraction, ...], LaurentScalar]


def _t_add(out: Tensor, key, c: LaurentScalar) -> None:
    v = out.get(key, ZERO) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _d_exp(j: Fraction, l: Fraction) -> int:
    return 1 if j == l else 0


def _k_exp(i: Fraction, l: Fraction) -> int:
    """K_i = D_{i-1/2} D_{i+1/2}^{-1} on v_l."""
    return _d_exp(i - H, l) - _d_exp(i + H, l)


def t_E(i: Fraction, t: Tensor) -> Tensor:
    lo, hi = i - H, i + H
    out: Tensor = {}
    for key, c in t.items():
        pre = 0
        for pos, l in enumerate(key):
            if l == hi:
                new = key[:pos] + (l - 1,) + key[pos + 1 :]
                _t_add(out, new, c * LaurentScalar.q(pre))
                pre -= 1
            elif l == lo:
                pre += 1
    return out


def t_F(i: Fraction, t: Tensor) -> Tensor:
    lo, hi = i - H, i + H
    out: Tensor = {}
    for key, c in t.items():
        post = 0
        for pos in range(len(key) - 1, -1, -1):
            l = key[pos]
            if l == lo:
                new = key[:pos] + (l + 1,) + key[pos + 1 :]
                _t_add(out, new, c * LaurentScalar.q(post))
                post -= 1
            elif l == hi:
                post += 1
    return out


def t_diag(t: Tensor, exponent: Callable[[Fraction], int]) -> Tensor:
    out: Tensor = {}
    for key, c in t.items():
        _t_add(out, key, c * LaurentScalar.q(sum(exponent(l) for l in key)))
    return out


def t_K(i: Fraction, power: int, t: Tensor) -> Tensor:
    lo, hi = i - H, i + H
    out: Tensor = {}
    for key, c in t.items():
        _t_add(out, key, c * LaurentScalar.q(power * (key.count(lo) - key.count(hi))))
    return out


def t_D(j: Fraction, power: int, t: Tensor) -> Tensor:
    return t_diag(t, lambda l: power * _d_exp(j, l))


def t_add(a: Tensor, b: Tensor) -> Tensor:
    out = dict(a)
    for k, v in b.items():
        _t_add(out, k, v)
    return out


def t_scale(c: LaurentScalar, t: Tensor) -> Tensor:
    return {k: c * v for k, v in t.items()} if c else {}


def t_generator(g: Gen, t: Tensor) -> Tensor:
    """Coideal generator written through E, F and D on tensor space."""
    if g.kind == "DD":
        j = g.index
        return t_D(j, 1, t_D(-j, 1, t)) if j != 0 else t_D(j, 2, t)
    if g.kind == "B0":
        z = Fraction(0)
        return t_add(t_scale(QINV, t_E(z, t_K(z, -1, t))), t_F(z, t))
    i = g.index
    if i == -H:
        return t_add(t_scale(Q, t_E(i, t_K(-i, -1, t))), t_F(-i, t))
    return t_add(t_E(i, t_K(-i, -1, t)), t_F(-i, t))


def _perm_length(p: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(range(len(p)), 2) if p[a] > p[b])


def wedge_vector(indices: Sequence[Fraction]) -> Tensor:
    return dict(_wedge_items(tuple(indices)))


@lru_cache(maxsize=4096)
def _wedge_items(idx: Tuple[Fraction, ...]) -> Tuple[Tuple[Tuple[Fraction, ...], LaurentScalar], ...]:
    out: Tensor = {}
    for p in itertools.permutations(range(len(idx))):
        key = tuple(idx[k] for k in p)
        _t_add(out, key, qpow(_perm_length(p), -1))
    return tuple(out.items())


def wedge_decompose(t: Tensor) -> Dict[Tuple[Fraction, ...], LaurentScalar]:
    """Write a tensor in the wedge basis; raise if it is not a wedge combination."""
    coeffs = {}
    for key, c in t.items():
        if all(a < b for a, b in zip(key, key[1:])):
            coeffs[key] = c
    rebuilt: Tensor = {}
    for key, c in coeffs.items():
        for k2, v in wedge_vector(key).items():
            _t_add(rebuilt, k2, c * v)
    if rebuilt != t:
        raise CoidealError("tensor is not in the quantum exterior power")
    return coeffs


def wedge_act(g: Gen, w: DiagrammaticWeight) -> Dict[DiagrammaticWeight, LaurentScalar]:
    """Action of a generator on v_w computed inside tensor space."""
    _check_flavor(g, w)
    t = t_generator(g, wedge_vector(weight_decode(w)))
    out = {}
    for key, c in wedge_decompose(t).items():
        out[weight_encode(key)] = c
    return out


# windows and matrices


def window(flavor: str, n: int, top) -> List[DiagrammaticWeight]:
    """All weights of rank n with every symbol at a position <= top."""
    top = Fraction(top)
    start = Fraction(0) if flavor == INTEGER else H
    positions = []
    p = start
    while p <= top:
        positions.append(p)
        p += 1
    values = sorted(set(positions) | {-x for x in positions})
    out = []
    for combo in itertools.combinations(values, n):
        out.append(weight_encode(combo))
    return sorted(set(out), key=lambda w: w.items)


@dataclass
class OperatorMatrix:
    rows: List[DiagrammaticWeight]
    cols: List[DiagrammaticWeight]
    entries: List[List[LaurentScalar]]

    def get(self, r: DiagrammaticWeight, c: DiagrammaticWeight) -> LaurentScalar:
        return self.entries[self.rows.index(r)][self.cols.index(c)]

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def to_json(self) -> dict:
        return {
            "rows": [w.text() for w in self.rows],
            "cols": [w.text() for w in self.cols],
            "entries": [[x.to_json() for x in row] for row in self.entries],
        }


def operator_matrix(g: Gen, source: Iterable[DiagrammaticWeight], codomain: Optional[Iterable] = None) -> OperatorMatrix:
    cols = list(source)
    images = [act_weight(g, w) for w in cols]
    if codomain is None:
        rows = sorted({u for im in images for u in im}, key=lambda w: w.items)
    else:
        rows = list(codomain)
        allowed = set(rows)
        for w, im in zip(cols, images):
            for u in im:
                if u not in allowed:
                    raise CoidealError(f"image of {w} under {g} escapes the codomain window at {u}")
    entries = [[im.get(r, ZERO) for im in images] for r in rows]
    return OperatorMatrix(rows, cols, entries)


# relations

Op = Callable[[ModuleVector], ModuleVector]


def _op(g: Gen) -> Op:
    return lambda v: act(g, v)


def _compose(*ops: Op) -> Op:
    def f(v):
        for o in reversed(ops):
            v = o(v)
        return v

    return f


def _lin(*pairs) -> Op:
    """Linear combination sum c_k * op_k."""

    def f(v):
        out = ModuleVector()
        for c, o in pairs:
            out = out + o(v).scale(c)
        return out

    return f


def _dd_power(j: Fraction, power: int) -> Op:
    """(D_j D_-j)^power, which is diagonal."""

    def f(v):
        out = {}
        for w, c in v.terms.items():
            s = act_weight(DD(j), w)[w]
            e = s.min_exp() * power
            out[w] = c * LaurentScalar.q(e)
        return ModuleVector(out)

    return f


def _dd0_power(power: int) -> Op:
    return _dd_power(Fraction(0), power)


def _kcheck(i: Fraction) -> Callable[[DiagrammaticWeight], int]:
    """Exponent of the diagonal element (DD_{i-1/2} DD_{i+1/2}^{-1}) on a weight."""

    def f(w):
        a = act_weight(DD(i - H), w)[w].min_exp()
        b = act_weight(DD(i + H), w)[w].min_exp()
        return a - b

    return f


def _serre(x: Gen, y: Gen) -> Op:
    return _lin(
        (ONE, _compose(_op(x), _op(x), _op(y))),
        (-qint(2), _compose(_op(x), _op(y), _op(x))),
        (ONE, _compose(_op(y), _op(x), _op(x))),
    )


def _commutator(x: Op, y: Op) -> Op:
    return _lin((ONE, _compose(x, y)), (LaurentScalar(-1), _compose(y, x)))


def _zero(v: ModuleVector) -> ModuleVector:
    return ModuleVector()


def _qint_signed(k: int) -> LaurentScalar:
    return qint(k) if k >= 0 else -qint(-k)


def _cartan_commutator_rhs(i: Fraction) -> Op:
    """(K - K^{-1})/(q - q^{-1}) for K = DD_{i-1/2} DD_{i+1/2}^{-1}."""
    k = _kcheck(i)

    def f(v):
        return ModuleVector({w: c * _qint_signed(k(w)) for w, c in v.terms.items()})

    return f


def _conj(j: Fraction, g: Gen, e: int) -> Tuple[Op, Op]:
    """DD_j g DD_j^{-1} compared with q^e g."""
    lhs = _compose(_dd_power(j, 1), _op(g), _dd_power(j, -1))
    rhs = _lin((LaurentScalar.q(e), _op(g)))
    return lhs, rhs


def relation_list(flavor: str, top: int) -> List[Tuple[str, Op, Op]]:
    """Relations of the coideal presentation for generators inside ``top``."""
    rels: List[Tuple[str, Op, Op]] = []
    if flavor == INTEGER:
        reg = [Fraction(2 * k + 3, 2) for k in range(top) if Fraction(2 * k + 3, 2) + H <= top]
        js = [Fraction(j) for j in range(1, top + 1)]
    else:
        reg = [Fraction(k) for k in range(1, top + 1) if k + H <= top]
        js = [Fraction(2 * k + 1, 2) for k in range(top) if Fraction(2 * k + 1, 2) <= top]
    # gl_N part
    for i in reg:
        for j in js:
            e = 1 if j == i - H else (-1 if j == i + H else 0)
            lhs, rhs = _conj(j, B(i), e)
            rels.append((f"DD{j} E{i} DD{j}^-1 = q^{e} E{i}", lhs, rhs))
            lhs, rhs = _conj(j, B(-i), -e)
            rels.append((f"DD{j} F{i} DD{j}^-1 = q^{-e} F{i}", lhs, rhs))
    for i in reg:
        for i2 in reg:
            name = f"[E{i},F{i2}]"
            lhs = _commutator(_op(B(i)), _op(B(-i2)))
            rhs = _cartan_commutator_rhs(i) if i == i2 else _zero
            rels.append((name, lhs, rhs))
            if i < i2:
                if i2 - i == 1:
                    rels.append((f"Serre E{i}E{i2}", _serre(B(i), B(i2)), _zero))
                    rels.append((f"Serre E{i2}E{i}", _serre(B(i2), B(i)), _zero))
                    rels.append((f"Serre F{i}F{i2}", _serre(B(-i), B(-i2)), _zero))
                    rels.append((f"Serre F{i2}F{i}", _serre(B(-i2), B(-i)), _zero))
                else:
                    rels.append((f"E{i}E{i2}=E{i2}E{i}", _commutator(_op(B(i)), _op(B(i2))), _zero))
                    rels.append((f"F{i}F{i2}=F{i2}F{i}", _commutator(_op(B(-i)), _op(B(-i2))), _zero))
    if flavor == INTEGER:
        bp, bm = B(H), B(-H)
        zero = Fraction(0)
        for i in reg:
            rels.append((f"[DD0^2,E{i}]", _commutator(_dd0_power(1), _op(B(i))), _zero))
            rels.append((f"[DD0^2,F{i}]", _commutator(_dd0_power(1), _op(B(-i))), _zero))
            if i >= Fraction(5, 2):
                for x in (bp, bm):
                    for y in (B(i), B(-i)):
                        rels.append((f"[{x},{y}]", _commutator(_op(x), _op(y)), _zero))
        for x in (bp, bm):
            rels.append((f"[{x},E3/2 F3/2 mixed]", _commutator(_op(x), _op(B(-3 * H) if x == bp else B(3 * H))), _zero))
        for j in js:
            if j >= 2:
                for x in (bp, bm):
                    rels.append((f"[DD{j},{x}]", _commutator(_dd_power(j, 1), _op(x)), _zero))
        # (3a)
        rels.append(("DD1 B+ DD1^-1 = q^-1 B+", *_conj(Fraction(1), bp, -1)))
        rels.append(("DD1 B- DD1^-1 = q B-", *_conj(Fraction(1), bm, 1)))
        rels.append((
            "DD0 B+ DD0^-1 = q^2 B+",
            _compose(_dd0_power(1), _op(bp), _dd0_power(-1)),
            _lin((LaurentScalar.q(2), _op(bp))),
        ))
        rels.append((
            "DD0 B- DD0^-1 = q^-2 B-",
            _compose(_dd0_power(1), _op(bm), _dd0_power(-1)),
            _lin((LaurentScalar.q(-2), _op(bm))),
        ))
        # (3b)
        if reg:
            e, f = B(3 * H), B(-3 * H)
            rels.append(("Serre B+B+E", _serre(bp, e), _zero))
            rels.append(("Serre B-B-F", _serre(bm, f), _zero))
            rels.append(("Serre EEB+", _serre(e, bp), _zero))
            rels.append(("Serre FFB-", _serre(f, bm), _zero))
        # (3c)
        d1, d1i = _dd_power(Fraction(1), 1), _dd_power(Fraction(1), -1)
        d0, d0i = _dd0_power(1), _dd0_power(-1)
        rels.append((
            "modified Serre B+B+B-",
            _serre(bp, bm),
            _lin((-qint(2), _compose(_op(bp), _lin((Q, _compose(d1i, d0)), (QINV, _compose(d1, d0i)))))),
        ))
        rels.append((
            "modified Serre B-B-B+",
            _serre(bm, bp),
            _lin((-qint(2), _compose(_op(bm), _lin((LaurentScalar.q(2), _compose(d1, d0i)), (LaurentScalar.q(-2), _compose(d1i, d0)))))),
        ))
    else:
        b = B0
        for i in reg:
            if i >= 2:
                for y in (B(i), B(-i)):
                    rels.append((f"[B0,{y}]", _commutator(_op(b), _op(y)), _zero))
        for j in js:
            rels.append((f"[DD{j},B0]", _commutator(_dd_power(j, 1), _op(b)), _zero))
        if reg:
            e, f = B(1), B(-1)
            rels.append(("Serre E1E1B", _serre(e, b), _zero))
            rels.append(("Serre F1F1B", _serre(f, b), _zero))
            rels.append(("modified Serre BBE1", _serre(b, e), _op(e)))
            rels.append(("modified Serre BBF1", _serre(b, f), _op(f)))
    return rels


def relations_suite(windows: Iterable[Tuple[str, int, int]]) -> List[dict]:
    """Check every relation on every basis vector of each (flavor, n, top) window.

    Generators only see positions up to ``top``; the window holds weights up
    to ``top + 2`` so that compositions do not leave the computed range
    ambiguously (the action is computed on arbitrary weights anyway).
    """
    report = []
    for flavor, n, top in windows:
        basis = window(flavor, n, top)
        for name, lhs, rhs in relation_list(flavor, top):
            witness = None
            for w in basis:
                v = ModuleVector.basis(w)
                if lhs(v) != rhs(v):
                    witness = w
                    break
            report.append({
                "flavor": flavor,
                "n": n,
                "top": top,
                "relation": name,
                "status": "pass" if witness is None else "fail",
                "witness": None if witness is None else witness.text(),
            })
    return report


# bar involution


class BarRecursionError(CoidealError):
    pass


class BarInvolution:
    """Memoized bar involution on the module with the given flavor."""

    def __init__(self):
        self._memo: Dict[DiagrammaticWeight, ModuleVector] = {}
        self._lock = threading.RLock()
        self._active: set = set()

    def of_weight(self, lam: DiagrammaticWeight) -> ModuleVector:
        with self._lock:
            hit = self._memo.get(lam)
            if hit is not None:
                return hit
            if lam in self._active:
                raise BarRecursionError(f"bar recursion revisits {lam.text()}")
            self._active.add(lam)
            try:
                res = self._compute(lam)
            finally:
                self._active.discard(lam)
            self._memo[lam] = res
            return res

    def __call__(self, v: ModuleVector) -> ModuleVector:
        out = ModuleVector()
        for w, c in v.terms.items():
            out = out + self.of_weight(w).scale(c.bar())
        return out

    # helpers

    def _guard(self, lam: DiagrammaticWeight, others: Iterable[DiagrammaticWeight]) -> None:
        top = lam.maxpos()
        for u in others:
            if u.maxpos() > top:
                raise BarRecursionError(f"recursion for {lam.text()} leaves [0, {top}] at {u.text()}")

    def _compute(self, lam: DiagrammaticWeight) -> ModuleVector:
        if block_minimum(block_of(lam), ORDER) == lam:
            return ModuleVector.basis(lam)
        pair = _case_one_pair(lam)
        if pair is not None:
            return self._case_one(lam, *pair)
        if lam.flavor == HALF:
            return self._case_two_half(lam)
        return self._case_two(lam)

    def _case_one(self, lam: DiagrammaticWeight, i: Fraction, j: Fraction) -> ModuleVector:
        lam1, word = _move_left(lam, j, i + 1)
        mu = _relabel(lam1, {i: DOWN, i + 1: UP})
        self._guard(lam, [lam1, mu])
        bmu = self.of_weight(mu)
        core = act(B(-(i + H)), act(B(i + H), bmu)) - bmu.scale(Q)
        return act_word(word, core)

    def _case_two(self, lam: DiagrammaticWeight) -> ModuleVector:
        marks = [p for p, s in lam.items if s in (DOWN, DIAMOND)]
        if len(marks) < 2:
            raise BarRecursionError(f"no case applies to {lam.text()}")
        i, j = marks[0], marks[1]
        lam1, word = _move_left(lam, j, i + 1)
        if i == 0:
            mu = _relabel(lam1, {Fraction(1): UP})
            self._guard(lam, [lam1, mu])
            bmu = self.of_weight(mu)
            core = act(B(H), act(B(-H), bmu)) - bmu.scale(Q)
            return act_word(word, core)
        # carry the pair at (i, i + 1) down to (0, 1)
        cur, _ = _move_left(lam1, i, Fraction(1))
        img = act_weight(B(H), cur)
        if len(img) != 1:
            raise BarRecursionError(f"cannot form a diamond from {cur.text()}")
        cur = next(iter(img))
        eta, _ = _move_left(cur, i + 1, Fraction(1))
        mu = _relabel(eta, {Fraction(1): UP})
        other = _relabel(lam1, {i: UP})
        self._guard(lam, [lam1, eta, mu, other])
        back = _return_word(eta, i)
        if act_word(back, ModuleVector.basis(eta)) != ModuleVector.basis(lam1) + ModuleVector.basis(other):
            raise BarRecursionError(f"return word for {lam.text()} does not split as expected")
        bmu = self.of_weight(mu)
        b_eta = act(B(H), act(B(-H), bmu)) - bmu.scale(Q)
        res = act_word(back, b_eta) - self.of_weight(other)
        return act_word(word, res)

    def _case_two_half(self, lam: DiagrammaticWeight) -> ModuleVector:
        downs = lam.positions(DOWN)
        if not downs:
            raise BarRecursionError(f"no case applies to {lam.text()}")
        low, word = _move_left(lam, downs[0], H)
        rho = _relabel(low, {H: UP})
        self._guard(lam, [low, rho])
        return act_word(word, act(B0, self.of_weight(rho)))


def _case_one_pair(lam: DiagrammaticWeight) -> Optional[Tuple[Fraction, Fraction]]:
    """First (i, j) with an up at i, a down at j and only circles/crosses between."""
    free = [(p, s) for p, s in lam.items if s in (UP, DOWN)]
    for (p, s), (p2, s2) in zip(free, free[1:]):
        if s == UP and s2 == DOWN:
            return p, p2
    return None


def _single(g: Gen, w: DiagrammaticWeight) -> DiagrammaticWeight:
    img = act_weight(g, w)
    if len(img) != 1 or next(iter(img.values())) != ONE:
        raise BarRecursionError(f"{g} is not a single move on {w.text()}")
    return next(iter(img))


def _right_gen(w: DiagrammaticWeight, p: Fraction) -> Gen:
    """Generator carrying the free symbol at p to p + 1."""
    s = w.at(p + 1)
    if s == CIRCLE:
        return B(-(p + H))
    if s == CROSS:
        return B(p + H)
    raise BarRecursionError(f"cannot move past {s} in {w.text()}")


def _left_gen(w: DiagrammaticWeight, p: Fraction) -> Gen:
    """Generator carrying the free symbol at p to p - 1."""
    s = w.at(p - 1)
    if s == CIRCLE:
        return B(p - H)
    if s == CROSS:
        return B(-(p - H))
    raise BarRecursionError(f"cannot move past {s} in {w.text()}")


def _move_left(w: DiagrammaticWeight, src: Fraction, dst: Fraction):
    """Carry the symbol at src down to dst.

    Returns (w', word) with act_word(word, w_{w'}) = w_w.
    """
    cur, p = w, src
    while p > dst:
        cur = _single(_left_gen(cur, p), cur)
        p -= 1
    word: List[Gen] = []
    back, p = cur, dst
    while p < src:
        g = _right_gen(back, p)
        back = _single(g, back)
        word.insert(0, g)
        p += 1
    if back != w:
        raise BarRecursionError("move word does not return to the weight")
    return cur, word


def _return_word(eta: DiagrammaticWeight, i: Fraction) -> List[Gen]:
    """Word sending the diamond pair at (0, 1) back to (i, i + 1)."""
    word: List[Gen] = []
    cur, p = eta, Fraction(1)
    while p < i + 1:
        g = _right_gen(cur, p)
        cur = _single(g, cur)
        word.insert(0, g)
        p += 1
    word.insert(0, B(-H))
    cur = _relabel(cur, {Fraction(0): CIRCLE, Fraction(1): DOWN})
    p = Fraction(1)
    while p < i:
        g = _right_gen(cur, p)
        cur = _single(g, cur)
        word.insert(0, g)
        p += 1
    return word


_bar_lock = threading.Lock()
_bar_instances: Dict[str, BarInvolution] = {}


def bar_involution(flavor: str) -> BarInvolution:
    with _bar_lock:
        if flavor not in _bar_instances:
            _bar_instances[flavor] = BarInvolution()
        return _bar_instances[flavor]


def bar(v: ModuleVector) -> ModuleVector:
    if not v.terms:
        return v
    flavor = next(iter(v.terms)).flavor
    return bar_involution(flavor)(v)


# canonical basis


def _neg_part(p: LaurentScalar) -> LaurentScalar:
    return LaurentScalar({e: c for e, c in p.terms if e < 0})


def _down_sets(members: List[DiagrammaticWeight]) -> Dict[DiagrammaticWeight, List[DiagrammaticWeight]]:
    return {lam: [mu for mu in members if bruhat_less(mu, lam, ORDER)] for lam in members}


def canonical_basis(block: Block) -> Dict[DiagrammaticWeight, ModuleVector]:
    """Bar-invariant b_lam = w_lam + sum_{mu < lam} p w_mu with p in q^-1 Z[q^-1]."""
    members = block.weights()
    below = _down_sets(members)
    rank = {w: len(below[w]) for w in members}
    members.sort(key=lambda w: (rank[w], w.items))
    out: Dict[DiagrammaticWeight, ModuleVector] = {}
    for lam in members:
        t = ModuleVector.basis(lam)
        r = bar(t) - t
        for mu in sorted(below[lam], key=lambda w: (-rank[w], w.items)):
            g = r.coefficient(mu)
            if not g:
                continue
            if g + g.bar():
                raise CoidealError(f"non-antisymmetric residual at {mu.text()} for {lam.text()}")
            # p - bar(p) = g clears the mu-coefficient of bar(t) - t
            p = _neg_part(g)
            t = t + out[mu].scale(p)
            r = r + out[mu].scale(p.bar() - p)
        if not r.is_zero() or bar(t) != t:
            raise CoidealError(f"canonical element for {lam.text()} is not bar-invariant")
        out[lam] = t
    return out


# Hecke action on tensor space


def hecke_indices(m: int) -> List[Fraction]:
    return [Fraction(2 * k + 1, 2) * s for k in range(m) for s in (-1, 1)]


def _ht_add(out: Tensor, key, c):
    _t_add(out, key, c)


def hecke_act(i: int, t: Tensor) -> Tensor:
    """Right action of H_i (i >= 1 on factors i, i+1; i = 0 on factors 1, 2)."""
    out: Tensor = {}
    mq = QINV - Q
    for key, c in t.items():
        if i >= 1:
            p = i - 1
            a, b = key[p], key[p + 1]
            swapped = key[:p] + (b, a) + key[p + 2 :]
            if a < b:
                _ht_add(out, swapped, c)
            elif a > b:
                _ht_add(out, swapped, c)
                _ht_add(out, key, c * mq)
            else:
                _ht_add(out, swapped, c * QINV)
        elif i == 0:
            a, b = key[0], key[1]
            flipped = (-b, -a) + key[2:]
            if a + b > 0:
                _ht_add(out, flipped, c)
            elif a + b < 0:
                _ht_add(out, flipped, c)
                _ht_add(out, key, c * mq)
            else:
                _ht_add(out, flipped, c * QINV)
        else:
            raise CoidealError("Hecke generator index must be >= 0")
    return out


def tensor_basis(m: int, r: int) -> List[Tuple[Fraction, ...]]:
    return list(itertools.product(hecke_indices(m), repeat=r))


def _hword(word: Sequence[int], t: Tensor) -> Tensor:
    """Right action: apply letters left to right."""
    for i in word:
        t = hecke_act(i, t)
    return t


def hecke_relations(m: int, r: int) -> List[dict]:
    """Quadratic and type D braid relations on the basis of (V_m)^{(x) r}."""
    gens = list(range(0, r))
    if r < 2:
        return []

    def braid_type(i, j):
        if i == j:
            return None
        if {i, j} == {0, 1}:
            return "commute"
        if 0 in (i, j):
            other = j if i == 0 else i
            return "braid" if other == 2 else "commute"
        return "braid" if abs(i - j) == 1 else "commute"

    report = []
    basis = tensor_basis(m, r)
    for i in gens:
        ok = True
        for key in basis:
            t = {key: ONE}
            lhs = _hword([i, i], t)
            rhs = t_add(t, t_scale(QINV - Q, _hword([i], t)))
            if lhs != rhs:
                ok = False
                break
        report.append({"relation": f"H{i}^2 = 1 + (q^-1 - q) H{i}", "status": "pass" if ok else "fail"})
    for i, j in itertools.combinations(gens, 2):
        kind = braid_type(i, j)
        ok = True
        for key in basis:
            t = {key: ONE}
            if kind == "commute":
                lhs, rhs = _hword([i, j], t), _hword([j, i], t)
            else:
                lhs, rhs = _hword([i, j, i], t), _hword([j, i, j], t)
            if lhs != rhs:
                ok = False
                break
        report.append({"relation": f"H{i} H{j} {kind}", "status": "pass" if ok else "fail"})
    return report


def coideal_generators_on_tensor(m: int) -> List[Gen]:
    gens = [B0]
    for k in range(1, m):
        gens += [B(k), B(-k)]
    j = H
    while j <= m - H:
        gens.append(DD(j))
        j += 1
    return gens


def _truncate(t: Tensor, m: int) -> Tensor:
    allowed = set(hecke_indices(m))
    return {k: v for k, v in t.items() if all(x in allowed for x in k)}


def hecke_commutation(m: int, r: int) -> List[dict]:
    """Check (B.v).H_i = B.(v.H_i) on the basis of (V_m)^{(x) r}."""
    report = []
    basis = tensor_basis(m, r)
    for g in coideal_generators_on_tensor(m):
        for i in range(0, r):
            if i == 0 and r < 2:
                continue
            witness = None
            for key in basis:
                t = {key: ONE}
                lhs = hecke_act(i, _truncate(t_generator(g, t), m))
                rhs = _truncate(t_generator(g, hecke_act(i, t)), m)
                if lhs != rhs:
                    witness = key
                    break
            report.append({
                "generator": str(g),
                "hecke": i,
                "status": "pass" if witness is None else "fail",
                "witness": None if witness is None else [str(x) for x in witness],
            })
    return report


def random_module_vector(rng: random.Random, weights: Sequence[DiagrammaticWeight], size: int = 3) -> ModuleVector:
    from .scalars import random_laurent

    picks = rng.sample(list(weights), min(size, len(weights)))
    return ModuleVector({w: random_laurent(rng) for w in picks})
