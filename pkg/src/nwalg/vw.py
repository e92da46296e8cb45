"""Cyclotomic VW-algebras of level two: parameters, the regular-monomial basis
and multiplication by rewriting.

A basis monomial is y^gamma * W(b) * y^eta, where W(b) = P1 * E * P2 is a fixed
word for the Brauer diagram b (P1, P2 permutation words, E = e_1 e_3 ...).
Each arc of b carries one dot slot: the left endpoint of a top arc (gamma),
the bottom endpoint of a vertical arc and the left endpoint of a bottom arc
(eta).  Products are computed by right multiplication with generators; dots
off their slot are slid along arcs through the word, collecting the lower
order Brauer terms produced by s_a y_a - y_{a+1} s_a = e_a - 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import itertools
import threading

from .brauer import BrauerDiagram, compose, enumerate_diagrams, SizeGuardError

MAX_BASIS_D = 5


class URestrictionError(ValueError):
    """u-admissible formula is undefined for these parameters."""


@dataclass(frozen=True)
class VWParams:
    delta: int
    n: int

    @property
    def N(self):
        return 2 * self.n

    @property
    def alpha(self):
        return Fraction(1 - self.delta, 2)

    @property
    def beta(self):
        return Fraction(self.delta + self.N - 1, 2)

    def w(self, a):
        return _w_recursive(self.delta, self.n, a)

    def w_list(self, count):
        return [self.w(a) for a in range(count)]


def make_params(delta, n):
    if n < 2:
        raise ValueError("n must be at least 2")
    return VWParams(int(delta), int(n))


@lru_cache(maxsize=None)
def _w_recursive(delta, n, a):
    p = VWParams(delta, n)
    N = p.N
    if a == 0:
        return Fraction(N)
    if a == 1:
        return Fraction(N * (N - 1), 2)
    return (p.alpha + p.beta) * _w_recursive(delta, n, a - 1) - p.alpha * p.beta * _w_recursive(delta, n, a - 2)


def w_value(p, a, method="recursive"):
    if a < 0:
        raise ValueError("a must be nonnegative")
    al, be, N = p.alpha, p.beta, Fraction(p.N)
    if method == "recursive":
        return p.w(a)
    if method == "explicit":
        g = N / 2 - al
        s1 = sum(al ** (a - k) * g ** k for k in range(a + 1))
        s2 = sum(al ** (a - 1 - k) * g ** k for k in range(a))
        return N * s1 - N / 2 * s2
    if method == "u_admissible":
        if al == be or al == -be or al == 0 or be == 0:
            raise URestrictionError(
                "u-admissible formula needs distinct nonzero u=(alpha, beta) with alpha != -beta; "
                "got alpha=%s beta=%s" % (al, be))
        return (al + be) / (al - be) * (2 * al ** (a + 1) - 2 * be ** (a + 1) - al ** a + be ** a)
    raise ValueError("unknown method %r" % (method,))


def is_admissible(w, upto):
    w = [Fraction(x) for x in w]
    if len(w) < 2 * upto + 2:
        raise ValueError("need at least %d entries, got %d" % (2 * upto + 2, len(w)))
    for a in range(upto + 1):
        m = 2 * a + 1
        s = sum((-1) ** (b - 1) * w[b - 1] * w[m - b] for b in range(1, m + 1))
        if w[m] + w[m - 1] / 2 - s / 2 != 0:
            return False
    return True


def binomial_identity_sides(m, s):
    """Both sides of sum_k (-1)^k C(k,s) = sum_{b,r,j} (-1)^{b+r+j} C(r+j, s-1)."""
    from math import comb
    left = sum((-1) ** k * comb(k, s) for k in range(m + 1))
    right = 0
    for b in range(1, m + 1):
        for r in range(b):
            for j in range(m - b + 1):
                right += (-1) ** (b + r + j) * comb(r + j, s - 1)
    return left, right


def is_quasi_hereditary_truncated(delta, d):
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return delta != 0 or d % 2 == 1 or d == 0


def is_semisimple_vw(delta, d):
    """Semisimplicity of the level-two algebra (delta >= 0)."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return delta >= d - 1


def is_semisimple_truncated(delta, d):
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return (delta != 0 and delta >= d - 1) or (delta == 0 and d in (1, 3, 5))


# ---------------------------------------------------------------------------
# canonical words


def perm_word(target):
    """Word [a1..ar] (1-based) with s_{a1} o ... o s_{ar} the permutation diagram top i -> bottom target[i]."""
    d = len(target)
    arr = list(range(d))
    word = []
    changed = True
    while changed:
        changed = False
        for p in range(d - 1):
            if target[arr[p]] > target[arr[p + 1]]:
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
                word.append(p + 1)
                changed = True
    return word


@lru_cache(maxsize=None)
def canonical_word(b):
    """(P1, k, P2): s-index lists and number of E caps with P1*E*P2 = b."""
    d = b.d
    tops, bots, verts = [], [], []
    for kind, x, y in b.arcs():
        (tops if kind == "top" else bots if kind == "bottom" else verts).append((x, y))
    tops.sort()
    bots.sort()
    verts.sort()
    k = len(tops)
    pi1 = [None] * d
    pi2 = [None] * d
    for c, (x, y) in enumerate(tops):
        pi1[x], pi1[y] = 2 * c, 2 * c + 1
    for c, (x, y) in enumerate(bots):
        pi2[2 * c], pi2[2 * c + 1] = x, y
    for i, (t, u) in enumerate(verts):
        pi1[t] = 2 * k + i
        pi2[2 * k + i] = u
    return tuple(perm_word(pi1)), k, tuple(perm_word(pi2))


def word_of(b):
    p1, k, p2 = canonical_word(b)
    return [("s", a) for a in p1] + [("e", 2 * c + 1) for c in range(k)] + [("s", a) for a in p2]


_GEN_CACHE = {}


def gen_diagram(d, g):
    key = (d, g)
    if key not in _GEN_CACHE:
        kind, a = g
        _GEN_CACHE[key] = BrauerDiagram.s(d, a) if kind == "s" else BrauerDiagram.e(d, a)
    return _GEN_CACHE[key]


def eval_word(d, gens):
    """Brauer product of a generator word: (diagram, loops)."""
    b = BrauerDiagram.identity(d)
    loops = 0
    for g in gens:
        b, l = compose(b, gen_diagram(d, g))
        loops += l
    return b, loops


# ---------------------------------------------------------------------------
# basis


@dataclass(frozen=True, order=True)
class RegularMonomial:
    gamma: tuple
    diagram: BrauerDiagram
    eta: tuple

    @property
    def d(self):
        return self.diagram.d

    def to_json(self):
        return {"gamma": list(self.gamma), "matching": self.diagram.to_json(), "eta": list(self.eta)}

    def word(self):
        out = [("y", i + 1) for i, g in enumerate(self.gamma) if g]
        out += word_of(self.diagram)
        out += [("y", i + 1) for i, e in enumerate(self.eta) if e]
        return out

    def __str__(self):
        left = "".join("y%d" % (i + 1) for i, g in enumerate(self.gamma) if g)
        right = "".join("y%d" % (i + 1) for i, e in enumerate(self.eta) if e)
        parts = [p for p in (left, repr(self.diagram), right) if p]
        return "*".join(parts)

    def ascii(self):
        """Diagram picture with # marking dotted slots."""
        d = self.d
        marks = [""] * (2 * d)
        for k, (x, y) in enumerate(self.diagram.pairs):
            ch = chr(ord("a") + k)
            marks[x] = marks[y] = ch
        top = " ".join(m + ("#" if x < d and self.gamma[x] else " ") for x, m in enumerate(marks[:d]))
        bot = " ".join(m + ("#" if self.eta[x] else " ") for x, m in enumerate(marks[d:]))
        return top.rstrip() + "\n" + bot.rstrip()


def slots(b):
    """(top_slots, bottom_slots): 0-based positions carrying a dot slot."""
    top, bot = [], []
    for kind, x, y in b.arcs():
        if kind == "top":
            top.append(x)
        elif kind == "bottom":
            bot.append(x)
        else:
            bot.append(y)
    return sorted(top), sorted(bot)


def enumerate_regular_basis(d, force=False):
    if d < 1:
        raise ValueError("d must be positive")
    if d > MAX_BASIS_D and not force:
        raise SizeGuardError("enumerate_regular_basis: d=%d exceeds guard %d" % (d, MAX_BASIS_D))
    out = []
    for b in enumerate_diagrams(d, force=force):
        top, bot = slots(b)
        places = [("g", i) for i in top] + [("e", i) for i in bot]
        for bits in itertools.product((0, 1), repeat=len(places)):
            g = [0] * d
            e = [0] * d
            for (side, i), v in zip(places, bits):
                (g if side == "g" else e)[i] = v
            out.append(RegularMonomial(tuple(g), b, tuple(e)))
    return out


# ---------------------------------------------------------------------------
# elements


class VWElement:
    __slots__ = ("d", "terms")

    def __init__(self, d, terms=None):
        self.d = d
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    def __add__(self, other):
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return VWElement(self.d, acc)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return VWElement(self.d, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, VWElement) and self.d == other.d and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("(%s)*%s" % (v, k) for k, v in sorted(self.terms.items()))


def _acc(target, elem, c=1):
    for k, v in elem.items():
        nv = target.get(k, 0) + c * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class VWAlgebra:
    """Multiplication engine for a fixed (params, d); caches are per instance."""

    def __init__(self, params, d):
        if d < 1:
            raise ValueError("d must be positive")
        self.p = params
        self.d = d
        self.N = Fraction(params.N)
        self.w1 = params.w(1)
        self._lock = threading.RLock()
        self._rmul_cache = {}
        self._lmul_cache = {}
        self._y2_cache = {}
        self.zero = (0,) * d

    # -- constructors
    def mono(self, b, gamma=None, eta=None):
        return RegularMonomial(tuple(gamma or self.zero), b, tuple(eta or self.zero))

    def one(self):
        return VWElement(self.d, {self.mono(BrauerDiagram.identity(self.d)): 1})

    def generator(self, g):
        kind, a = g
        d = self.d
        if kind == "y":
            if not 1 <= a <= d:
                raise IndexError("y_%d out of range for d=%d" % (a, d))
            eta = [0] * d
            eta[a - 1] = 1
            return VWElement(d, {self.mono(BrauerDiagram.identity(d), eta=eta): 1})
        if not 1 <= a < d:
            raise IndexError("%s_%d out of range for d=%d" % (kind, a, d))
        return VWElement(d, {self.mono(gen_diagram(d, g)): 1})

    def basis_element(self, m):
        return VWElement(self.d, {m: 1})

    # -- public products
    def multiply(self, x, y):
        if x.d != self.d or y.d != self.d:
            raise ValueError("mismatched d")
        return VWElement(self.d, self._mul_dicts(x.terms, y.terms))

    def mul_generator(self, x, g, side="right"):
        kind, a = g
        if kind == "y" and not 1 <= a <= self.d:
            raise IndexError("y_%d out of range" % a)
        if kind in ("s", "e") and not 1 <= a < self.d:
            raise IndexError("%s_%d out of range" % (kind, a))
        if side == "right":
            acc = {}
            for m, c in x.terms.items():
                _acc(acc, self._rmul(m, g), c)
            return VWElement(self.d, acc)
        if side == "left":
            if kind == "y":
                acc = {}
                for m, c in x.terms.items():
                    _acc(acc, self._lmul_y(a - 1, m), c)
                return VWElement(self.d, acc)
            return self.multiply(self.generator(g), x)
        raise ValueError("side must be 'left' or 'right'")

    def word(self, gens):
        out = self.one()
        for g in gens:
            out = self.mul_generator(out, g)
        return out

    # -- internals
    def _mul_dicts(self, xd, yd):
        acc = {}
        for m2, c2 in yd.items():
            cur = dict(xd)
            for g in m2.word():
                nxt = {}
                for m, c in cur.items():
                    _acc(nxt, self._rmul(m, g), c)
                cur = nxt
            _acc(acc, cur, c2)
        return acc

    def _rmul(self, m, g):
        key = (m, g)
        hit = self._rmul_cache.get(key)
        if hit is not None:
            return hit
        with self._lock:
            kind, a = g
            if kind == "y":
                res = self._rmul_y(m, a - 1)
            elif kind == "s":
                res = self._rmul_s(m, a - 1)
            else:
                res = self._rmul_e(m, a - 1)
            self._rmul_cache[key] = res
        return res

    def _diag_mono(self, b, loops, gamma=None, eta=None):
        return {self.mono(b, gamma, eta): self.N ** loops}

    def _apply_ys(self, elem, gamma_pos, eta_pos):
        """y^gamma * elem * y^eta for position lists (0-based)."""
        cur = elem
        for j in gamma_pos:
            nxt = {}
            for m, c in cur.items():
                _acc(nxt, self._lmul_y(j, m), c)
            cur = nxt
        for j in eta_pos:
            nxt = {}
            for m, c in cur.items():
                _acc(nxt, self._rmul(m, ("y", j + 1)), c)
            cur = nxt
        return cur

    def _y2(self, j):
        """Normal form of y_{j+1}^2 (0-based j)."""
        if j in self._y2_cache:
            return self._y2_cache[j]
        d = self.d
        al, be = self.p.alpha, self.p.beta
        ident = self.mono(BrauerDiagram.identity(d))
        if j == 0:
            eta = [0] * d
            eta[0] = 1
            res = {self.mono(BrauerDiagram.identity(d), eta=eta): al + be}
            _acc(res, {ident: 1}, -al * be)
        else:
            s = self.generator(("s", j)).terms
            e = self.generator(("e", j)).terms
            Y = self.generator(("y", j)).terms
            prev = self._y2(j - 1)
            mul = self._mul_dicts
            res = {}
            _acc(res, mul(mul(s, prev), s))
            _acc(res, mul(s, Y))
            _acc(res, mul(mul(s, Y), e), -1)
            _acc(res, mul(Y, s))
            _acc(res, mul(mul(e, Y), s), -1)
            _acc(res, {ident: 1})
            _acc(res, e, self.N - 2)
        self._y2_cache[j] = res
        return res

    def _slide(self, b, side, pos):
        """Move one dot from (side, pos) along its arc through W(b).

        Returns (sign, side', pos', corrections) with
        dot*W = sign * dot' * W + sum(coef * Brauer word), corrections given as
        (coef, diagram, loops)."""
        d = b.d
        p1, k, p2 = canonical_word(b)
        P1 = [("s", a) for a in p1]
        E = [("e", 2 * c + 1) for c in range(k)]
        P2 = [("s", a) for a in p2]
        full = P1 + E + P2
        corr = []
        sign = 1

        def add_corr(coef, idx):
            pre = full[:idx]
            post = full[idx + 1:]
            a = full[idx][1]
            b1, l1 = eval_word(d, pre + [("e", a)] + post)
            b0, l0 = eval_word(d, pre + post)
            corr.append((coef, b1, l1))
            corr.append((-coef, b0, l0))

        def through_left(p, lo, hi):
            # dot just right of full[lo:hi], moving leftwards: s_a y_p
            nonlocal sign
            for idx in range(hi - 1, lo - 1, -1):
                a = full[idx][1] - 1
                if p == a:
                    add_corr(sign, idx)
                    p = a + 1
                elif p == a + 1:
                    add_corr(-sign, idx)
                    p = a
            return p

        def through_right(p, lo, hi):
            # dot just left of full[lo:hi], moving rightwards: y_p s_a
            nonlocal sign
            for idx in range(lo, hi):
                a = full[idx][1] - 1
                if p == a:
                    add_corr(sign, idx)
                    p = a + 1
                elif p == a + 1:
                    add_corr(-sign, idx)
                    p = a
            return p

        n1, n2 = len(P1), len(P1) + len(E)
        if side == "bottom":
            p = through_left(pos, n2, len(full))
            if p < 2 * k:
                p ^= 1
                sign = -sign
                p = through_right(p, n2, len(full))
                return sign, "bottom", p, corr
            p = through_left(p, 0, n1)
            return sign, "top", p, corr
        p = through_right(pos, 0, n1)
        if p < 2 * k:
            p ^= 1
            sign = -sign
            p = through_left(p, 0, n1)
            return sign, "top", p, corr
        p = through_right(p, n2, len(full))
        return sign, "bottom", p, corr

    def _corr_terms(self, corr, gamma, eta, tail=None):
        """sum coef * y^gamma * C * tail * y^eta for slide corrections."""
        acc = {}
        gpos = [i for i, g in enumerate(gamma) if g]
        epos = [i for i, e in enumerate(eta) if e]
        for coef, c, loops in corr:
            if tail is not None:
                c, l2 = compose(c, tail)
                loops += l2
            base = self._diag_mono(c, loops)
            _acc(acc, self._apply_ys(base, gpos, epos), coef)
        return acc

    def _rmul_y(self, m, j):
        b = m.diagram
        d = self.d
        partner = b.partner(d + j)
        on_slot = partner < d or partner > d + j
        if on_slot:
            if not m.eta[j]:
                eta = list(m.eta)
                eta[j] = 1
                return {RegularMonomial(m.gamma, b, tuple(eta)): Fraction(1)}
            eta = list(m.eta)
            eta[j] = 0
            base = {RegularMonomial(m.gamma, b, tuple(eta)): Fraction(1)}
            if j == 0:
                res = {m: self.p.alpha + self.p.beta}
                _acc(res, base, -self.p.alpha * self.p.beta)
                return res
            return self._mul_dicts(base, self._y2(j))
        sign, side, p, corr = self._slide(b, "bottom", j)
        assert side == "bottom"
        res = {}
        _acc(res, self._rmul(m, ("y", p + 1)), sign)
        _acc(res, self._corr_terms(corr, m.gamma, m.eta))
        return res

    def _lmul_y(self, j, m):
        key = (j, m)
        hit = self._lmul_cache.get(key)
        if hit is not None:
            return hit
        with self._lock:
            res = self._lmul_y_raw(j, m)
            self._lmul_cache[key] = res
        return res

    def _lmul_y_raw(self, j, m):
        b = m.diagram
        d = self.d
        partner = b.partner(j)
        if partner < d and partner > j:
            if not m.gamma[j]:
                g = list(m.gamma)
                g[j] = 1
                return {RegularMonomial(tuple(g), b, m.eta): Fraction(1)}
            g = list(m.gamma)
            g[j] = 0
            base = {RegularMonomial(tuple(g), b, m.eta): Fraction(1)}
            if j == 0:
                res = {m: self.p.alpha + self.p.beta}
                _acc(res, base, -self.p.alpha * self.p.beta)
                return res
            return self._mul_dicts(self._y2(j), base)
        sign, side, p, corr = self._slide(b, "top", j)
        res = {}
        if side == "top":
            _acc(res, self._lmul_y(p, m), sign)
        else:
            _acc(res, self._rmul(m, ("y", p + 1)), sign)
        _acc(res, self._corr_terms(corr, m.gamma, m.eta))
        return res

    def _rmul_s(self, m, a):
        d = self.d
        g = ("s", a + 1)
        ea, eb = m.eta[a], m.eta[a + 1]
        rest = [i for i, e in enumerate(m.eta) if e and i not in (a, a + 1)]
        X0 = RegularMonomial(m.gamma, m.diagram, self.zero)
        bs, ls = compose(m.diagram, gen_diagram(d, g))
        be, le = compose(m.diagram, gen_diagram(d, ("e", a + 1)))
        S = self._diag_mono(bs, ls, m.gamma)
        Ee = self._diag_mono(be, le, m.gamma)
        I = {X0: Fraction(1)}
        res = {}
        if (ea, eb) == (0, 0):
            _acc(res, S)
        elif (ea, eb) == (1, 0):
            _acc(res, self._apply_ys(S, [], [a + 1]))
            _acc(res, Ee)
            _acc(res, I, -1)
        elif (ea, eb) == (0, 1):
            _acc(res, self._apply_ys(S, [], [a]))
            _acc(res, Ee, -1)
            _acc(res, I)
        else:
            _acc(res, self._apply_ys(S, [], [a, a + 1]))
            _acc(res, self._apply_ys(Ee, [], [a]))
            _acc(res, self._h(X0, a), -1)
        return self._apply_ys(res, [], rest)

    def _rmul_e(self, m, a):
        d = self.d
        ea, eb = m.eta[a], m.eta[a + 1]
        rest = [i for i, e in enumerate(m.eta) if e and i not in (a, a + 1)]
        X0 = RegularMonomial(m.gamma, m.diagram, self.zero)
        c = ea + eb
        sign = -1 if eb else 1
        res = {}
        if c == 0:
            be, le = compose(m.diagram, gen_diagram(d, ("e", a + 1)))
            _acc(res, self._diag_mono(be, le, m.gamma))
        elif c == 1:
            _acc(res, self._h(X0, a), sign)
        else:
            # y_a y_{a+1} e_a = -y_a^2 e_a
            base = self._mul_dicts({X0: Fraction(1)}, self._y2(a))
            for mm, cc in base.items():
                _acc(res, self._rmul(mm, ("e", a + 1)), -cc)
        return self._apply_ys(res, [], rest)

    def _h(self, X0, a):
        """y^gamma W(b) y_{a+1} e_{a+1} (0-based a) for X0 = (gamma, b, 0)."""
        d = self.d
        b = X0.diagram
        gamma = X0.gamma
        ediag = gen_diagram(d, ("e", a + 1))
        be, le = compose(b, ediag)
        X = b.partner(d + a)
        Y = b.partner(d + a + 1)
        res = {}
        if X == d + a + 1:
            return {RegularMonomial(gamma, b, self.zero): self.w1}
        if X < d and Y < d:
            sign, side, p, corr = self._slide(b, "bottom", a)
            assert side == "top"
            base = self._diag_mono(be, le, gamma)
            for mm, cc in base.items():
                _acc(res, self._lmul_y(p, mm), sign * cc)
            _acc(res, self._corr_terms(corr, gamma, self.zero, tail=ediag))
            return res
        if X < d:
            # y_a e_a = -y_{a+1} e_a, then slide along the bottom arc at (a+1)*
            sign, side, p, corr = self._slide(b, "bottom", a + 1)
            sign = -sign
            corr = [(-c, dg, l) for c, dg, l in corr]
        else:
            sign, side, p, corr = self._slide(b, "bottom", a)
        assert side == "bottom"
        base = self._diag_mono(be, le, gamma)
        _acc(res, self._apply_ys(base, [], [p]), sign)
        _acc(res, self._corr_terms(corr, gamma, self.zero, tail=ediag))
        return res


# ---------------------------------------------------------------------------
# relation suite


def vw_relations(alg):
    """Yield (name, lhs, rhs) for the defining relations VW.1-VW.8 on alg."""
    d = alg.d
    G = alg.generator
    M = alg.multiply
    one = alg.one()
    w = alg.p.w

    def prod(*xs):
        out = xs[0]
        for x in xs[1:]:
            out = M(out, x)
        return out

    s = {a: G(("s", a)) for a in range(1, d)}
    e = {a: G(("e", a)) for a in range(1, d)}
    y = {i: G(("y", i)) for i in range(1, d + 1)}
    for a in range(1, d):
        yield "VW.1 s%d^2=1" % a, prod(s[a], s[a]), one
        yield "VW.3 e%d^2=w0 e%d" % (a, a), prod(e[a], e[a]), e[a].scale(w(0))
        yield "VW.6a e%ds%d=e%d" % (a, a, a), prod(e[a], s[a]), e[a]
        yield "VW.6a s%de%d=e%d" % (a, a, a), prod(s[a], e[a]), e[a]
        yield "VW.7 s%dy%d-y%ds%d=e%d-1" % (a, a, a + 1, a, a), prod(s[a], y[a]) - prod(y[a + 1], s[a]), e[a] - one
        yield "VW.7 y%ds%d-s%dy%d=e%d-1" % (a, a, a, a + 1, a), prod(y[a], s[a]) - prod(s[a], y[a + 1]), e[a] - one
        yield "VW.8a e%d(y%d+y%d)=0" % (a, a, a + 1), prod(e[a], y[a] + y[a + 1]), VWElement(d)
        yield "VW.8b (y%d+y%d)e%d=0" % (a, a + 1, a), prod(y[a] + y[a + 1], e[a]), VWElement(d)
        for b_ in range(1, d):
            if abs(a - b_) > 1:
                yield "VW.2a s%ds%d" % (a, b_), prod(s[a], s[b_]), prod(s[b_], s[a])
                yield "VW.5a s%de%d" % (a, b_), prod(s[a], e[b_]), prod(e[b_], s[a])
                yield "VW.5a e%de%d" % (a, b_), prod(e[a], e[b_]), prod(e[b_], e[a])
        for i in range(1, d + 1):
            if i not in (a, a + 1):
                yield "VW.2c s%dy%d" % (a, i), prod(s[a], y[i]), prod(y[i], s[a])
                yield "VW.5b e%dy%d" % (a, i), prod(e[a], y[i]), prod(y[i], e[a])
    for c in range(1, d - 1):
        yield "VW.2b braid %d" % c, prod(s[c], s[c + 1], s[c]), prod(s[c + 1], s[c], s[c + 1])
        yield "VW.6b s%de%de%d" % (c, c + 1, c), prod(s[c], e[c + 1], e[c]), prod(s[c + 1], e[c])
        yield "VW.6b e%de%ds%d" % (c, c + 1, c), prod(e[c], e[c + 1], s[c]), prod(e[c], s[c + 1])
        yield "VW.6c e%de%ds%d" % (c + 1, c, c + 1), prod(e[c + 1], e[c], s[c + 1]), prod(e[c + 1], s[c])
        yield "VW.6c s%de%de%d" % (c + 1, c, c + 1), prod(s[c + 1], e[c], e[c + 1]), prod(s[c], e[c + 1])
        yield "VW.6d e%de%de%d" % (c + 1, c, c + 1), prod(e[c + 1], e[c], e[c + 1]), e[c + 1]
        yield "VW.6d e%de%de%d" % (c, c + 1, c), prod(e[c], e[c + 1], e[c]), e[c]
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            yield "VW.5c y%dy%d" % (i, j), prod(y[i], y[j]), prod(y[j], y[i])
    if d >= 2:
        yk = one
        for k in range(0, 5):
            yield "VW.4 e1y1^%de1=w%d e1" % (k, k), prod(e[1], yk, e[1]), e[1].scale(w(k))
            yk = M(yk, y[1])
    al, be = alg.p.alpha, alg.p.beta
    yield "cyclotomic (y1-a)(y1-b)=0", M(y[1] - one.scale(al), y[1] - one.scale(be)), VWElement(d)


def vw_rewriting_suite(params, d):
    alg = VWAlgebra(params, d)
    return [(name, lhs == rhs) for name, lhs, rhs in vw_relations(alg)]
