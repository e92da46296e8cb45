"""Brauer diagrams and the Brauer algebra Br_d(delta).

Vertex encoding: top vertex i (1-based) is the integer i-1, bottom vertex i*
is d+i-1.  This makes the integer order agree with 1<...<d<1*<...<d*.
"""
from __future__ import annotations

import random

from .scalars import DeltaPoly

MAX_ENUM_D = 8


class SizeGuardError(ValueError):
    pass


class BrauerDiagram:
    __slots__ = ("d", "pairs", "_partner")

    def __init__(self, d, pairs):
        d = int(d)
        norm = sorted(tuple(sorted(p)) for p in pairs)
        seen = [x for p in norm for x in p]
        if sorted(seen) != list(range(2 * d)):
            raise ValueError("not a perfect matching on 2*%d vertices: %r" % (d, pairs))
        self.d = d
        self.pairs = tuple(norm)
        partner = [0] * (2 * d)
        for a, b in self.pairs:
            partner[a] = b
            partner[b] = a
        self._partner = tuple(partner)

    @classmethod
    def identity(cls, d):
        return cls(d, [(i, d + i) for i in range(d)])

    @classmethod
    def s(cls, d, i):
        """Transposition of strands i, i+1 (1-based)."""
        if not 1 <= i < d:
            raise IndexError("s_%d out of range for d=%d" % (i, d))
        a = i - 1
        pairs = [(j, d + j) for j in range(d) if j not in (a, a + 1)]
        pairs += [(a, d + a + 1), (a + 1, d + a)]
        return cls(d, pairs)

    @classmethod
    def e(cls, d, i):
        if not 1 <= i < d:
            raise IndexError("e_%d out of range for d=%d" % (i, d))
        a = i - 1
        pairs = [(j, d + j) for j in range(d) if j not in (a, a + 1)]
        pairs += [(a, a + 1), (d + a, d + a + 1)]
        return cls(d, pairs)

    def partner(self, v):
        return self._partner[v]

    def is_top(self, v):
        return v < self.d

    def label(self, v):
        return str(v + 1) if v < self.d else "%d*" % (v - self.d + 1)

    def arcs(self):
        """Classify arcs as ('top', a, b), ('bottom', a, b) or ('vertical', top, bottom)."""
        out = []
        d = self.d
        for a, b in self.pairs:
            if b < d:
                out.append(("top", a, b))
            elif a >= d:
                out.append(("bottom", a - d, b - d))
            else:
                out.append(("vertical", a, b - d))
        return out

    def num_top_arcs(self):
        return sum(1 for a, b in self.pairs if b < self.d)

    def transpose(self):
        d = self.d
        flip = lambda v: v + d if v < d else v - d
        return BrauerDiagram(d, [(flip(a), flip(b)) for a, b in self.pairs])

    def __eq__(self, other):
        return isinstance(other, BrauerDiagram) and self.d == other.d and self.pairs == other.pairs

    def __lt__(self, other):
        return (self.d, self.pairs) < (other.d, other.pairs)

    def __hash__(self):
        return hash((self.d, self.pairs))

    def __repr__(self):
        return "BrauerDiagram(%s)" % ", ".join(
            "{%s,%s}" % (self.label(a), self.label(b)) for a, b in self.pairs)

    def to_json(self):
        return [[self.label(a), self.label(b)] for a, b in self.pairs]

    @classmethod
    def from_json(cls, d, data):
        def parse(s):
            s = str(s)
            if s.endswith("*"):
                return d + int(s[:-1]) - 1
            return int(s) - 1
        return cls(d, [(parse(a), parse(b)) for a, b in data])

    def ascii(self):
        """Two-row picture: matching letters mark the two ends of each arc."""
        d = self.d
        marks = [""] * (2 * d)
        for k, (a, b) in enumerate(self.pairs):
            ch = chr(ord("a") + k)
            marks[a] = marks[b] = ch
        top = " ".join(marks[:d])
        bot = " ".join(marks[d:])
        return "%s\n%s" % (top, bot)


def enumerate_diagrams(d, force=False):
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d > MAX_ENUM_D and not force:
        raise SizeGuardError("enumerate_diagrams: d=%d exceeds guard %d" % (d, MAX_ENUM_D))
    out = []

    def rec(free, acc):
        if not free:
            out.append(BrauerDiagram(d, acc))
            return
        v = free[0]
        for k in range(1, len(free)):
            rec(free[1:k] + free[k + 1:], acc + [(v, free[k])])

    rec(list(range(2 * d)), [])
    return out


def compose(b, b2):
    """Stack b on top of b2; return (b o b2, number of closed loops)."""
    if b.d != b2.d:
        raise ValueError("mismatched sizes %d and %d" % (b.d, b2.d))
    d = b.d
    # nodes: ('T', i) top of b, ('M', i) middle, ('B', i) bottom of b2
    def nbr_upper(v):
        # b's arc from vertex v of b (encoded), returns node
        w = b.partner(v)
        return ("T", w) if w < d else ("M", w - d)

    def nbr_lower(i):
        w = b2.partner(i)
        return ("M", w) if w < d else ("B", w - d)

    def walk(node):
        # follow the path from an outer node until the next outer node
        kind, i = node
        if kind == "T":
            nxt = nbr_upper(i)
            came = "upper"
        else:
            nxt = nbr_lower(d + i)
            came = "lower"
        visited = set()
        while nxt[0] == "M":
            visited.add(nxt[1])
            if came == "upper":
                nxt = nbr_lower(nxt[1])
                came = "lower"
            else:
                nxt = nbr_upper(d + nxt[1])
                came = "upper"
        return nxt, visited

    pairs = []
    used_mid = set()
    done = set()
    for node in [("T", i) for i in range(d)] + [("B", i) for i in range(d)]:
        if node in done:
            continue
        end, vis = walk(node)
        used_mid |= vis
        done.add(node)
        done.add(end)
        enc = lambda nd: nd[1] if nd[0] == "T" else d + nd[1]
        pairs.append((enc(node), enc(end)))
    loops = 0
    remaining = set(range(d)) - used_mid
    while remaining:
        start = remaining.pop()
        loops += 1
        cur = start
        side = "lower"
        while True:
            if side == "lower":
                w = b2.partner(cur)  # stays in middle row
                side = "upper"
            else:
                w = b.partner(d + cur) - d
                side = "lower"
            if w == start and side == "lower":
                break
            remaining.discard(w)
            cur = w
    return BrauerDiagram(d, pairs), loops


class BrauerElement:
    __slots__ = ("d", "terms")

    def __init__(self, d, terms=None):
        self.d = d
        clean = {}
        for k, v in (terms or {}).items():
            v = DeltaPoly.coerce(v)
            if v:
                clean[k] = v
        self.terms = clean

    @classmethod
    def basis(cls, b, coef=1):
        return cls(b.d, {b: coef})

    @classmethod
    def one(cls, d):
        return cls.basis(BrauerDiagram.identity(d))

    @classmethod
    def s(cls, d, i):
        return cls.basis(BrauerDiagram.s(d, i))

    @classmethod
    def e(cls, d, i):
        return cls.basis(BrauerDiagram.e(d, i))

    def __add__(self, other):
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, DeltaPoly()) + v
        return BrauerElement(self.d, acc)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = DeltaPoly.coerce(c)
        return BrauerElement(self.d, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, BrauerElement) and self.d == other.d and self.terms == other.terms

    def transpose(self):
        return BrauerElement(self.d, {k.transpose(): v for k, v in self.terms.items()})

    def evaluate(self, delta):
        return {k: v.evaluate(delta) for k, v in self.terms.items()}

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("(%s)*%r" % (v, k) for k, v in sorted(self.terms.items()))


def multiply(x, y):
    if x.d != y.d:
        raise ValueError("mismatched sizes %d and %d" % (x.d, y.d))
    acc = {}
    delta = DeltaPoly.delta()
    for b1, c1 in x.terms.items():
        for b2, c2 in y.terms.items():
            b, loops = compose(b1, b2)
            c = c1 * c2
            for _ in range(loops):
                c = c * delta
            acc[b] = acc.get(b, DeltaPoly()) + c
    return BrauerElement(x.d, acc)


def random_element(d, rng, nterms=3):
    diagrams = enumerate_diagrams(d)
    terms = {}
    for _ in range(nterms):
        b = rng.choice(diagrams)
        terms[b] = DeltaPoly({rng.randint(0, 2): rng.randint(-3, 3)})
    return BrauerElement(d, terms)


def is_semisimple_brauer(delta, d):
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return (delta != 0 and delta >= d - 1) or (delta == 0 and d in (1, 3, 5))


def double_factorial(m):
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out
