"""Exact coefficient rings.

``LaurentScalar`` is an integer Laurent polynomial in q, ``DeltaPoly`` a
rational polynomial in delta.  Rationals are plain ``fractions.Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
import random

Rational = Fraction


def _clean(items):
    return tuple(sorted((e, c) for e, c in items if c != 0))


def _render(terms, var, fmt_coef):
    if not terms:
        return "0"
    out = []
    for e, c in terms:
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            mono = fmt_coef(a)
        else:
            pw = var if e == 1 else "%s^%d" % (var, e)
            mono = pw if a == 1 else "%s*%s" % (fmt_coef(a), pw)
        if not out:
            out.append("-" + mono if neg else mono)
        else:
            out.append(("- " if neg else "+ ") + mono)
    return " ".join(out)


class LaurentScalar:
    """Integer Laurent polynomial in q, stored as sorted (exponent, coefficient) pairs."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            items = ()
        elif isinstance(coeffs, int):
            items = ((0, coeffs),)
        elif isinstance(coeffs, dict):
            items = coeffs.items()
        else:
            acc = {}
            for e, c in coeffs:
                acc[e] = acc.get(e, 0) + c
            items = acc.items()
        for e, c in items:
            if not isinstance(c, int) or not isinstance(e, int):
                raise TypeError("LaurentScalar needs integer exponents and coefficients")
        self._terms = _clean(items)
        self._hash = None

    @classmethod
    def q(cls, k=1, c=1):
        return cls({k: c})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentScalar):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError("cannot coerce %r to LaurentScalar" % (x,))

    @property
    def terms(self):
        return self._terms

    def as_dict(self):
        return dict(self._terms)

    def coefficient(self, k):
        for e, c in self._terms:
            if e == k:
                return c
        return 0

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def min_exp(self):
        return self._terms[0][0] if self._terms else None

    def max_exp(self):
        return self._terms[-1][0] if self._terms else None

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentScalar(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("L",) + self._terms)
        return self._hash

    def __add__(self, other):
        try:
            other = LaurentScalar.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentScalar(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar({e: -c for e, c in self._terms})

    def __sub__(self, other):
        try:
            other = LaurentScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentScalar.coerce(other)
        except TypeError:
            return NotImplemented
        acc = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentScalar(acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if len(self._terms) != 1 or self._terms[0][1] not in (1, -1):
                raise ValueError("only signed monomials are invertible")
            e, c = self._terms[0]
            return LaurentScalar({-e * (-k): c ** (-k)})
        out = LaurentScalar(1)
        for _ in range(k):
            out = out * self
        return out

    def bar(self):
        return LaurentScalar({-e: c for e, c in self._terms})

    def sub_neg_q(self):
        """Substitute q -> -q."""
        return LaurentScalar({e: (-c if e % 2 else c) for e, c in self._terms})

    def evaluate(self, x):
        x = Fraction(x)
        return sum((Fraction(c) * x ** e for e, c in self._terms), Fraction(0))

    def to_json(self):
        return [[e, c] for e, c in self._terms]

    @classmethod
    def from_json(cls, data):
        return cls([(int(e), int(c)) for e, c in data])

    def __str__(self):
        return _render(self._terms, "q", str)

    def __repr__(self):
        return "LaurentScalar(%s)" % self


def bar(p):
    return LaurentScalar.coerce(p).bar()


ZERO = LaurentScalar()
ONE = LaurentScalar(1)
Q = LaurentScalar.q(1)
QINV = LaurentScalar.q(-1)


def qpow(k, sign=1):
    """(sign*q)^k for integer k."""
    c = 1 if (sign == 1 or k % 2 == 0) else -1
    return LaurentScalar({k: c})


def qint(k):
    """Quantum integer [k] = (q^k - q^-k)/(q - q^-1)."""
    if k == 0:
        return ZERO
    s = 1 if k > 0 else -1
    return LaurentScalar({e: s for e in range(-abs(k) + 1, abs(k), 2)})


def random_laurent(rng, span=4, density=0.5, bound=5):
    coeffs = {}
    for e in range(-span, span + 1):
        if rng.random() < density:
            coeffs[e] = rng.randint(-bound, bound)
    return LaurentScalar(coeffs)


class DeltaPoly:
    """Polynomial in delta with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            items = ()
        elif isinstance(coeffs, (int, Fraction)):
            items = ((0, Fraction(coeffs)),)
        elif isinstance(coeffs, dict):
            items = coeffs.items()
        else:
            acc = {}
            for e, c in coeffs:
                acc[e] = acc.get(e, 0) + c
            items = acc.items()
        cleaned = []
        for e, c in items:
            if not isinstance(e, int) or e < 0:
                raise ValueError("DeltaPoly exponents are nonnegative integers")
            cleaned.append((e, Fraction(c)))
        self._terms = _clean(cleaned)

    @classmethod
    def delta(cls, k=1):
        return cls({k: 1})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, DeltaPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError("cannot coerce %r to DeltaPoly" % (x,))

    @property
    def terms(self):
        return self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DeltaPoly(other)
        if not isinstance(other, DeltaPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(("D",) + self._terms)

    def __add__(self, other):
        try:
            other = DeltaPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return DeltaPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return DeltaPoly({e: -c for e, c in self._terms})

    def __sub__(self, other):
        return self + (-DeltaPoly.coerce(other))

    def __rsub__(self, other):
        return DeltaPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = DeltaPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return DeltaPoly(acc)

    __rmul__ = __mul__

    def evaluate(self, delta):
        x = Fraction(delta)
        return sum((c * x ** e for e, c in self._terms), Fraction(0))

    def to_json(self):
        return [[e, str(c)] for e, c in self._terms]

    def __str__(self):
        return _render(self._terms, "delta", str)

    def __repr__(self):
        return "DeltaPoly(%s)" % self


def random_delta_poly(rng, degree=3, bound=5):
    return DeltaPoly({e: Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
                      for e in range(degree + 1)})


__all__ = ["LaurentScalar", "DeltaPoly", "Rational", "bar", "qpow", "qint",
           "ZERO", "ONE", "Q", "QINV", "random_laurent", "random_delta_poly"]
