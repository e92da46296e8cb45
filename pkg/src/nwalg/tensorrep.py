"""Exact matrix model of so_{2n} and the VW operators on V^{(x)d} (trivial M).

Rows/columns of 2n x 2n matrices are indexed by I = (-n..-1, 1..n); a tensor
basis vector is a d-tuple over I.
"""
from __future__ import annotations

from fractions import Fraction
import itertools

from .brauer import BrauerDiagram, enumerate_diagrams, compose

MAX_TENSOR_DIM = 10 ** 4


class SizeGuardError(ValueError):
    pass


class ExactMatrix:
    """Sparse rational matrix; entries keyed by (row, col)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {k: Fraction(v) for k, v in (entries or {}).items() if v != 0}

    @classmethod
    def identity(cls, dim, scale=1):
        return cls(dim, dim, {(i, i): scale for i in range(dim)})

    def _rowmap(self):
        rm = {}
        for (r, c), v in self.entries.items():
            rm.setdefault(r, {})[c] = v
        return rm

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch %dx%d @ %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        orow = other._rowmap()
        acc = {}
        for (r, k), v in self.entries.items():
            for c, w in orow.get(k, {}).items():
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        return ExactMatrix(self.rows, other.cols, acc)

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        acc = dict(self.entries)
        for k, v in other.entries.items():
            acc[k] = acc.get(k, 0) + v
        return ExactMatrix(self.rows, self.cols, acc)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return ExactMatrix(self.rows, self.cols, {k: v * c for k, v in self.entries.items()})

    def transpose(self):
        return ExactMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def trace(self):
        return sum((v for (r, c), v in self.entries.items() if r == c), Fraction(0))

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def is_zero(self):
        return not self.entries

    def get(self, r, c):
        return self.entries.get((r, c), Fraction(0))

    def __repr__(self):
        return "ExactMatrix(%dx%d, nnz=%d)" % (self.rows, self.cols, len(self.entries))


def sparse_rank(vectors):
    """Rank over Q of sparse vectors given as dicts key -> Fraction."""
    pivots = {}  # pivot key -> reduced row
    rank = 0
    for vec in vectors:
        row = {k: Fraction(v) for k, v in vec.items() if v != 0}
        while row:
            key = min(row)
            if key not in pivots:
                inv = 1 / row[key]
                pivots[key] = {k: v * inv for k, v in row.items()}
                rank += 1
                break
            prow = pivots[key]
            f = row[key]
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return rank


def index_set(n):
    return list(range(-n, 0)) + list(range(1, n + 1))


def _pos(n):
    return {v: i for i, v in enumerate(index_set(n))}


def elementary(n, i, j):
    p = _pos(n)
    return ExactMatrix(2 * n, 2 * n, {(p[i], p[j]): 1})


def matrix_J(n):
    p = _pos(n)
    return ExactMatrix(2 * n, 2 * n, {(p[k], p[-k]): 1 for k in index_set(n)})


class SoBasis:
    """Root-vector basis of so_{2n} with its dual under the calibrated trace form."""

    def __init__(self, n):
        if n < 2:
            raise ValueError("n must be at least 2")
        self.n = n
        E = lambda i, j: elementary(n, i, j)
        labels, mats = [], []
        for i in range(1, n + 1):
            labels.append(("h", i))
            mats.append(E(i, i) - E(-i, -i))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    labels.append(("e-e", i, j))
                    mats.append(E(i, j) - E(-j, -i))
        for i in range(1, n + 1):
            for j in range(1, i):
                labels.append(("e+e", i, j))
                mats.append(E(i, -j) - E(j, -i))
                labels.append(("-e-e", i, j))
                mats.append(E(-i, j) - E(-j, i))
        self.labels = labels
        self.mats = mats
        self.duals = self._duals(mats)
        self.form_scale = self._calibrate()
        self.duals = [X.scale(self.form_scale) for X in self.duals]

    def __len__(self):
        return len(self.mats)

    @staticmethod
    def _duals(mats):
        # trace-form duals; the root basis pairs each X with one partner
        out = []
        for X in mats:
            cand = [(Y, (X @ Y).trace()) for Y in mats]
            nz = [(Y, t) for Y, t in cand if t != 0]
            if len(nz) != 1:
                raise AssertionError("trace form not diagonal in the partner pairing")
            Y, t = nz[0]
            out.append(Y.scale(1 / t))
        return out

    def _calibrate(self):
        n = self.n
        om = two_factor_sum(self.mats, self.duals, n)
        target = dict(sigma_two(n))
        for k, v in tau_two(n).items():
            target[k] = target.get(k, 0) - v
        target = {k: v for k, v in target.items() if v != 0}
        ratio = None
        keys = set(om) | set(target)
        for k in keys:
            a, b = om.get(k, 0), target.get(k, 0)
            if a == 0 and b == 0:
                continue
            if a == 0 or b == 0:
                raise AssertionError("Omega is not proportional to sigma - tau")
            r = Fraction(b) / a
            if ratio is None:
                ratio = r
            elif ratio != r:
                raise AssertionError("Omega is not proportional to sigma - tau")
        return ratio

    def weight(self, k):
        """h-weight of basis element k as an n-vector (eigenvalues under ad of the diagonal)."""
        n = self.n
        X = self.mats[k]
        p = index_set(n)
        wts = set()
        for (r, c) in X.entries:
            a, b = p[r], p[c]
            vec = [0] * n
            vec[abs(a) - 1] += 1 if a > 0 else -1
            vec[abs(b) - 1] -= 1 if b > 0 else -1
            wts.add(tuple(vec))
        if len(wts) != 1:
            raise AssertionError("not a weight vector")
        return wts.pop()

    def coordinates(self, X):
        """Coefficients of X in this basis (via the dual pairing)."""
        return [(X @ D).trace() / self.form_scale for D in self.duals]


def so_basis(n):
    return SoBasis(n)


# ---------------------------------------------------------------------------
# two-factor operators as dicts ((a,b),(c,d)) -> coef meaning v_a(x)v_b -> coef v_c(x)v_d


def sigma_two(n):
    I = index_set(n)
    return {((a, b), (b, a)): Fraction(1) for a in I for b in I}


def tau_two(n):
    I = index_set(n)
    return {((a, -a), (k, -k)): Fraction(1) for a in I for k in I}


def two_factor_sum(mats, duals, n):
    I = index_set(n)
    p = _pos(n)
    out = {}
    for X, Y in zip(mats, duals):
        xc = {}
        for (r, c), v in X.entries.items():
            xc.setdefault(I[c], []).append((I[r], v))
        yc = {}
        for (r, c), v in Y.entries.items():
            yc.setdefault(I[c], []).append((I[r], v))
        for a, xs in xc.items():
            for b, ys in yc.items():
                for ra, va in xs:
                    for rb, vb in ys:
                        key = ((a, b), (ra, rb))
                        out[key] = out.get(key, 0) + va * vb
    return {k: v for k, v in out.items() if v != 0}


class TensorSpace:
    def __init__(self, n, d, force=False):
        if (2 * n) ** d > MAX_TENSOR_DIM and not force:
            raise SizeGuardError("(2n)^d = %d exceeds guard %d" % ((2 * n) ** d, MAX_TENSOR_DIM))
        self.n, self.d = n, d
        self.I = index_set(n)
        self.basis = list(itertools.product(self.I, repeat=d))
        self.index = {t: i for i, t in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._so = None

    @property
    def so(self):
        if self._so is None:
            self._so = SoBasis(self.n)
        return self._so

    def embed_two(self, op, k, l):
        """Operator on factors k<l (1-based) from a two-factor dict."""
        by_src = {}
        for (src, dst), v in op.items():
            by_src.setdefault(src, []).append((dst, v))
        acc = {}
        for t in self.basis:
            for dst, v in by_src.get((t[k - 1], t[l - 1]), ()):
                u = list(t)
                u[k - 1], u[l - 1] = dst
                key = (self.index[tuple(u)], self.index[t])
                acc[key] = acc.get(key, 0) + v
        return ExactMatrix(self.dim, self.dim, acc)

    def embed_one(self, X, k):
        I = self.I
        cols = {}
        for (r, c), v in X.entries.items():
            cols.setdefault(I[c], []).append((I[r], v))
        acc = {}
        for t in self.basis:
            for r, v in cols.get(t[k - 1], ()):
                u = list(t)
                u[k - 1] = r
                key = (self.index[tuple(u)], self.index[t])
                acc[key] = acc.get(key, 0) + v
        return ExactMatrix(self.dim, self.dim, acc)

    def diagonal_action(self, X):
        out = ExactMatrix(self.dim, self.dim)
        for k in range(1, self.d + 1):
            out = out + self.embed_one(X, k)
        return out

    def sigma(self, i):
        return self.embed_two(sigma_two(self.n), i, i + 1)

    def tau(self, i):
        return self.embed_two(tau_two(self.n), i, i + 1)

    def omega(self, k, l):
        if k == 0:
            return ExactMatrix(self.dim, self.dim)
        s = self.so
        return self.embed_two(two_factor_sum(s.mats, s.duals, self.n), k, l)

    def y(self, j):
        N = 2 * self.n
        out = ExactMatrix.identity(self.dim, Fraction(N - 1, 2))
        for k in range(1, j):
            out = out + self.omega(k, j)
        return out

    def diagram_operator(self, b):
        """Brauer diagram acting with inputs on the top row, outputs on the bottom row."""
        d = self.d
        I = self.I
        acc = {}
        arcs = b.arcs()
        bottoms = [(x, y) for kind, x, y in arcs if kind == "bottom"]
        for t in self.basis:
            ok = True
            out = [None] * d
            for kind, x, y in arcs:
                if kind == "top":
                    if t[x] != -t[y]:
                        ok = False
                        break
                elif kind == "vertical":
                    out[y] = t[x]
            if not ok:
                continue
            for choice in itertools.product(I, repeat=len(bottoms)):
                u = list(out)
                for (x, y), k in zip(bottoms, choice):
                    u[x], u[y] = k, -k
                key = (self.index[tuple(u)], self.index[t])
                acc[key] = acc.get(key, 0) + 1
        return ExactMatrix(self.dim, self.dim, acc)


def op_matrix(which, n, d, force=False):
    """which: ('sigma', i) | ('tau', i) | ('omega', k, l) | ('y', j)."""
    T = TensorSpace(n, d, force=force)
    kind = which[0]
    if kind == "sigma":
        i = which[1]
        if not 1 <= i < d:
            raise IndexError("sigma index out of range")
        return T.sigma(i)
    if kind == "tau":
        i = which[1]
        if not 1 <= i < d:
            raise IndexError("tau index out of range")
        return T.tau(i)
    if kind == "omega":
        k, l = which[1], which[2]
        if not (0 <= k < l <= d):
            raise IndexError("omega indices out of range")
        return T.omega(k, l)
    if kind == "y":
        j = which[1]
        if not 1 <= j <= d:
            raise IndexError("y index out of range")
        return T.y(j)
    raise ValueError("unknown operator %r" % (which,))


def vw_relation_suite(n, d, force=False):
    """Check VW.1-VW.8 as matrix identities with w_k = N((N-1)/2)^k.

    Operators act on the right (M(xy) = M(y) M(x)); the relation list is closed
    under reversal, so each relation is checked as written with reversed products."""
    T = TensorSpace(n, d, force=force)
    N = 2 * n
    dim = T.dim
    one = ExactMatrix.identity(dim)
    zero = ExactMatrix(dim, dim)
    s = {a: T.sigma(a) for a in range(1, d)}
    e = {a: T.tau(a) for a in range(1, d)}
    y = {i: T.y(i) for i in range(1, d + 1)}
    w = lambda k: Fraction(N) * Fraction(N - 1, 2) ** k

    def prod(*xs):
        out = xs[-1]
        for x in reversed(xs[:-1]):
            out = out @ x
        return out

    report = []

    def check(name, lhs, rhs):
        report.append({"relation": name, "status": "pass" if lhs == rhs else "fail"})

    for a in range(1, d):
        check("VW.1 s%d^2=1" % a, prod(s[a], s[a]), one)
        check("VW.3 e%d^2=w0e%d" % (a, a), prod(e[a], e[a]), e[a].scale(w(0)))
        check("VW.6a e%ds%d=e%d=s%de%d" % (a, a, a, a, a),
              prod(e[a], s[a]) - e[a] + prod(s[a], e[a]) - e[a], zero)
        check("VW.7 s%dy%d-y%ds%d=e%d-1" % (a, a, a + 1, a, a), prod(s[a], y[a]) - prod(y[a + 1], s[a]), e[a] - one)
        check("VW.7 y%ds%d-s%dy%d=e%d-1" % (a, a, a, a + 1, a), prod(y[a], s[a]) - prod(s[a], y[a + 1]), e[a] - one)
        check("VW.8a e%d(y%d+y%d)=0" % (a, a, a + 1), prod(e[a], y[a] + y[a + 1]), zero)
        check("VW.8b (y%d+y%d)e%d=0" % (a, a + 1, a), prod(y[a] + y[a + 1], e[a]), zero)
        for b in range(1, d):
            if abs(a - b) > 1:
                check("VW.2a s%ds%d" % (a, b), prod(s[a], s[b]), prod(s[b], s[a]))
                check("VW.5a s%de%d" % (a, b), prod(s[a], e[b]), prod(e[b], s[a]))
                check("VW.5a e%de%d" % (a, b), prod(e[a], e[b]), prod(e[b], e[a]))
        for i in range(1, d + 1):
            if i not in (a, a + 1):
                check("VW.2c s%dy%d" % (a, i), prod(s[a], y[i]), prod(y[i], s[a]))
                check("VW.5b e%dy%d" % (a, i), prod(e[a], y[i]), prod(y[i], e[a]))
    for c in range(1, d - 1):
        check("VW.2b s%ds%ds%d" % (c, c + 1, c), prod(s[c], s[c + 1], s[c]), prod(s[c + 1], s[c], s[c + 1]))
        check("VW.6b s%de%de%d" % (c, c + 1, c), prod(s[c], e[c + 1], e[c]), prod(s[c + 1], e[c]))
        check("VW.6b e%de%ds%d" % (c, c + 1, c), prod(e[c], e[c + 1], s[c]), prod(e[c], s[c + 1]))
        check("VW.6c e%de%ds%d" % (c + 1, c, c + 1), prod(e[c + 1], e[c], s[c + 1]), prod(e[c + 1], s[c]))
        check("VW.6c s%de%de%d" % (c + 1, c, c + 1), prod(s[c + 1], e[c], e[c + 1]), prod(s[c], e[c + 1]))
        check("VW.6d e%de%de%d" % (c + 1, c, c + 1), prod(e[c + 1], e[c], e[c + 1]), e[c + 1])
        check("VW.6d e%de%de%d" % (c, c + 1, c), prod(e[c], e[c + 1], e[c]), e[c])
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            check("VW.5c y%dy%d" % (i, j), prod(y[i], y[j]), prod(y[j], y[i]))
    if d >= 2:
        yk = one
        for k in range(5):
            check("VW.4 e1y1^%de1=w%de1" % (k, k), prod(e[1], yk, e[1]), e[1].scale(w(k)))
            yk = yk @ y[1]
    return report


def brauer_image_rank(n, d, force=False):
    T = TensorSpace(n, d, force=force)
    vecs = [T.diagram_operator(b).entries for b in enumerate_diagrams(d)]
    return sparse_rank(vecs)


def omega_equals_sigma_minus_tau(n):
    T = TensorSpace(n, 2)
    return T.omega(1, 2) == T.sigma(1) - T.tau(1)


def word_operator(T, gens):
    """Right-action operator of a VW word (y, s, e generators)."""
    out = ExactMatrix.identity(T.dim)
    for kind, a in gens:
        g = T.sigma(a) if kind == "s" else T.tau(a) if kind == "e" else T.y(a)
        out = g @ out
    return out
