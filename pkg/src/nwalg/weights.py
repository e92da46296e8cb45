"""Diagrammatic weights, blocks, Bruhat order, Verma paths and bipartitions.

A weight is stored by its nonempty symbols; unstored positions read as a
circle.  Positions are ``Fraction`` values so the integer and half-integer
flavours share one code path.  On the Lie side a weight is the rho-shifted
strictly increasing sequence ``lam + rho``.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

DOWN = "∨"
UP = "∧"
CROSS = "×"
CIRCLE = "◦"
DIAMOND = "◇"

INTEGER = "integer"
HALF = "half_integer"

# Ascii aliases accepted by ``parse_weight``.
_ALIASES = {"v": DOWN, "^": UP, "x": CROSS, "o": CIRCLE, "d": DIAMOND, ".": CIRCLE}

# Bruhat conventions.  "left": moving a down-symbol to the left, or turning
# two ups into two downs, makes a weight bigger.  "right": moving a
# down-symbol to the right, or turning two ups into two downs, makes it bigger
# (the dominance order of the underlying Lie weights).
LEFT = "left"
RIGHT = "right"
DEFAULT_ORDER = RIGHT


class WeightError(ValueError):
    """Raised on malformed or incompatible weights."""


def _pos(p) -> Fraction:
    return Fraction(p)


def _flavor_of(p: Fraction) -> str:
    return INTEGER if p.denominator == 1 else HALF


@dataclass(frozen=True)
class DiagrammaticWeight:
    flavor: str
    n: int
    items: Tuple[Tuple[Fraction, str], ...]

    def __init__(self, flavor: str, n: int, symbols: Dict):
        cleaned = {}
        for p, s in dict(symbols).items():
            s = _ALIASES.get(s, s)
            if s == CIRCLE:
                continue
            p = _pos(p)
            if s not in (DOWN, UP, CROSS, DIAMOND):
                raise WeightError(f"unknown symbol {s!r}")
            if p < 0:
                raise WeightError(f"negative position {p}")
            cleaned[p] = s
        if flavor not in (INTEGER, HALF):
            raise WeightError(f"unknown flavor {flavor!r}")
        for p, s in cleaned.items():
            if flavor == INTEGER and p.denominator != 1:
                raise WeightError(f"position {p} is not an integer")
            if flavor == HALF and p.denominator != 2:
                raise WeightError(f"position {p} is not a half-integer")
            if s == DIAMOND and p != 0:
                raise WeightError("a diamond may only sit at position 0")
            if flavor == INTEGER and p == 0 and s not in (DIAMOND,):
                raise WeightError("position 0 carries a circle or a diamond")
        count = sum(2 if s == CROSS else 1 for s in cleaned.values())
        if count != n:
            raise WeightError(f"symbol count {count} does not match n={n}")
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "items", tuple(sorted(cleaned.items())))

    # access

    @property
    def symbols(self) -> Dict[Fraction, str]:
        return dict(self.items)

    def at(self, p) -> str:
        return self.symbols.get(_pos(p), CIRCLE)

    def positions(self, sym: str) -> List[Fraction]:
        return [p for p, s in self.items if s == sym]

    def maxpos(self) -> Fraction:
        return self.items[-1][0] if self.items else self.first_position()

    def first_position(self) -> Fraction:
        return Fraction(0) if self.flavor == INTEGER else Fraction(1, 2)

    def has_diamond(self) -> bool:
        return any(s == DIAMOND for _, s in self.items)

    def free_positions(self) -> List[Fraction]:
        return [p for p, s in self.items if s in (UP, DOWN)]

    def replace(self, changes: Dict) -> "DiagrammaticWeight":
        sym = self.symbols
        for p, s in changes.items():
            sym[_pos(p)] = s
        return DiagrammaticWeight(self.flavor, self.n, sym)

    # Lie dictionary

    def to_lie(self) -> Tuple[Fraction, ...]:
        return weight_decode(self)

    # rendering

    def text(self, upto=None) -> str:
        last = self.maxpos() if upto is None else _pos(upto)
        out = []
        p = self.first_position()
        while p <= last:
            out.append(self.at(p))
            p += 1
        return "".join(out)

    def ruler(self, upto=None) -> str:
        last = self.maxpos() if upto is None else _pos(upto)
        first = self.first_position()
        labels = []
        p = first
        while p <= last:
            labels.append(str(p))
            p += 1
        return " ".join(labels)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"DiagrammaticWeight({self.flavor!r}, n={self.n}, {self.text()!r})"

    def to_json(self) -> dict:
        return {
            "flavor": self.flavor,
            "n": self.n,
            "symbols": [{"pos": str(p), "sym": s} for p, s in self.items],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DiagrammaticWeight":
        return cls(data["flavor"], data["n"], {Fraction(e["pos"]): e["sym"] for e in data["symbols"]})


def parse_weight(text: str, flavor: str = INTEGER) -> DiagrammaticWeight:
    """Read a weight from its symbol string, starting at position 0 or 1/2."""
    start = Fraction(0) if flavor == INTEGER else Fraction(1, 2)
    symbols = {}
    for k, ch in enumerate(text):
        s = _ALIASES.get(ch, ch)
        if s == "…":
            break
        symbols[start + k] = s
    n = sum(2 if s == CROSS else (0 if s == CIRCLE else 1) for s in symbols.values())
    return DiagrammaticWeight(flavor, n, symbols)


# Lie dictionary


def weight_encode(lie: Sequence) -> DiagrammaticWeight:
    """Diagrammatic weight of a rho-shifted strictly increasing sequence."""
    vals = [Fraction(v) for v in lie]
    if not vals:
        raise WeightError("empty weight")
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise WeightError(f"non-p-dominant input {tuple(str(v) for v in vals)}")
    dens = {v.denominator for v in vals}
    if dens == {1}:
        flavor = INTEGER
    elif dens == {2}:
        flavor = HALF
    else:
        raise WeightError("entries must be all integers or all half-integers")
    present = set(vals)
    symbols = {}
    for v in vals:
        p = abs(v)
        if p == 0:
            symbols[p] = DIAMOND
        elif p in present and -p in present:
            symbols[p] = CROSS
        elif v > 0:
            symbols[p] = DOWN
        else:
            symbols[p] = UP
    return DiagrammaticWeight(flavor, len(vals), symbols)


def weight_decode(w: DiagrammaticWeight) -> Tuple[Fraction, ...]:
    vals = []
    for p, s in w.items:
        if s == DOWN:
            vals.append(p)
        elif s == UP:
            vals.append(-p)
        elif s == CROSS:
            vals.extend([p, -p])
        elif s == DIAMOND:
            vals.append(Fraction(0))
    return tuple(sorted(vals))


def delta_rho(delta: int, n: int) -> Tuple[Fraction, ...]:
    """The sequence (delta/2, delta/2 + 1, ..., delta/2 + n - 1)."""
    if n < 1:
        raise WeightError("n must be at least 1")
    h = Fraction(delta, 2)
    return tuple(h + i for i in range(n))


def delta_weight(delta: int, n: int) -> DiagrammaticWeight:
    if delta < 0:
        raise WeightError("delta must be nonnegative")
    return weight_encode(delta_rho(delta, n))


# blocks


@dataclass(frozen=True)
class Block:
    flavor: str
    n: int
    cross_positions: frozenset
    free_positions: Tuple[Fraction, ...]
    diamond: bool
    parity: str

    @property
    def circle_positions(self) -> frozenset:
        """Circle positions up to the largest occupied position."""
        occupied = set(self.cross_positions) | set(self.free_positions)
        if self.diamond:
            occupied.add(Fraction(0))
        if not occupied:
            return frozenset()
        start = Fraction(0) if self.flavor == INTEGER else Fraction(1, 2)
        top = max(occupied)
        out = set()
        p = start
        while p <= top:
            if p not in occupied:
                out.add(p)
            p += 1
        return frozenset(out)

    def weights(self) -> List[DiagrammaticWeight]:
        """All members, ordered by their up/down pattern."""
        out = []
        f = len(self.free_positions)
        base = {p: CROSS for p in self.cross_positions}
        if self.diamond:
            base[Fraction(0)] = DIAMOND
        want = 0 if self.parity == "even" else 1
        for pattern in product((UP, DOWN), repeat=f):
            if not self.diamond:
                downs = pattern.count(DOWN) + len(self.cross_positions)
                if downs % 2 != want:
                    continue
            sym = dict(base)
            sym.update(zip(self.free_positions, pattern))
            out.append(DiagrammaticWeight(self.flavor, self.n, sym))
        return out

    def __len__(self) -> int:
        return len(self.weights())


def block_of(w: DiagrammaticWeight) -> Block:
    diamond = w.has_diamond()
    if diamond:
        parity = "even"
    else:
        k = len(w.positions(DOWN)) + len(w.positions(CROSS))
        parity = "even" if k % 2 == 0 else "odd"
    return Block(w.flavor, w.n, frozenset(w.positions(CROSS)), tuple(w.free_positions()), diamond, parity)


def same_block(w1: DiagrammaticWeight, w2: DiagrammaticWeight) -> bool:
    if w1.flavor != w2.flavor:
        raise WeightError("flavor mismatch")
    return block_of(w1) == block_of(w2)


# Bruhat order


def es_sequence(w: DiagrammaticWeight) -> Tuple[str, ...]:
    """Up/down pattern on the free slots; a diamond becomes the leftmost slot
    with the symbol making the number of downs and crosses even."""
    seq = [w.at(p) for p in w.free_positions()]
    if w.has_diamond():
        odd = (seq.count(DOWN) + len(w.positions(CROSS))) % 2 == 1
        lead = DOWN if odd else UP
        seq = [lead] + seq
    return tuple(seq)


def _up_moves(seq: Tuple[str, ...], order: str) -> Iterable[Tuple[str, ...]]:
    """Basic moves on neighbouring slots that make the weight bigger."""
    if order == LEFT:
        swap_from, swap_to = (UP, DOWN), (DOWN, UP)
    elif order == RIGHT:
        swap_from, swap_to = (DOWN, UP), (UP, DOWN)
    else:
        raise WeightError(f"unknown order {order!r}")
    for i in range(len(seq) - 1):
        pair = seq[i : i + 1 + 1]
        if pair == swap_from:
            yield seq[:i] + swap_to + seq[i + 2 :]
        elif pair == (UP, UP):
            yield seq[:i] + (DOWN, DOWN) + seq[i + 2 :]


class _BlockOrder:
    """Bruhat closure of one block, keyed by the slot pattern."""

    def __init__(self, block: Block, order: str):
        self.block = block
        members = block.weights()
        self.by_seq = {es_sequence(w): w for w in members}
        self.up: Dict[tuple, set] = {}
        for s in self.by_seq:
            self.up[s] = {t for t in _up_moves(s, order) if t in self.by_seq}
        self.above: Dict[tuple, frozenset] = {}
        for s in self.by_seq:
            seen = {s}
            todo = [s]
            while todo:
                x = todo.pop()
                for y in self.up[x]:
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            self.above[s] = frozenset(seen)
        minimal = [s for s in self.by_seq if all(s not in self.up[t] for t in self.by_seq)]
        if len(minimal) != 1:
            raise WeightError("block has no unique minimum")
        self.minimum = minimal[0]
        self.height = {self.minimum: 0}
        queue = deque([self.minimum])
        while queue:
            x = queue.popleft()
            for y in self.up[x]:
                if y not in self.height:
                    self.height[y] = self.height[x] + 1
                    queue.append(y)


_order_lock = threading.Lock()
_order_cache: Dict[Tuple[Block, str], _BlockOrder] = {}


def _block_order(block: Block, order: str) -> _BlockOrder:
    key = (block, order)
    with _order_lock:
        hit = _order_cache.get(key)
    if hit is None:
        hit = _BlockOrder(block, order)
        with _order_lock:
            _order_cache.setdefault(key, hit)
    return hit


def bruhat_leq(w1: DiagrammaticWeight, w2: DiagrammaticWeight, order: str = DEFAULT_ORDER) -> bool:
    if not same_block(w1, w2):
        raise WeightError("weights lie in different blocks")
    bo = _block_order(block_of(w1), order)
    return es_sequence(w2) in bo.above[es_sequence(w1)]


def bruhat_less(w1, w2, order: str = DEFAULT_ORDER) -> bool:
    return w1 != w2 and bruhat_leq(w1, w2, order)


def bruhat_height(w: DiagrammaticWeight, order: str = DEFAULT_ORDER) -> int:
    return _block_order(block_of(w), order).height[es_sequence(w)]


def block_minimum(block: Block, order: str = DEFAULT_ORDER) -> DiagrammaticWeight:
    bo = _block_order(block, order)
    return bo.by_seq[bo.minimum]


def bigger_neighbours(w: DiagrammaticWeight, order: str = DEFAULT_ORDER) -> List[DiagrammaticWeight]:
    bo = _block_order(block_of(w), order)
    return [bo.by_seq[t] for t in sorted(bo.up[es_sequence(w)])]


# Verma paths


def lie_step(lie: Sequence[Fraction], j: int, sign: int) -> Optional[Tuple[Fraction, ...]]:
    """lam + sign*eps_j (1-based j) if it stays strictly increasing."""
    new = list(lie)
    new[j - 1] += sign
    if any(b <= a for a, b in zip(new, new[1:])):
        return None
    return tuple(new)


def successor_steps(w: DiagrammaticWeight) -> List[Tuple[int, int, DiagrammaticWeight]]:
    """(j, sign, weight) for every p-dominant lam +- eps_j."""
    lie = weight_decode(w)
    out = []
    for j in range(1, len(lie) + 1):
        for sign in (-1, 1):
            new = lie_step(lie, j, sign)
            if new is not None:
                out.append((j, sign, weight_encode(new)))
    return out


def successors(w: DiagrammaticWeight) -> List[DiagrammaticWeight]:
    return [v for _, _, v in successor_steps(w)]


@dataclass(frozen=True)
class VermaPath:
    steps: Tuple[DiagrammaticWeight, ...]

    @property
    def endpoint(self) -> DiagrammaticWeight:
        return self.steps[-1]

    def __len__(self) -> int:
        return len(self.steps) - 1


def _check_size(n: int, d: int) -> None:
    if n < d:
        raise WeightError(f"need n >= d, got n={n}, d={d}")


def verma_paths(delta: int, n: int, d: int, truncated: bool = False) -> Dict[DiagrammaticWeight, int]:
    """Number of d-step Verma paths from delta-bar, by endpoint."""
    _check_size(n, d)
    start = delta_weight(delta, n)
    layer = {start: 1}
    for _ in range(d):
        nxt: Dict[DiagrammaticWeight, int] = {}
        for w, c in layer.items():
            for v in successors(w):
                if truncated and phi(v, delta, n).second:
                    continue
                nxt[v] = nxt.get(v, 0) + c
        layer = nxt
    return layer


def enumerate_verma_paths(delta: int, n: int, d: int, truncated: bool = False) -> List[VermaPath]:
    _check_size(n, d)
    paths = [(delta_weight(delta, n),)]
    for _ in range(d):
        nxt = []
        for p in paths:
            for v in successors(p[-1]):
                if truncated and phi(v, delta, n).second:
                    continue
                nxt.append(p + (v,))
        paths = nxt
    return [VermaPath(p) for p in paths]


# bipartitions


def _trim(seq: Iterable[int]) -> Tuple[int, ...]:
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


@dataclass(frozen=True, order=True)
class Bipartition:
    first: Tuple[int, ...] = ()
    second: Tuple[int, ...] = ()

    def __init__(self, first=(), second=()):
        f, s = _trim(first), _trim(second)
        for part in (f, s):
            if any(x < 0 for x in part) or any(b > a for a, b in zip(part, part[1:])):
                raise WeightError(f"not a partition: {part}")
        object.__setattr__(self, "first", f)
        object.__setattr__(self, "second", s)

    def size(self) -> int:
        return sum(self.first) + sum(self.second)

    def __str__(self) -> str:
        def show(p):
            return "(" + ",".join(map(str, p)) + ")" if p else "∅"

        return f"({show(self.first)},{show(self.second)})"

    def to_json(self) -> dict:
        return {"first": list(self.first), "second": list(self.second)}


def phi(w: DiagrammaticWeight, delta: int, n: int) -> Bipartition:
    """Bipartition attached to a weight on a Verma path from delta-bar."""
    lie = weight_decode(w)
    if len(lie) != n:
        raise WeightError("weight has the wrong rank")
    m = [a - b for a, b in zip(lie, delta_rho(delta, n))]
    if any(x.denominator != 1 for x in m):
        raise WeightError("unreachable weight: integrality differs from delta-bar")
    m = [int(x) for x in m]
    if any(b < a for a, b in zip(m, m[1:])):
        raise WeightError("unreachable weight")
    first = [-x for x in m if x < 0]
    second = [x for x in reversed(m) if x > 0]
    return Bipartition(first, second)


def phi_inverse(bip: Bipartition, delta: int, n: int) -> DiagrammaticWeight:
    a, b = len(bip.first), len(bip.second)
    if a + b > n:
        raise WeightError("bipartition too long for n")
    m = [-x for x in bip.first] + [0] * (n - a - b) + list(reversed(bip.second))
    return weight_encode([x + y for x, y in zip(m, delta_rho(delta, n))])


def contents(w: DiagrammaticWeight, delta: int, n: int) -> frozenset:
    """Charged contents of the boundary boxes, one per column."""
    phi(w, delta, n)
    return frozenset(weight_decode(w))


def dht(delta: int, mu: DiagrammaticWeight) -> int:
    lie = weight_decode(mu)
    ref = delta_rho(delta, len(lie))
    if (lie[0] - ref[0]).denominator != 1:
        raise WeightError("flavor mismatch")
    return int(sum(abs(a - b) for a, b in zip(lie, ref)))


def in_S(delta: int, d: int, mu: DiagrammaticWeight) -> bool:
    h = dht(delta, mu)
    return h <= d and (d - h) % 2 == 0


def block_members_in_S(delta: int, d: int, block: Block) -> List[DiagrammaticWeight]:
    out = []
    for w in block.weights():
        try:
            if in_S(delta, d, w):
                out.append(w)
        except WeightError:
            pass
    return out


# up-down tableaux


def _add_box(part: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    out = []
    p = list(part) + [0]
    for i in range(len(p)):
        if i == 0 or p[i - 1] > p[i]:
            q = p[:]
            q[i] += 1
            out.append(_trim(q))
    return out


def _remove_box(part: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    out = []
    p = list(part)
    for i in range(len(p)):
        if i == len(p) - 1 or p[i + 1] < p[i]:
            q = p[:]
            q[i] -= 1
            out.append(_trim(q))
    return out


def _neighbours(shape, l: int):
    if l == 1:
        return _add_box(shape) + _remove_box(shape)
    f, s = shape
    out = [(x, s) for x in _add_box(f) + _remove_box(f)]
    out += [(f, x) for x in _add_box(s) + _remove_box(s)]
    return out


@lru_cache(maxsize=None)
def updown_counts(l: int, d: int) -> Dict:
    """Up-down (bi)tableaux counts of length d, keyed by final shape."""
    if l not in (1, 2):
        raise WeightError("l must be 1 or 2")
    empty = () if l == 1 else ((), ())
    layer = {empty: 1}
    for _ in range(d):
        nxt: Dict = {}
        for shape, c in layer.items():
            for t in _neighbours(shape, l):
                nxt[t] = nxt.get(t, 0) + c
        layer = nxt
    return layer


def _shape_key(endpoint, l: int):
    if l == 1:
        if isinstance(endpoint, Bipartition):
            if endpoint.second:
                raise WeightError("expected a partition")
            return endpoint.first
        return _trim(endpoint)
    if isinstance(endpoint, Bipartition):
        return (endpoint.first, endpoint.second)
    f, s = endpoint
    return (_trim(f), _trim(s))


def updown_tableaux(l: int, d: int, endpoint) -> int:
    return updown_counts(l, d).get(_shape_key(endpoint, l), 0)


def updown_bitableaux(d: int, endpoint: Bipartition) -> List[Tuple[Bipartition, ...]]:
    """All up-down bitableaux of length d ending at ``endpoint``."""
    out = []

    def walk(seq):
        if len(seq) == d + 1:
            if seq[-1] == (endpoint.first, endpoint.second):
                out.append(tuple(Bipartition(*x) for x in seq))
            return
        for t in _neighbours(seq[-1], 2):
            walk(seq + [t])

    walk([((), ())])
    return out


def bitableau_of_path(path: VermaPath, delta: int, n: int) -> Tuple[Bipartition, ...]:
    return tuple(phi(w, delta, n) for w in path.steps)


def path_of_bitableau(tab: Sequence[Bipartition], delta: int, n: int) -> VermaPath:
    return VermaPath(tuple(phi_inverse(b, delta, n) for b in tab))


def _prefix(part: Tuple[int, ...], k: int) -> int:
    return sum(part[:k])


def partition_dominates(la: Sequence[int], mu: Sequence[int]) -> bool:
    la, mu = _trim(la), _trim(mu)
    if sum(la) != sum(mu):
        return sum(la) > sum(mu)
    top = max(len(la), len(mu))
    return all(_prefix(la, k) >= _prefix(mu, k) for k in range(1, top + 1))


def dominance_leq(b1: Bipartition, b2: Bipartition) -> bool:
    """True when b2 dominates b1."""
    s1, s2 = b1.size(), b2.size()
    if s1 != s2:
        return s2 > s1
    if not partition_dominates(b2.first, b1.first):
        return False
    top = max(len(b1.second), len(b2.second))
    a1, a2 = sum(b1.first), sum(b2.first)
    return all(a2 + _prefix(b2.second, k) >= a1 + _prefix(b1.second, k) for k in range(0, top + 1))


def dominates(b1: Bipartition, b2: Bipartition) -> bool:
    """b1 dominates b2."""
    return dominance_leq(b2, b1)
