"""Decorated cup diagrams and the tangle action of special projective functors.

A cup diagram lives on the slots of a block: the free positions, plus
position 0 when the block has a diamond.  Each slot is the endpoint of a cup
or a ray; cups and rays may carry one dot.

Projective modules are recorded at the level of the Grothendieck group as a
``ProjectiveSum``, a positive integer combination of cup diagrams.  Two
independent routes compute the functor ``(? (x) V)``:

* ``f_diag`` concatenates local tangles with the diagrams;
* ``lie_functor`` plus ``peel`` works with Verma flags of Lie weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

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
    bruhat_leq,
    delta_weight,
    es_sequence,
    successor_steps,
    verma_paths,
    phi,
)

HALF_ONE = Fraction(1, 2)
ORDER = RIGHT


class TangleError(ValueError):
    """Raised for an inapplicable tangle or a non-canonical result."""


def _slots(block: Block) -> Tuple[Fraction, ...]:
    s = tuple(block.free_positions)
    return ((Fraction(0),) + s) if block.diamond else s


@dataclass(frozen=True)
class CupDiagram:
    frame: Block
    cups: frozenset
    rays: frozenset

    def slots(self) -> Tuple[Fraction, ...]:
        return _slots(self.frame)

    def components(self) -> List[tuple]:
        comps = [("cup", i, j, dot) for i, j, dot in self.cups] + [("ray", i, dot) for i, dot in self.rays]
        return sorted(comps, key=lambda c: c[1])

    def es_reading(self) -> Dict[Fraction, str]:
        """Slot symbols of the canonical orientation."""
        out = {}
        for i, j, dot in self.cups:
            out[i], out[j] = (UP, UP) if dot else (DOWN, UP)
        for i, dot in self.rays:
            out[i] = UP if dot else DOWN
        return out

    def weight(self) -> DiagrammaticWeight:
        """The weight whose cup diagram this is."""
        return _weight_from_reading(self.frame, self.es_reading())

    def orientations(self) -> List[DiagrammaticWeight]:
        """All weights mu with mu on top of this diagram oriented."""
        choices: List[List[Dict[Fraction, str]]] = []
        for i, j, dot in self.cups:
            if dot:
                choices.append([{i: UP, j: UP}, {i: DOWN, j: DOWN}])
            else:
                choices.append([{i: DOWN, j: UP}, {i: UP, j: DOWN}])
        base = {i: (UP if dot else DOWN) for i, dot in self.rays}
        out = [dict(base)]
        for opts in choices:
            out = [{**o, **c} for o in out for c in opts]
        weights = []
        for reading in out:
            w = _weight_from_reading(self.frame, reading, check=False)
            if w is not None:
                weights.append(w)
        return sorted(set(weights), key=lambda w: es_sequence(w))

    def ascii(self) -> str:
        """One line per component under the frame string."""
        w = self.weight()
        lines = [w.text()]
        for c in self.components():
            if c[0] == "cup":
                lines.append(f"cup {c[1]}-{c[2]}{' •' if c[3] else ''}")
            else:
                lines.append(f"ray {c[1]}{' •' if c[2] else ''}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        w = self.weight()
        frame = {
            "flavor": self.frame.flavor,
            "n": self.frame.n,
            "crosses": sorted(str(p) for p in self.frame.cross_positions),
            "diamond": self.frame.diamond,
            "slots": [str(p) for p in self.slots()],
            "parity": self.frame.parity,
        }
        return {
            "frame": frame,
            "weight": w.text(),
            "cups": [[str(i), str(j), bool(dot)] for i, j, dot in sorted(self.cups)],
            "rays": [[str(i), bool(dot)] for i, dot in sorted(self.rays)],
        }

    def __str__(self) -> str:
        return "cup[" + self.weight().text() + "]"


def _weight_from_reading(frame: Block, reading: Dict[Fraction, str], check: bool = True):
    symbols = {p: CROSS for p in frame.cross_positions}
    lead = None
    for p, s in reading.items():
        if frame.diamond and p == 0:
            lead = s
            continue
        symbols[p] = s
    if frame.diamond:
        symbols[Fraction(0)] = DIAMOND
    w = DiagrammaticWeight(frame.flavor, frame.n, symbols)
    if frame.diamond and es_sequence(w)[0] != lead:
        if check:
            raise TangleError("diagram has the wrong parity for a diamond block")
        return None
    return w


def cup(w: DiagrammaticWeight) -> CupDiagram:
    """Cup diagram of a weight: match down-up pairs, then rays and dotted cups."""
    block = block_of(w)
    slots = _slots(block)
    seq = es_sequence(w)
    stack: List[Fraction] = []
    cups = set()
    leftover_up: List[Fraction] = []
    for p, s in zip(slots, seq):
        if s == DOWN:
            stack.append(p)
        elif stack:
            cups.add((stack.pop(), p, False))
        else:
            leftover_up.append(p)
    rays = {(p, False) for p in stack}
    for a, b in zip(leftover_up[0::2], leftover_up[1::2]):
        cups.add((a, b, True))
    if len(leftover_up) % 2:
        rays.add((leftover_up[-1], True))
    return CupDiagram(block, frozenset(cups), frozenset(rays))


def orientation_mult(mu: DiagrammaticWeight, lam: DiagrammaticWeight) -> int:
    if mu.flavor != lam.flavor or mu.n != lam.n:
        return 0
    if block_of(mu) != block_of(lam):
        return 0
    return 1 if mu in set(cup(lam).orientations()) else 0


# projective sums


class ProjectiveSum:
    """Positive integer combination of cup diagrams."""

    def __init__(self, terms: Optional[Dict[CupDiagram, int]] = None):
        self.terms: Dict[CupDiagram, int] = {}
        for k, v in (terms or {}).items():
            if v < 0:
                raise ValueError("coefficients must be nonnegative")
            if v:
                self.terms[k] = self.terms.get(k, 0) + v

    @classmethod
    def of(cls, w: DiagrammaticWeight, mult: int = 1) -> "ProjectiveSum":
        return cls({cup(w): mult})

    def __add__(self, other: "ProjectiveSum") -> "ProjectiveSum":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return ProjectiveSum(out)

    def scale(self, c: int) -> "ProjectiveSum":
        return ProjectiveSum({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjectiveSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def by_weight(self) -> Dict[DiagrammaticWeight, int]:
        return {k.weight(): v for k, v in self.terms.items()}

    def support(self) -> set:
        return set(self.by_weight())

    def verma_flag(self) -> Dict[DiagrammaticWeight, int]:
        flag: Dict[DiagrammaticWeight, int] = {}
        for k, v in self.terms.items():
            for nu in k.orientations():
                flag[nu] = flag.get(nu, 0) + v
        return flag

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        parts = [f"{v}*{k}" for k, v in sorted(self.terms.items(), key=lambda kv: str(kv[0]))]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> list:
        return [{"coef": v, "diagram": k.to_json()} for k, v in sorted(self.terms.items(), key=lambda kv: str(kv[0]))]


def hom_dim(lam: DiagrammaticWeight, mu: DiagrammaticWeight) -> int:
    a = set(cup(lam).orientations())
    b = set(cup(mu).orientations())
    return len(a & b)


def end_dim(P: ProjectiveSum) -> int:
    return sum(v * v for v in P.verma_flag().values())


# tangles

# Frame symbol at a position: "•" for a slot, else the weight symbol.
SLOT = "•"


def _frame_at(block: Block, p: Fraction) -> str:
    if p in block.free_positions:
        return SLOT
    if p in block.cross_positions:
        return CROSS
    if block.diamond and p == 0:
        return DIAMOND
    return CIRCLE


def _positions(flavor: str, i: Fraction) -> Tuple[Fraction, Fraction]:
    return i - HALF_ONE, i + HALF_ONE


def functor_labels(flavor: str, upto: Fraction) -> List[Tuple[Fraction, Optional[str]]]:
    """All (i, sign) with i up to ``upto`` for a flavor."""
    out: List[Tuple[Fraction, Optional[str]]] = []
    if flavor == INTEGER:
        i = HALF_ONE
    else:
        out.append((Fraction(0), None))
        i = Fraction(1)
    while i <= upto:
        out.append((i, "-"))
        out.append((i, "+"))
        i += 1
    return out


# Local tangle shapes selected by (sign, bottom frame).  Entries are
# (kind, new frame at the two positions, dot variants).
_TABLE_REGULAR = {
    ("-", SLOT, CIRCLE): ("move_right", (CIRCLE, SLOT)),
    ("-", CROSS, SLOT): ("move_left", (SLOT, CROSS)),
    ("-", SLOT, SLOT): ("cap", (CIRCLE, CROSS)),
    ("-", CROSS, CIRCLE): ("cup", (SLOT, SLOT)),
    ("+", CIRCLE, SLOT): ("move_left", (SLOT, CIRCLE)),
    ("+", SLOT, CROSS): ("move_right", (CROSS, SLOT)),
    ("+", SLOT, SLOT): ("cap", (CROSS, CIRCLE)),
    ("+", CIRCLE, CROSS): ("cup", (SLOT, SLOT)),
}

_TABLE_HALF = {
    ("-", DIAMOND, SLOT): ("cap", (CIRCLE, CROSS)),
    ("-", DIAMOND, CIRCLE): ("move_right", (CIRCLE, SLOT)),
    ("+", CIRCLE, SLOT): ("move_left", (DIAMOND, CIRCLE)),
    ("+", CIRCLE, CROSS): ("cup", (DIAMOND, SLOT)),
}


def tangle_shape(flavor: str, i: Fraction, sign: Optional[str], block: Block):
    """(kind, new frame, dot variants) of the tangle applying to ``block``, or None."""
    if flavor == HALF and i == 0:
        if sign is not None:
            raise TangleError("the functor at 0 has no sign")
        if _frame_at(block, HALF_ONE) == SLOT:
            return ("dot", None, (True,))
        return None
    if sign not in ("+", "-"):
        raise TangleError(f"malformed tangle selection ({i}, {sign})")
    a, b = _positions(flavor, i)
    if a < 0 or (flavor == INTEGER and a.denominator != 1) or (flavor == HALF and a.denominator != 2):
        raise TangleError(f"malformed tangle selection ({i}, {sign})")
    key = (sign, _frame_at(block, a), _frame_at(block, b))
    if flavor == INTEGER and a == 0:
        hit = _TABLE_HALF.get(key)
        return None if hit is None else hit + ((False, True),)
    hit = _TABLE_REGULAR.get(key)
    return None if hit is None else hit + ((False,),)


class _Work:
    """Mutable endpoint structure used while concatenating a tangle."""

    def __init__(self, D: CupDiagram):
        self.comp: Dict[Fraction, tuple] = {}
        for i, j, dot in D.cups:
            self.comp[i] = ("cup", j, dot)
            self.comp[j] = ("cup", i, dot)
        for i, dot in D.rays:
            self.comp[i] = ("ray", None, dot)

    def move(self, src: Fraction, dst: Fraction, dot: bool) -> None:
        kind, other, d = self.comp.pop(src)
        d ^= dot
        self.comp[dst] = (kind, other, d)
        if kind == "cup":
            k2, _, _ = self.comp[other]
            self.comp[other] = (k2, dst, d)

    def cap(self, a: Fraction, b: Fraction, dot: bool) -> Optional[int]:
        """Join slots a and b from above; return the scalar or None for zero."""
        ka, oa, da = self.comp.pop(a)
        kb, ob, db = self.comp.pop(b)
        if ka == "cup" and oa == b:
            return None if da ^ dot else 2
        total = da ^ db ^ dot
        if ka == "cup" and kb == "cup":
            self.comp[oa] = ("cup", ob, total)
            self.comp[ob] = ("cup", oa, total)
            return 1
        if ka == "cup" or kb == "cup":
            end = oa if ka == "cup" else ob
            self.comp[end] = ("ray", None, total)
            return 1
        # two rays joined into a cap
        return 1 if total else None

    def add_cup(self, a: Fraction, b: Fraction, dot: bool) -> None:
        self.comp[a] = ("cup", b, dot)
        self.comp[b] = ("cup", a, dot)

    def freeze(self, frame: Block) -> CupDiagram:
        cups = set()
        rays = set()
        for p, (kind, other, dot) in self.comp.items():
            if kind == "ray":
                rays.add((p, dot))
            elif p < other:
                cups.add((p, other, dot))
        return CupDiagram(frame, frozenset(cups), frozenset(rays))


def _new_frame(block: Block, a: Fraction, b: Fraction, syms: Tuple[str, str], parity: str) -> Block:
    crosses = set(block.cross_positions)
    free = set(block.free_positions)
    diamond = block.diamond
    for p, s in ((a, syms[0]), (b, syms[1])):
        crosses.discard(p)
        free.discard(p)
        if p == 0:
            diamond = False
        if s == CROSS:
            crosses.add(p)
        elif s == SLOT:
            free.add(p)
        elif s == DIAMOND:
            diamond = True
    if diamond:
        parity = "even"
    return Block(block.flavor, block.n, frozenset(crosses), tuple(sorted(free)), diamond, parity)


def _diagram_parity(D: CupDiagram) -> str:
    reading = D.es_reading()
    downs = sum(1 for p, s in reading.items() if s == DOWN and not (D.frame.diamond and p == 0))
    k = downs + len(D.frame.cross_positions)
    return "even" if k % 2 == 0 else "odd"


def _target_blocks(i: Fraction, sign: Optional[str], D: CupDiagram) -> set:
    return {block_of(v) for w in D.orientations() for v in lie_functor(i, sign, w)}


def apply_tangle(i: Fraction, sign: Optional[str], D: CupDiagram) -> Dict[CupDiagram, int]:
    """Action of one special projective functor on a single cup diagram."""
    block = D.frame
    shape = tangle_shape(block.flavor, i, sign, block)
    if shape is None:
        return {}
    kind, syms, dots = shape
    targets = None
    out: Dict[CupDiagram, int] = {}
    for dot in dots:
        work = _Work(D)
        scalar = 1
        if kind == "dot":
            a = HALF_ONE
            work.move(a, a, True)
            new_frame = None
        else:
            a, b = _positions(block.flavor, i)
            if kind == "move_right":
                work.move(a, b, dot)
            elif kind == "move_left":
                work.move(b, a, dot)
            elif kind == "cap":
                s = work.cap(a, b, dot)
                if s is None:
                    continue
                scalar = s
            elif kind == "cup":
                work.add_cup(a, b, dot)
            new_frame = (a, b, syms)
        trial = work.freeze(block)
        if new_frame is None:
            frame = Block(block.flavor, block.n, block.cross_positions, block.free_positions, block.diamond, "even")
        else:
            frame = _new_frame(block, *new_frame, parity="even")
        trial = CupDiagram(frame, trial.cups, trial.rays)
        if not frame.diamond:
            frame = Block(frame.flavor, frame.n, frame.cross_positions, frame.free_positions, False, _diagram_parity(trial))
            trial = CupDiagram(frame, trial.cups, trial.rays)
        try:
            result_weight = trial.weight()
        except TangleError:
            continue
        if len(dots) > 1:
            if targets is None:
                targets = _target_blocks(i, sign, D)
            if frame not in targets:
                continue
        if cup(result_weight) != trial:
            raise TangleError(f"non-canonical result {trial.components()} from {D} under ({i}, {sign})")
        out[trial] = out.get(trial, 0) + scalar
    return out


def f_diag(i, sign: Optional[str], P: ProjectiveSum) -> ProjectiveSum:
    i = Fraction(i)
    out: Dict[CupDiagram, int] = {}
    for D, c in P.terms.items():
        for E, s in apply_tangle(i, sign, D).items():
            out[E] = out.get(E, 0) + c * s
    return ProjectiveSum(out)


def _reach(P: ProjectiveSum) -> Fraction:
    top = Fraction(0)
    for D in P.terms:
        slots = D.slots() + tuple(D.frame.cross_positions)
        if slots:
            top = max(top, max(slots))
    return top + 1


def f_full(P: ProjectiveSum) -> ProjectiveSum:
    """Sum of all special projective functors, i.e. tensoring with V."""
    if not P.terms:
        return P
    flavor = next(iter(P.terms)).frame.flavor
    out = ProjectiveSum()
    for i, sign in functor_labels(flavor, _reach(P)):
        out = out + f_diag(i, sign, P)
    return out


def projective_tower(delta: int, n: int, d: int) -> ProjectiveSum:
    if n < 2 * d:
        raise WeightError(f"need n >= 2d, got n={n}, d={d}")
    P = ProjectiveSum.of(delta_weight(delta, n))
    for _ in range(d):
        P = f_full(P)
    return P


def _first_only(P: ProjectiveSum, delta: int, n: int) -> ProjectiveSum:
    return ProjectiveSum({k: v for k, v in P.terms.items() if not phi(k.weight(), delta, n).second})


def truncated_tower(delta: int, n: int, d: int) -> ProjectiveSum:
    """Tower keeping after each step only summands with empty second partition."""
    if n < 2 * d:
        raise WeightError(f"need n >= 2d, got n={n}, d={d}")
    P = ProjectiveSum.of(delta_weight(delta, n))
    for _ in range(d):
        P = _first_only(f_full(P), delta, n)
    return P


def truncated_flag(delta: int, n: int, d: int) -> Dict[DiagrammaticWeight, int]:
    P = truncated_tower(delta, n, d)
    return {k: v for k, v in P.verma_flag().items() if not phi(k, delta, n).second}


def truncated_end_dim(delta: int, n: int, d: int) -> int:
    return sum(v * v for v in truncated_flag(delta, n, d).values())


# oracle through Verma flags


def _step_label(w: DiagrammaticWeight, v: DiagrammaticWeight, old: Fraction, new: Fraction):
    """(i, sign) of the special functor containing the step from w to v."""
    lo = min(abs(old), abs(new))
    hi = max(abs(old), abs(new))
    if w.flavor == HALF and lo == hi == HALF_ONE:
        return (Fraction(0), None)
    i = (lo + hi) / 2
    bw, bv = block_of(w), block_of(v)
    before = (_frame_at(bw, lo), _frame_at(bw, hi))
    after = (_frame_at(bv, lo), _frame_at(bv, hi))
    table = _TABLE_HALF if (w.flavor == INTEGER and lo == 0) else _TABLE_REGULAR
    hits = [s for (s, x, y), (_, frame) in table.items() if (x, y) == before and frame == after]
    if len(hits) != 1:
        raise TangleError(f"step {w} -> {v} fits no special functor")
    return (i, hits[0])


def lie_functor(i, sign: Optional[str], w: DiagrammaticWeight) -> Dict[DiagrammaticWeight, int]:
    """Verma flag of the i-th special functor applied to the Verma of w."""
    i = Fraction(i)
    lie = w.to_lie()
    out: Dict[DiagrammaticWeight, int] = {}
    for j, s, v in successor_steps(w):
        old = lie[j - 1]
        if _step_label(w, v, old, old + s) == (i, sign):
            out[v] = out.get(v, 0) + 1
    return out


def peel(flag: Dict[DiagrammaticWeight, int]) -> ProjectiveSum:
    """Write a Verma flag as a sum of projectives, removing minimal weights first."""
    rest = {k: v for k, v in flag.items() if v}
    out: Dict[CupDiagram, int] = {}
    while rest:
        lam = None
        for w in rest:
            if not any(u != w and block_of(u) == block_of(w) and bruhat_leq(u, w, ORDER) for u in rest):
                lam = w
                break
        c = rest[lam]
        if c < 0:
            raise TangleError(f"negative multiplicity at {lam}")
        D = cup(lam)
        out[D] = out.get(D, 0) + c
        for nu in D.orientations():
            rest[nu] = rest.get(nu, 0) - c
            if rest[nu] == 0:
                del rest[nu]
    return ProjectiveSum(out)


def f_lie(i, sign: Optional[str], P: ProjectiveSum) -> ProjectiveSum:
    flag: Dict[DiagrammaticWeight, int] = {}
    for nu, c in P.verma_flag().items():
        for v, m in lie_functor(i, sign, nu).items():
            flag[v] = flag.get(v, 0) + c * m
    return peel(flag)


def tower_by_peeling(delta: int, n: int, d: int) -> ProjectiveSum:
    return peel(verma_paths(delta, n, d))
