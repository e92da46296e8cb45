"""Command-line interface.

Subcommands: params, brauer, vw, paths, bipartition, cup, coideal, box,
verify.  Data goes to stdout; diagnostics go to stderr.  Exit codes: 0 on
success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import boxdiag, brauer, coideal, cupdiag, scalars, tensorrep, vw, weights

FORMAT_ENV = "NWALG_FORMAT"
FORMATS = ("text", "json", "tsv")


class DomainError(Exception):
    pass


# output


def _plain(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    if hasattr(x, "to_json"):
        return _plain(x.to_json())
    return str(x)


def emit(data: Any, fmt: str, text: Optional[str] = None) -> None:
    if fmt == "json":
        print(json.dumps(_plain(data), ensure_ascii=False, sort_keys=True))
        return
    if fmt == "tsv" and isinstance(data, list) and data and isinstance(data[0], dict):
        keys = list(data[0].keys())
        print("\t".join(keys))
        for row in data:
            print("\t".join(_cell(row.get(k)) for k in keys))
        return
    if text is not None:
        print(text)
    elif isinstance(data, list):
        for row in data:
            print(_line(row))
    else:
        print(_line(data))


def _cell(x: Any) -> str:
    x = _plain(x)
    return json.dumps(x, ensure_ascii=False) if isinstance(x, (list, dict)) else str(x)


def _line(row: Any) -> str:
    if isinstance(row, dict):
        return "  ".join(f"{k}={_cell(v)}" for k, v in row.items())
    return _cell(row)


def _table(rows: List[dict]) -> str:
    if not rows:
        return "(empty)"
    keys = list(rows[0].keys())
    cells = [[_cell(r.get(k)) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    out = ["  ".join(k.ljust(w) for k, w in zip(keys, widths))]
    for c in cells:
        out.append("  ".join(v.ljust(w) for v, w in zip(c, widths)))
    return "\n".join(out)


# parsing helpers


def _flavor(name: str) -> str:
    return {"integer": weights.INTEGER, "int": weights.INTEGER, "half": weights.HALF, "half_integer": weights.HALF}[name]


def _weight(text: str, flavor: str) -> weights.DiagrammaticWeight:
    try:
        return weights.parse_weight(text, _flavor(flavor))
    except weights.WeightError as e:
        raise DomainError(str(e))


def _word(text: str) -> List[tuple]:
    """Parse words like 's1*e2*y1' (empty or '1' means the identity)."""
    out = []
    for tok in text.replace(" ", "").split("*"):
        if tok in ("", "1"):
            continue
        kind, idx = tok[0], tok[1:]
        if kind not in "sey" or not idx.isdigit():
            raise DomainError(f"bad generator {tok!r}")
        out.append((kind, int(idx)))
    return out


def _guard(value: int, limit: int, what: str, force: bool) -> None:
    if value > limit and not force:
        raise DomainError(f"{what}={value} exceeds the default guard {limit}; pass --force")


def _lie(text: str) -> List[Fraction]:
    return [Fraction(x) for x in text.replace(",", " ").split()]


# subcommands


def cmd_params(a) -> Any:
    p = vw.make_params(a.delta, a.n)
    rows = []
    for k in range(a.upto + 1):
        row = {"a": k, "recursive": vw.w_value(p, k), "explicit": vw.w_value(p, k, "explicit")}
        try:
            row["u_admissible"] = vw.w_value(p, k, "u_admissible")
        except vw.URestrictionError:
            row["u_admissible"] = "undefined"
        rows.append(row)
    upto = max(0, (a.upto - 1) // 2)
    info = {
        "delta": a.delta,
        "n": a.n,
        "N": p.N,
        "alpha": p.alpha,
        "beta": p.beta,
        "admissible": vw.is_admissible(p.w_list(2 * upto + 2), upto),
        "w": rows,
    }
    head = f"N={p.N} alpha={p.alpha} beta={p.beta} admissible(upto={upto})={info['admissible']}"
    return info, head + "\n" + _table(rows)


def cmd_brauer(a) -> Any:
    _guard(a.d, 6, "d", a.force)
    if a.action == "count":
        n = len(brauer.enumerate_diagrams(a.d, force=a.force))
        return n, str(n)
    if a.action == "list":
        ds = brauer.enumerate_diagrams(a.d, force=a.force)
        return [d.to_json() for d in ds], "\n".join(repr(d) for d in ds)
    if a.action == "multiply":
        x = _brauer_word(a.d, a.left)
        y = _brauer_word(a.d, a.right)
        out = brauer.multiply(x, y)
        return str(out), str(out)
    raise DomainError(f"unknown action {a.action}")


def _brauer_word(d: int, text: str):
    el = brauer.BrauerElement.one(d)
    for kind, i in _word(text):
        if kind == "y":
            raise DomainError("Brauer words use s and e only")
        g = brauer.BrauerElement.s(d, i) if kind == "s" else brauer.BrauerElement.e(d, i)
        el = brauer.multiply(el, g)
    return el


def cmd_vw(a) -> Any:
    _guard(a.d, 5, "d", a.force)
    p = vw.make_params(a.delta, a.n)
    if a.action == "basis":
        basis = vw.enumerate_regular_basis(a.d, force=a.force)
        if a.count:
            return len(basis), str(len(basis))
        return [m.to_json() for m in basis], "\n".join(str(m) for m in basis)
    alg = vw.VWAlgebra(p, a.d)
    if a.action == "multiply":
        x = alg.word(_word(a.left))
        y = alg.word(_word(a.right))
        out = alg.multiply(x, y)
        rows = [{"coef": c, "monomial": str(m)} for m, c in sorted(out.terms.items(), key=lambda kv: str(kv[0]))]
        return rows, repr(out)
    if a.action == "relations":
        rows = [{"relation": n, "status": "pass" if ok else "fail"} for n, ok in vw.vw_rewriting_suite(p, a.d)]
        return rows, _table(rows)
    raise DomainError(f"unknown action {a.action}")


def cmd_paths(a) -> Any:
    _guard(a.d, 6, "d", a.force)
    if a.n < 2 * a.d:
        raise DomainError("paths need n >= 2d")
    counts = weights.verma_paths(a.delta, a.n, a.d, truncated=a.truncated)
    if a.sum_squares:
        s = sum(c * c for c in counts.values())
        return s, str(s)
    if a.list:
        paths = weights.enumerate_verma_paths(a.delta, a.n, a.d, truncated=a.truncated)
        rows = [{"path": [w.text() for w in p.steps]} for p in paths]
        return rows, "\n".join(" -> ".join(w.text() for w in p.steps) for p in paths)
    rows = [{"endpoint": w.text(), "count": c} for w, c in sorted(counts.items(), key=lambda kv: kv[0].items)]
    return rows, _table(rows)


def cmd_bipartition(a) -> Any:
    if a.inverse:
        first = tuple(int(x) for x in a.first.split(",") if x) if a.first else ()
        second = tuple(int(x) for x in a.second.split(",") if x) if a.second else ()
        w = weights.phi_inverse(weights.Bipartition(first, second), a.delta, a.n)
        return w.to_json(), w.text()
    w = _weight(a.weight, a.flavor)
    b = weights.phi(w, a.delta, a.n)
    return b.to_json(), str(b)


def cmd_cup(a) -> Any:
    if a.action == "show":
        w = _weight(a.weight, a.flavor)
        c = cupdiag.cup(w)
        return c.to_json(), c.ascii()
    if a.action == "tower":
        _guard(a.d, 3, "d", a.force)
        P = cupdiag.projective_tower(a.delta, a.n, a.d)
        rows = [{"weight": c.weight().text(), "mult": m} for c, m in sorted(P.terms.items(), key=lambda kv: kv[0].weight().items)]
        return {"summands": rows, "end_dim": cupdiag.end_dim(P)}, _table(rows) + f"\nend_dim={cupdiag.end_dim(P)}"
    raise DomainError(f"unknown action {a.action}")


def _vector_rows(v: coideal.ModuleVector) -> List[dict]:
    return [{"weight": w.text(), "coef": str(c)} for w, c in sorted(v.terms.items(), key=lambda kv: kv[0].items)]


def cmd_coideal(a) -> Any:
    if a.action == "relations":
        fl = _flavor(a.flavor)
        rows = coideal.relations_suite([(fl, a.n, a.top)])
        return rows, _table(rows)
    w = _weight(a.weight, a.flavor)
    if a.action == "act":
        try:
            g = coideal.parse_gen(a.gen)
            v = coideal.act(g, coideal.ModuleVector.basis(w))
        except coideal.CoidealError as e:
            raise DomainError(str(e))
        rows = _vector_rows(v)
        return rows, repr(v)
    if a.action == "bar":
        v = coideal.bar(coideal.ModuleVector.basis(w))
        return _vector_rows(v), repr(v)
    if a.action == "canbasis":
        block = weights.block_of(w)
        _guard(len(block.free_positions) + block.diamond, 6, "free slots", a.force)
        cb = coideal.canonical_basis(block)
        rows = [{"lambda": lam.text(), "weight": mu.text(), "coef": str(c)}
                for lam, vec in sorted(cb.items(), key=lambda kv: kv[0].items)
                for mu, c in sorted(vec.terms.items(), key=lambda kv: kv[0].items)]
        return rows, _table(rows)
    raise DomainError(f"unknown action {a.action}")


def _box(a) -> boxdiag.BoxDiagram:
    if a.grid:
        return boxdiag.BoxDiagram.parse(a.grid)
    if a.weight:
        k = [int(x) for x in a.k.split(",")]
        return boxdiag.box_from_weight(_lie(a.weight), k, a.m)
    raise DomainError("give --grid or --weight with --k")


def _box_rows(v: boxdiag.BoxVector) -> List[dict]:
    return [{"box": b.text().replace("\n", "/"), "coef": str(c)} for b, c in sorted(v.terms.items(), key=lambda kv: kv[0].grid)]


def cmd_box(a) -> Any:
    try:
        b = _box(a)
        if a.action == "show":
            lie, k = boxdiag.box_to_weight(b)
            data = {"box": b.to_json(), "weight": [str(x) for x in lie], "k": list(k), "type": list(b.type_triple())}
            return data, b.text()
        if a.action == "transpose":
            t = boxdiag.box_transpose(b)
            lie, k = boxdiag.box_to_weight(t)
            return {"box": t.to_json(), "weight": [str(x) for x in lie], "k": list(k)}, t.text()
        v = boxdiag.BoxVector.basis(b)
        if a.action == "act":
            if a.side == "col":
                out = boxdiag.act_col(a.j, v, a.sign)
            elif a.side == "row":
                out = boxdiag.act_row(a.j, a.sign, v)
            else:
                out = boxdiag.wedge_model(a.j, a.sign, v)
            return _box_rows(out), _table(_box_rows(out))
    except boxdiag.BoxError as e:
        raise DomainError(str(e))
    raise DomainError(f"unknown action {a.action}")


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def verify_tensor(n: int, d: int) -> List[dict]:
    return tensorrep.vw_relation_suite(n, d)


def verify_suites(scale: str) -> List[dict]:
    """Condensed acceptance sweeps; "small" keeps every suite under a few seconds."""
    big = scale == "full"
    rows = []

    def add(name, ok, detail=""):
        rows.append({"suite": name, "status": _status(ok), "detail": detail})

    dmax = 6 if big else 4
    add("brauer counts", all(len(brauer.enumerate_diagrams(d, force=True)) == brauer.double_factorial(2 * d - 1) for d in range(1, dmax + 1)), f"d<={dmax}")
    dmax = 5 if big else 3
    add("vw basis counts", all(len(vw.enumerate_regular_basis(d, force=True)) == 2 ** d * brauer.double_factorial(2 * d - 1) for d in range(1, dmax + 1)), f"d<={dmax}")
    ok = True
    for delta in range(-3, 7):
        for n in range(2, 9 if big else 4):
            p = vw.make_params(delta, n)
            for k in range(0, 21 if big else 8):
                r = vw.w_value(p, k)
                ok &= r == vw.w_value(p, k, "explicit")
                try:
                    ok &= r == vw.w_value(p, k, "u_admissible")
                except vw.URestrictionError:
                    pass
    add("w_value methods", ok)
    rep = tensorrep.vw_relation_suite(2, 2)
    add("tensor relations n=2 d=2", all(r["status"] == "pass" for r in rep))
    d = 3 if big else 2
    ok = all(sum(c * c for c in weights.verma_paths(delta, 2 * d, d).values()) == 2 ** d * brauer.double_factorial(2 * d - 1) for delta in range(4))
    add("verma path counts", ok, f"d={d}")
    rep = coideal.relations_suite([(fl, 2, 4 if not big else 6) for fl in (weights.INTEGER, weights.HALF)])
    add("coideal relations", all(r["status"] == "pass" for r in rep))
    add("hecke", all(r["status"] == "pass" for r in coideal.hecke_relations(2, 3) + coideal.hecke_commutation(2, 3)))
    add("box koszul", not boxdiag.check_koszul(2, 3 if big else 2, 4 if big else 3))
    add("box commutation", not boxdiag.check_commutation(2, 2, 3))
    return rows


def cmd_verify(a) -> Any:
    if a.suite == "tensor":
        rows = verify_tensor(a.n, a.d)
    elif a.suite == "coideal":
        rows = coideal.relations_suite([(_flavor(a.flavor), a.n, a.top)])
    elif a.suite == "box":
        fails = boxdiag.check_koszul(a.r, a.m, a.nmax) + boxdiag.check_commutation(a.r, a.m, a.nmax)
        rows = [{"suite": "box", "status": _status(not fails), "failures": len(fails)}]
    else:
        rows = verify_suites(a.scale)
    failed = any(r.get("status") != "pass" for r in rows)
    return rows, _table(rows), (1 if failed else 0)


# parser


def build_parser() -> argparse.ArgumentParser:
    default_fmt = os.environ.get(FORMAT_ENV, "text")
    if default_fmt not in FORMATS:
        default_fmt = "text"
    top = argparse.ArgumentParser(prog="nwalg", description=__doc__.splitlines()[0])
    top.add_argument("--format", choices=FORMATS, default=default_fmt)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
        p.add_argument("--force", action="store_true")
        return p

    p = common(sub.add_parser("params", help="alpha, beta and the w_a sequence"))
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--upto", type=int, default=6)
    p.set_defaults(func=cmd_params)

    p = common(sub.add_parser("brauer", help="Brauer diagrams"))
    p.add_argument("action", choices=("count", "list", "multiply"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--left", default="")
    p.add_argument("--right", default="")
    p.set_defaults(func=cmd_brauer)

    p = common(sub.add_parser("vw", help="cyclotomic VW algebra"))
    p.add_argument("action", choices=("basis", "multiply", "relations"))
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--left", default="")
    p.add_argument("--right", default="")
    p.set_defaults(func=cmd_vw)

    p = common(sub.add_parser("paths", help="Verma paths"))
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--truncated", action="store_true")
    p.add_argument("--sum-squares", action="store_true")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_paths)

    p = common(sub.add_parser("bipartition", help="weight to bipartition and back"))
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", default="")
    p.add_argument("--flavor", default="integer")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--first", default="")
    p.add_argument("--second", default="")
    p.set_defaults(func=cmd_bipartition)

    p = common(sub.add_parser("cup", help="cup diagrams and the projective tower"))
    p.add_argument("action", choices=("show", "tower"))
    p.add_argument("--weight", default="")
    p.add_argument("--flavor", default="integer")
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--d", type=int, default=1)
    p.set_defaults(func=cmd_cup)

    p = common(sub.add_parser("coideal", help="coideal action, bar involution, canonical basis"))
    p.add_argument("action", choices=("act", "bar", "canbasis", "relations"))
    p.add_argument("--gen", default="")
    p.add_argument("--weight", default="")
    p.add_argument("--flavor", default="integer")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--top", type=int, default=4)
    p.set_defaults(func=cmd_coideal)

    p = common(sub.add_parser("box", help="box diagrams"))
    p.add_argument("action", choices=("show", "transpose", "act"))
    p.add_argument("--grid", default="")
    p.add_argument("--weight", default="")
    p.add_argument("--k", default="")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--side", choices=("col", "row", "wedge"), default="col")
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--sign", choices=("+", "-"), default="+")
    p.set_defaults(func=cmd_box)

    p = common(sub.add_parser("verify", help="verification suites"))
    p.add_argument("suite", choices=("tensor", "coideal", "box", "all"))
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--flavor", default="integer")
    p.add_argument("--top", type=int, default=4)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--scale", choices=("small", "full"), default="small")
    p.set_defaults(func=cmd_verify)
    return top


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        res = a.func(a)
    except (DomainError, ValueError, IndexError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    code = 0
    if len(res) == 3:
        data, text, code = res
    else:
        data, text = res
    emit(data, a.format, text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
