"""Command line front end.

Words are whitespace-separated signed integers (``-k`` is k-bar).  Tableaux
are JSON objects ``{"n": 3, "columns": [[1, 2], [-1]]}``; skew tableaux give
each column as ``{"offset": o, "cells": [...]}``.  Any word or tableau
argument may be ``-`` (read stdin) or ``@path`` (read a file).

Exit status: 0 on success, 1 on invalid input, 2 when an internal
invariant fails (including a failing ``verify`` suite).
"""

import argparse
import json
import sys

from .columns import Column, contract, phi_inverse, phi_map, split, split_extended
from .crystal import (
    DEFAULT_COMPONENT_CAP,
    Word,
    check_letter,
    e_op,
    enumerate_component,
    f_op,
    format_letter,
    to_highest,
)
from .errors import ComponentOverflow, InvalidInput, InvariantViolation
from .insertion import insert_letter_tableau, p_symbol
from .rs import RSPair, q_symbol, rs_inverse, rs_map
from .sjdt import CornerPolicy, rectify, sjdt_slide
from .tableaux import SkewTableau, SymplecticTableau


# -- parsing -------------------------------------------------------------------


def _read_arg(value):
    if value == "-":
        return sys.stdin.read()
    if value.startswith("@"):
        try:
            with open(value[1:], encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise InvalidInput(f"cannot read {value[1:]}: {exc}") from None
    return value


def parse_word(text, n):
    return Word.parse(_read_arg(text), n)


def parse_column(text, n):
    return Column(n, parse_word(text, n).letters)


def _load_json(text):
    try:
        return json.loads(_read_arg(text))
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON: {exc}") from None


def _check_rank(data, n):
    if not isinstance(data, dict) or "columns" not in data:
        raise InvalidInput('tableau JSON must be an object with "columns"')
    rank = data.get("n", n)
    if rank != n:
        raise InvalidInput(f"tableau has n={rank} but --rank is {n}")
    if not isinstance(data["columns"], list):
        raise InvalidInput('"columns" must be an array')


def _cells(raw, n, j):
    if not isinstance(raw, list):
        raise InvalidInput(f"column {j} must be an array of letters")
    for r, x in enumerate(raw):
        try:
            check_letter(x, n)
        except InvalidInput as exc:
            raise InvalidInput(f"cell (column {j}, row {r}): {exc}") from None
    try:
        return Column(n, tuple(raw))
    except InvalidInput as exc:
        raise InvalidInput(f"column {j}: {exc}") from None


def tableau_from_json(data, n):
    _check_rank(data, n)
    cols = [_cells(c, n, j) for j, c in enumerate(data["columns"])]
    return SymplecticTableau(n, tuple(cols))


def skew_from_json(data, n):
    _check_rank(data, n)
    cols = []
    for j, entry in enumerate(data["columns"]):
        if isinstance(entry, dict):
            offset, raw = entry.get("offset", 0), entry.get("cells")
        else:
            offset, raw = 0, entry
        if not isinstance(offset, int) or isinstance(offset, bool) or offset < 0:
            raise InvalidInput(f"column {j}: offset must be a non-negative integer")
        cols.append((offset, _cells(raw, n, j)))
    return SkewTableau(n, tuple(cols))


def tableau_to_json(t):
    return {"n": t.n, "columns": [list(c.cells) for c in t.columns]}


def skew_to_json(t):
    return {"n": t.n, "columns": [{"offset": o, "cells": list(c.cells)} for o, c in t.columns]}


def parse_shape(text):
    """``"4,4,3/2,1"`` -> ((4, 4, 3), (2, 1)); heights are column heights."""
    outer, _, inner = text.partition("/")
    try:
        to_tuple = lambda s: tuple(int(x) for x in s.split(",") if x.strip())  # noqa: E731
        return to_tuple(outer), to_tuple(inner)
    except ValueError:
        raise InvalidInput(f"cannot parse shape {text!r}") from None


def parse_corner(text):
    try:
        row, col = (int(x) for x in text.split(","))
    except ValueError:
        raise InvalidInput(f"corner must be 'row,col', got {text!r}") from None
    return row, col


# -- formatting ----------------------------------------------------------------


def _letters(cells, unicode):
    return " ".join(format_letter(x, unicode) if isinstance(x, int) else str(x) for x in cells)


def format_tableau(t, unicode=False):
    return " | ".join(_letters(c.cells, unicode) for c in t.columns)


def format_skew(t, unicode=False):
    return " | ".join(f"[{o}] {_letters(c.cells, unicode)}" for o, c in t.columns)


def _emit(args, text, data):
    if args.json:
        print(json.dumps(data))
    else:
        print(text)


# -- commands ------------------------------------------------------------------


def cmd_p(args):
    t = p_symbol(parse_word(args.word, args.rank))
    _emit(args, format_tableau(t, args.unicode), tableau_to_json(t))


def cmd_q(args):
    q = q_symbol(parse_word(args.word, args.rank))
    _emit(args, "\n".join(" ".join(map(str, s)) or "()" for s in q), {"q": [list(s) for s in q]})


def cmd_rs(args):
    pair = rs_map(parse_word(args.word, args.rank))
    text = "P: " + format_tableau(pair.p, args.unicode) + "\nQ: " + " ; ".join(
        ",".join(map(str, s)) for s in pair.q
    )
    _emit(args, text, {"p": tableau_to_json(pair.p), "q": [list(s) for s in pair.q]})


def cmd_rs_inv(args):
    data = _load_json(args.pair)
    if not isinstance(data, dict) or "p" not in data or "q" not in data:
        raise InvalidInput('expected an object with "p" and "q"')
    p = tableau_from_json(data["p"], args.rank)
    try:
        q = tuple(tuple(s) for s in data["q"])
    except TypeError:
        raise InvalidInput('"q" must be an array of shapes') from None
    w = rs_inverse(RSPair(p, q))
    _emit(args, w.pretty(args.unicode), {"n": w.n, "word": list(w.letters)})


def cmd_insert(args):
    t = tableau_from_json(_load_json(args.tableau), args.rank)
    out = insert_letter_tableau(args.letter, t)
    _emit(args, format_tableau(out, args.unicode), tableau_to_json(out))


def cmd_split(args):
    col = parse_column(args.column, args.rank)
    sp = split_extended(col) if args.extended else split(col)
    text = f"lC: {_letters(sp.left, args.unicode)}\nrC: {_letters(sp.right, args.unicode)}"
    as_json = lambda cells: [x if isinstance(x, int) else str(x) for x in cells]  # noqa: E731
    _emit(args, text, {"left": as_json(sp.left), "right": as_json(sp.right)})


def _column_command(fn):
    def run(args):
        out = fn(parse_column(args.column, args.rank))
        _emit(args, _letters(out.cells, args.unicode), {"n": out.n, "column": list(out.cells)})

    return run


def cmd_crystal(args):
    w = parse_word(args.word, args.rank)
    if args.crystal_cmd == "component":
        comp = enumerate_component(w, cap=args.cap or DEFAULT_COMPONENT_CAP)
        if args.dot:
            sys.stdout.write(comp.to_dot(args.unicode))
            return
        index = {v: k for k, v in enumerate(comp.vertices)}
        lines = [f"{len(comp.vertices)} vertices, {len(comp.edges)} edges"]
        lines += [v.pretty(args.unicode) for v in comp.vertices]
        lines += [
            f"{a.pretty(args.unicode)} -{i}-> {b.pretty(args.unicode)}" for a, i, b in comp.edges
        ]
        data = {
            "n": comp.n,
            "vertices": [list(v.letters) for v in comp.vertices],
            "edges": [[index[a], i, index[b]] for a, i, b in comp.edges],
        }
        _emit(args, "\n".join(lines), data)
    elif args.crystal_cmd == "op":
        op = f_op if args.op == "f" else e_op
        out = op(w, args.colour)
        text = "0" if out is None else out.pretty(args.unicode)
        _emit(args, text, {"n": w.n, "word": None if out is None else list(out.letters)})
    else:
        top, path = to_highest(w)
        text = f"{top.pretty(args.unicode)}\npath: {' '.join(map(str, path))}"
        _emit(args, text, {"n": w.n, "word": list(top.letters), "path": list(path)})


def cmd_rectify(args):
    t = skew_from_json(_load_json(args.tableau), args.rank)
    order = tuple(parse_corner(c) for c in args.order) if args.order else None
    out = rectify(t, CornerPolicy(order))
    _emit(args, format_tableau(out, args.unicode), tableau_to_json(out))


def cmd_slide(args):
    t = skew_from_json(_load_json(args.tableau), args.rank)
    out = sjdt_slide(t, parse_corner(args.corner))
    _emit(args, format_skew(out, args.unicode), skew_to_json(out))


def cmd_verify(args):
    from .oracle import run_suite

    params = {"n": args.rank, "seed": args.seed, "max_len": args.max_len, "cap": args.cap}
    if args.samples is not None:
        params["samples"] = args.samples
    if args.shape:
        params["shapes"] = [parse_shape(s) for s in args.shape]
    reports = []
    for name in args.suites:
        keys = _suite_keys(name)
        kw = {k: v for k, v in params.items() if k in keys}
        reports.append(run_suite(name, workers=args.workers, **kw))
    if args.json:
        print(json.dumps([r.to_dict() for r in reports]))
    else:
        for r in reports:
            print(r.summary())
    if not all(r.ok for r in reports):
        raise InvariantViolation("verification failed")


def _suite_keys(name):
    from .oracle.suites import SUITES, _SHARED

    if name == "all":
        return set(_SHARED)
    if name not in SUITES:
        raise InvalidInput(f"unknown suite {name!r}")
    return set(SUITES[name][2]) | {"seed"}


# -- argument parsing ----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common(defaults):
    """Global flags, accepted both before and after the subcommand."""
    parent = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    parent.add_argument("--rank", "-n", type=int, default=d(None), help="rank n of C_n (required)")
    parent.add_argument("--json", action="store_true", default=d(False), help="JSON output")
    parent.add_argument("--unicode", action="store_true", default=d(False), help="overlined bars")
    parent.add_argument("--seed", type=int, default=d(0), help="seed for sampled suites")
    parent.add_argument("--max-len", type=int, default=d(None), help="longest word in suites")
    parent.add_argument("--cap", type=int, default=d(None), help="component or enumeration cap")
    return parent


def build_parser():
    parser = _Parser(prog="cplactic", description=__doc__.splitlines()[0], parents=[_common(True)])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common(False)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.set_defaults(func=func)
        return p

    add("p", cmd_p, "P-symbol of a word").add_argument("word")
    add("q", cmd_q, "Q-symbol (oscillating tableau) of a word").add_argument("word")
    add("rs", cmd_rs, "the pair (P, Q)").add_argument("word")
    add("rs-inv", cmd_rs_inv, 'word from {"p": tableau, "q": shapes}').add_argument("pair")
    p = add("insert", cmd_insert, "insert a letter into a tableau")
    p.add_argument("letter", type=int)
    p.add_argument("tableau")
    p = add("split", cmd_split, "split an admissible column")
    p.add_argument("column")
    p.add_argument("--extended", action="store_true", help="allow a1 (one pending contraction)")
    add("phi", _column_command(phi_map), "Phi of an admissible column").add_argument("column")
    add("phi-inv", _column_command(phi_inverse), "inverse of Phi").add_argument("column")
    add("contract", _column_command(contract), "R3 contraction").add_argument("column")

    crystal = add("crystal", cmd_crystal, "crystal graph queries")
    csub = crystal.add_subparsers(dest="crystal_cmd", required=True, parser_class=_Parser)
    p = csub.add_parser("component", parents=[common], help="the connected component")
    p.add_argument("word")
    p.add_argument("--dot", action="store_true", help="Graphviz output")
    p = csub.add_parser("op", parents=[common], help="apply e_i or f_i")
    p.add_argument("op", choices=["e", "f"])
    p.add_argument("colour", type=int)
    p.add_argument("word")
    p = csub.add_parser("highest", parents=[common], help="highest weight vertex and path")
    p.add_argument("word")

    p = add("rectify", cmd_rectify, "rectify a skew tableau")
    p.add_argument("tableau")
    p.add_argument("--order", nargs="*", help="inner corners as row,col, one per slide")
    p = add("slide", cmd_slide, "one jeu de taquin slide")
    p.add_argument("tableau")
    p.add_argument("--corner", required=True, help="inner corner as row,col")

    p = add("verify", cmd_verify, "run oracle suites")
    p.add_argument("suites", nargs="+")
    p.add_argument("--shape", action="append", help="skew shape outer/inner as column heights")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.rank is None or args.rank < 1:
            parser.error("--rank must be given as a positive integer")
    except SystemExit as exc:  # usage errors and --help
        return exc.code
    try:
        args.func(args)
    except (InvalidInput, ComponentOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
