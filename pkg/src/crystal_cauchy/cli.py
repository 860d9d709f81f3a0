"""Command-line front end: ``crystal-cauchy <command> [flags]``."""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import weyl
from .continuous import as_rat_matrix, random_rat_matrix, verify_main2
from .demazure import KINDS, NotMinimalCosetRep, character, demazure_set, schur
from .identities import verify_identity
from .lspath import psi
from .matrices import classify_low, format_matrix, parse_matrix, rsk
from .plpath import format_frac
from .verify import verify_all
from .words import Tableau, enumerate_crystal, parse_word, sorted_tableaux, word_to_tableau

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CAUCHY_VARIANTS = {
    "lower": ("lower_KhatK", "lower_KKhat"),
    "lower_KhatK": ("lower_KhatK",),
    "lower_KKhat": ("lower_KKhat",),
    "staircase": ("staircase",),
}


class UsageError(Exception):
    pass


def _flag(name: str, parse, text):
    try:
        return parse(text)
    except (ValueError, TypeError, json.JSONDecodeError, KeyError) as exc:
        raise UsageError(f"--{name}: {exc}") from None


def _lambda(args):
    if args.n is not None and args.n < 1:
        raise UsageError("--n: must be positive")
    lam = _flag("lambda", lambda t: weyl.parse_partition(t, args.n), args.lam)
    return tuple(lam)


def _perm(args, n):
    return _flag("w", lambda t: weyl.parse_permutation(t, n), args.w)


def _parse_tableau(text: str, n: int) -> Tableau:
    data = json.loads(text)
    rows = data["rows"] if isinstance(data, dict) else data
    return Tableau(tuple(tuple(r) for r in rows), n)


# ------------------------------------------------------------ commands

def cmd_enumerate(args):
    lam = _lambda(args)
    if args.w is None:
        tabs = sorted_tableaux(enumerate_crystal(lam))
    else:
        tabs = list(_demazure(args, lam))
    if args.format == "json":
        return EXIT_OK, {"lambda": list(lam), "count": len(tabs), "elements": [t.to_json() for t in tabs]}
    lines = [f"{len(tabs)} elements"] + ["/".join("".join(map(str, r)) for r in t.rows) for t in tabs]
    return EXIT_OK, "\n".join(lines)


def _demazure(args, lam):
    w = _perm(args, len(lam))
    try:
        return demazure_set(lam, w, args.kind)
    except NotMinimalCosetRep as exc:
        raise UsageError(f"--w: {exc}") from None


def cmd_character(args):
    lam = _lambda(args)
    poly = schur(lam) if args.w is None else character(_demazure(args, lam))
    if args.format == "json":
        return EXIT_OK, {"lambda": list(lam), "kind": args.kind if args.w else "schur",
                         "polynomial": str(poly), "terms": poly.to_json()}
    return EXIT_OK, str(poly)


def _matrix(args):
    m = _flag("matrix", parse_matrix, args.matrix)
    if args.n is not None and len(m) != args.n:
        raise UsageError(f"--matrix: expected a {args.n} x {args.n} matrix")
    return m


def cmd_rsk(args):
    m = _matrix(args)
    p, q = rsk(m)
    out = {"matrix": [list(r) for r in m], "lambda": list(p.shape), "P": p.to_json(), "Q": q.to_json()}
    return EXIT_OK, out if args.format == "json" else _kv(out)


def cmd_classify(args):
    m = _matrix(args)
    try:
        lam, w, p, q = classify_low(m)
    except ValueError as exc:
        raise UsageError(f"--matrix: {exc}") from None
    out = {"lambda": list(lam), "w": weyl.format_permutation(w), "P": p.to_json(), "Q": q.to_json()}
    return EXIT_OK, out if args.format == "json" else _kv(out)


def _identity_output(reports, fmt):
    ok = all(r.ok for r in reports)
    code = EXIT_OK if ok else EXIT_FAIL
    if fmt == "json":
        return code, reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
    return code, "\n\n".join(r.table() for r in reports)


def _degree(args):
    if args.degree < 0:
        raise UsageError("--degree: must be nonnegative")
    if args.n < 1:
        raise UsageError("--n: must be positive")


def cmd_verify_cauchy(args):
    _degree(args)
    reports = [verify_identity(args.n, args.degree, v) for v in CAUCHY_VARIANTS[args.variant]]
    return _identity_output(reports, args.format)


def cmd_verify_littlewood(args):
    _degree(args)
    return _identity_output([verify_identity(args.n, args.degree, "littlewood")], args.format)


def cmd_path(args):
    if (args.tableau is None) == (args.word is None):
        raise UsageError("--tableau/--word: give exactly one")
    lam = _lambda(args) if args.lam is not None else None
    n = args.n or (len(lam) if lam else None)
    if args.word is not None:
        word = _flag("word", parse_word, args.word)
        n = n or max(word, default=1)
        t = _flag("word", lambda _: word_to_tableau(word, n), args.word)
    else:
        if n is None:
            raise UsageError("--n: required with --tableau")
        t = _flag("tableau", lambda s: _parse_tableau(s, n), args.tableau)
    if lam is not None and t.shape != lam:
        raise UsageError(f"--lambda: tableau has shape {t.shape}")
    pi = psi(t)
    out = {"tableau": t.to_json(), "path": pi.to_json(), "plpath": pi.to_plpath().to_json(),
           "iota": [format_frac(x) for x in pi.iota], "tau": [format_frac(x) for x in pi.tau]}
    return EXIT_OK, out if args.format == "json" else str(pi)


def cmd_continuous_check(args):
    if args.matrix is not None:
        m = _flag("matrix", _parse_rat_matrix, args.matrix)
        try:
            reports = [verify_main2(m)]
        except ValueError as exc:
            raise UsageError(f"--matrix: {exc}") from None
    else:
        if args.n is None or args.n < 2:
            raise UsageError("--n: at least 2 for random trials")
        rng = random.Random(args.seed)
        reports = [verify_main2(random_rat_matrix(rng, args.n, max_den=args.max_den, lower=True))
                   for _ in range(args.trials)]
    ok = all(r.ok for r in reports)
    code = EXIT_OK if ok else EXIT_FAIL
    if args.format == "json":
        return code, reports[0].to_json() if args.matrix else {"trials": len(reports), "ok": ok,
                                                              "failures": [r.to_json() for r in reports if not r.ok]}
    if args.matrix:
        r = reports[0]
        return code, _kv({"lambda": ",".join(format_frac(x) for x in r.lam),
                          "w": weyl.format_permutation(r.w), "ok": r.ok})
    return code, f"{sum(r.ok for r in reports)}/{len(reports)} ok"


def _parse_rat_matrix(text: str):
    text = text.strip()
    if text.startswith("["):
        return as_rat_matrix(json.loads(text))
    return as_rat_matrix([row.split(",") for row in text.split(";")])


def cmd_verify_all(args):
    results = verify_all(args.max_n, args.max_degree, seed=args.seed, tamper=args.tamper)
    ok = all(r.ok for r in results)
    code = EXIT_OK if ok else EXIT_FAIL
    if args.format == "json":
        return code, {"ok": ok, "suites": [r.to_json() for r in results]}
    lines = [r.line() for r in results] + ["ok" if ok else "FAILED"]
    return code, "\n".join(lines)


def _kv(d: dict) -> str:
    def show(v):
        if isinstance(v, dict) and "rows" in v:
            return "/".join("".join(map(str, r)) for r in v["rows"])
        if isinstance(v, list):
            return format_matrix(v) if v and isinstance(v[0], list) else ",".join(map(str, v))
        return str(v)
    return "\n".join(f"{k}: {show(v)}" for k, v in d.items())


# -------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crystal-cauchy",
                                     description="Crystals, Demazure atoms and non-symmetric Cauchy identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, default_format, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        p.add_argument("--format", choices=("json", "table"), default=default_format)
        p.add_argument("--out", help="also write the output to this file")
        return p

    p = add("enumerate", cmd_enumerate, "json", "list the tableaux of B(lambda) or a Demazure-type subset")
    p.add_argument("--n", type=int)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--w")
    p.add_argument("--kind", choices=KINDS, default="demazure")

    p = add("character", cmd_character, "table", "character of B(lambda) or of a Demazure-type subset")
    p.add_argument("--n", type=int)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--w")
    p.add_argument("--kind", choices=KINDS, default="demazure")

    for name, fn, help_text in (("rsk", cmd_rsk, "RSK pair of a matrix"),
                                ("classify", cmd_classify, "cell of a lower triangular matrix")):
        p = add(name, fn, "json", help_text)
        p.add_argument("--n", type=int)
        p.add_argument("--matrix", required=True)

    p = add("verify-cauchy", cmd_verify_cauchy, "table", "check a truncated non-symmetric Cauchy identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--variant", choices=tuple(CAUCHY_VARIANTS), default="lower")

    p = add("verify-littlewood", cmd_verify_littlewood, "table", "check a truncated Littlewood identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)

    p = add("path", cmd_path, "json", "LS path of a tableau")
    p.add_argument("--n", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--tableau", help='JSON rows, e.g. "[[1,2],[2]]"')
    p.add_argument("--word", help="a word; its tableau is used")

    p = add("continuous-check", cmd_continuous_check, "json", "continuous RSK cell checks on rational matrices")
    p.add_argument("--n", type=int)
    p.add_argument("--matrix", help='e.g. "1/2,0;1/3,0"')
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--max-den", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)

    p = add("verify-all", cmd_verify_all, "table", "run every invariant suite below the given bounds")
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tamper", action="store_true", help="drop one atom element from a summand (negative control)")
    return parser


def _render(payload) -> str:
    if isinstance(payload, str):
        return payload
    return json.dumps(payload)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code, payload = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(payload)
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
