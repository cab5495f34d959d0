"""Batch command-line front end: reproducible verification and analysis runs
with machine-readable JSON reports.

Exit codes: 0 success, 1 mathematical failure (a relation or claim fails),
2 usage or input error.  Identical invocations (including --seed) produce
byte-identical reports.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import catalog, ccwg, clifford, mdd, presentations, structure
from .matrix import ExactMatrix
from .scalar import RejectedPoint, param, rf

EXIT_OK, EXIT_MATH_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_assignment(text):
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise UsageError("bad assignment %r (want name=value)" % (item,))
        name, val = item.split("=", 1)
        out[name.strip()] = Fraction(val.strip())
    return out


def _parse_params(text):
    """name=value pairs; values Fraction, or +-1 for sign/eps."""
    kw = {}
    for name, val in _parse_assignment(text).items():
        if name in ("sign", "eps", "p") and val in (1, -1):
            kw[name] = int(val)
        elif val.denominator == 1:
            kw[name] = int(val)
        else:
            kw[name] = val
    return kw


def _emit(obj, path=None):
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_matrix(path):
    with open(path) as fh:
        return ExactMatrix.from_json(json.load(fh))


def _pair_from_args(args):
    if getattr(args, "case", None):
        kw = _parse_params(getattr(args, "params", "") or "")
        return catalog.make_md_pair(args.case, check=False, **kw)
    if getattr(args, "R", None) and getattr(args, "S", None):
        from .matrix import RepPair
        return RepPair(_load_matrix(args.R), _load_matrix(args.S),
                       provenance="files")
    raise UsageError("need --case or both --R and --S")


def cmd_verify(args):
    pair = _pair_from_args(args)
    relset = presentations.RelationSet(args.relations)
    reports = presentations.verify(pair, relset, args.n)
    out = {"case": getattr(args, "case", None), "n": args.n,
           "relations": args.relations,
           "reports": [r.to_json() for r in reports],
           "ok": all(r.is_zero for r in reports)}
    _emit(out, args.out)
    return EXIT_OK if out["ok"] else EXIT_MATH_FAIL


def cmd_catalog(args):
    if args.action == "list":
        fams = {
            "involutive_braid": ["trivial", "f-glue", "a-glue", "fa-slash",
                                 "anti-slash"],
            "md_cases": sorted({c for c, _ in catalog.ALL_CASES}),
            "manji": ["P", "A", "N", "N'", "R"],
            "analysis": ["a-glue", "f-glue", "antislash"],
        }
        _emit(fams, args.out)
        return EXIT_OK
    if args.action == "make":
        kw = _parse_params(args.params or "")
        if args.family in ("trivial", "f-glue", "a-glue", "fa-slash",
                           "anti-slash"):
            M = catalog.make_involutive_braid(args.family, **kw)
            _emit(M.to_json(), args.out)
            return EXIT_OK
        if args.family in ("P", "A", "N", "N'", "R"):
            M = catalog.make_manji(args.family, **kw)
            _emit(M.to_json(), args.out)
            return EXIT_OK
        pair = catalog.make_md_pair(args.family, **kw)
        _emit({"R": pair.R.to_json(), "S": pair.S.to_json(),
               "provenance": pair.provenance,
               "params": list(pair.params)}, args.out)
        return EXIT_OK
    raise UsageError("unknown catalog action %r" % (args.action,))


def cmd_analyze(args):
    rng = random.Random(args.seed)
    at = _parse_assignment(args.at) if args.at else None
    if args.case in ("a-glue", "f-glue", "antislash"):
        pair = catalog.analysis_pair(args.case)
    else:
        pair = catalog.make_md_pair(args.case, check=False,
                                    **_parse_params(args.params or ""))
    rep = structure.decompose(pair, args.n, assignment=at, rng=rng)
    out = rep.to_json()
    out["provenance"] = {"case": args.case, "n": args.n, "at": args.at,
                         "seed": args.seed}
    _emit(out, args.out)
    return EXIT_OK


_CHAR_TOKEN = {"1": rf(1), "-1": rf(-1)}


def _parse_char_token(tok):
    tok = tok.strip()
    if tok in _CHAR_TOKEN:
        return _CHAR_TOKEN[tok]
    if "/" in tok or tok.lstrip("-").isdigit():
        return rf(Fraction(tok))
    if "^" in tok:
        base, exp = tok.split("^", 1)
        return _parse_char_token(base) ** int(exp)
    if tok.startswith("w"):
        from .scalar import zeta
        return rf(zeta(int(tok[1:])))
    return param(tok)


def cmd_irreps(args):
    if args.char:
        vec = [_parse_char_token(t) for t in args.char.split(",")]
        chi = clifford.Character.from_vector(args.n, vec)
        stab = clifford.orbit_and_stabilizer(chi)
        taus = clifford.irreps_of_subgroup(stab.subgroup, args.n)
        idx = args.tau or 0
        if idx >= len(taus):
            raise UsageError("tau index %d out of range (%d irreps)"
                             % (idx, len(taus)))
        rep = clifford.induce(chi, taus[idx], stab)
        out = {"n": args.n, "dim": rep.dim,
               "stabilizer_order": len(stab.subgroup),
               "x": {"%d%d" % k: rep.x(*k).to_json()
                     for k in sorted(chi.values)},
               "sigma": {str(i): rep.sigma(i).to_json()
                         for i in range(1, args.n)}}
        _emit(out, args.out)
        return EXIT_OK
    if args.dims:
        out = clifford.classify_small_dims(args.n, args.dims)
        _emit({"n": args.n, "dim": args.dims, "entries": out}, args.out)
        return EXIT_OK
    raise UsageError("need --char or --dims")


def cmd_ccwg(args):
    if args.action == "check":
        M = _load_matrix(args.matrix)
        ok = ccwg.is_ccwg(M)
        _emit({"ccwg": ok}, args.out)
        return EXIT_OK if ok else EXIT_MATH_FAIL
    if args.action == "project":
        M = _load_matrix(args.matrix)
        out = ccwg.project_K(M) if args.part == "cc" else ccwg.project_glue(M)
        _emit(out.to_json(), args.out)
        return EXIT_OK
    if args.action == "order":
        comps = ccwg.compositions(args.N, args.n)
        _emit({"N": args.N, "n": args.n,
               "order": ["".join(str(x) for x in c) for c in comps]}, args.out)
        return EXIT_OK
    raise UsageError("unknown ccwg action %r" % (args.action,))


def cmd_mdd(args):
    if args.action == "normal":
        g = mdd.babeda_from_md(args.word, args.n)
        _emit({"word": args.word, "n": args.n,
               "exponents": {"%d,%d" % k: v for k, v in sorted(g.exps.items())},
               "permutation": [v + 1 for v in g.perm]}, args.out)
        return EXIT_OK
    if args.action == "eval":
        pair = _pair_from_args(args)
        at = _parse_assignment(args.at) if args.at else None
        if at:
            pair = pair.evaluate(at)
        M = mdd.evaluate_in_rep(args.word, pair, args.n)
        _emit(M.to_json(), args.out)
        return EXIT_OK
    raise UsageError("unknown mdd action %r" % (args.action,))


def build_parser():
    ap = argparse.ArgumentParser(
        prog="mdreps",
        description="exact verification and analysis of rank-2 local "
                    "representations of the involutive loop-braid quotient")
    ap.add_argument("--seed", type=int, default=0, help="RNG seed")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check defining relations for a pair")
    v.add_argument("--case")
    v.add_argument("--params", default="")
    v.add_argument("--R")
    v.add_argument("--S")
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--relations", default="MixedDoubles")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("catalog", help="list families or emit matrices")
    c.add_argument("action", choices=["list", "make"])
    c.add_argument("family", nargs="?")
    c.add_argument("--params", default="")
    c.add_argument("--out")
    c.set_defaults(func=cmd_catalog)

    a = sub.add_parser("analyze", help="decompose a representation")
    a.add_argument("--case", required=True)
    a.add_argument("--params", default="")
    a.add_argument("--n", type=int, default=3)
    a.add_argument("--at", default="")
    a.add_argument("--out")
    a.set_defaults(func=cmd_analyze)

    i = sub.add_parser("irreps", help="induced irreducibles and classification")
    i.add_argument("--n", type=int, required=True)
    i.add_argument("--char")
    i.add_argument("--tau", type=int, default=0)
    i.add_argument("--dims", type=int)
    i.add_argument("--out")
    i.set_defaults(func=cmd_irreps)

    g = sub.add_parser("ccwg", help="charge-conservation-with-glue tools")
    g.add_argument("action", choices=["check", "project", "order"])
    g.add_argument("matrix", nargs="?")
    g.add_argument("--part", choices=["cc", "glue"], default="cc")
    g.add_argument("--N", type=int, default=2)
    g.add_argument("--n", type=int, default=2)
    g.add_argument("--out")
    g.set_defaults(func=cmd_ccwg)

    m = sub.add_parser("mdd", help="group-element words and evaluation")
    m.add_argument("action", choices=["normal", "eval"])
    m.add_argument("--word", required=True)
    m.add_argument("--n", type=int, default=3)
    m.add_argument("--case")
    m.add_argument("--params", default="")
    m.add_argument("--R")
    m.add_argument("--S")
    m.add_argument("--at", default="")
    m.add_argument("--out")
    m.set_defaults(func=cmd_mdd)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (FileNotFoundError, json.JSONDecodeError, KeyError, ValueError,
            RejectedPoint, catalog.ConstraintViolation) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
