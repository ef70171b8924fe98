"""Command-line front end.

Exit codes: 0 on success (and when every verification passes), 1 when a
verification fails, 2 on usage errors, unparseable input, regime violations
or an exceeded enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import bijections, permbij, qpoly, verify
from .permcore import (
    CAP_ENV_VAR,
    Permutation,
    SizeLimitError,
    descent_set,
    enumerate_C,
    enumerate_Pi,
    enumerate_Sn,
    idescent_set,
    imaj,
    lis_length,
    maj,
)
from .tableau import (
    TableauPair,
    enumerate_Crsk,
    enumerate_D,
    enumerate_Pirsk,
    render,
    rsk,
    rsk_inverse,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad permutation: {exc}") from None


def _pair(text: str) -> TableauPair:
    if text == "-":
        text = sys.stdin.read()
    try:
        return TableauPair.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad tableau pair JSON: {exc}") from None


def _subset(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad subset {text!r}; expected comma-separated integers") from None


def _emit(obj, fmt: str, out) -> None:
    if fmt == "pretty":
        out.write(_pretty(obj) + "\n")
    else:
        out.write(json.dumps(_jsonable(obj)) + "\n")


def _jsonable(obj):
    if isinstance(obj, Permutation):
        return str(obj)
    if isinstance(obj, TableauPair):
        return obj.to_json()
    if isinstance(obj, qpoly.QPolynomial):
        return list(obj.coeffs)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _pretty(obj) -> str:
    if isinstance(obj, TableauPair):
        return f"P:\n{render(obj.P)}\nQ:\n{render(obj.Q)}"
    if isinstance(obj, qpoly.QPolynomial):
        return obj.pretty()
    if isinstance(obj, dict):
        return "\n".join(f"{k}: {_pretty(v)}" for k, v in obj.items())
    if isinstance(obj, (list, tuple)) and obj and isinstance(obj[0], int):
        return " ".join(str(x) for x in obj)
    return str(obj)


def cmd_stats(args, out):
    w = _perm(args.perm)
    _emit(
        {
            "perm": w,
            "descents": sorted(descent_set(w)),
            "idescents": sorted(idescent_set(w)),
            "maj": maj(w),
            "imaj": imaj(w),
            "lis": lis_length(w),
        },
        args.format or "json",
        out,
    )
    return EXIT_OK


def cmd_rsk(args, out):
    fmt = args.format or "json"
    if args.invert:
        pair = _pair(args.target)
        try:
            w = rsk_inverse(pair)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _emit({"w": w}, fmt, out)
    else:
        _emit(rsk(_perm(args.target)), fmt, out)
    return EXIT_OK


def cmd_phi(args, out):
    res = permbij.phi(_perm(args.perm), args.s)
    _emit({"w": res.w, "a": res.a}, args.format or "json", out)
    return EXIT_OK


def cmd_psi(args, out):
    _emit({"pi": permbij.psi(_perm(args.perm), args.a, args.s)}, args.format or "json", out)
    return EXIT_OK


def cmd_lli(args, out):
    sigma = permbij.lli(_perm(args.perm), args.m)
    _emit(None if sigma is None else list(sigma.indices), args.format or "json", out)
    return EXIT_OK


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"enumerate {args.family} needs --{name}")


def cmd_enumerate(args, out):
    fam = args.family
    if fam == "sn":
        stream = enumerate_Sn(args.n)
    elif fam == "c":
        _need(args, "s")
        stream = enumerate_C(args.n, args.s)
    elif fam == "pi":
        _need(args, "k")
        stream = enumerate_Pi(args.n, args.k)
    elif fam == "crsk":
        _need(args, "s")
        stream = enumerate_Crsk(args.n, args.s)
    elif fam == "pirsk":
        _need(args, "k")
        stream = enumerate_Pirsk(args.n, args.k)
    else:
        _need(args, "k", "s")
        stream = enumerate_D(args.n, args.k, args.s)
    fmt = args.format or "json"
    for item in stream:
        if fmt == "csv" and isinstance(item, Permutation):
            out.write(",".join(str(x) for x in item.word) + "\n")
        elif fmt == "pretty" and isinstance(item, TableauPair):
            out.write(_pretty(item) + "\n\n")
        else:
            _emit(item, "pretty" if fmt == "pretty" else "json", out)
    return EXIT_OK


def cmd_count(args, out):
    fmt = args.format or "json"
    if args.q:
        _emit(qpoly.imaj_gf(enumerate_Pi(args.n, args.k)), fmt, out)
    else:
        _emit(verify.count_pi(args.n, args.k), fmt, out)
    return EXIT_OK


def cmd_verify(args, out):
    reports = verify.run(
        args.identity,
        max_n=args.max_n,
        explore=args.explore,
        jobs=args.jobs,
        seed=args.seed,
        cap=args.cap,
    )
    fmt = args.format or "csv"
    if fmt == "json":
        out.write(verify.to_json_lines(reports, args.timing))
    elif fmt == "pretty":
        for r in reports:
            k = "" if r.k is None else f" k={r.k}"
            out.write(f"{r.status.upper():7} {r.identity} n={r.n}{k}\n")
    else:
        out.write(verify.to_csv(reports, args.timing))
    return EXIT_OK if verify.all_passed(reports) else EXIT_FAIL


def cmd_bijection(args, out):
    pair = _pair(args.pair)
    fmt = args.format or "json"
    op = args.op
    if op == "split":
        res, subset = bijections.recurrence_split(pair, args.k)
        _emit({"pair": res, "subset": list(subset.values)}, fmt, out)
    elif op == "d-to-c":
        if args.s is None:
            raise UsageError("bijection d-to-c needs --s")
        res, subset = bijections.d_to_c(pair, args.k, args.s)
        _emit({"pair": res, "subset": list(subset.values)}, fmt, out)
    elif op == "merge":
        _emit(bijections.recurrence_merge(pair, _subset(args.subset), args.k), fmt, out)
    else:
        _emit(bijections.c_to_d(pair, _subset(args.subset), args.k), fmt, out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lisperm", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=["json", "csv", "pretty"], default=None)
    p.add_argument("--cap", type=int, default=None, help=f"enumeration size cap (env ${CAP_ENV_VAR})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("stats", help="descents, maj, imaj and LIS of a permutation")
    s.add_argument("perm")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("rsk", help="RSK of a permutation, or --invert a pair")
    s.add_argument("target", help="permutation, or pair JSON with --invert ('-' reads stdin)")
    s.add_argument("--invert", action="store_true")
    s.set_defaults(func=cmd_rsk)

    s = sub.add_parser("phi")
    s.add_argument("--s", type=int, required=True)
    s.add_argument("perm")
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("psi")
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--a", type=int, required=True)
    s.add_argument("perm")
    s.set_defaults(func=cmd_psi)

    s = sub.add_parser("lli")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("perm")
    s.set_defaults(func=cmd_lli)

    s = sub.add_parser("enumerate")
    s.add_argument("family", choices=["sn", "c", "pi", "d", "crsk", "pirsk"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--s", type=int)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("count", help="size (or --q generating function) of Pi(n, k)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--q", action="store_true")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("verify")
    s.add_argument("identity", choices=list(verify.IDENTITIES) + ["all"])
    s.add_argument("--max-n", type=int, default=verify.DEFAULT_MAX_N)
    s.add_argument("--explore", action="store_true", help="also report n < 2k without asserting")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--seed", type=int, default=0, help="seed for the random RSK round trips")
    s.add_argument("--timing", action="store_true", help="fill elapsed_ms (breaks byte-identity)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bijection")
    s.add_argument("op", choices=["split", "merge", "d-to-c", "c-to-d"])
    s.add_argument("pair", help="pair JSON ('-' reads stdin)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--s", type=int)
    s.add_argument("--subset", help="comma-separated values, for merge and c-to-d")
    s.set_defaults(func=cmd_bijection)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.cap is not None:
            os.environ[CAP_ENV_VAR] = str(args.cap)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
    except SizeLimitError as exc:
        err.write(f"size limit: {exc}\n")
    except (bijections.BijectionError, permbij.DomainError) as exc:
        err.write(f"outside domain: {exc}\n")
    except ValueError as exc:
        err.write(f"invalid parameters: {exc}\n")
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())
