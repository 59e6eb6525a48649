"""Command-line front end.

Elements travel as ``{"breakpoints": [["x", "y"], ...]}`` JSON.  A missing
file argument (or ``-``) is read from stdin; a verb needing two elements
reads a JSON list of two elements when both are omitted.

Exit status: 0 success, 1 domain or usage error (one line
``error E_CODE: message`` on stderr), 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence

from . import pagroup as pa
from . import pgroup as pg
from . import thompson as th
from .exactnum import ExactArithmeticError, Q
from .harness import SUITES, run_suite
from .plmap import PLError, PLHomeo, compose, conjugate, evaluate, invert

MODES = ("F", "Pa", "PQ", "P")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_text(path: Optional[str], stdin) -> str:
    if path is None or path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise PLError(f"cannot read {path}: {exc.strerror}", "E_IO") from None


def _load_elements(paths: Sequence[Optional[str]], stdin) -> list[PLHomeo]:
    if all(p in (None, "-") for p in paths) and len(paths) > 1:
        try:
            data = json.loads(stdin.read())
        except json.JSONDecodeError as exc:
            raise PLError(f"malformed JSON on stdin: {exc.msg}", "E_JSON") from None
        if not isinstance(data, list) or len(data) != len(paths):
            raise PLError(f"stdin must hold a JSON list of {len(paths)} elements", "E_FORMAT")
        return [PLHomeo.from_dict(d) if not isinstance(d, PLHomeo) else d for d in data]
    if sum(p in (None, "-") for p in paths) > 1:
        raise PLError("at most one element can come from stdin", "E_USAGE")
    return [PLHomeo.from_json(_read_text(p, stdin)) for p in paths]


def _kind(args) -> th.GroupKind:
    mode = getattr(args, "mode", "F") or "F"
    base = getattr(args, "base", None)
    if mode == "Pa":
        if base is None:
            raise PLError("--base is required with --mode Pa", "E_BASE")
        return th.GroupKind.Pa(Q(base))
    if base is not None:
        raise PLError("--base is only valid with --mode Pa", "E_BASE")
    return th.GroupKind(mode)


def _gate(kind: th.GroupKind, *elements: PLHomeo) -> None:
    for i, f in enumerate(elements):
        if not th.member(kind, f):
            raise PLError(f"argument {i + 1} is not in {kind}", "E_MEMBERSHIP")


def _emit(out, f: PLHomeo) -> None:
    out.write(f.to_json() + "\n")


# verbs


def cmd_compose(args, stdin, out) -> int:
    f, g = _load_elements([args.f, args.g], stdin)
    kind = _kind(args)
    _gate(kind, f, g)
    _emit(out, compose(f, g))
    return 0


def cmd_invert(args, stdin, out) -> int:
    (f,) = _load_elements([args.f], stdin)
    _gate(_kind(args), f)
    _emit(out, invert(f))
    return 0


def cmd_conjugate(args, stdin, out) -> int:
    h, g = _load_elements([args.h, args.g], stdin)
    _gate(_kind(args), h, g)
    _emit(out, conjugate(h, g))
    return 0


def cmd_eval(args, stdin, out) -> int:
    (f,) = _load_elements([args.f], stdin)
    x = Q(args.at)
    out.write(str(evaluate(f, x)) + "\n")
    return 0


def cmd_invariant(args, stdin, out) -> int:
    (f,) = _load_elements([args.f], stdin)
    kind = _kind(args)
    _gate(kind, f)
    name = args.name
    if name == "info":
        if args.basepoint is None:
            raise PLError("invariant info needs --basepoint", "E_USAGE")
        _emit(out, pg.monitored_info(f, Q(args.basepoint)).info)
        return 0
    if kind.tag in ("P", "PQ"):
        raise PLError(f"invariant {name} is defined for F and P^a; use 'info' in P", "E_PRECONDITION")
    if kind.tag == "F":
        value = {"alpha": th.alpha, "beta": th.beta, "gamma": th.gamma}[name](f)
    else:
        value = {"alpha": pa.alpha_a, "beta": pa.beta_a, "gamma": pa.gamma_a}[name](kind.base, f)
    if isinstance(value, PLHomeo):
        _emit(out, value)
    else:
        out.write(f"{value}\n")
    return 0


def cmd_construct(args, stdin, out, err) -> int:
    kind = _kind(args)
    what = args.what
    if what == "beta":
        if args.k is None:
            raise PLError("construct beta needs --k", "E_USAGE")
        if kind.tag == "F":
            _emit(out, th.realize_beta(int(args.k)) if _is_int(args.k) else _bad_k(args.k))
        elif kind.tag == "Pa":
            _emit(out, pa.realize_beta_a(kind.base, Q(args.k)))
        else:
            raise PLError("construct beta is defined for F and P^a", "E_PRECONDITION")
        return 0
    if args.target is None:
        raise PLError(f"construct {what} needs --target", "E_USAGE")
    (t,) = _load_elements([args.target], stdin)
    _gate(kind, t)
    if what == "gamma":
        if kind.tag == "F":
            _emit(out, th.realize_gamma(t))
        elif kind.tag == "Pa":
            _emit(out, pa.realize_gamma_a(kind.base, t))
        else:
            raise PLError("construct gamma is defined for F and P^a", "E_PRECONDITION")
        return 0
    if kind.tag not in ("P", "PQ"):
        raise PLError("construct info needs --mode P or PQ", "E_PRECONDITION")
    g, a = pg.realize_info(t)
    _emit(out, g)
    err.write(f"basepoint {a}\n")
    return 0


def _is_int(text: str) -> bool:
    try:
        int(text)
    except ValueError:
        return False
    return True


def _bad_k(text: str):
    raise PLError(f"--k must be an odd positive integer, got {text!r}", "E_PRECONDITION")


def cmd_verify(args, stdin, out) -> int:
    if args.cases < 1:
        raise PLError("--cases must be at least 1", "E_USAGE")
    if args.suite != "all" and args.suite not in SUITES:
        raise PLError(f"unknown suite {args.suite!r}", "E_USAGE")
    report = run_suite(args.suite, args.seed, args.cases, do_shrink=not args.no_shrink)
    out.write((report.to_json() if args.json else report.to_text()) + "\n")
    return 0 if report.ok else 2


def _decimal(x: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 4
        return f"{Decimal(x.numerator) / Decimal(x.denominator):.{digits}f}"


def cmd_sample(args, stdin, out) -> int:
    (f,) = _load_elements([args.f], stdin)
    if args.points < 2:
        raise PLError("--points must be at least 2", "E_USAGE")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "fx", "x_exact", "fx_exact"])
    for i in range(args.points):
        x = Fraction(i, args.points - 1)
        y = evaluate(f, x)
        w.writerow([_decimal(x, args.precision), _decimal(y, args.precision), str(x), str(y)])
    if args.csv in (None, "-"):
        out.write(buf.getvalue())
    else:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    return 0


def cmd_check_member(args, stdin, out) -> int:
    (f,) = _load_elements([args.f], stdin)
    ok = th.member(_kind(args), f)
    out.write("true\n" if ok else "false\n")
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="plgroup", description="Exact PL homeomorphisms of [0,1] and their class invariants.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def with_mode(sp):
        sp.add_argument("--mode", choices=MODES, default="F")
        sp.add_argument("--base", help="rational base a > 1 for --mode Pa")
        return sp

    sp = with_mode(sub.add_parser("compose", help="print f o g"))
    sp.add_argument("f", nargs="?")
    sp.add_argument("g", nargs="?")
    sp = with_mode(sub.add_parser("invert", help="print f^-1"))
    sp.add_argument("f", nargs="?")
    sp = with_mode(sub.add_parser("conjugate", help="print h^g = g h g^-1"))
    sp.add_argument("h", nargs="?")
    sp.add_argument("g", nargs="?")
    sp = sub.add_parser("eval", help="print f(x)")
    sp.add_argument("f", nargs="?")
    sp.add_argument("--at", required=True)
    sp = with_mode(sub.add_parser("invariant", help="alpha, beta, gamma or monitored info"))
    sp.add_argument("name", choices=("alpha", "beta", "gamma", "info"))
    sp.add_argument("f", nargs="?")
    sp.add_argument("--basepoint")
    sp = with_mode(sub.add_parser("construct", help="realise a prescribed invariant"))
    sp.add_argument("what", choices=("beta", "gamma", "info"))
    sp.add_argument("--k", help="odd k in F, or xi in (1/a, 1] in P^a")
    sp.add_argument("--target")
    sp = sub.add_parser("verify", help="run property suites")
    sp.add_argument("--suite", default="all")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--cases", type=int, default=100)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--no-shrink", action="store_true")
    sp = sub.add_parser("sample", help="CSV samples of x -> f(x)")
    sp.add_argument("f", nargs="?")
    sp.add_argument("--points", type=int, default=1024)
    sp.add_argument("--csv")
    sp.add_argument("--precision", type=int, default=12)
    sp = with_mode(sub.add_parser("check-member", help="membership in the selected group"))
    sp.add_argument("f", nargs="?")
    return p


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.verb == "construct":
            return cmd_construct(args, stdin, out, err)
        handler = {
            "compose": cmd_compose,
            "invert": cmd_invert,
            "conjugate": cmd_conjugate,
            "eval": cmd_eval,
            "invariant": cmd_invariant,
            "verify": cmd_verify,
            "sample": cmd_sample,
            "check-member": cmd_check_member,
        }[args.verb]
        return handler(args, stdin, out)
    except UsageError as exc:
        err.write(f"error E_USAGE: {exc}\n")
        return 1
    except PLError as exc:
        err.write(f"error {exc.code}: {exc}\n")
        return 1
    except ExactArithmeticError as exc:
        err.write(f"error E_RATIONAL: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
