"""Command-line entry point: ``nscauchy <command> [options]``.

Polynomials are printed in the JSON interchange format of
:meth:`LaurentPoly.to_dict` (``--format json``, the default) or as text
(``--format pretty``).  Exit codes: 0 success or identity holds, 1 identity
fails, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import kernels, scalarprod, verify
from .characters import BCDenominator, character, weyl_denominator
from .errors import DomainError, InvariantViolation, StructuralError
from .keypoly import KeyIndex, key
from .laurent import LaurentPoly, standard_varset

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _beta(text: Optional[str]):
    if text is None or text == "symbolic":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--beta expects a rational number or 'symbolic', got {text!r}") from None


def _vector(text: str) -> List[int]:
    text = text.strip().strip("()[]")
    if not text:
        return []
    try:
        return [int(k) for k in text.split(",")]
    except ValueError:
        raise UsageError(f"bad integer vector {text!r}") from None


def _specialize(f: LaurentPoly, beta):
    if beta is None or "beta" not in f.varset:
        return f
    return f.substitute("beta", beta)


def _poly_out(f: LaurentPoly, fmt: str):
    return f.pretty() if fmt == "pretty" else f.to_dict()


def _load_poly(arg: str, n: int) -> LaurentPoly:
    """A polynomial from inline JSON, ``@file``, ``-`` (stdin) or a key index."""
    if arg == "-":
        return LaurentPoly.from_json(sys.stdin.read())
    if arg.startswith("@"):
        with open(arg[1:]) as fh:
            return LaurentPoly.from_json(fh.read())
    if arg.lstrip().startswith("{"):
        return LaurentPoly.from_json(arg)
    idx = KeyIndex.parse(arg)
    if len(idx.v) != n:
        raise UsageError(f"index {arg} has length {len(idx.v)}, expected n={n}")
    return key(idx.gtype, idx.v, idx.hatted, standard_varset(n))


def _emit(args, payload) -> None:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, indent=None if args.format == "json" else 2)
    text += "\n"
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ------------------------------------------------------------------

def cmd_key(args) -> int:
    idx = KeyIndex.parse(args.index)
    f = key(idx.gtype, idx.v, idx.hatted)
    _emit(args, _poly_out(_specialize(f, _beta(args.beta)), args.format))
    return EXIT_OK


def cmd_character(args) -> int:
    lam = _vector(args.partition)
    n = args.n or len(lam)
    f = character(args.type, lam, n)
    _emit(args, _poly_out(f, args.format))
    return EXIT_OK


def cmd_denominator(args) -> int:
    d = weyl_denominator(args.type, args.n, args.form)
    if isinstance(d, BCDenominator):
        denoms = [_poly_out(q, args.format) for q in d.denominators]
        payload = {"numerator": _poly_out(d.numerator, args.format), "denominators": denoms}
        _emit(args, payload)
    else:
        _emit(args, _poly_out(d, args.format))
    return EXIT_OK


def cmd_kernel(args) -> int:
    spec = kernels.KernelSpec(args.type, args.n, symmetric=args.symmetric)
    s = kernels.kernel_series(spec, args.maxdeg)
    beta = _beta(args.beta)
    slices = [_specialize(p, beta) for p in s.slices]
    if args.format == "pretty":
        _emit(args, "\n".join(f"[{d}] {p.pretty()}" for d, p in enumerate(slices)))
    else:
        _emit(args, {"type": args.type, "n": args.n, "maxdeg": args.maxdeg, "symmetric": args.symmetric,
                     "slices": [p.to_dict() for p in slices]})
    return EXIT_OK


def cmd_scalar(args) -> int:
    f = _load_poly(args.f, args.n)
    g = _load_poly(args.g, args.n)
    if f.varset != g.varset:
        raise UsageError("both polynomials must use the same variables")
    val = _specialize(scalarprod.scalar(args.type, f, g, args.n), _beta(args.beta))
    _emit(args, _poly_out(val, args.format))
    return EXIT_OK


def cmd_gram(args) -> int:
    gram = scalarprod.orthogonality_matrix(args.type, args.n, args.bound)
    beta = _beta(args.beta)
    if beta is not None:
        gram.entries = [[None if e is None else _specialize(e, beta) for e in row] for row in gram.entries]
    payload = gram.to_dict()
    payload["pattern_holds"] = not gram.mismatches()
    _emit(args, payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = verify.Config(args.type, args.n, args.maxdeg, args.bound, args.seed, args.trials)
    report = verify.run(args.identity, cfg)
    if args.format == "pretty":
        line = f"{report.identity} type={report.gtype} n={report.n}: {report.status} ({report.checks} checks)"
        if not report.passed:
            line += "\n" + json.dumps(report.counterexample, indent=2)
        _emit(args, line)
    else:
        _emit(args, report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAIL


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "pretty"), default="json")
    common.add_argument("--out", help="write to this file instead of standard output")

    p = argparse.ArgumentParser(prog="nscauchy", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    types = ("A", "B", "C", "D", "BC")

    def typed(name, help_, need_n=True, choices=types):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--type", type=str.upper, choices=choices, required=True)
        if need_n:
            sp.add_argument("--n", type=int, required=True)
        return sp

    sp = sub.add_parser("key", parents=[common], help="key polynomial of an index type:v1,...,vn[:hat]")
    sp.add_argument("index")
    sp.add_argument("--beta", default="symbolic")
    sp.set_defaults(func=cmd_key)

    sp = typed("character", "Weyl character of a partition", need_n=False, choices=("A", "B", "C", "D"))
    sp.add_argument("partition", help="comma-separated parts, e.g. 2,1")
    sp.add_argument("--n", type=int, help="rank (default: number of entries)")
    sp.set_defaults(func=cmd_character)

    sp = typed("denominator", "Weyl denominator", choices=("A", "B", "C", "D", "BC"))
    sp.add_argument("--form", choices=("product", "sum"), default="product")
    sp.set_defaults(func=cmd_denominator)

    sp = typed("kernel", "truncated kernel expansion")
    sp.add_argument("--maxdeg", type=int, default=4)
    sp.add_argument("--symmetric", action="store_true", help="the classical symmetric kernel")
    sp.add_argument("--beta", default="symbolic")
    sp.set_defaults(func=cmd_kernel)

    sp = typed("scalar", "scalar product of two polynomials (JSON, @file, - or a key index)")
    sp.add_argument("f")
    sp.add_argument("g")
    sp.add_argument("--beta", default="symbolic")
    sp.set_defaults(func=cmd_scalar)

    sp = typed("gram", "Gram matrix between the two key families")
    sp.add_argument("--bound", type=int, default=2)
    sp.add_argument("--beta", default="symbolic")
    sp.set_defaults(func=cmd_gram)

    sp = sub.add_parser("verify", parents=[common], help="check an identity at desk scale")
    sp.add_argument("identity", choices=sorted(verify.IDENTITIES))
    sp.add_argument("--type", type=str.upper, choices=types)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--maxdeg", type=int, default=4)
    sp.add_argument("--bound", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=100)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("--n must be at least 1")
    if getattr(args, "maxdeg", 0) < 0 or getattr(args, "bound", 0) < 0:
        parser.error("degree bounds must be nonnegative")
    try:
        return args.func(args)
    except (UsageError, DomainError, StructuralError, OSError, json.JSONDecodeError) as exc:
        print(f"nscauchy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"nscauchy: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
