"""
Isobaric divided differences and their hatted variants.

Every operator has the shape ``f -> (p*f - q*f^g) / d`` for a group
generator ``g`` and Laurent polynomials ``p, q, d`` in the one or two
variables that ``g`` moves (plus ``beta`` for the BC operator)::

    pi_i    p = x_i        q = x_{i+1}              d = x_i - x_{i+1}
    pi_n^C  p = x_n        q = 1/x_n                d = x_n - 1/x_n
    pi_n^B  p = x_n        q = 1                    d = x_n - 1
    pi_n^BC p = x_n + beta q = 1/x_n + beta         d = x_n - 1/x_n
    pi_n^D  p = 1          q = 1/(x_{n-1} x_n)      d = 1 - 1/(x_{n-1} x_n)

The hatted operator is ``pi - 1``.  Since each operator commutes with
multiplication by ``g``-invariant functions, its action on a monomial only
depends on the exponents of the moved variables.  That local image is
computed once by exact division, checked by re-multiplication, and cached.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

from .errors import DomainError, InvariantViolation, StructuralError
from .laurent import Exp, LaurentPoly, VarSet, _collect
from .weylgroup import Generator, block_positions, family

KINDS = ("A", "B", "C", "BC", "D")

#: re-multiply every full application when set (the test suite turns it on)
VERIFY = os.environ.get("NSCAUCHY_VERIFY", "") not in ("", "0")


@dataclass(frozen=True)
class DividedDifference:
    """``pi_i`` (kind "A", i < n) or the last-node operator of a type."""

    index: int
    kind: str = "A"
    hatted: bool = False
    block: str = "x"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise StructuralError(f"unknown divided difference kind {self.kind!r}")

    @property
    def token(self) -> str:
        name = f"pi{self.index}" if self.kind == "A" else f"pi{self.kind}"
        return ("h" if self.hatted else "") + name

    def __str__(self):
        return f"{self.block}:{self.token}"

    def hat(self) -> "DividedDifference":
        return DividedDifference(self.index, self.kind, True, self.block)

    def unhat(self) -> "DividedDifference":
        return DividedDifference(self.index, self.kind, False, self.block)

    def on(self, block: str) -> "DividedDifference":
        return DividedDifference(self.index, self.kind, self.hatted, block)

    def shifted(self, k: int = 1) -> "DividedDifference":
        return DividedDifference(self.index + k, self.kind, self.hatted, self.block)


def pi(i: int, block: str = "x", hatted: bool = False) -> DividedDifference:
    return DividedDifference(i, "A", hatted, block)


def pi_hat(i: int, block: str = "x") -> DividedDifference:
    return DividedDifference(i, "A", True, block)


def pi_last(kind: str, n: int, block: str = "x", hatted: bool = False) -> DividedDifference:
    return DividedDifference(n, kind, hatted, block)


def operators_for_word(gtype: str, word: Iterable[Generator], n: int,
                       hatted: bool = False, block: str = "x") -> Tuple[DividedDifference, ...]:
    """Translate a generator word into divided differences of type ``gtype``."""
    out = []
    for g in word:
        if g.kind == "s" and g.index < n:
            out.append(DividedDifference(g.index, "A", hatted, block))
        elif g.kind == "s" and g.index == n:
            if family(gtype) != "B":
                raise DomainError(f"s{n} is not a generator of type {gtype}")
            out.append(DividedDifference(n, gtype, hatted, block))
        elif g.kind == "t" and g.index == n:
            if gtype != "D":
                raise DomainError(f"t{n} is not a generator of type {gtype}")
            out.append(DividedDifference(n, "D", hatted, block))
        else:
            raise DomainError(f"{g} is not a generator of type {gtype}, n={n}")
    return tuple(out)


# -- local rules -------------------------------------------------------------

_LOCAL = {
    "A": VarSet(("u", "w")),
    "D": VarSet(("u", "w")),
    "B": VarSet(("u",)),
    "C": VarSet(("u",)),
    "BC": VarSet(("u", "beta")),
}


def _local_data(kind: str):
    vs = _LOCAL[kind]
    u = vs.gen("u")
    if kind == "A":
        w = vs.gen("w")
        return u, w, u - w, lambda e: (e[1], e[0])
    if kind == "D":
        w = vs.gen("w")
        q = (u * w) ** -1
        return vs.one(), q, 1 - q, lambda e: (-e[1], -e[0])
    if kind == "C":
        return u, u ** -1, u - u ** -1, lambda e: (-e[0],)
    if kind == "B":
        return u, vs.one(), u - 1, lambda e: (-e[0],)
    b = vs.gen("beta")
    return u + b, u ** -1 + b, u - u ** -1, lambda e: (-e[0], e[1])


@lru_cache(maxsize=None)
def local_image(kind: str, exps: Tuple[int, ...]) -> Tuple[Tuple[Exp, object], ...]:
    """Image of the local monomial with exponents ``exps`` under ``pi``.

    For BC the second local variable is ``beta`` and ``exps`` has one entry.
    """
    vs = _LOCAL[kind]
    p, q, d, g = _local_data(kind)
    full = exps + (0,) if kind == "BC" else exps
    mono = vs.monomial(full)
    numer = p * mono - q * vs.monomial(g(full))
    quot = numer.divide_exact(d)
    if quot * d != numer:
        raise InvariantViolation(f"divided difference {kind} failed re-multiplication at {exps}")
    return tuple(sorted(quot.terms.items()))


def _positions(op: DividedDifference, varset: VarSet):
    pos = block_positions(varset, op.block)
    n = len(pos)
    i = op.index
    if op.kind == "A":
        if not 1 <= i < n:
            raise DomainError(f"pi{i} needs 1 <= i < n (n={n})")
        return (pos[i - 1], pos[i]), None
    if i != n:
        raise DomainError(f"last-node operator {op.token} must have index n={n}, got {i}")
    if op.kind == "D":
        if n < 2:
            raise DomainError("pi^D needs n >= 2")
        return (pos[n - 2], pos[n - 1]), None
    if op.kind == "BC":
        return (pos[n - 1],), varset.index("beta")
    return (pos[n - 1],), None


def apply(op: DividedDifference, f: LaurentPoly, verify: bool = None) -> LaurentPoly:
    """``f * op`` as an exact Laurent polynomial."""
    vs = f.varset
    if vs.unit != 1:
        raise DomainError("divided differences act on the integer exponent lattice")
    pos, beta = _positions(op, vs)
    kind = op.kind
    items = []
    for e, c in f.terms.items():
        image = local_image(kind, tuple(e[p] for p in pos))
        for le, lc in image:
            new = list(e)
            for p, k in zip(pos, le):
                new[p] = k
            if beta is not None:
                new[beta] += le[1]
            items.append((tuple(new), c * lc))
    result = LaurentPoly(vs, _collect(items), _trusted=True)
    if verify if verify is not None else VERIFY:
        _check_full(op, f, result, pos, beta)
    if op.hatted:
        result = result - f
    return result


def _check_full(op, f, result, pos, beta):
    vs = f.varset
    ux = vs.monomial([1 if j == pos[0] else 0 for j in range(len(vs))])
    if op.kind in ("A", "D"):
        wx = vs.monomial([1 if j == pos[1] else 0 for j in range(len(vs))])
    if op.kind == "A":
        p, q, d = ux, wx, ux - wx
        g = lambda e: _swap(e, pos[0], pos[1])
    elif op.kind == "D":
        q = (ux * wx) ** -1
        p, d = vs.one(), 1 - q
        g = lambda e: _tau(e, pos[0], pos[1])
    else:
        g = lambda e: _neg(e, pos[0])
        if op.kind == "C":
            p, q, d = ux, ux ** -1, ux - ux ** -1
        elif op.kind == "B":
            p, q, d = ux, vs.one(), ux - 1
        else:
            b = vs.monomial([1 if j == beta else 0 for j in range(len(vs))])
            p, q, d = ux + b, ux ** -1 + b, ux - ux ** -1
    if result * d != p * f - q * f.map_exponents(g):
        raise InvariantViolation(f"{op} failed re-multiplication")


def _swap(e, a, b):
    e = list(e)
    e[a], e[b] = e[b], e[a]
    return tuple(e)


def _tau(e, a, b):
    e = list(e)
    e[a], e[b] = -e[b], -e[a]
    return tuple(e)


def _neg(e, a):
    e = list(e)
    e[a] = -e[a]
    return tuple(e)


def apply_word(ops: Iterable[DividedDifference], f: LaurentPoly, verify: bool = None) -> LaurentPoly:
    """Left-to-right composition: the first operator acts first."""
    for op in ops:
        f = apply(op, f, verify)
    return f


# -- serialization -----------------------------------------------------------

_OP_TOKEN = re.compile(r"^(?:(x|y):)?(h?)pi(?:(\d+)|(BC|B|C|D)(\d+)?)$")


def parse_word(text: str, n: int) -> Tuple[DividedDifference, ...]:
    """Parse ``"y: pi1 hpi2 piD"``; a leading ``x:``/``y:`` sets the block,
    and any token may carry its own prefix (``x:hpi1``)."""
    tokens = text.split()
    block = "x"
    if tokens and tokens[0] in ("x:", "y:"):
        block = tokens.pop(0)[0]
    out = []
    for tok in tokens:
        m = _OP_TOKEN.match(tok)
        if not m:
            raise StructuralError(f"bad operator token {tok!r}")
        blk = m.group(1) or block
        hatted = bool(m.group(2))
        if m.group(3):
            out.append(DividedDifference(int(m.group(3)), "A", hatted, blk))
        else:
            idx = int(m.group(5)) if m.group(5) else n
            out.append(DividedDifference(idx, m.group(4), hatted, blk))
    return tuple(out)


def format_word(ops: Sequence[DividedDifference]) -> str:
    blocks = {op.block for op in ops}
    if len(blocks) == 1:
        return f"{ops[0].block}: " + " ".join(op.token for op in ops)
    return " ".join(str(op) for op in ops)
