"""
Sparse multivariate Laurent polynomials with exact rational coefficients.

A polynomial is a dictionary mapping integer exponent tuples to nonzero
coefficients (``int`` or ``fractions.Fraction``), tied to a :class:`VarSet`
that fixes the variable order.  Values are never mutated after
construction, so they may be shared freely.

Exponents are stored in units of ``1/unit``; ``unit=2`` is used for the
half-integer powers appearing in the type B Weyl denominator.
"""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple, Union

from .errors import DomainError, InvariantViolation, StructuralError

Exp = Tuple[int, ...]
Coeff = Union[int, Fraction]


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


@dataclass(frozen=True)
class VarSet:
    """Ordered list of distinct variable names plus the exponent lattice step."""

    names: Tuple[str, ...]
    unit: int = 1
    _index: Dict[str, int] = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise StructuralError(f"duplicate variable names in {names}")
        if self.unit not in (1, 2):
            raise StructuralError(f"exponent unit must be 1 or 2, got {self.unit}")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise StructuralError(f"variable {name!r} not in {self.names}") from None

    def positions(self, names: Iterable[str]) -> Tuple[int, ...]:
        return tuple(self.index(v) for v in names)

    def with_unit(self, unit: int) -> "VarSet":
        return VarSet(self.names, unit)

    def gen(self, name: str) -> "LaurentPoly":
        e = [0] * len(self.names)
        e[self.index(name)] = self.unit
        return LaurentPoly(self, {tuple(e): 1}, _trusted=True)

    def gens(self, *names: str):
        return tuple(self.gen(v) for v in names)

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {}, _trusted=True)

    def one(self) -> "LaurentPoly":
        return self.const(1)

    def const(self, c) -> "LaurentPoly":
        c = _norm(c)
        terms = {(0,) * len(self.names): c} if c else {}
        return LaurentPoly(self, terms, _trusted=True)

    def monomial(self, exps: Sequence[int], c=1) -> "LaurentPoly":
        """Monomial with *stored* exponents ``exps`` (already in lattice units)."""
        exps = tuple(int(e) for e in exps)
        if len(exps) != len(self.names):
            raise StructuralError(f"exponent vector {exps} has wrong length for {self.names}")
        c = _norm(c)
        return LaurentPoly(self, {exps: c} if c else {}, _trusted=True)


class LaurentPoly:
    """Immutable sparse Laurent polynomial over a :class:`VarSet`."""

    __slots__ = ("varset", "terms", "_hash")

    def __init__(self, varset: VarSet, terms: Mapping[Exp, Coeff] = None, *, _trusted=False):
        self.varset = varset
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        m = len(varset)
        items = []
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != m:
                raise StructuralError(f"exponent vector {e} has wrong length for {varset.names}")
            items.append((e, _norm(c)))
        self.terms = _collect(items)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.varset != self.varset:
                raise StructuralError(
                    f"variable sets differ: {self.varset.names}/{self.varset.unit} "
                    f"vs {other.varset.names}/{other.varset.unit}"
                )
            return other
        return self.varset.const(other)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return LaurentPoly(self.varset, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.varset, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                c = _norm(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return self.varset.zero()
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Exp, Coeff] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                out[e] = get(e, 0) + ca * cb
        return LaurentPoly(self.varset, {e: _norm(c) for e, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentPoly":
        c = _norm(c)
        if not c:
            return self.varset.zero()
        return LaurentPoly(self.varset, {e: _norm(v * c) for e, v in self.terms.items()}, _trusted=True)

    def shift(self, exps: Sequence[int], c=1) -> "LaurentPoly":
        """Multiply by the monomial ``c * x^exps`` (stored units)."""
        c = _norm(c)
        if not c:
            return self.varset.zero()
        return LaurentPoly(
            self.varset,
            {tuple([x + y for x, y in zip(e, exps)]): _norm(v * c) for e, v in self.terms.items()},
            _trusted=True,
        )

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse_monomial() ** (-k)
        result = self.varset.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse_monomial(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise DomainError("only monomials are invertible")
        (e, c), = self.terms.items()
        return LaurentPoly(self.varset, {tuple(-k for k in e): _norm(Fraction(1) / c)}, _trusted=True)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.varset == other.varset and self.terms == other.terms
        try:
            c = _norm(other)
        except TypeError:
            return NotImplemented
        return self.terms == ({(0,) * len(self.varset): c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- inspection -------------------------------------------------------

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Coeff:
        """The coefficient of the unit monomial (0 if absent)."""
        return self.terms.get((0,) * len(self.varset), 0)

    def coefficient(self, exps: Sequence[int]) -> Coeff:
        return self.terms.get(tuple(exps), 0)

    def exponent_range(self, name: str) -> Tuple[int, int]:
        """(min, max) stored exponent of one variable; (0, 0) for the zero polynomial."""
        p = self.varset.index(name)
        if not self.terms:
            return 0, 0
        vals = [e[p] for e in self.terms]
        return min(vals), max(vals)

    def degree_in(self, names: Iterable[str]) -> set:
        pos = self.varset.positions(names)
        return {sum(e[p] for p in pos) for e in self.terms}

    def involves(self, name: str) -> bool:
        p = self.varset.index(name)
        return any(e[p] for e in self.terms)

    # -- structural maps --------------------------------------------------

    def map_exponents(self, fn: Callable[[Exp], Exp]) -> "LaurentPoly":
        """Image under a lattice map applied to every exponent tuple."""
        return LaurentPoly(self.varset, _collect((fn(e), c) for e, c in self.terms.items()), _trusted=True)

    def rename(self, varset: VarSet, mapping: Mapping[str, str] = None) -> "LaurentPoly":
        """Re-express over ``varset``; variable ``v`` goes to ``mapping.get(v, v)``.

        Variables with no image in the target must not occur in the polynomial.
        """
        mapping = mapping or {}
        src = self.varset
        moves = []
        for i, v in enumerate(src.names):
            w = mapping.get(v, v)
            if w in varset:
                moves.append((i, varset.index(w)))
            elif self.involves(v):
                raise StructuralError(f"variable {v!r} has no image in {varset.names}")
        m = len(varset)
        num, den = varset.unit, src.unit

        def fn(e):
            out = [0] * m
            for i, j in moves:
                out[j] += e[i]
            if num != den:
                for j in range(m):
                    q, r = divmod(out[j] * num, den)
                    if r:
                        raise DomainError("exponent not representable on the target lattice")
                    out[j] = q
            return tuple(out)

        return LaurentPoly(varset, _collect((fn(e), c) for e, c in self.terms.items()), _trusted=True)

    def with_unit(self, unit: int) -> "LaurentPoly":
        """Same polynomial on another exponent lattice (1 <-> 2)."""
        return self.rename(self.varset.with_unit(unit))

    # -- core operations --------------------------------------------------

    def substitute(self, name: str, value) -> "LaurentPoly":
        """Ring homomorphism sending variable ``name`` to ``value``."""
        vs = self.varset
        p = vs.index(name)
        if not isinstance(value, LaurentPoly):
            value = vs.const(value)
        value = self._coerce(value)
        groups: Dict[int, Dict[Exp, Coeff]] = {}
        for e, c in self.terms.items():
            k = e[p]
            if k % vs.unit:
                raise DomainError(f"fractional power of {name} cannot be substituted")
            rest = e[:p] + (0,) + e[p + 1:]
            groups.setdefault(k // vs.unit, {})[rest] = c
        if any(k < 0 for k in groups) and not value.is_monomial():
            raise DomainError(f"{name} occurs with negative powers; value must be an invertible monomial")
        out = vs.zero()
        for k, rest in sorted(groups.items()):
            out = out + LaurentPoly(vs, rest, _trusted=True) * (value ** k)
        return out

    def constant_term(self, names: Iterable[str]) -> "LaurentPoly":
        """Terms whose exponents vanish on every variable in ``names``."""
        pos = self.varset.positions(names)
        return LaurentPoly(
            self.varset,
            {e: c for e, c in self.terms.items() if not any(e[p] for p in pos)},
            _trusted=True,
        )

    def truncate_by_degree(self, names: Iterable[str], maxdeg) -> "LaurentPoly":
        """Terms of total (stored) exponent over ``names`` at most ``maxdeg``."""
        pos = self.varset.positions(names)
        return LaurentPoly(
            self.varset,
            {e: c for e, c in self.terms.items() if sum(e[p] for p in pos) <= maxdeg},
            _trusted=True,
        )

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / divisor``; raises InvariantViolation if inexact.

        Leading-term division in lexicographic order.  Monomials are units in
        the Laurent ring, so the only failure mode is a nonzero remainder,
        detected once the candidate quotient term falls below the smallest
        possible one.
        """
        divisor = self._coerce(divisor)
        if not divisor.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return self.varset.zero()
        d_lead = max(divisor.terms)
        d_trail = min(divisor.terms)
        d_coef = divisor.terms[d_lead]
        floor = tuple(a - b for a, b in zip(min(self.terms), d_trail))
        rem = dict(self.terms)
        heap = [tuple(-k for k in e) for e in rem]
        heapq.heapify(heap)
        quot: Dict[Exp, Coeff] = {}
        dterms = list(divisor.terms.items())
        while rem:
            lead = tuple(-k for k in heapq.heappop(heap))
            c = rem.get(lead)
            if c is None:
                continue
            t = tuple(a - b for a, b in zip(lead, d_lead))
            if t < floor:
                raise InvariantViolation("inexact division of Laurent polynomials")
            if isinstance(c, int) and isinstance(d_coef, int) and c % d_coef == 0:
                q = c // d_coef
            else:
                q = _norm(Fraction(c) / d_coef)
            quot[t] = q
            for e, dc in dterms:
                f = tuple(a + b for a, b in zip(t, e))
                s = rem.get(f, 0) - q * dc
                if s:
                    if f not in rem:
                        heapq.heappush(heap, tuple(-k for k in f))
                    rem[f] = _norm(s)
                else:
                    rem.pop(f, None)
        return LaurentPoly(self.varset, quot, _trusted=True)

    # -- serialization ----------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_dict(self) -> dict:
        return {
            "vars": list(self.varset.names),
            "unit": self.varset.unit,
            "terms": [[list(e), _frac_str(c)] for e, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "LaurentPoly":
        try:
            vs = VarSet(tuple(data["vars"]), int(data.get("unit", 1)))
            terms = {tuple(e): Fraction(c) for e, c in data["terms"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise StructuralError(f"malformed polynomial JSON: {exc}") from exc
        return cls(vs, terms)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_dict(json.loads(text))

    def pretty(self) -> str:
        """Human-readable form, descending total degree, x1 before x2."""
        if not self.terms:
            return "0"
        vs = self.varset

        def order(item):
            e, _ = item
            return (-sum(e), tuple(-k for k in e))

        out = []
        for e, c in sorted(self.terms.items(), key=order):
            mono = []
            for name, k in zip(vs.names, e):
                if not k:
                    continue
                q = Fraction(k, vs.unit)
                if q == 1:
                    mono.append(name)
                elif q.denominator == 1:
                    mono.append(f"{name}^{q.numerator}")
                else:
                    mono.append(f"{name}^({q})")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = "*".join(mono)
            else:
                body = f"{mag}*" + "*".join(mono)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"LaurentPoly({self.pretty()})"

    __str__ = pretty


def _collect(items) -> Dict[Exp, Coeff]:
    out: Dict[Exp, Coeff] = {}
    for e, c in items:
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return {e: _norm(c) for e, c in out.items()}


def _frac_str(c: Coeff) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


# Free-function forms of the core operations.

def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def substitute(f: LaurentPoly, var: str, value) -> LaurentPoly:
    return f.substitute(var, value)


def constant_term(f: LaurentPoly, vars: Iterable[str]) -> LaurentPoly:
    return f.constant_term(vars)


def truncate_by_degree(f: LaurentPoly, vars: Iterable[str], maxdeg) -> LaurentPoly:
    return f.truncate_by_degree(vars, maxdeg)


def prod(factors: Iterable[LaurentPoly], varset: VarSet) -> LaurentPoly:
    out = varset.one()
    for f in factors:
        out = out * f
    return out


def x_names(n: int, block: str = "x") -> Tuple[str, ...]:
    return tuple(f"{block}{i}" for i in range(1, n + 1))


def standard_varset(n: int, extra: Sequence[str] = ()) -> VarSet:
    """``x1..xn, y1..yn, beta`` followed by any ``extra`` names."""
    return VarSet(x_names(n, "x") + x_names(n, "y") + ("beta",) + tuple(extra))
