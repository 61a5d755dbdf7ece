"""
Weyl denominators and the characters of GL_n, Sp_2n, SO_2n+1 and SO_2n.

Characters are computed as Weyl quotients: the alternating sum of
``x^((lambda+rho) w)`` over the group, divided exactly by the denominator.
This route never touches divided differences, so it can be compared with
the Demazure route ``x^lambda * pi_omega``.

Type B uses half-integer exponents; those computations run on the unit-2
lattice and the quotient is moved back to integer exponents at the end.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import DomainError, InvariantViolation
from .laurent import LaurentPoly, VarSet, prod, standard_varset, x_names
from .weylgroup import alternating_sum_apply, family


@dataclass(frozen=True)
class BCDenominator:
    """``numerator * prod(1/d for d in denominators)``, kept unexpanded."""

    numerator: LaurentPoly
    denominators: Tuple[LaurentPoly, ...]


def rho(gtype: str, n: int) -> Tuple[Fraction, ...]:
    if gtype in ("A", "D"):
        return tuple(Fraction(n - i) for i in range(1, n + 1))
    if gtype == "B":
        return tuple(Fraction(2 * (n - i) + 1, 2) for i in range(1, n + 1))
    if gtype in ("C", "BC"):
        return tuple(Fraction(n - i + 1) for i in range(1, n + 1))
    raise DomainError(f"unknown group type {gtype!r}")


def _varset(gtype: str, n: int, varset: Optional[VarSet]) -> VarSet:
    vs = varset or standard_varset(n)
    return vs.with_unit(2) if gtype == "B" else vs


def _monomial(vs: VarSet, n: int, exps: Sequence[Fraction], block: str = "x") -> LaurentPoly:
    e = [0] * len(vs)
    for name, k in zip(x_names(n, block), exps):
        q = Fraction(k) * vs.unit
        if q.denominator != 1:
            raise DomainError(f"exponent {k} not on the lattice of unit {vs.unit}")
        e[vs.index(name)] = int(q)
    return vs.monomial(e)


def _product_form(gtype: str, n: int, vs: VarSet) -> LaurentPoly:
    xs = [vs.gen(v) for v in x_names(n)]
    one = vs.one()
    pairs = prod(((xs[i] - xs[j]) for i in range(n) for j in range(i + 1, n)), vs)
    if gtype == "A":
        return pairs
    pairs = pairs * prod((one - (xs[i] * xs[j]) ** -1 for i in range(n) for j in range(i + 1, n)), vs)
    if gtype == "D":
        return pairs
    if gtype == "B":
        half = [_monomial(vs, n, [Fraction(1, 2) if k == i else 0 for k in range(n)]) for i in range(n)]
        return pairs * prod((h - h ** -1 for h in half), vs)
    return pairs * prod((x - x ** -1 for x in xs), vs)


def weyl_denominator(gtype: str, n: int, form: str = "product",
                     varset: Optional[VarSet] = None):
    """The Weyl denominator of ``gtype`` in ``x1..xn``.

    ``form="sum"`` enumerates the group; ``form="product"`` evaluates the
    factorization.  Type B lives on the unit-2 lattice.  Type BC returns a
    :class:`BCDenominator` holding the type C denominator and the factors
    ``1 + beta*x_i`` it is divided by.
    """
    if form not in ("sum", "product"):
        raise DomainError(f"unknown form {form!r}")
    if gtype == "BC":
        vs = _varset("C", n, varset)
        b = vs.gen("beta")
        return BCDenominator(
            weyl_denominator("C", n, form, vs),
            tuple(1 + b * vs.gen(v) for v in x_names(n)),
        )
    vs = _varset(gtype, n, varset)
    if form == "product":
        return _product_form(gtype, n, vs)
    return alternating_sum_apply(family(gtype), _monomial(vs, n, rho(gtype, n)))


def check_partition(gtype: str, lam: Sequence[int], n: int) -> Tuple[int, ...]:
    """Pad ``lam`` to length ``n`` after checking it is an admissible partition."""
    lam = tuple(int(k) for k in lam)
    if any(k < 0 for k in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise DomainError(f"{lam} is not a partition")
    parts = sum(1 for k in lam if k)
    if parts > n:
        raise DomainError(f"{lam} has more than n={n} parts")
    if gtype == "D" and parts >= n:
        raise DomainError(f"type D characters need fewer than n={n} parts, got {lam}")
    return tuple(k for k in lam if k) + (0,) * (n - parts)


def character(gtype: str, lam: Sequence[int], n: int, varset: Optional[VarSet] = None,
              block: str = "x") -> LaurentPoly:
    """Weyl's character formula as an exact quotient of alternating sums."""
    if gtype not in ("A", "B", "C", "D"):
        raise DomainError(f"characters are defined for types A, B, C, D, not {gtype!r}")
    lam = check_partition(gtype, lam, n)
    base = varset or standard_varset(n)
    vs = _varset(gtype, n, base)
    r = rho(gtype, n)
    numer = alternating_sum_apply(family(gtype), _monomial(vs, n, [a + b for a, b in zip(lam, r)]))
    denom = weyl_denominator(gtype, n, "product", vs)
    quot = numer.divide_exact(denom)
    if quot * denom != numer:
        raise InvariantViolation(f"character quotient failed re-multiplication for {gtype} {lam}")
    result = quot.with_unit(1) if gtype == "B" else quot
    if block != "x":
        swap = {}
        for a, b in zip(x_names(n, "x"), x_names(n, block)):
            swap[a], swap[b] = b, a
        result = result.rename(base, swap)
    return result


def _ssyt(shape: Sequence[int], n: int):
    """Yield the content (multiplicity of each letter) of every semistandard
    tableau of ``shape`` with entries in ``1..n``."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling = {}

    def fill(k):
        if k == len(cells):
            yield Counter(filling.values())
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for a in range(lo, n + 1):
            filling[(r, c)] = a
            yield from fill(k + 1)
        filling.pop((r, c), None)

    yield from fill(0)


def schur_oracle(lam: Sequence[int], n: int, varset: Optional[VarSet] = None) -> LaurentPoly:
    """Schur polynomial by brute-force enumeration of semistandard tableaux."""
    shape = [k for k in lam if k]
    vs = varset or standard_varset(n)
    if len(shape) > n:
        return vs.zero()
    pos = [vs.index(v) for v in x_names(n)]
    terms: Counter = Counter()
    for content in _ssyt(shape, n):
        e = [0] * len(vs)
        for letter, mult in content.items():
            e[pos[letter - 1]] = mult
        terms[tuple(e)] += 1
    return LaurentPoly(vs, dict(terms))


def partitions(total: int, max_parts: int, max_part: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Partitions of ``total`` into at most ``max_parts`` parts, decreasing."""
    if max_part is None:
        max_part = total
    if total == 0:
        return [()]
    if max_parts == 0:
        return []
    out = []
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, max_parts - 1, first):
            out.append((first,) + rest)
    return out
