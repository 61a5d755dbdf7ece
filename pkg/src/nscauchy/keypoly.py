"""
Key polynomials ``K_v`` and ``K^_v`` (hatted) of types A, B, C, D and BC.

Both families start from the dominant monomial ``x^lambda`` and climb the
orbit of ``lambda`` one generator at a time:

* ``s_i`` (i < n) raises ``v`` when ``v_i > v_{i+1}``,
* ``s_n`` (B, C, BC) raises ``v`` when ``v_n > 0``,
* ``t_n`` (D) raises ``v`` when ``l(v t_n) > l(v)``,

applying the matching divided difference (or its hatted variant).  We walk
down from the requested index instead, trying generators in the order
``s_1 < ... < s_{n-1} < s_n/t_n`` and recursing on the first legal
predecessor; results are memoized.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .divdiff import DividedDifference, apply
from .errors import DomainError, InvariantViolation, StructuralError
from .laurent import LaurentPoly, VarSet, standard_varset, x_names
from .weylgroup import (
    GROUP_TYPES,
    Generator,
    act_vector,
    dominant,
    generators,
    is_reachable,
    length_vector,
)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class KeyIndex:
    gtype: str
    v: Vector
    hatted: bool = False

    def __str__(self):
        s = f"{self.gtype}:" + ",".join(str(k) for k in self.v)
        return s + (":hat" if self.hatted else "")

    @classmethod
    def parse(cls, text: str) -> "KeyIndex":
        """Parse ``"type:v1,...,vn[:hat]"``."""
        parts = text.strip().split(":")
        if len(parts) not in (2, 3) or (len(parts) == 3 and parts[2] != "hat"):
            raise StructuralError(f"bad key index {text!r}")
        gtype = parts[0].upper()
        if gtype not in GROUP_TYPES:
            raise StructuralError(f"unknown type in {text!r}")
        try:
            v = tuple(int(k) for k in parts[1].split(","))
        except ValueError:
            raise StructuralError(f"bad vector in {text!r}") from None
        return cls(gtype, v, len(parts) == 3)


def validate(gtype: str, v: Sequence[int]) -> None:
    v = tuple(v)
    if gtype not in GROUP_TYPES:
        raise DomainError(f"unknown group type {gtype!r}")
    if not v:
        raise DomainError("empty index")
    if gtype == "A" and min(v) < 0:
        raise DomainError(f"type A keys need v in N^n, got {v}")
    if gtype == "D" and not is_reachable("D", v):
        raise DomainError(f"{v} is not in the type D orbit of {dominant('D', v)}")


def _operator(gtype: str, g: Generator, n: int, hatted: bool) -> DividedDifference:
    if g.kind == "s" and g.index < n:
        return DividedDifference(g.index, "A", hatted)
    if g.kind == "t":
        return DividedDifference(n, "D", hatted)
    return DividedDifference(n, gtype, hatted)


def raises(gtype: str, u: Sequence[int], g: Generator) -> bool:
    """Whether applying ``g`` to ``u`` is a raising step of the recursion."""
    u = tuple(u)
    n = len(u)
    if g.kind == "s" and g.index < n:
        return u[g.index - 1] > u[g.index]
    if g.kind == "s":
        return u[n - 1] > 0
    return length_vector(gtype, act_vector(g, u)) > length_vector(gtype, u)


def descents(gtype: str, v: Sequence[int]) -> List[Generator]:
    """Generators ``g`` such that ``v`` is reached from ``v g`` by a raising step."""
    v = tuple(v)
    return [g for g in generators(gtype, len(v)) if raises(gtype, act_vector(g, v), g)]


def _cache_type(gtype: str, v: Vector) -> str:
    # for v in N^n the exceptional generators never occur, so every type agrees
    return "A" if min(v) >= 0 else gtype


def key(gtype: str, v: Sequence[int], hatted: bool = False,
        varset: Optional[VarSet] = None, block: str = "x") -> LaurentPoly:
    """``K_v`` (or ``K^_v``) of type ``gtype`` in the ``block`` variables.

    The default variable set is ``standard_varset(n)``.
    """
    v = tuple(int(k) for k in v)
    validate(gtype, v)
    n = len(v)
    vs = varset or standard_varset(n)
    poly = _key(_cache_type(gtype, v), v, bool(hatted), vs)
    if block == "x":
        return poly
    swap = {}
    for a, b in zip(x_names(n, "x"), x_names(n, block)):
        swap[a], swap[b] = b, a
    return poly.rename(vs, swap)


@lru_cache(maxsize=None)
def _key(gtype: str, v: Vector, hatted: bool, vs: VarSet) -> LaurentPoly:
    n = len(v)
    if v == dominant(gtype, v):
        pos = [vs.index(name) for name in x_names(n)]
        e = [0] * len(vs)
        for p, k in zip(pos, v):
            e[p] = k
        return vs.monomial(e)
    for g in generators(gtype, n):
        u = act_vector(g, v)
        if raises(gtype, u, g):
            if length_vector(gtype, v) != length_vector(gtype, u) + 1:
                raise InvariantViolation(f"raising step {u} -> {v} does not raise length")
            return apply(_operator(gtype, g, n, hatted), _key(gtype, u, hatted, vs))
    raise InvariantViolation(f"no raising predecessor for {v} in type {gtype}")


def key_via(gtype: str, v: Sequence[int], g: Generator, hatted: bool = False,
            varset: Optional[VarSet] = None) -> LaurentPoly:
    """``K_{v g} * pi_g``: the key of ``v`` computed through the descent ``g``."""
    v = tuple(v)
    n = len(v)
    u = act_vector(g, v)
    if not raises(gtype, u, g):
        raise DomainError(f"{g} is not a descent of {v}")
    return apply(_operator(gtype, g, n, hatted), key(gtype, u, hatted, varset))


def path_independence_failures(gtype: str, v: Sequence[int], hatted: bool = False,
                               varset: Optional[VarSet] = None) -> List[Generator]:
    """Descents of ``v`` whose route disagrees with the cached key.

    Checking every one-step route at every index is equivalent, by induction
    on length, to comparing all raising paths.
    """
    target = key(gtype, v, hatted, varset)
    return [g for g in descents(gtype, v) if key_via(gtype, v, g, hatted, varset) != target]


def enumerate_indices(gtype: str, n: int, degree_bound: int,
                      constraint: Optional[str] = None) -> List[KeyIndex]:
    """Indices with ``sum |v_i| <= degree_bound``, valid for ``gtype``.

    ``constraint`` is None (all valid v), ``"N"`` (v in N^n) or ``"vn=0"``
    (v in N^n with v_n = 0).  Ordered by weight, then decreasing
    lexicographically.
    """
    if degree_bound < 0:
        raise DomainError("degree bound must be nonnegative")
    if constraint not in (None, "N", "vn=0"):
        raise StructuralError(f"unknown constraint {constraint!r}")
    nonneg = gtype == "A" or constraint is not None
    lo = 0 if nonneg else -degree_bound
    out = []
    for v in itertools.product(range(lo, degree_bound + 1), repeat=n):
        if sum(abs(k) for k in v) > degree_bound:
            continue
        if constraint == "vn=0" and v[-1] != 0:
            continue
        if gtype == "D" and not is_reachable("D", v):
            continue
        out.append(v)
    out.sort(key=lambda v: (sum(abs(k) for k in v), tuple(-k for k in v)))
    return [KeyIndex(gtype, v) for v in out]


def clear_cache() -> None:
    _key.cache_clear()
