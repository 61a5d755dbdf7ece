"""
Weyl groups of types A_{n-1}, B_n = C_n and D_n as signed permutations.

Operators act on the right: ``v * g1 * g2`` applies ``g1`` first.  A group
element is identified with the image of ``[1, 2, ..., n]``; a negative entry
``-r`` marks a barred letter.

Generators::

    s_i (i < n)   swap entries i, i+1
    s_n           negate entry n               (types B, C, BC)
    t_n           (v_{n-1}, v_n) -> (-v_n, -v_{n-1})   (type D)
    theta_i       negate entry i               (not simple; used by the
                                                factored alternating sums)
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import DomainError, ResourceError, StructuralError
from .laurent import LaurentPoly, VarSet

GROUP_TYPES = ("A", "B", "C", "D", "BC")

#: groups are enumerated element by element only up to this rank
ENUMERATION_CAP = 5

Vector = Tuple[int, ...]


def family(gtype: str) -> str:
    """Group underlying a type: BC shares the B/C group."""
    if gtype not in GROUP_TYPES:
        raise DomainError(f"unknown group type {gtype!r}")
    return {"A": "A", "B": "B", "C": "B", "BC": "B", "D": "D"}[gtype]


@dataclass(frozen=True, order=True)
class Generator:
    kind: str  # "s", "t" or "theta"
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"


_TOKEN = re.compile(r"^(s|t|theta)(\d+)$")


def parse_word(text: str) -> Tuple[Generator, ...]:
    """Parse ``"s1 s2 s1"`` / ``"s1 t2"`` into generators."""
    out = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise StructuralError(f"bad generator token {tok!r}")
        out.append(Generator(m.group(1), int(m.group(2))))
    return tuple(out)


def format_word(word: Iterable[Generator]) -> str:
    return " ".join(str(g) for g in word)


def s(i: int) -> Generator:
    return Generator("s", i)


def t(n: int) -> Generator:
    return Generator("t", n)


def theta(i: int) -> Generator:
    return Generator("theta", i)


def generators(gtype: str, n: int) -> Tuple[Generator, ...]:
    """Simple generators in the fixed order s_1 < ... < s_{n-1} < s_n / t_n."""
    fam = family(gtype)
    gens = [s(i) for i in range(1, n)]
    if fam == "B":
        gens.append(s(n))
    elif fam == "D" and n >= 2:
        gens.append(t(n))
    return tuple(gens)


def check_generator(gtype: str, n: int, gen: Generator) -> None:
    if gen.kind == "theta":
        if family(gtype) == "A" or not 1 <= gen.index <= n:
            raise DomainError(f"{gen} is not available for type {gtype}, n={n}")
        return
    if gen not in generators(gtype, n):
        raise DomainError(f"{gen} is not a generator of type {gtype}, n={n}")


def act_vector(gen: Generator, v: Sequence[int], gtype: str = None) -> Vector:
    """Right action ``v * gen``; validates ``gen`` against ``gtype`` when given."""
    v = list(v)
    n = len(v)
    if gtype is not None:
        check_generator(gtype, n, gen)
    i = gen.index
    if gen.kind == "s":
        if i < n:
            v[i - 1], v[i] = v[i], v[i - 1]
        elif i == n:
            v[n - 1] = -v[n - 1]
        else:
            raise DomainError(f"{gen} out of range for n={n}")
    elif gen.kind == "t":
        if i != n or n < 2:
            raise DomainError(f"{gen} out of range for n={n}")
        v[n - 2], v[n - 1] = -v[n - 1], -v[n - 2]
    elif gen.kind == "theta":
        if not 1 <= i <= n:
            raise DomainError(f"{gen} out of range for n={n}")
        v[i - 1] = -v[i - 1]
    else:
        raise StructuralError(f"unknown generator kind {gen.kind!r}")
    return tuple(v)


def act_word(word: Iterable[Generator], v: Sequence[int], gtype: str = None) -> Vector:
    v = tuple(v)
    for g in word:
        v = act_vector(g, v, gtype)
    return v


def identity(n: int) -> Vector:
    return tuple(range(1, n + 1))


def word_image(word: Iterable[Generator], n: int, gtype: str = None) -> Vector:
    """The element represented by ``word``, as the image of ``[1..n]``."""
    return act_word(word, identity(n), gtype)


def apply_element(image: Sequence[int], v: Sequence[int]) -> Vector:
    """``v * w`` for the element ``w`` with image ``[1..n] * w == image``."""
    return tuple(v[u - 1] if u > 0 else -v[-u - 1] for u in image)


def block_positions(varset: VarSet, block: str = "x") -> Tuple[int, ...]:
    """Positions of ``block1, block2, ...`` in ``varset``."""
    pos = []
    i = 1
    while f"{block}{i}" in varset:
        pos.append(varset.index(f"{block}{i}"))
        i += 1
    if not pos:
        raise StructuralError(f"no {block}-variables in {varset.names}")
    return tuple(pos)


def _lift(fn, pos):
    def on_exponent(e):
        sub = fn(tuple(e[p] for p in pos))
        out = list(e)
        for p, k in zip(pos, sub):
            out[p] = k
        return tuple(out)

    return on_exponent


def act_poly(gen: Generator, f: LaurentPoly, gtype: str = None, block: str = "x") -> LaurentPoly:
    """Monomial action ``x^v -> x^(v * gen)`` extended linearly."""
    pos = block_positions(f.varset, block)
    if gtype is not None:
        check_generator(gtype, len(pos), gen)
    return f.map_exponents(_lift(lambda v: act_vector(gen, v), pos))


def apply_element_poly(image: Sequence[int], f: LaurentPoly, block: str = "x") -> LaurentPoly:
    pos = block_positions(f.varset, block)
    return f.map_exponents(_lift(lambda v: apply_element(image, v), pos))


@lru_cache(maxsize=None)
def elements(gtype: str, n: int, cap: int = None) -> Tuple[Tuple[Vector, Tuple[Generator, ...]], ...]:
    """Every group element with a reduced word, in breadth-first order.

    The word length is the Coxeter length, since the search runs over the
    Cayley graph from the identity.
    """
    cap = ENUMERATION_CAP if cap is None else cap
    if n > cap:
        raise ResourceError(f"refusing to enumerate the type {gtype} group at n={n} (cap {cap})")
    gens = generators(gtype, n)
    start = identity(n)
    words: Dict[Vector, Tuple[Generator, ...]] = {start: ()}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for g in gens:
            w = act_vector(g, u)
            if w not in words:
                words[w] = words[u] + (g,)
                queue.append(w)
    return tuple(words.items())


def group_order(gtype: str, n: int) -> int:
    return len(elements(gtype, n))


def dominant(gtype: str, v: Sequence[int]) -> Vector:
    """Decreasing reordering of |v| (of v itself for type A)."""
    if family(gtype) == "A":
        return tuple(sorted(v, reverse=True))
    return tuple(sorted((abs(k) for k in v), reverse=True))


@lru_cache(maxsize=None)
def _orbit_lengths(fam: str, top: Vector) -> Dict[Vector, int]:
    gens = generators(fam, len(top))
    dist = {top: 0}
    queue = deque([top])
    while queue:
        u = queue.popleft()
        for g in gens:
            w = act_vector(g, u)
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def length_vector(gtype: str, v: Sequence[int]) -> int:
    """Fewest generators carrying ``v`` to its dominant representative.

    Breadth-first search over the orbit, memoized per orbit.  Raises
    DomainError when the representative is not in the orbit (type D with an
    odd number of sign changes and no zero entry).
    """
    v = tuple(v)
    table = _orbit_lengths(family(gtype), dominant(gtype, v))
    try:
        return table[v]
    except KeyError:
        raise DomainError(f"{v} cannot reach its dominant representative in type {gtype}") from None


def is_reachable(gtype: str, v: Sequence[int]) -> bool:
    v = tuple(v)
    return v in _orbit_lengths(family(gtype), dominant(gtype, v))


def max_element_word(gtype: str, n: int) -> Tuple[Generator, ...]:
    """The displayed reduced decomposition of the longest element."""
    fam = family(gtype)
    word: List[Generator] = []
    if fam == "A":
        for k in range(1, n):
            word += [s(j) for j in range(k, 0, -1)]
    elif fam == "B":
        for k in range(1, n + 1):
            lo = n - k + 1
            word += [s(j) for j in range(lo, n)] + [s(n)] + [s(j) for j in range(n - 1, lo - 1, -1)]
    else:
        if n < 2:
            raise DomainError("type D needs n >= 2")
        for k in range(1, n):
            lo = n - k
            word += [s(j) for j in range(lo, n)] + [t(n)] + [s(j) for j in range(n - 2, lo - 1, -1)]
    return tuple(word)


def max_element(gtype: str, n: int) -> Vector:
    return word_image(max_element_word(gtype, n), n)


def alternating_sum_apply(gtype: str, f: LaurentPoly, block: str = "x") -> LaurentPoly:
    """``sum_w (-1)^l(w) f^w`` by direct enumeration of the group."""
    n = len(block_positions(f.varset, block))
    out = f.varset.zero()
    for image, word in elements(gtype, n):
        term = apply_element_poly(image, f, block)
        out = out + (term if len(word) % 2 == 0 else -term)
    return out


def _theta_product(f: LaurentPoly, n: int, sign: int, block: str) -> LaurentPoly:
    # f * (1 + sign*theta_1) ... (1 + sign*theta_n)
    for i in range(1, n + 1):
        f = f + act_poly(theta(i), f, block=block).scale(sign)
    return f


def factored_alternating_sum(gtype: str, f: LaurentPoly, block: str = "x") -> LaurentPoly:
    """Right-hand sides of the theta factorizations of the alternating sum.

    B/C: ``(1-theta_1)...(1-theta_n) * A``; D: the average of the ``1-theta``
    and ``1+theta`` products times ``A``; ``A`` is the symmetric-group
    alternating sum.
    """
    n = len(block_positions(f.varset, block))
    fam = family(gtype)
    if fam == "A":
        return alternating_sum_apply("A", f, block)
    minus = _theta_product(f, n, -1, block)
    if fam == "B":
        g = minus
    else:
        g = (minus + _theta_product(f, n, 1, block)).scale(Fraction(1, 2))
    return alternating_sum_apply("A", g, block)
