"""
Truncated expansions of the non-symmetric Cauchy and Littlewood kernels.

A kernel is a product of polynomial factors and geometric factors
``(1 - m)^-1`` where every ``m`` has positive degree in the x variables.
Grading by total x-degree and cutting at ``maxdeg`` keeps every slice
exact: y exponents stay unbounded but finite per slice.  Operators in the
y variables preserve x-degree and act slice by slice; isobaric operators in
the x variables do too.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .characters import character, partitions
from .divdiff import DividedDifference, apply_word, operators_for_word, pi, pi_last
from .errors import DomainError, StructuralError
from .keypoly import enumerate_indices, key
from .laurent import LaurentPoly, VarSet, standard_varset, x_names
from .report import VerificationReport
from .weylgroup import apply_element, elements, max_element, max_element_word

Word = Tuple[DividedDifference, ...]


class TruncatedSeries:
    """Slices ``0..maxdeg`` of a power series graded by x-degree."""

    __slots__ = ("varset", "maxdeg", "slices", "_xpos")

    def __init__(self, varset: VarSet, maxdeg: int, slices: Sequence[LaurentPoly] = None):
        if maxdeg < 0:
            raise DomainError("maxdeg must be nonnegative")
        self.varset = varset
        self.maxdeg = maxdeg
        self._xpos = tuple(i for i, v in enumerate(varset.names) if v.startswith("x"))
        if slices is None:
            slices = [varset.zero() for _ in range(maxdeg + 1)]
        if len(slices) != maxdeg + 1:
            raise StructuralError("need exactly maxdeg + 1 slices")
        self.slices = list(slices)

    @classmethod
    def one(cls, varset: VarSet, maxdeg: int) -> "TruncatedSeries":
        return cls(varset, maxdeg, [varset.one()] + [varset.zero()] * maxdeg)

    @classmethod
    def from_poly(cls, f: LaurentPoly, maxdeg: int) -> "TruncatedSeries":
        """Split ``f`` by x-degree, dropping everything above ``maxdeg``."""
        s = cls(f.varset, maxdeg)
        buckets: Dict[int, dict] = {}
        for e, c in f.terms.items():
            d = sum(e[p] for p in s._xpos)
            if d < 0:
                raise DomainError("negative x-degree in a kernel factor")
            if d <= maxdeg:
                buckets.setdefault(d, {})[e] = c
        for d, terms in buckets.items():
            s.slices[d] = LaurentPoly(f.varset, terms, _trusted=True)
        return s

    def _like(self, slices) -> "TruncatedSeries":
        return TruncatedSeries(self.varset, self.maxdeg, slices)

    def _check(self, other: "TruncatedSeries"):
        if other.varset != self.varset or other.maxdeg != self.maxdeg:
            raise StructuralError("series differ in variable set or truncation order")

    def __add__(self, other):
        self._check(other)
        return self._like([a + b for a, b in zip(self.slices, other.slices)])

    def __sub__(self, other):
        self._check(other)
        return self._like([a - b for a, b in zip(self.slices, other.slices)])

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            other = TruncatedSeries.from_poly(other, self.maxdeg)
        self._check(other)
        out = [self.varset.zero() for _ in range(self.maxdeg + 1)]
        for i, a in enumerate(self.slices):
            if not a:
                continue
            for j, b in enumerate(other.slices[: self.maxdeg - i + 1]):
                if b:
                    out[i + j] = out[i + j] + a * b
        return self._like(out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.varset == other.varset and self.maxdeg == other.maxdeg and self.slices == other.slices

    __hash__ = None

    def times_geometric(self, m: LaurentPoly) -> "TruncatedSeries":
        """Multiply by ``(1 - m)^-1`` for a monomial ``m`` of positive x-degree."""
        if not m.is_monomial():
            raise DomainError("geometric factors need a monomial ratio")
        (e, c), = m.terms.items()
        k = sum(e[p] for p in self._xpos)
        if k <= 0:
            raise DomainError("geometric ratio must have positive x-degree")
        out = list(self.slices)
        for d in range(k, self.maxdeg + 1):
            out[d] = out[d] + out[d - k].shift(e, c)
        return self._like(out)

    def apply(self, ops: Iterable[DividedDifference]) -> "TruncatedSeries":
        ops = tuple(ops)
        return self._like([apply_word(ops, s) for s in self.slices])

    def apply_sum(self, words: Iterable[Word]) -> "TruncatedSeries":
        """Image under a sum of operator words."""
        out = self._like([self.varset.zero()] * (self.maxdeg + 1))
        for w in words:
            out = out + self.apply(w)
        return out

    def map(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "TruncatedSeries":
        return self._like([fn(s) for s in self.slices])

    def substitute(self, name: str, value) -> "TruncatedSeries":
        if name.startswith("x") and value != 0:
            raise DomainError("x-variables may only be specialized to 0 inside a series")
        return self.map(lambda s: s.substitute(name, value))

    def to_poly(self) -> LaurentPoly:
        out = self.varset.zero()
        for s in self.slices:
            out = out + s
        return out

    def term_count(self) -> int:
        return sum(len(s) for s in self.slices)

    def first_mismatch(self, other: "TruncatedSeries") -> Optional[dict]:
        """First differing ``(slice, exponent)`` or None when equal."""
        self._check(other)
        for d, (a, b) in enumerate(zip(self.slices, other.slices)):
            if a != b:
                diff = a - b
                e = min(diff.terms)
                return {
                    "slice": d,
                    "exponent": list(e),
                    "monomial": self.varset.monomial(e).pretty(),
                    "lhs": str(a.coefficient(e)),
                    "rhs": str(b.coefficient(e)),
                }
        return None

    def to_dict(self) -> dict:
        return {"maxdeg": self.maxdeg, "slices": [s.to_dict() for s in self.slices]}

    def __repr__(self):
        return f"TruncatedSeries(maxdeg={self.maxdeg}, terms={self.term_count()})"


# -- kernels -------------------------------------------------------------------

@dataclass(frozen=True)
class KernelSpec:
    """Which kernel to expand.

    ``symmetric`` selects the classical kernels (full grid of ``1/y_j``
    factors, and the full ``x_i y_j`` grid for type A).  ``cutoff`` replaces
    ``n + 1`` in the type A condition ``i + j <= n + 1``.
    """

    gtype: str
    n: int
    symmetric: bool = False
    cutoff: Optional[int] = None

    def factors(self, varset: VarSet) -> Tuple[List[LaurentPoly], List[LaurentPoly]]:
        """(polynomial numerator factors, monomial ratios of geometric factors)."""
        n = self.n
        xs = [varset.gen(v) for v in x_names(n, "x")]
        ys = [varset.gen(v) for v in x_names(n, "y")]
        rng = range(n)
        if self.gtype == "A":
            cut = self.cutoff if self.cutoff is not None else n + 1
            ratios = [xs[i] * ys[j] for i in rng for j in rng
                      if self.symmetric or (i + 1) + (j + 1) <= cut]
            return [], ratios
        if self.gtype not in ("B", "C", "D", "BC"):
            raise DomainError(f"unknown kernel type {self.gtype!r}")
        ratios = [xs[i] * ys[j] for i in rng for j in rng]
        ratios += [xs[i] * ys[j] ** -1 for i in rng for j in rng if self.symmetric or i <= j]
        if self.gtype == "D":
            numer = [1 - xs[i] * xs[j] for i in rng for j in rng if i <= j]
        else:
            numer = [1 - xs[i] * xs[j] for i in rng for j in rng if i < j]
        if self.gtype == "B":
            numer += [1 + x for x in xs]
        elif self.gtype == "BC":
            b = varset.gen("beta")
            numer += [1 + b * x for x in xs]
        return numer, ratios


def kernel_series(spec: KernelSpec, maxdeg: int, varset: Optional[VarSet] = None) -> TruncatedSeries:
    """Expansion of the kernel up to total x-degree ``maxdeg``, exact per slice."""
    vs = varset or standard_varset(spec.n)
    numer, ratios = spec.factors(vs)
    s = TruncatedSeries.one(vs, maxdeg)
    for m in ratios:
        s = s.times_geometric(m)
    for f in numer:
        s = s * f
    return s


def dominant_series(n: int, maxdeg: int, varset: Optional[VarSet] = None) -> TruncatedSeries:
    """``prod_k (1 - x_1..x_k y_1..y_k)^-1``: all ``x^lambda y^lambda``."""
    vs = varset or standard_varset(n)
    s = TruncatedSeries.one(vs, maxdeg)
    m = vs.one()
    for k in range(1, n + 1):
        m = m * vs.gen(f"x{k}") * vs.gen(f"y{k}")
        s = s.times_geometric(m)
    return s


def apply_y_operator_series(series: TruncatedSeries, word: Sequence[DividedDifference]) -> TruncatedSeries:
    if any(op.block != "y" for op in word):
        raise DomainError("expected operators on the y variables only")
    return series.apply(word)


# -- operator words ------------------------------------------------------------

def _perm_words(n: int) -> Dict[Tuple[int, ...], tuple]:
    return dict(elements("A", n))


@dataclass(frozen=True)
class XiOperator:
    """``sum over sigma in S_n of pi^_sigma(x) pi_{sigma omega}(y)``.

    ``direct`` lists one word per permutation; ``levels`` is the factored
    form, a sequence of sums applied one after another.
    """

    n: int
    direct: Tuple[Word, ...]
    levels: Tuple[Tuple[Word, ...], ...]

    def apply_direct(self, series: TruncatedSeries) -> TruncatedSeries:
        return series.apply_sum(self.direct)

    def apply_factored(self, series: TruncatedSeries) -> TruncatedSeries:
        for level in self.levels:
            series = series.apply_sum(level)
        return series


def xi_level(m: int) -> Tuple[Word, ...]:
    """``sum_{i=0}^{m-1} pi^_[m-1:i](x) pi_[m-1:m-1-i](y)``, with
    ``pi_[m-1:i] = pi_{m-1} pi_{m-2} ... pi_{m-i}``."""
    out = []
    for i in range(m):
        xs = tuple(pi(j, "x", hatted=True) for j in range(m - 1, m - 1 - i, -1))
        ys = tuple(pi(j, "y") for j in range(m - 1, i, -1))
        out.append(xs + ys)
    return tuple(out)


def xi_operator(n: int) -> XiOperator:
    if n < 1:
        raise DomainError("n must be positive")
    words = _perm_words(n)
    omega = max_element("A", n)
    direct = []
    for image, word in words.items():
        sw = words[apply_element(omega, image)]
        direct.append(tuple(pi(g.index, "x", True) for g in word) + tuple(pi(g.index, "y") for g in sw))
    levels = tuple(xi_level(m) for m in range(2, n + 1))
    return XiOperator(n, tuple(direct), levels)


def phi_words(gtype: str, n: int) -> Word:
    """The y-operator words carrying the type A kernel to the BC and D kernels."""
    if gtype == "BC":
        word: List[DividedDifference] = []
        for k in range(1, n + 1):
            word.append(pi_last("BC", n, "y"))
            word += [pi(j, "y") for j in range(n - 1, k - 1, -1)]
        return tuple(word)
    if gtype == "D":
        if n < 2:
            raise DomainError("the type D word needs n >= 2")
        word = [pi(1, "y"), pi_last("D", 2, "y")]
        for m in range(3, n + 1):
            word = [op.shifted() for op in word]
            word += [pi(j, "y") for j in range(1, m)] + [pi_last("D", m, "y")]
        return tuple(word)
    raise DomainError(f"no phi word for type {gtype!r}")


def omega_x(n: int, rank: Optional[int] = None) -> Word:
    """``pi_omega`` on ``x_1..x_rank`` (default all n) as a word in the x block."""
    rank = n if rank is None else rank
    return operators_for_word("A", max_element_word("A", rank), rank)


# -- expansions through key polynomials -------------------------------------

def theorem6_rhs(gtype: str, n: int, maxdeg: int, varset: Optional[VarSet] = None) -> TruncatedSeries:
    """Sum of ``K^_v(x) K_{v'}(y)`` over ``v in N^n`` with ``|v| <= maxdeg``.

    ``v' = v omega`` for type A and ``-v`` otherwise; type D restricts to
    ``v_n = 0``.  Types B and C are the two specializations of BC.
    """
    vs = varset or standard_varset(n)
    if gtype not in ("A", "B", "C", "D", "BC"):
        raise DomainError(f"unknown type {gtype!r}")
    s = TruncatedSeries(vs, maxdeg)
    constraint = "vn=0" if gtype == "D" else "N"
    for idx in enumerate_indices("A", n, maxdeg, constraint):
        v = idx.v
        hx = key("A", v, hatted=True, varset=vs)
        if gtype == "A":
            ky = key("A", tuple(reversed(v)), varset=vs, block="y")
        else:
            ky = key(gtype, tuple(-k for k in v), varset=vs, block="y")
        d = sum(v)
        s.slices[d] = s.slices[d] + hx * ky
    return s


# -- verification ----------------------------------------------------------------

def _compare(report: VerificationReport, lhs: TruncatedSeries, rhs: TruncatedSeries, label: str):
    bad = lhs.first_mismatch(rhs)
    report.record(bad is None, part=label, **(bad or {}))
    return bad is None


def check_prop3(n: int, maxdeg: int) -> VerificationReport:
    """dominant series * Xi_n equals the type A kernel; direct and factored Xi agree."""
    r = VerificationReport("prop3", n, maxdeg, "A")
    xi = xi_operator(n)
    dom = dominant_series(n, maxdeg)
    target = kernel_series(KernelSpec("A", n), maxdeg)
    direct = xi.apply_direct(dom)
    factored = xi.apply_factored(dom)
    _compare(r, direct, target, "direct Xi_n")
    _compare(r, factored, target, "factored Xi_n")
    return r


def check_lemma2(n: int, maxdeg: int) -> VerificationReport:
    r = VerificationReport("lemma2", n, maxdeg, "A")
    xi = xi_operator(n)
    dom = dominant_series(n, maxdeg)
    _compare(r, xi.apply_direct(dom), xi.apply_factored(dom), "direct vs factored")
    return r


def check_lemma4(n: int, maxdeg: int) -> VerificationReport:
    r = VerificationReport("lemma4", n, maxdeg, "BC")
    lhs = apply_y_operator_series(kernel_series(KernelSpec("A", n), maxdeg), phi_words("BC", n))
    _compare(r, lhs, kernel_series(KernelSpec("BC", n), maxdeg), "Omega^A Phi^BC")
    return r


def check_lemma5(n: int, maxdeg: int) -> VerificationReport:
    """Omega^A_{n-1} Phi_n^D against Omega^D with ``x_n = 0``."""
    r = VerificationReport("lemma5", n, maxdeg, "D")
    lhs = apply_y_operator_series(kernel_series(KernelSpec("A", n, cutoff=n), maxdeg), phi_words("D", n))
    rhs = kernel_series(KernelSpec("D", n), maxdeg).substitute(f"x{n}", 0)
    _compare(r, lhs, rhs, "Omega^A_{n-1} Phi^D")
    return r


def check_theorem6(gtype: str, n: int, maxdeg: int) -> VerificationReport:
    r = VerificationReport("theorem6", n, maxdeg, gtype)
    lhs = kernel_series(KernelSpec(gtype, n), maxdeg)
    rhs = theorem6_rhs(gtype, n, maxdeg)
    if gtype == "D":
        lhs = lhs.substitute(f"x{n}", 0)
        rhs = rhs.substitute(f"x{n}", 0)
    _compare(r, lhs, rhs, f"Omega^{gtype} vs key expansion")
    if gtype == "BC":
        for beta, spec in ((0, "C"), (1, "B")):
            _compare(r, rhs.substitute("beta", beta), kernel_series(KernelSpec(spec, n), maxdeg),
                     f"beta={beta} vs Omega^{spec}")
            _compare(r, theorem6_rhs(spec, n, maxdeg), rhs.substitute("beta", beta),
                     f"K^{spec} expansion vs beta={beta}")
    return r


def _classical_sum(gtype: str, n: int, maxdeg: int, vs: VarSet, x_rank: int) -> TruncatedSeries:
    """``sum s_lambda(x_1..x_rank) chi_lambda(y)`` over ``|lambda| <= maxdeg``."""
    s = TruncatedSeries(vs, maxdeg)
    for d in range(maxdeg + 1):
        for lam in partitions(d, x_rank):
            lam_n = lam + (0,) * (n - len(lam))
            sx = character("A", lam_n, n, vs)
            for k in range(x_rank + 1, n + 1):
                sx = sx.substitute(f"x{k}", 0)
            chi = character(gtype, lam_n, n, vs, block="y")
            s.slices[d] = s.slices[d] + sx * chi
    return s


def symmetric_corollaries(n: int, maxdeg: int) -> VerificationReport:
    """Cauchy and Littlewood identities as images of the key expansions under pi_omega(x).

    For each of A (Cauchy), C (beta = 0), B (beta = 1) and D (with x_n = 0,
    symmetrizing over x_1..x_{n-1}) four truncations must agree: the image
    of the kernel, the image of its key expansion, the classical kernel,
    and the sum of products of characters.
    """
    r = VerificationReport("eq1-3", n, maxdeg)
    vs = standard_varset(n)
    for label, base, beta, chi in (("A", "A", None, "A"), ("C", "BC", 0, "C"),
                                   ("B", "BC", 1, "B"), ("D", "D", None, "D")):
        if label == "D" and n < 2:
            continue
        kern = kernel_series(KernelSpec(base, n), maxdeg)
        rhs = theorem6_rhs(base, n, maxdeg)
        classical = kernel_series(KernelSpec(base, n, symmetric=True), maxdeg)
        rank = n
        if beta is not None:
            kern, rhs, classical = (t.substitute("beta", beta) for t in (kern, rhs, classical))
        if label == "D":
            rank = n - 1
            kern, rhs, classical = (t.substitute(f"x{n}", 0) for t in (kern, rhs, classical))
        word = omega_x(n, rank)
        kern_img = kern.apply(word)
        rhs_img = rhs.apply(word)
        chars = _classical_sum(chi, n, maxdeg, vs, rank)
        _compare(r, kern_img, classical, f"{label}: kernel * pi_omega = classical kernel")
        _compare(r, rhs_img, chars, f"{label}: key expansion * pi_omega = character sum")
        _compare(r, classical, chars, f"{label}: classical kernel = character sum")

    # only dominant hatted keys survive pi_omega
    word = omega_x(n)
    for idx in enumerate_indices("A", n, min(maxdeg, 3), "N"):
        v = idx.v
        img = apply_word(word, key("A", v, hatted=True, varset=vs))
        if list(v) == sorted(v, reverse=True):
            r.record(img == character("A", v, n, vs), part="K^_lambda pi_omega = s_lambda", v=v)
        else:
            r.record(not img, part="K^_v pi_omega = 0", v=v, image=img)
    return r
