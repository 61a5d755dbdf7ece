"""
Registry of checkable identities.

Every check returns a :class:`VerificationReport`.  The kernel and scalar
product checks live next to the code they exercise; the group, operator and
character checks are collected here.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from . import kernels, scalarprod
from .characters import character, partitions, schur_oracle, weyl_denominator
from .divdiff import DividedDifference, apply_word, operators_for_word, pi, pi_last
from .errors import DomainError
from .keypoly import enumerate_indices, path_independence_failures
from .laurent import standard_varset, x_names
from .report import VerificationReport
from .scalarprod import random_laurent
from .weylgroup import alternating_sum_apply, factored_alternating_sum, family, max_element_word

OPERATOR_TYPES = ("A", "B", "C", "D", "BC")


def operators(gtype: str, n: int, hatted: bool = False) -> List[DividedDifference]:
    """``pi_1..pi_{n-1}`` plus the last-node operator of ``gtype``."""
    ops = [pi(i, hatted=hatted) for i in range(1, n)]
    if gtype != "A":
        if gtype == "D" and n < 2:
            raise DomainError("type D needs n >= 2")
        ops.append(pi_last(gtype, n, hatted=hatted))
    return ops


def check_lemma1(gtype: str, n: int, trials: int = 100, seed: int = 0) -> VerificationReport:
    """``pi pi = pi`` and ``pi^ pi^ = -pi^`` for every generator."""
    r = VerificationReport("lemma1", n, None, gtype)
    rng = random.Random(seed)
    vs = standard_varset(n)
    ops = operators(gtype, n)
    for _ in range(trials):
        f = random_laurent(rng, vs, n)
        for op in ops:
            once = apply_word([op], f)
            r.record(apply_word([op], once) == once, f=f, operator=op.token)
            h = op.hat()
            once = apply_word([h], f)
            r.record(apply_word([h], once) == -once, f=f, operator=h.token)
    return r


def braid_relations(gtype: str, n: int) -> List[Tuple[Tuple[DividedDifference, ...], Tuple[DividedDifference, ...]]]:
    """Pairs of words that must act identically."""
    a = [None] + [pi(i) for i in range(1, n)]
    rel = []

    def braid(x, y, m):
        w1 = tuple(itertools.islice(itertools.cycle((x, y)), m))
        w2 = tuple(itertools.islice(itertools.cycle((y, x)), m))
        rel.append((w1, w2))

    for i in range(1, n):
        for j in range(i + 1, n):
            braid(a[i], a[j], 3 if j == i + 1 else 2)
    if gtype in ("B", "C", "BC"):
        last = pi_last(gtype, n)
        for i in range(1, n):
            braid(a[i], last, 4 if i == n - 1 else 2)
    elif gtype == "D":
        last = pi_last("D", n)
        for i in range(1, n):
            braid(a[i], last, 3 if i == n - 2 else 2)
    return rel


def check_braid(gtype: str, n: int, trials: int = 30, seed: int = 0,
                key_bound: Optional[int] = None) -> VerificationReport:
    """Braid relations for both families on random polynomials.

    For type D the key recursion's path independence is also checked on
    every index of weight at most ``key_bound`` (default 3).
    """
    r = VerificationReport("braid", n, None, gtype)
    rng = random.Random(seed)
    vs = standard_varset(n)
    rels = braid_relations(gtype, n)
    for _ in range(trials):
        f = random_laurent(rng, vs, n, terms=4, exp_range=2)
        for w1, w2 in rels:
            for hatted in (False, True):
                u1 = tuple(op.hat() for op in w1) if hatted else w1
                u2 = tuple(op.hat() for op in w2) if hatted else w2
                r.record(apply_word(u1, f) == apply_word(u2, f), f=f,
                         lhs=" ".join(op.token for op in u1), rhs=" ".join(op.token for op in u2))
    if gtype == "D":
        bound = 3 if key_bound is None else key_bound
        for idx in enumerate_indices("D", n, bound):
            for hatted in (False, True):
                bad = path_independence_failures("D", idx.v, hatted)
                r.record(not bad, v=idx.v, hatted=hatted, descents=[str(g) for g in bad])
    return r


def check_eq4_5(gtype: str, n: int, bound: int = 2) -> VerificationReport:
    """Factored alternating sums against the group sum on ``x^v``, ``|v_i| <= bound``."""
    if family(gtype) == "A":
        raise DomainError("the theta factorizations concern types B, C and D")
    r = VerificationReport("eq4-5", n, bound, gtype)
    vs = standard_varset(n)
    pos = vs.positions(x_names(n))
    for v in itertools.product(range(-bound, bound + 1), repeat=n):
        e = [0] * len(vs)
        for p, k in zip(pos, v):
            e[p] = k
        f = vs.monomial(e)
        lhs = alternating_sum_apply(family(gtype), f)
        rhs = factored_alternating_sum(gtype, f)
        r.record(lhs == rhs, v=v, direct=lhs, factored=rhs)
    return r


def check_eq6_9(gtype: str, n: int) -> VerificationReport:
    r = VerificationReport("eq6-9", n, None, gtype)
    s = weyl_denominator(gtype, n, "sum")
    p = weyl_denominator(gtype, n, "product")
    r.record(s == p, sum_form=s, product_form=p)
    return r


def check_eq10_13(gtype: str, n: int, maxdeg: int = 4, schur_bound: int = 6) -> VerificationReport:
    """Weyl quotients against ``x^lambda pi_omega``; Schur functions against tableaux."""
    r = VerificationReport("eq10-13", n, maxdeg, gtype)
    vs = standard_varset(n)
    word = operators_for_word(gtype, max_element_word(family(gtype), n), n)
    max_parts = n - 1 if gtype == "D" else n
    for d in range(maxdeg + 1):
        for lam in partitions(d, max_parts):
            lam_n = lam + (0,) * (n - len(lam))
            e = [0] * len(vs)
            for p, k in zip(vs.positions(x_names(n)), lam_n):
                e[p] = k
            via_pi = apply_word(word, vs.monomial(e))
            chi = character(gtype, lam_n, n, vs)
            r.record(chi == via_pi, lam=lam_n, character=chi, demazure=via_pi)
    if gtype == "A":
        for d in range(schur_bound + 1):
            for lam in partitions(d, n):
                lam_n = lam + (0,) * (n - len(lam))
                r.record(character("A", lam_n, n, vs) == schur_oracle(lam_n, n, vs), lam=lam_n, part="schur oracle")
    return r


# -- registry ----------------------------------------------------------------------

@dataclass
class Config:
    gtype: Optional[str] = None
    n: int = 2
    maxdeg: int = 4
    bound: int = 3
    seed: int = 0
    trials: int = 100

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("n must be at least 1")
        if self.maxdeg < 0 or self.bound < 0:
            raise DomainError("degree bounds must be nonnegative")
        if self.gtype is not None:
            self.gtype = self.gtype.upper()


def _types(cfg: Config, allowed, default) -> List[str]:
    if cfg.gtype is None:
        return list(default)
    if cfg.gtype not in allowed:
        raise DomainError(f"type {cfg.gtype} is not covered here; choose from {', '.join(allowed)}")
    return [cfg.gtype]


def _combine(name: str, cfg: Config, reports: List[VerificationReport]) -> VerificationReport:
    if len(reports) == 1:
        return reports[0]
    out = VerificationReport(name, cfg.n, cfg.maxdeg, cfg.gtype)
    for rep in reports:
        out.merge(rep, rep.gtype)
    out.details["types"] = [rep.gtype for rep in reports]
    return out


def _per_type(name, allowed, default, fn):
    def run(cfg: Config) -> VerificationReport:
        return _combine(name, cfg, [fn(t, cfg) for t in _types(cfg, allowed, default)])
    return run


IDENTITIES: Dict[str, Callable[[Config], VerificationReport]] = {
    "lemma1": _per_type("lemma1", OPERATOR_TYPES, OPERATOR_TYPES,
                        lambda t, c: check_lemma1(t, c.n, c.trials, c.seed)),
    "braid": _per_type("braid", OPERATOR_TYPES, OPERATOR_TYPES,
                       lambda t, c: check_braid(t, c.n, max(1, c.trials // 3), c.seed)),
    "eq4-5": _per_type("eq4-5", ("B", "C", "D"), ("B", "D"),
                       lambda t, c: check_eq4_5(t, c.n, min(c.bound, 2))),
    "eq6-9": _per_type("eq6-9", ("A", "B", "C", "D"), ("A", "B", "C", "D"),
                       lambda t, c: check_eq6_9(t, c.n)),
    "eq10-13": _per_type("eq10-13", ("A", "B", "C", "D"), ("A", "B", "C", "D"),
                         lambda t, c: check_eq10_13(t, c.n, c.maxdeg)),
    "prop3": lambda c: kernels.check_prop3(c.n, c.maxdeg),
    "lemma2": lambda c: kernels.check_lemma2(c.n, c.maxdeg),
    "lemma4": lambda c: kernels.check_lemma4(c.n, c.maxdeg),
    "lemma5": lambda c: kernels.check_lemma5(c.n, c.maxdeg),
    "theorem6": _per_type("theorem6", ("A", "BC", "D"), ("A", "BC", "D"),
                          lambda t, c: kernels.check_theorem6(t, c.n, c.maxdeg)),
    "eq1-3": lambda c: kernels.symmetric_corollaries(c.n, c.maxdeg),
    "theorem8": _per_type("theorem8", OPERATOR_TYPES, OPERATOR_TYPES,
                          lambda t, c: scalarprod.adjointness_check(t, c.n, c.trials, c.seed)),
    "theorem15": _per_type("theorem15", OPERATOR_TYPES, OPERATOR_TYPES,
                           lambda t, c: scalarprod.check_theorem15(t, c.n, c.bound)),
    "lemma10": _per_type("lemma10", OPERATOR_TYPES, OPERATOR_TYPES,
                         lambda t, c: scalarprod.check_lemma10(t, c.n, c.bound)),
    "corollary12": _per_type("corollary12", OPERATOR_TYPES, OPERATOR_TYPES,
                             lambda t, c: scalarprod.check_corollary12(t, c.n, c.bound)),
}


def run(identity: str, cfg: Config) -> VerificationReport:
    try:
        fn = IDENTITIES[identity]
    except KeyError:
        raise DomainError(f"unknown identity {identity!r}; known: {', '.join(IDENTITIES)}") from None
    return fn(cfg)
