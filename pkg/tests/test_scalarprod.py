import random

import pytest

from nscauchy.keypoly import key
from nscauchy.laurent import standard_varset
from nscauchy.scalarprod import (
    adjointness_check,
    check_corollary12,
    check_lemma10,
    dominance_leq,
    orthogonality_matrix,
    random_laurent,
    reverse_x,
    scalar,
    scalar_bc_expanded,
    weight,
    weight_b_half_lattice,
)
from nscauchy.errors import StructuralError


def test_dominance():
    assert dominance_leq((1, 1), (2, 0))
    assert not dominance_leq((2, 0), (1, 1))
    rng = random.Random(0)
    for _ in range(20):
        v = [rng.randint(-4, 4) for _ in range(3)]
        assert dominance_leq(v, v)
    with pytest.raises(StructuralError):
        dominance_leq((1,), (1, 2))


def test_type_d_weight_example():
    vs = standard_varset(2)
    assert scalar("D", vs.one(), vs.one()) == 1


def test_type_a_pairs_v_with_reversed_u():
    # the reversal in the type A product pairs K_v with K^_{v omega}
    assert scalar("A", key("A", (0, 1)), key("A", (1, 0), True)) == 1
    assert scalar("A", key("A", (0, 1)), key("A", (0, 1), True)) == 0


def test_reverse_x():
    vs = standard_varset(3)
    x1, x3 = vs.gens("x1", "x3")
    assert reverse_x(x1 ** 2 * vs.gen("y1"), 3) == x3 ** -2 * vs.gen("y1")


def test_rank_one_c_and_bc():
    assert scalar("C", key("C", (-1,)), key("C", (1,), True)) == 1
    assert scalar("C", key("C", (1,)), key("C", (1,), True)) == 0
    assert scalar("BC", key("BC", (-1,)), key("BC", (1,), True)) == 1
    assert scalar("BC", key("BC", (1,)), key("BC", (1,), True)) == 0


def test_raw_weight_sign():
    vs = standard_varset(3)
    for gtype in ("B", "C"):
        assert scalar(gtype, vs.one(), vs.one(), normalized=False) == -1
        assert scalar(gtype, vs.one(), vs.one()) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_type_b_weight_on_both_lattices(n):
    assert weight("B", n, normalized=False).weight == weight_b_half_lattice(n)


@pytest.mark.parametrize("n", [1, 2])
def test_bc_closed_form_matches_expansion_and_specializations(n):
    rng = random.Random(n)
    vs = standard_varset(n)
    for _ in range(15):
        f, g = random_laurent(rng, vs, n), random_laurent(rng, vs, n)
        val = scalar("BC", f, g)
        assert val == scalar_bc_expanded(f, g)
        assert val.substitute("beta", 0) == scalar("C", f, g)
        assert val.substitute("beta", 1) == scalar("B", f, g)


def test_constants_pair_alike_for_every_generator():
    r = adjointness_check("C", 2, trials=3, seed=1)
    assert r.passed and r.checks == 3 * 4


@pytest.mark.parametrize("gtype", ["A", "B", "C", "D", "BC"])
def test_adjointness_n2(gtype):
    r = adjointness_check(gtype, 2, trials=20, seed=3)
    assert r.passed, r.counterexample


def test_type_a_gram_small():
    gram = orthogonality_matrix("A", 2, 1)
    assert gram.rows == [(0, 0), (1, 0), (0, 1)]
    values = [[int(e.constant_value()) if e else 0 for e in row] for row in gram.entries]
    assert values == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]


def test_c_gram_small():
    gram = orthogonality_matrix("C", 1, 1)
    assert not gram.mismatches()


@pytest.mark.parametrize("gtype", ["B", "C", "D", "BC"])
def test_gram_n2(gtype):
    assert not orthogonality_matrix(gtype, 2, 3).mismatches()


def test_type_d_odd_rank_marks_unrestricted_entries():
    gram = orthogonality_matrix("D", 3, 3)
    skipped = [(v, u) for v, row in zip(gram.rows, gram.entries)
               for u, e in zip(gram.cols, row) if e is None]
    assert skipped and all(0 not in v and 0 not in u for v, u in skipped)


@pytest.mark.parametrize("gtype", ["A", "C", "D"])
def test_support_and_unitriangularity_small(gtype):
    assert check_lemma10(gtype, 2, 2).passed
    assert check_corollary12(gtype, 2, 2).passed

