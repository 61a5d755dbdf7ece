import random

import pytest

from nscauchy.divdiff import (
    DividedDifference,
    apply,
    apply_word,
    format_word,
    local_image,
    operators_for_word,
    parse_word,
    pi,
    pi_hat,
    pi_last,
)
from nscauchy.errors import DomainError, StructuralError
from nscauchy.laurent import VarSet, standard_varset
from nscauchy.scalarprod import random_laurent
from nscauchy.verify import braid_relations, operators
from nscauchy.weylgroup import max_element_word

VS2 = standard_varset(2)
x1, x2, b = VS2.gens("x1", "x2", "beta")


def test_pi1_examples():
    assert apply(pi(1), x1) == x1 + x2
    assert apply(pi(1), VS2.one()) == 1
    assert apply(pi_hat(1), VS2.one()) == 0
    assert apply(pi_hat(1), x1) == x2


def test_last_node_operators_on_x_inverse():
    vs = standard_varset(1)
    x = vs.gen("x1")
    assert apply(pi_last("C", 1), x ** -1) == 0
    assert apply(pi_last("B", 1), x ** -1) == -1
    assert apply(pi_last("BC", 1), x ** -1) == -vs.gen("beta")
    assert apply(pi_last("C", 1), x) == x + x ** -1
    assert apply(pi_last("B", 1), x) == x + 1 + x ** -1


def test_last_node_on_linear_factors():
    # b is a spare variable, invariant under every operator
    vs = VarSet(("x1", "x2", "b", "beta"))
    x1, x2, bb, beta = vs.gens("x1", "x2", "b", "beta")
    assert apply(pi_last("BC", 2), 1 - bb * x2 ** -1) == 1 + beta * bb
    assert apply(pi_last("C", 2), 1 - bb * x2 ** -1) == 1
    assert apply(pi_last("D", 2), (1 - bb * x1 ** -1) * (1 - bb * x2 ** -1)) == 1 - bb ** 2


def test_bc_specializes_to_c_and_b():
    rng = random.Random(5)
    vs = standard_varset(2)
    for _ in range(20):
        f = random_laurent(rng, vs, 2)
        img = apply(pi_last("BC", 2), f)
        assert img.substitute("beta", 0) == apply(pi_last("C", 2), f)
        assert img.substitute("beta", 1) == apply(pi_last("B", 2), f)


def test_d_operator():
    vs = standard_varset(2)
    x1, x2 = vs.gens("x1", "x2")
    assert apply(pi_last("D", 2), x1) == x1 + x2 ** -1
    assert apply(pi_last("D", 2), vs.one()) == 1


def test_smallest_schur():
    word = operators_for_word("A", max_element_word("A", 2), 2)
    assert apply_word(word, x1) == x1 + x2


def test_local_image_cached_and_exact():
    assert local_image("A", (2, 0)) == local_image("A", (2, 0))
    assert dict(local_image("A", (1, 0))) == {(1, 0): 1, (0, 1): 1}


@pytest.mark.parametrize("gtype", ["A", "B", "C", "D", "BC"])
@pytest.mark.parametrize("n", [2, 3])
def test_idempotence(gtype, n):
    rng = random.Random(n)
    vs = standard_varset(n)
    for _ in range(10):
        f = random_laurent(rng, vs, n)
        for op in operators(gtype, n):
            once = apply(op, f)
            assert apply(op, once) == once
            h = op.hat()
            assert apply(h, apply(h, f)) == -apply(h, f)


@pytest.mark.parametrize("gtype", ["A", "B", "C", "BC", "D"])
def test_braids_n3(gtype):
    rng = random.Random(11)
    vs = standard_varset(3)
    for _ in range(5):
        f = random_laurent(rng, vs, 3, terms=4, exp_range=2)
        for w1, w2 in braid_relations(gtype, 3):
            assert apply_word(w1, f) == apply_word(w2, f)


def test_index_errors():
    with pytest.raises(DomainError):
        apply(pi(2), x1)
    with pytest.raises(DomainError):
        apply(pi_last("C", 1), x1)
    with pytest.raises(StructuralError):
        DividedDifference(1, "E")


def test_word_round_trip():
    ops = parse_word("y: pi1 hpi2 piD", 3)
    assert ops == (pi(1, "y"), pi_hat(2, "y"), pi_last("D", 3, "y"))
    assert parse_word(format_word(ops), 3) == ops
    mixed = parse_word("x:hpi1 y:pi2", 3)
    assert parse_word(format_word(mixed), 3) == mixed
    with pytest.raises(StructuralError):
        parse_word("pi", 2)
