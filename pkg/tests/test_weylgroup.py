import pytest

from nscauchy.errors import DomainError
from nscauchy.laurent import standard_varset
from nscauchy.weylgroup import (
    act_poly,
    act_vector,
    alternating_sum_apply,
    elements,
    factored_alternating_sum,
    group_order,
    length_vector,
    max_element,
    max_element_word,
    s,
    t,
    theta,
    word_image,
)


def test_act_vector_examples():
    assert act_vector(s(1), (1, 2)) == (2, 1)
    assert act_vector(s(2), (1, 2), "C") == (1, -2)
    assert act_vector(t(2), (1, 2)) == (-2, -1)
    assert act_vector(theta(1), (3, 4)) == (-3, 4)


def test_act_poly_examples():
    vs = standard_varset(2)
    x1, x2 = vs.gens("x1", "x2")
    assert act_poly(s(1), x1) == x2
    assert act_poly(s(2), x2 + x2 ** -1, "C") == x2 + x2 ** -1
    assert act_poly(t(2), x1 * x2) == x1 ** -1 * x2 ** -1


def test_length_examples():
    assert length_vector("A", (2, 1)) == 0
    assert length_vector("A", (1, 2)) == 1
    assert length_vector("C", (1, -2)) == 2


def test_length_unreachable_in_type_d():
    with pytest.raises(DomainError):
        length_vector("D", (1, 1, -1))


@pytest.mark.parametrize("gtype,orders", [("A", (1, 2, 6, 24)), ("C", (2, 8, 48, 384)), ("D", (None, 4, 24, 192))])
def test_group_orders(gtype, orders):
    for n, order in enumerate(orders, start=1):
        if order is not None:
            assert group_order(gtype, n) == order


def test_max_words():
    assert [str(g) for g in max_element_word("A", 3)] == ["s1", "s2", "s1"]
    assert word_image(max_element_word("A", 3), 3) == (3, 2, 1)
    for n in (1, 2, 3, 4):
        assert len(max_element_word("B", n)) == n * n
        assert max_element("C", n) == tuple(-k for k in range(1, n + 1))
    assert [str(g) for g in max_element_word("D", 2)] == ["s1", "t2"]
    assert max_element("D", 2) == (-1, -2)
    assert max_element("D", 3) == (-1, -2, 3)


@pytest.mark.parametrize("gtype", ["A", "C", "D"])
def test_max_word_is_longest(gtype):
    for n in (2, 3):
        longest = max(len(w) for _, w in elements(gtype, n))
        assert len(max_element_word(gtype, n)) == longest


def test_alternating_sum_small():
    vs = standard_varset(1)
    x1 = vs.gen("x1")
    assert alternating_sum_apply("C", vs.one()) == 0
    assert alternating_sum_apply("C", x1) == x1 - x1 ** -1


def test_factorizations_agree_on_a_sample():
    vs = standard_varset(3)
    f = vs.monomial([2, -1, 1, 0, 0, 0, 0]) + 3 * vs.gen("x3")
    for gtype in ("B", "D"):
        assert factored_alternating_sum(gtype, f) == alternating_sum_apply(gtype, f)
