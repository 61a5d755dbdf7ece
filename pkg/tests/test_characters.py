import pytest

from nscauchy.characters import BCDenominator, character, partitions, schur_oracle, weyl_denominator
from nscauchy.divdiff import apply_word, operators_for_word
from nscauchy.errors import DomainError
from nscauchy.laurent import standard_varset
from nscauchy.weylgroup import family, max_element_word


def test_denominator_examples():
    vs = standard_varset(2)
    x1, x2 = vs.gens("x1", "x2")
    assert weyl_denominator("A", 2) == x1 - x2
    assert weyl_denominator("D", 2) == (x1 - x2) * (1 - (x1 * x2) ** -1)
    v1 = standard_varset(1)
    x = v1.gen("x1")
    assert weyl_denominator("C", 1) == x - x ** -1


def test_type_b_half_integers():
    d = weyl_denominator("B", 1)
    assert d.varset.unit == 2
    assert d == d.varset.monomial([1, 0, 0]) - d.varset.monomial([-1, 0, 0])


def test_bc_denominator_is_unexpanded():
    d = weyl_denominator("BC", 2)
    assert isinstance(d, BCDenominator)
    assert d.numerator == weyl_denominator("C", 2)
    assert len(d.denominators) == 2


@pytest.mark.parametrize("gtype", ["A", "B", "C", "D"])
def test_sum_equals_product(gtype):
    for n in (1, 2, 3):
        if gtype == "D" and n == 1:
            continue
        assert weyl_denominator(gtype, n, "sum") == weyl_denominator(gtype, n, "product")


def test_character_examples():
    vs = standard_varset(2)
    assert character("A", (1, 0), 2) == vs.gen("x1") + vs.gen("x2")
    v1 = standard_varset(1)
    x = v1.gen("x1")
    assert character("C", (1,), 1) == x + x ** -1
    assert character("B", (1,), 1) == x + 1 + x ** -1


def test_schur_examples():
    vs = standard_varset(2)
    x1, x2 = vs.gens("x1", "x2")
    assert schur_oracle((1, 1), 2) == x1 * x2
    assert schur_oracle((2,), 2) == x1 ** 2 + x1 * x2 + x2 ** 2
    assert schur_oracle((1, 1, 1), 2) == 0


@pytest.mark.parametrize("gtype", ["A", "B", "C", "D"])
def test_weyl_quotient_matches_demazure_route(gtype):
    n = 2
    word = operators_for_word(gtype, max_element_word(family(gtype), n), n)
    vs = standard_varset(n)
    for d in range(4):
        for lam in partitions(d, 1 if gtype == "D" else n):
            lam = lam + (0,) * (n - len(lam))
            assert character(gtype, lam, n) == apply_word(word, vs.monomial(list(lam) + [0, 0, 0]))


def test_bad_partitions():
    with pytest.raises(DomainError):
        character("A", (1, 2), 2)
    with pytest.raises(DomainError):
        character("D", (1, 1), 2)
    with pytest.raises(DomainError):
        character("BC", (1,), 1)


def test_partitions():
    assert partitions(4, 2) == [(4,), (3, 1), (2, 2)]
    assert partitions(0, 3) == [()]
