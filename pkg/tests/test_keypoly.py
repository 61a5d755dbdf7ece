import pytest

from nscauchy.divdiff import apply_word, operators_for_word
from nscauchy.errors import DomainError, StructuralError
from nscauchy.keypoly import KeyIndex, descents, enumerate_indices, key, path_independence_failures
from nscauchy.laurent import standard_varset
from nscauchy.weylgroup import elements


def test_examples():
    vs = standard_varset(2)
    x1, x2 = vs.gens("x1", "x2")
    assert key("A", (2, 1)) == x1 ** 2 * x2
    assert key("A", (0, 1)) == x1 + x2
    assert key("A", (0, 1), hatted=True) == x2


def test_rank_one_last_node():
    vs = standard_varset(1)
    x, beta = vs.gens("x1", "beta")
    assert key("C", (-1,)) == x + x ** -1
    assert key("B", (-1,)) == x + 1 + x ** -1
    assert key("BC", (-1,)) == x + beta + x ** -1
    assert key("BC", (-1,), hatted=True) == beta + x ** -1


def test_y_block():
    vs = standard_varset(2)
    assert key("A", (0, 1), block="y") == vs.gen("y1") + vs.gen("y2")


def test_bc_specializations():
    for v in [(-1, 2), (0, -2), (-1, -1)]:
        f = key("BC", v)
        assert f.substitute("beta", 0) == key("C", v)
        assert f.substitute("beta", 1) == key("B", v)


def test_enumerate_examples():
    assert [i.v for i in enumerate_indices("A", 2, 1, "N")] == [(0, 0), (1, 0), (0, 1)]
    assert [i.v for i in enumerate_indices("D", 2, 2, "vn=0")] == [(0, 0), (1, 0), (2, 0)]


def test_validation():
    with pytest.raises(DomainError):
        key("A", (-1, 0))
    with pytest.raises(DomainError):
        key("D", (1, 1, -1))
    with pytest.raises(DomainError):
        key("E", (1,))


def test_index_parse():
    idx = KeyIndex.parse("BC:-1,0:hat")
    assert idx == KeyIndex("BC", (-1, 0), True)
    assert str(idx) == "BC:-1,0:hat"
    for bad in ("A", "A:1,x", "Q:1", "A:1:hot"):
        with pytest.raises(StructuralError):
            KeyIndex.parse(bad)


@pytest.mark.parametrize("gtype", ["A", "B", "C", "D", "BC"])
@pytest.mark.parametrize("n", [2, 3])
def test_path_independence(gtype, n):
    for idx in enumerate_indices(gtype, n, 3):
        for hatted in (False, True):
            assert not path_independence_failures(gtype, idx.v, hatted), idx


@pytest.mark.parametrize("gtype", ["C", "D"])
def test_key_equals_reduced_word_from_dominant(gtype):
    # for a regular dominant weight every element gives a distinct index
    n = 2
    lam = (2, 1) if gtype == "C" else (2, 1)
    vs = standard_varset(n)
    x = vs.monomial([2, 1, 0, 0, 0])
    for image, word in elements(gtype, n):
        v = tuple((1 if k > 0 else -1) * lam[abs(k) - 1] for k in image)
        via_word = apply_word(operators_for_word(gtype, word, n), x)
        assert key(gtype, v) == via_word


def test_descents_of_dominant_are_empty():
    assert descents("C", (2, 1)) == []
    assert descents("A", (1, 2))
