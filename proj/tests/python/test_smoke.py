"""Smoke tests for the python bindings."""

import json

import pytest

import wqsym


def test_pack_and_standardize():
    assert wqsym.pack([4, 1, 5, 2, 1, 4, 2]) == [3, 1, 4, 2, 1, 3, 2]
    assert wqsym.standardize([4, 1, 5, 2, 1, 4, 2]) == [5, 1, 7, 3, 2, 6, 4]
    assert wqsym.is_packed([2, 1, 2])
    assert not wqsym.is_packed([3, 1])
    assert wqsym.word("3142132") == [3, 1, 4, 2, 1, 3, 2]
    assert wqsym.word_str([2, 1, 2]) == "212"


def test_counts():
    assert [len(wqsym.enumerate_packed_words(n)) for n in range(5)] == [1, 1, 3, 13, 75]
    reds = [w for w in wqsym.enumerate_packed_words(3) if wqsym.is_red_irreducible(w)]
    assert reds == [[1, 1, 1], [1, 2, 1], [1, 3, 2], [2, 1, 2]]


def test_factorizations():
    assert wqsym.gd_decompose(wqsym.word("54664312")) == [
        [2, 1, 3, 3, 1],
        [1],
        [1, 2],
    ]
    u, v = wqsym.red_factorize(wqsym.word("21331"))
    assert (u, v) == ([1], [1, 2, 2, 1])
    assert wqsym.ins(u, v) == [2, 1, 3, 3, 1]
    u, v = wqsym.blue_factorize(wqsym.word("112"))
    assert (u, v) == ([1, 1], [1])
    assert wqsym.insl(u, v) == [1, 1, 2]


def test_products_and_coproducts():
    got = wqsym.half_prec("R", {"211": 1}, {"12": 1})
    assert got == {
        "21341": 1,
        "23141": 1,
        "23411": 1,
        "32141": 1,
        "32411": 1,
        "34211": 1,
    }
    d = wqsym.copr_prec("R", {"2125334": 1})
    assert d == {("2123", "112"): 1, ("212433", "1"): 1}
    full = wqsym.product("Q", {"1": 1}, {"1": 1})
    assert full == {"12": 1, "21": 1}


def test_bases_and_isomorphism():
    assert wqsym.p_element(wqsym.word("212")) == {"212": 1}
    assert wqsym.sigma({"212": 1}) == {"122": 1, "212": -1}
    assert wqsym.sigma_inverse(wqsym.sigma({"212": 1})) == {"212": 1}
    assert wqsym.involution(wqsym.word("2314")) == wqsym.word("3124")


def test_forest_roundtrip():
    j = wqsym.forest_json(wqsym.word("876795343912"), "red", skeleton=True)
    data = json.loads(j)
    assert data["scheme"] == "red-skeleton"
    assert wqsym.word_of_forest_json(j) == wqsym.word("876795343912")


def test_matrix_and_verify():
    m = wqsym.basis_matrix("P2R", 3, "paper")
    assert len(m) == 13 and len(m[0]) == 13
    assert m[0][0] == "1"
    report = json.loads(wqsym.verify_suite("dims", 4))
    assert report["passed"] is True


def test_errors():
    with pytest.raises(ValueError):
        wqsym.word("13")  # not packed
    with pytest.raises(Exception):
        wqsym.red_factorize(wqsym.word("21"))  # reducible input
