from itertools import product

import pytest
from hypothesis import given, strategies as st

from crystal_cauchy import weyl
from crystal_cauchy.words import (LOWER, RAISE, Tableau, enumerate_crystal, format_word, parse_word, stats,
                                  tableau_op, tableau_to_highest, word_op, word_to_tableau)
from oracles import row_insert, ssyt, weyl_dim


def small_words(max_len, n):
    for r in range(max_len + 1):
        yield from product(range(1, n + 1), repeat=r)


def test_word_op_examples():
    assert word_op((1, 1), 1, LOWER, 2) == (2, 1)
    assert word_op((1, 1, 2), 1, RAISE, 2) is None
    assert word_op((1,), 1, RAISE, 2) is None
    assert word_op((2,), 1, RAISE, 2) == (1,)
    assert word_op((1,), 1, LOWER, 2) == (2,)
    assert word_op((3,), 1, LOWER, 3) is None


def test_word_op_rejects_bad_index():
    with pytest.raises(IndexError):
        word_op((1,), 2, RAISE, 2)
    with pytest.raises(IndexError):
        word_op((1,), 0, RAISE, 2)
    with pytest.raises(ValueError):
        word_op((1,), 1, "sideways", 2)


def test_stats_examples():
    s = stats((1, 1, 2), 3)
    assert s.wt == (2, 1, 0) and s.eps[0] == 0 and s.phi[0] == 1
    s = stats((), 3)
    assert s.wt == (0, 0, 0) and s.eps == (0, 0) and s.phi == (0, 0)
    s = stats((2, 1), 2)
    assert s.eps == (1,) and s.phi == (1,)


def _string_length(a, i, direction, n):
    k = 0
    while True:
        a = word_op(a, i, direction, n)
        if a is None:
            return k
        k += 1


@pytest.mark.parametrize("n", [2, 3])
def test_inverse_pairing_and_stats_exhaustive(n):
    for a in small_words(6, n):
        s = stats(a, n)
        for i in range(1, n):
            b = word_op(a, i, LOWER, n)
            if b is not None:
                assert word_op(b, i, RAISE, n) == a
            c = word_op(a, i, RAISE, n)
            if c is not None:
                assert word_op(c, i, LOWER, n) == a
            assert s.eps[i - 1] == _string_length(a, i, RAISE, n)
            assert s.phi[i - 1] == _string_length(a, i, LOWER, n)
            assert s.phi[i - 1] == weyl.pairing(s.wt, i) + s.eps[i - 1]


def test_word_to_tableau_examples():
    assert word_to_tableau((1, 1, 2), 2).rows == ((1, 1), (2,))
    assert word_to_tableau((1,), 2).rows == ((1,),)
    t = word_to_tableau((2, 1), 2)
    assert t.rows == ((1, 2),) and t.shape == (2, 0)


@pytest.mark.parametrize("n", [2, 3])
def test_word_to_tableau_is_reversed_row_insertion(n):
    for a in small_words(6, n):
        assert word_to_tableau(a, n).rows == row_insert(reversed(a))


@pytest.mark.parametrize("n", [2, 3])
def test_word_to_tableau_intertwines(n):
    for a in small_words(5, n):
        t = word_to_tableau(a, n)
        for i in range(1, n):
            for d in (RAISE, LOWER):
                b = word_op(a, i, d, n)
                u = tableau_op(t, i, d)
                assert (b is None) == (u is None)
                if b is not None:
                    assert word_to_tableau(b, n) == u


def test_tableau_op_examples():
    assert tableau_op(Tableau(((1,),), 2), 1, LOWER).rows == ((2,),)
    assert tableau_op(Tableau(((1, 2),), 2), 1, LOWER).rows == ((2, 2),)
    for lam in [(2, 1, 0), (3, 1, 1), (2, 2, 0)]:
        v = Tableau.highest(lam)
        assert all(tableau_op(v, i, RAISE) is None for i in range(1, len(lam)))


def test_reading_word_of_highest_is_highest_weight():
    for lam in [(2, 1, 0), (3, 2, 1), (2, 2, 1, 0)]:
        v = Tableau.highest(lam)
        s = stats(v.reading_word, len(lam))
        assert all(e == 0 for e in s.eps)
        assert word_to_tableau(v.reading_word, len(lam)) == v


def test_enumerate_examples():
    assert {t.rows for t in enumerate_crystal((1, 0))} == {((1,),), ((2,),)}
    assert len(enumerate_crystal((2, 0))) == 3
    assert len(enumerate_crystal((2, 1, 0))) == 8


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (1, 1), (2, 1, 0), (3, 1, 0), (2, 2, 1), (2, 1, 1, 0), (3, 2, 0, 0)])
def test_enumerate_matches_ssyt_oracles(lam):
    n = len(lam)
    tabs = enumerate_crystal(lam)
    assert {t.rows for t in tabs} == set(ssyt(lam, n))
    assert len(tabs) == weyl_dim(lam)
    tops = [t for t in tabs if all(tableau_op(t, i, RAISE) is None for i in range(1, n))]
    assert tops == [Tableau.highest(lam)]
    for t in tabs:
        for i in range(1, n):
            for d in (RAISE, LOWER):
                u = tableau_op(t, i, d)
                assert u is None or u in tabs
        assert tableau_to_highest(t)[0] == Tableau.highest(lam)


def test_tableau_validation():
    with pytest.raises(ValueError):
        Tableau(((2, 1),), 2)
    with pytest.raises(ValueError):
        Tableau(((1,), (1,)), 2)
    with pytest.raises(ValueError):
        Tableau(((1,), (2, 2)), 2)
    with pytest.raises(ValueError):
        Tableau(((3,),), 2)


def test_tableau_json_roundtrip():
    t = Tableau(((1, 1, 3), (2, 3)), 3)
    data = t.to_json()
    assert data == {"shape": [3, 2, 0], "rows": [[1, 1, 3], [2, 3]]}
    assert Tableau.from_json(data) == t


def test_word_formats():
    assert parse_word("2131") == (2, 1, 3, 1)
    assert parse_word("10,2") == (10, 2)
    assert format_word((1, 2)) == "12"
    assert format_word((10, 2)) == "10,2"


@given(st.lists(st.integers(1, 4), max_size=12), st.integers(1, 3))
def test_random_words_inverse_pairing(a, i):
    a = tuple(a)
    b = word_op(a, i, LOWER, 4)
    if b is not None:
        assert word_op(b, i, RAISE, 4) == a
        assert stats(b, 4).phi[i - 1] == stats(a, 4).phi[i - 1] - 1
    assert word_to_tableau(a, 4).rows == row_insert(reversed(a))
