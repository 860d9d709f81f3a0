import pytest
from hypothesis import given, strategies as st

from crystal_cauchy import weyl
from oracles import all_perms, bruhat_below, inversions, perm_mult


def test_act_examples():
    assert weyl.act(weyl.identity(2), (1, 0)) == (1, 0)
    assert weyl.act(weyl.simple(1, 2), (1, 0)) == (0, 1)
    w0 = weyl.longest(3)
    assert weyl.act(w0, (2, 1, 0)) == (0, 1, 2)
    s1, s2 = weyl.simple(1, 3), weyl.simple(2, 3)
    assert weyl.compose(s1, weyl.compose(s2, s1)) == w0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_act_is_a_group_action(n):
    mu = tuple(range(n, 0, -1))
    for u in all_perms(n):
        for v in all_perms(n)[:8]:
            assert weyl.act(weyl.compose(u, v), mu) == weyl.act(u, weyl.act(v, mu))


def test_composition_matches_oracle():
    for u in all_perms(3):
        for v in all_perms(3):
            assert weyl.compose(u, v) == perm_mult(u, v)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_length_and_reduced_words(n):
    for w in all_perms(n):
        word = weyl.reduced_word(w)
        assert len(word) == weyl.length(w) == inversions(w)
        assert weyl.from_word(word, n) == w


def test_bruhat_examples():
    for w in all_perms(3):
        assert weyl.bruhat_leq(weyl.identity(3), w)
        assert weyl.bruhat_leq(w, weyl.longest(3))
    assert weyl.bruhat_leq((2, 1, 3), (2, 3, 1))
    assert not weyl.bruhat_leq((3, 2, 1), (3, 1, 2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bruhat_matches_subword_oracle(n):
    for v in all_perms(n):
        below = bruhat_below(v, weyl.reduced_word(v))
        for u in all_perms(n):
            assert weyl.bruhat_leq(u, v) == (u in below)


@pytest.mark.parametrize("n", [3, 4])
def test_bruhat_covers_are_transposition_steps(n):
    transpositions = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            t = list(range(1, n + 1))
            t[a - 1], t[b - 1] = b, a
            transpositions.append(tuple(t))
    for u in all_perms(n):
        covers = {perm_mult(u, t) for t in transpositions if inversions(perm_mult(u, t)) == inversions(u) + 1}
        for v in all_perms(n):
            if inversions(v) == inversions(u) + 1:
                assert weyl.bruhat_leq(u, v) == (v in covers)


def test_coset_rep_examples():
    gens, reps = weyl.stabilizer_and_coset_reps((1, 1))
    assert gens == (1,) and reps == [weyl.identity(2)]
    gens, reps = weyl.stabilizer_and_coset_reps((1, 0))
    assert gens == () and reps == [weyl.identity(2), weyl.simple(1, 2)]
    assert len(weyl.coset_reps((2, 1, 1))) == 3


@pytest.mark.parametrize("lam", [(1, 0), (1, 1), (2, 1, 0), (2, 1, 1), (2, 2, 0), (3, 1, 1, 0), (1, 1, 1)])
def test_coset_reps_are_minimal_and_complete(lam):
    n = len(lam)
    reps = weyl.coset_reps(lam)
    assert len(reps) == len(weyl.orbit(lam))
    assert {weyl.act(w, lam) for w in reps} == weyl.orbit(lam)
    for w in reps:
        same = [u for u in all_perms(n) if weyl.act(u, lam) == weyl.act(w, lam)]
        assert weyl.length(w) == min(map(weyl.length, same))
        for i in range(1, n):
            if lam[i - 1] == lam[i]:
                assert weyl.act(weyl.compose(w, weyl.simple(i, n)), lam) == weyl.act(w, lam)
    keys = [(weyl.length(w), w) for w in reps]
    assert keys == sorted(keys)


def test_orbit_examples():
    assert weyl.orbit((1, 0)) == {(1, 0), (0, 1)}
    assert weyl.orbit((1, 1)) == {(1, 1)}
    assert len(weyl.orbit((2, 1, 0))) == 6


def test_parsers():
    assert weyl.parse_partition("2,1,0") == (2, 1, 0)
    assert weyl.parse_partition("2", 3) == (2, 0, 0)
    assert weyl.parse_permutation("231", 3) == (2, 3, 1)
    assert weyl.parse_permutation("2,3,1", 3) == (2, 3, 1)
    assert weyl.parse_permutation("s1*s2", 3) == weyl.compose(weyl.simple(1, 3), weyl.simple(2, 3))
    assert weyl.parse_permutation("e", 3) == (1, 2, 3)
    for bad in ("2,x", "1,2", "-1"):
        with pytest.raises(ValueError):
            weyl.parse_partition(bad)
    with pytest.raises(ValueError):
        weyl.parse_permutation("221", 3)
    with pytest.raises(ValueError):
        weyl.parse_permutation("12", 3)


def test_pairing_and_roots():
    assert weyl.pairing((2, 1, 0), 1) == 1
    assert weyl.simple_root(2, 3) == (0, 1, -1)
    assert weyl.is_dominant((2, 2, 0)) and not weyl.is_dominant((0, 1))


@given(st.lists(st.integers(1, 3), max_size=8))
def test_from_word_then_reduce(word):
    w = weyl.from_word(word, 4)
    assert weyl.length(w) <= len(word)
    assert weyl.from_word(weyl.reduced_word(w), 4) == w
    assert weyl.min_coset_rep(w, (2, 1, 1, 0)) in weyl.coset_reps((2, 1, 1, 0))
