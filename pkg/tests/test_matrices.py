import json

import pytest

from crystal_cauchy import weyl
from crystal_cauchy.demazure import atom, opposite_demazure_crystal
from crystal_cauchy.lspath import order_geq, psi
from crystal_cauchy.matrices import (COL, ROW, InternalInconsistency, bicrystal_op, biword_matrix, classify_low,
                                     col_word, diag, diagonal_op, diagonal_partition, format_matrix, is_lower,
                                     matrices_with_sum, matrix_biword, parse_matrix, raise_to_highest, row_word,
                                     rsk, transpose, unit_matrix, zero_matrix)
from crystal_cauchy.words import LOWER, RAISE
from oracles import row_insert, rsk_standard


def all_matrices(max_n, max_sum, lower=False):
    for n in range(1, max_n + 1):
        for s in range(max_sum + 1):
            yield from matrices_with_sum(s, n, lower_only=lower)


def test_biword_examples():
    assert matrix_biword(diag((2, 1))) == ((1, 1, 2), (1, 1, 2))
    assert matrix_biword(zero_matrix(2)) == ((), ())
    assert matrix_biword(((0, 1), (1, 0))) == ((2, 1), (1, 2))
    with pytest.raises(ValueError):
        biword_matrix((1, 2), (1, 1), 2)


def test_biword_roundtrip_exhaustive():
    for m in all_matrices(3, 3):
        a, b = matrix_biword(m)
        assert biword_matrix(a, b, len(m)) == m
        assert col_word(m) == row_word(transpose(m))


def test_bicrystal_op_examples():
    assert bicrystal_op(((0, 1), (1, 0)), 1, RAISE, ROW) == ((1, 1), (0, 0))
    assert bicrystal_op(unit_matrix(2, 1, 2), 1, LOWER, COL) == unit_matrix(2, 2, 2)
    for lam in [(2, 1, 0), (1, 1, 0), (3, 0, 0)]:
        for side in (ROW, COL):
            assert all(bicrystal_op(diag(lam), i, RAISE, side) is None for i in (1, 2))
    with pytest.raises(IndexError):
        bicrystal_op(diag((1, 0)), 2, RAISE, ROW)
    with pytest.raises(ValueError):
        bicrystal_op(diag((1, 0)), 1, RAISE, "diagonal")


def test_diagonal_op_examples():
    assert diagonal_op(unit_matrix(2, 1, 2), 1, RAISE) == unit_matrix(1, 1, 2)
    assert diagonal_op(unit_matrix(2, 2, 2), 1, LOWER) is None
    assert diagonal_op(unit_matrix(1, 1, 2), 1, LOWER) == unit_matrix(2, 1, 2)


def test_rsk_examples():
    p, q = rsk(diag((2, 1, 0)))
    assert p.rows == q.rows == ((1, 1), (2,))
    p, q = rsk(((0, 1), (1, 0)))
    assert p.rows == q.rows == ((1, 2),) and p.shape == (2, 0)
    p, q = rsk(unit_matrix(2, 1, 2))
    assert (p.rows, q.rows) == (((2,),), ((1,),))


def test_rsk_against_insertion_oracles():
    for m in all_matrices(3, 4):
        p, q = rsk(m)
        assert p.rows == row_insert(reversed(row_word(m)))
        assert q.rows == row_insert(reversed(col_word(m)))
        # the crystal convention orders the biword with one index reversed
        std_p, std_q = rsk_standard(m[::-1])
        assert tuple(map(len, std_p)) == tuple(x for x in p.shape if x)
        rt, qt = rsk(transpose(m))
        assert (rt, qt) == (q, p)
        assert p.weight == tuple(map(sum, m)) and q.weight == tuple(map(sum, transpose(m)))


def test_rsk_is_a_bijection_onto_pairs():
    for n in (2, 3):
        for s in range(4):
            images = [rsk(m) for m in matrices_with_sum(s, n)]
            assert len(set(images)) == len(images)
            from crystal_cauchy.words import enumerate_crystal
            expected = sum(len(enumerate_crystal(tuple(lam))) ** 2 for lam in weyl.partitions_of(s, n))
            assert len(images) == expected


def test_raise_to_highest_examples():
    assert raise_to_highest(diag((2, 1))) == ((2, 1), ())
    lam, script = raise_to_highest(unit_matrix(2, 1, 2))
    assert lam == (1, 0) and script == ((1, ROW),)
    lam, script = raise_to_highest(unit_matrix(2, 2, 2))
    assert lam == (1, 0) and script == ((1, COL), (1, ROW))


def test_entry_sum_one_diagonal_graph():
    """Brute-force the diagonal raising graph on matrices of entry sum 1 (n = 2)."""
    edges = {}
    for m in matrices_with_sum(1, 2):
        edges[m] = diagonal_op(m, 1, RAISE)
    assert edges[unit_matrix(2, 2, 2)] == unit_matrix(2, 1, 2)
    assert edges[unit_matrix(2, 1, 2)] == unit_matrix(1, 1, 2)
    assert edges[unit_matrix(1, 1, 2)] is None
    assert edges[unit_matrix(1, 2, 2)] is None


def test_classify_examples():
    lam, w, p, q = classify_low(unit_matrix(1, 1, 2))
    assert (lam, w, p.rows, q.rows) == ((1, 0), (1, 2), ((1,),), ((1,),))
    lam, w, p, q = classify_low(unit_matrix(2, 1, 2))
    assert (lam, w, p.rows, q.rows) == ((1, 0), (1, 2), ((2,),), ((1,),))
    lam, w, p, q = classify_low(unit_matrix(2, 2, 2))
    assert (lam, w, p.rows, q.rows) == ((1, 0), (2, 1), ((2,),), ((2,),))
    with pytest.raises(ValueError):
        classify_low(unit_matrix(1, 2, 2))


@pytest.mark.parametrize("n", [2, 3])
def test_bicrystal_commutation(n):
    for s in range(4 if n == 3 else 5):
        for m in matrices_with_sum(s, n):
            for i in range(1, n):
                for j in range(1, n):
                    for d1 in (RAISE, LOWER):
                        for d2 in (RAISE, LOWER):
                            a = bicrystal_op(m, i, d1, ROW)
                            a = a and bicrystal_op(a, j, d2, COL)
                            b = bicrystal_op(m, j, d2, COL)
                            b = b and bicrystal_op(b, i, d1, ROW)
                            assert a == b


def test_components_contain_one_diagonal():
    for m in all_matrices(3, 3):
        reached = set()
        frontier = {m}
        while frontier:
            reached |= frontier
            nxt = set()
            for x in frontier:
                for i in range(1, len(m)):
                    for side in (ROW, COL):
                        for d in (RAISE, LOWER):
                            y = bicrystal_op(x, i, d, side)
                            if y is not None and y not in reached:
                                nxt.add(y)
            frontier = nxt
        diagonals = [x for x in reached if diagonal_partition(x) is not None]
        assert len(diagonals) == 1
        assert diagonal_partition(diagonals[0]) == rsk(m)[0].shape


def test_low_closure_and_extremal_elements():
    for m in all_matrices(3, 4, lower=True):
        n = len(m)
        for i in range(1, n):
            for d in (RAISE, LOWER):
                r = diagonal_op(m, i, d)
                assert r is None or is_lower(r)
        extremal = all(diagonal_op(m, i, RAISE) is None for i in range(1, n))
        assert extremal == (diagonal_partition(m) is not None)


def test_diagonal_structure_matches_kappa_image():
    """diagonal_op moves rsk(M) by the tensor rule on P (x) Q."""
    from crystal_cauchy.words import stats
    for m in all_matrices(3, 3):
        n = len(m)
        p, q = rsk(m)
        for i in range(1, n):
            r = diagonal_op(m, i, RAISE)
            first = stats(p.reading_word, n).phi[i - 1] >= stats(q.reading_word, n).eps[i - 1]
            if r is None:
                continue
            rp, rq = rsk(r)
            assert (rq == q) if first else (rp == p)


def test_classify_hits_every_cell_element_once():
    for n in (2, 3):
        for s in range(4):
            seen = {}
            for m in matrices_with_sum(s, n, lower_only=True):
                lam, w, p, q = classify_low(m)
                assert (lam, w, p, q) not in seen
                seen[(lam, w, p, q)] = m
                assert p in opposite_demazure_crystal(lam, w) and q in atom(lam, w)
                assert order_geq(psi(p).tau, psi(q).iota, lam)
            target = {(tuple(lam), w, p, q)
                      for lam in weyl.partitions_of(s, n)
                      for w in weyl.coset_reps(tuple(lam))
                      for p in opposite_demazure_crystal(tuple(lam), w).elements
                      for q in atom(tuple(lam), w).elements}
            assert set(seen) == target


def test_parse_and_format():
    assert parse_matrix("0,0;1,0") == ((0, 0), (1, 0))
    assert parse_matrix("[[1,2],[3,4]]") == ((1, 2), (3, 4))
    assert format_matrix(((1, 2), (3, 4))) == "1,2;3,4"
    assert parse_matrix(format_matrix(((5, 0), (0, 7)))) == ((5, 0), (0, 7))
    assert json.loads(json.dumps([list(r) for r in parse_matrix("1,0;2,3")])) == [[1, 0], [2, 3]]
    for bad in ("1,2;3", "a,b;c,d", "1,-1;0,0"):
        with pytest.raises(ValueError):
            parse_matrix(bad)


def test_internal_error_type():
    assert issubclass(InternalInconsistency, RuntimeError)
