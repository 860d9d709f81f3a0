"""
Nonnegative integer matrices as a (gl_n, gl_n)-bicrystal, RSK, and the
lower triangular subcrystal of the diagonal structure.

A matrix ``M`` is encoded by its biword: pairs ``(i, j)`` repeated ``m_ij``
times, sorted by column ``j`` ascending and, within a column, by row ``i``
descending. Its top row is the *row word* ``a``; the row word of the
transpose is the *column word* ``c``. Row operators act through ``a``,
column operators through ``c``, and the diagonal structure treats ``M`` as
``a (x) c``.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from . import weyl
from .lspath import order_geq, psi
from .words import RAISE, Tableau, _check_dir, _check_index, _locate, stats, word_to_tableau

Matrix = tuple  # tuple of row tuples

ROW = "row"
COL = "col"


class InternalInconsistency(RuntimeError):
    """A structural fact that must hold failed; indicates a bug."""


# ------------------------------------------------------------ basic matrices

def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    m = tuple(tuple(r) for r in rows)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    if any(x < 0 for r in m for x in r):
        raise ValueError("matrix entries must be nonnegative")
    return m


def zero_matrix(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


def diag(entries: Sequence) -> Matrix:
    n = len(entries)
    return tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))


def unit_matrix(i: int, j: int, n: int) -> Matrix:
    """e_ij (1-based)."""
    return tuple(tuple(1 if (r, c) == (i - 1, j - 1) else 0 for c in range(n)) for r in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else m


def is_lower(m: Matrix) -> bool:
    return all(m[i][j] == 0 for i in range(len(m)) for j in range(i + 1, len(m)))


def is_upper(m: Matrix) -> bool:
    return is_lower(transpose(m))


def entry_sum(m: Matrix):
    return sum(sum(r) for r in m)


def diagonal_partition(m: Matrix) -> tuple | None:
    """lambda if ``m = M_lambda = diag(lambda)`` with lambda a partition, else None."""
    n = len(m)
    if any(m[i][j] for i in range(n) for j in range(n) if i != j):
        return None
    lam = tuple(m[i][i] for i in range(n))
    return lam if weyl.is_dominant(lam) else None


def parse_matrix(text: str) -> Matrix:
    """``"r1c1,r1c2;r2c1,r2c2"`` or JSON ``[[...],[...]]``."""
    text = text.strip()
    try:
        if text.startswith("["):
            import json
            return as_matrix(json.loads(text))
        rows = [[int(x) for x in row.split(",")] for row in text.split(";")]
    except (ValueError, TypeError) as exc:
        raise ValueError(f"cannot parse matrix {text!r}: {exc}") from None
    return as_matrix(rows)


def format_matrix(m: Matrix) -> str:
    return ";".join(",".join(str(x) for x in r) for r in m)


def matrices_with_sum(total: int, n: int, lower_only: bool = False) -> Iterator[Matrix]:
    """All n x n nonnegative integer matrices with the given entry sum."""
    cells = [(i, j) for i in range(n) for j in range(n) if not (lower_only and j > i)]

    def compositions(k, parts):
        if parts == 1:
            yield (k,)
            return
        for first in range(k, -1, -1):
            for rest in compositions(k - first, parts - 1):
                yield (first,) + rest

    for comp in compositions(total, len(cells)):
        m = [[0] * n for _ in range(n)]
        for (i, j), x in zip(cells, comp):
            m[i][j] = x
        yield tuple(tuple(r) for r in m)


# ------------------------------------------------------------------ biwords

def matrix_biword(m: Matrix) -> tuple[tuple, tuple]:
    n = len(m)
    a, b = [], []
    for j in range(n):
        for i in range(n - 1, -1, -1):
            a.extend([i + 1] * m[i][j])
            b.extend([j + 1] * m[i][j])
    return tuple(a), tuple(b)


def _biword_key(pair):
    a, b = pair
    return (b, -a)


def biword_matrix(a: Sequence[int], b: Sequence[int], n: int) -> Matrix:
    if len(a) != len(b):
        raise ValueError("biword rows differ in length")
    pairs = list(zip(a, b))
    if any(_biword_key(p) > _biword_key(q) for p, q in zip(pairs, pairs[1:])):
        raise ValueError(f"biword {tuple(a)}/{tuple(b)} is not sorted")
    m = [[0] * n for _ in range(n)]
    for x, y in pairs:
        if not (1 <= x <= n and 1 <= y <= n):
            raise ValueError(f"biword letter outside 1..{n}")
        m[x - 1][y - 1] += 1
    return tuple(tuple(r) for r in m)


def row_word(m: Matrix) -> tuple:
    return matrix_biword(m)[0]


def col_word(m: Matrix) -> tuple:
    return matrix_biword(transpose(m))[0]


# ---------------------------------------------------------------- operators

def _row_op(m: Matrix, i: int, direction: str) -> Matrix | None:
    a, b = matrix_biword(m)
    k = _locate(a, i, direction)
    if k is None:
        return None
    j = b[k] - 1
    src, dst = (i, i - 1) if direction == RAISE else (i - 1, i)  # 0-based rows
    rows = [list(r) for r in m]
    rows[src][j] -= 1
    rows[dst][j] += 1
    return tuple(tuple(r) for r in rows)


def bicrystal_op(m: Matrix, i: int, direction: str, side: str) -> Matrix | None:
    """Row operators (via the row word) or column operators (via the transpose)."""
    _check_index(i, len(m))
    _check_dir(direction)
    if side == ROW:
        return _row_op(m, i, direction)
    if side == COL:
        r = _row_op(transpose(m), i, direction)
        return None if r is None else transpose(r)
    raise ValueError(f"side must be {ROW!r} or {COL!r}, got {side!r}")


def diagonal_side(m: Matrix, i: int, direction: str) -> str:
    """Which factor of ``a (x) c`` the tensor rule selects."""
    n = len(m)
    sa, sc = stats(row_word(m), n), stats(col_word(m), n)
    phi_a, eps_c = sa.phi[i - 1], sc.eps[i - 1]
    first = phi_a >= eps_c if direction == RAISE else phi_a > eps_c
    return ROW if first else COL


def diagonal_op(m: Matrix, i: int, direction: str) -> Matrix | None:
    _check_index(i, len(m))
    _check_dir(direction)
    return bicrystal_op(m, i, direction, diagonal_side(m, i, direction))


def rsk(m: Matrix) -> tuple[Tableau, Tableau]:
    """kappa(M) = (b_a, b_c)."""
    n = len(m)
    p, q = word_to_tableau(row_word(m), n), word_to_tableau(col_word(m), n)
    if p.shape != q.shape:
        raise InternalInconsistency(f"RSK shapes differ for {m}: {p.shape} vs {q.shape}")
    return p, q


def raise_to_highest(m: Matrix) -> tuple[tuple, tuple]:
    """Diagonal raises, smallest index first, until none applies.

    Returns ``(lambda, script)`` with ``script`` a tuple of ``(i, side)``.
    The terminal matrix must be some ``M_lambda``.
    """
    n = len(m)
    script = []
    while True:
        for i in range(1, n):
            side = diagonal_side(m, i, RAISE)
            r = bicrystal_op(m, i, RAISE, side)
            if r is not None:
                m = r
                script.append((i, side))
                break
        else:
            break
    lam = diagonal_partition(m)
    if lam is None:
        raise InternalInconsistency(f"raising terminated at {m}, which is not diagonal dominant")
    return lam, tuple(script)


def classify_low(m: Matrix) -> tuple[tuple, tuple, Tableau, Tableau]:
    """``(lambda, w, P, Q)`` with ``Q`` in the atom of ``w`` and ``P`` in B^w(lambda)."""
    if not is_lower(m):
        raise ValueError(f"{format_matrix(m)} is not lower triangular")
    p, q = rsk(m)
    lam = p.shape
    pq, pp = psi(q), psi(p)
    w = weyl.rep_for_weight(pq.iota, lam)
    if not order_geq(pp.tau, weyl.act(w, lam), lam):
        raise InternalInconsistency(f"{format_matrix(m)}: P is not in B^w(lambda)")
    return lam, w, p, q
