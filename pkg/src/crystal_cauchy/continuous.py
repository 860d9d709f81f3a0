"""
Continuous crystals at rational scale.

Paths are exact :class:`PLPath` objects. The operator ``e^r_i`` of the
continuous path crystal moves ``pi(t)`` along ``alpha_i`` by an amount that
depends on the running infimum of the level ``<pi(s), h_i>``:

    r <= 0:  pi(t) - min(-r, inf_{[t,1]} L - m) alpha_i
    r >= 0:  pi(t) - min(0, -r - m + inf_{[0,t]} L) alpha_i

with ``m`` the global minimum of ``L``. Both formulas are pointwise in
``t``, so the time parametrization survives, which is what lets a matrix be
read back from ``e^r pi_M``. ``f^r`` is ``e^{-r}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from . import weyl
from .lspath import order_geq, order_gt
from .matrices import COL, ROW, is_lower, transpose
from .plpath import PLPath, concat, format_frac, frac, straight
from .words import _check_index

RatMatrix = tuple  # tuple of row tuples of Fractions


class BudgetExceeded(RuntimeError):
    """Continuous raising did not reach a diagonal matrix within the step budget."""

    def __init__(self, message: str, state):
        super().__init__(message)
        self.state = state


class NotContinuousLS(ValueError):
    pass


# ------------------------------------------------------------- path operators

def cont_eps(pi: PLPath, i: int) -> Fraction:
    return -min(pi.level(i))


def cont_phi(pi: PLPath, i: int) -> Fraction:
    L = pi.level(i)
    return L[-1] - min(L)


def _crossings(times, L, targets) -> set:
    """Times strictly inside a segment where the level equals a target."""
    out = set()
    for k in range(len(times) - 1):
        l0, l1 = L[k], L[k + 1]
        if l0 == l1:
            continue
        lo, hi = min(l0, l1), max(l0, l1)
        for c in targets:
            if lo < c < hi:
                out.add(times[k] + (c - l0) / (l1 - l0) * (times[k + 1] - times[k]))
    return out


def cont_op(pi: PLPath, i: int, r) -> PLPath | None:
    """``e^r_i pi``, or None outside ``-phi_i(pi) <= r <= eps_i(pi)``."""
    _check_index(i, pi.dim)
    r = frac(r)
    if r == 0:
        return pi
    L = pi.level(i)
    m = min(L)
    if not (m - L[-1] <= r <= -m):
        return None
    # refine so that running infima and the cap are linear between breakpoints
    targets = set(L) | {m + r, m - r}
    ts = sorted(set(pi.times) | _crossings(pi.times, L, targets))
    vs = [pi(t) for t in ts]
    lv = [weyl.pairing(v, i) for v in vs]
    if r < 0:
        suffix, run = [], lv[-1]
        for x in reversed(lv):
            run = min(run, x)
            suffix.append(run)
        suffix.reverse()
        g = [min(-r, s - m) for s in suffix]
    else:
        g, run = [], lv[0]
        for x in lv:
            run = min(run, x)
            g.append(min(Fraction(0), -r - m + run))
    alpha = weyl.simple_root(i, pi.dim)
    return PLPath(tuple(ts), tuple(weyl.sub(v, weyl.scale(c, alpha)) for v, c in zip(vs, g)))


def cont_lower(pi: PLPath, i: int, r) -> PLPath | None:
    return cont_op(pi, i, -frac(r))


def cont_tensor_op(pair: tuple[PLPath, PLPath], i: int, r) -> tuple[PLPath, PLPath] | None:
    """``e^r_i`` on ``b1 (x) b2`` by the continuous tensor rule."""
    b1, b2 = pair
    _check_index(i, b1.dim)
    r = frac(r)
    eps1, phi1 = cont_eps(b1, i), cont_phi(b1, i)
    eps2, phi2 = cont_eps(b2, i), cont_phi(b2, i)
    w1, w2 = weyl.pairing(b1.endpoint, i), weyl.pairing(b2.endpoint, i)
    eps = max(eps1, eps2 - w1)
    phi = max(phi1 + w2, phi2)
    if not (-phi <= r <= eps):
        return None
    d = eps2 - phi1
    r1 = max(r, d) - max(Fraction(0), d)
    r2 = min(r, d) + max(Fraction(0), -d)
    c1, c2 = cont_op(b1, i, r1), cont_op(b2, i, r2)
    if c1 is None or c2 is None:
        raise RuntimeError(f"tensor rule produced an inadmissible split ({r1}, {r2})")
    return c1, c2


def cont_to_highest(pi: PLPath) -> tuple[PLPath, tuple]:
    """Full raises ``e^{eps_i}``, smallest index first, until the path lies in the dominant chamber."""
    script = []
    while True:
        for i in range(1, pi.dim):
            e = cont_eps(pi, i)
            if e > 0:
                pi = cont_op(pi, i, e)
                script.append((i, e))
                break
        else:
            return pi, tuple(script)


# --------------------------------------------------- generalized LS data

@dataclass(frozen=True)
class ContLSDatum:
    lam: tuple
    nus: tuple
    cuts: tuple

    @property
    def iota(self) -> tuple:
        return self.nus[0]

    @property
    def tau(self) -> tuple:
        return self.nus[-1]


def cont_ls_datum(pi: PLPath, lam) -> ContLSDatum:
    """Read ``(nu_1 > ... > nu_s; 0 < a_1 < ... < 1)`` off a path.

    Every linear piece must move with a velocity in ``W lam`` and the
    velocities must strictly decrease in the orbit order. No integrality is
    imposed on the cuts.
    """
    lam = tuple(frac(x) for x in lam)
    orbit = set(weyl.orbit(lam))
    nus = pi.velocities()
    if all(x == 0 for x in lam):
        if any(any(x != 0 for x in v) for v in nus):
            raise NotContinuousLS("nonconstant path for the zero weight")
        return ContLSDatum(lam, (lam,), (Fraction(0), Fraction(1)))
    for v in nus:
        if v not in orbit:
            raise NotContinuousLS(f"velocity {tuple(map(format_frac, v))} is not in the orbit of {lam}")
    for a, b in zip(nus, nus[1:]):
        if not order_gt(a, b, lam):
            raise NotContinuousLS("directions do not strictly decrease")
    return ContLSDatum(lam, tuple(nus), tuple(pi.times))


def is_cont_ls(pi: PLPath, lam) -> bool:
    try:
        cont_ls_datum(pi, lam)
    except NotContinuousLS:
        return False
    return True


# ------------------------------------------------------------------ matrices

def as_rat_matrix(rows) -> RatMatrix:
    m = tuple(tuple(frac(x) for x in r) for r in rows)
    if any(len(r) != len(m) for r in m):
        raise ValueError("matrix must be square")
    if any(x < 0 for r in m for x in r):
        raise ValueError("matrix entries must be nonnegative")
    return m


def scale_matrix(m, c) -> RatMatrix:
    c = frac(c)
    return tuple(tuple(c * frac(x) for x in r) for r in m)


def _column_blocks(m: RatMatrix) -> tuple[PLPath, tuple]:
    """``pi_M`` plus the times at which each column's block ends."""
    n = len(m)
    pieces, ends = [], []
    for j in range(n):
        for i in range(n - 1, -1, -1):
            if m[i][j] != 0:
                pieces.append(straight(weyl.scale(m[i][j], weyl.unit(i + 1, n))))
        ends.append(len(pieces))
    if not pieces:
        return straight((0,) * n), tuple(Fraction(1) for _ in range(n))
    share = Fraction(1, len(pieces))
    return concat(*pieces), tuple(share * e for e in ends)


def build_pi_M(m) -> PLPath:
    """Columns left to right; inside column j the segments ``m_nj e_n, ..., m_1j e_1``."""
    return _column_blocks(as_rat_matrix(m))[0]


def _read_columns(p: PLPath, ends: Sequence) -> RatMatrix:
    cols, prev = [], p(0)
    for t in ends:
        cur = p(t)
        cols.append(weyl.sub(cur, prev))
        prev = cur
    return transpose(tuple(tuple(c) for c in cols))


def _row_side_op(m: RatMatrix, i: int, r) -> RatMatrix | None:
    p, ends = _column_blocks(m)
    q = cont_op(p, i, r)
    if q is None:
        return None
    out = _read_columns(q, ends)
    if any(x < 0 for row in out for x in row) or build_pi_M(out).trace() != q.trace():
        raise RuntimeError(f"e^{r}_{i} of pi_M is not of the form pi_M'")
    return out


def cont_matrix_op(m, i: int, r, side: str = ROW) -> RatMatrix | None:
    """``e^r_i M`` (row side) or ``(e^r_i)^# M = (e^r_i M^t)^t`` (column side)."""
    m = as_rat_matrix(m)
    _check_index(i, len(m))
    if side == ROW:
        return _row_side_op(m, i, r)
    if side == COL:
        out = _row_side_op(transpose(m), i, r)
        return None if out is None else transpose(out)
    raise ValueError(f"side must be {ROW!r} or {COL!r}, got {side!r}")


def matrix_eps(m, i: int, side: str = ROW) -> Fraction:
    m = as_rat_matrix(m)
    return cont_eps(build_pi_M(m if side == ROW else transpose(m)), i)


def _denominator(m: RatMatrix) -> int:
    return lcm(*(x.denominator for r in m for x in r))


def raise_budget(m: RatMatrix) -> int:
    n = len(m)
    return n * n * _denominator(m) * sum(sum(r) for r in m) + n


def _diagonal_weight(m: RatMatrix) -> tuple | None:
    n = len(m)
    if any(m[i][j] for i in range(n) for j in range(n) if i != j):
        return None
    lam = tuple(m[i][i] for i in range(n))
    return lam if weyl.is_dominant(lam) else None


def cont_raise_to_highest(m) -> tuple[tuple, tuple]:
    """Exhaust full row-side raises, then column-side ones, until neither applies.

    Returns ``(lam, script)`` where ``script`` lists ``(i, side, r)`` in the
    order applied; the terminal matrix is ``diag(lam)``.
    """
    m = as_rat_matrix(m)
    n = len(m)
    budget = int(raise_budget(m))
    script = []
    while True:
        moved = False
        for side in (ROW, COL):
            while True:
                for i in range(1, n):
                    e = matrix_eps(m, i, side)
                    if e > 0:
                        m = cont_matrix_op(m, i, e, side)
                        script.append((i, side, e))
                        moved = True
                        break
                else:
                    break
                if len(script) > budget:
                    raise BudgetExceeded(f"no diagonal matrix after {budget} raises", m)
        if not moved:
            break
    lam = _diagonal_weight(m)
    if lam is None:
        raise RuntimeError(f"raising stopped at a non-diagonal matrix {m}")
    return lam, tuple(script)


def cont_kappa(m) -> tuple[tuple, PLPath, PLPath]:
    """``(lam, pi, pi')`` by replaying the inverse raising script on ``(pi_lam, pi_lam)``."""
    lam, script = cont_raise_to_highest(m)
    first = second = straight(lam)
    for i, side, r in reversed(script):
        if side == ROW:
            first = cont_op(first, i, -r)
        else:
            second = cont_op(second, i, -r)
        if first is None or second is None:
            raise RuntimeError("inverse script left the crystal")
    return lam, first, second


@dataclass
class Main2Report:
    matrix: RatMatrix
    lam: tuple
    w: tuple
    first: PLPath
    second: PLPath
    first_ls: bool
    second_ls: bool
    in_cell: bool

    @property
    def ok(self) -> bool:
        return self.first_ls and self.second_ls and self.in_cell

    def to_json(self) -> dict:
        return {"matrix": [[format_frac(x) for x in r] for r in self.matrix],
                "lambda": [format_frac(x) for x in self.lam],
                "w": weyl.format_permutation(self.w),
                "first": self.first.to_json(), "second": self.second.to_json(),
                "ok": self.ok}


def verify_main2(m) -> Main2Report:
    """Check ``kappa(M)`` lies in ``B^w(lam) x atom_w(lam)`` with ``w lam = iota(second)``."""
    m = as_rat_matrix(m)
    if not is_lower(m):
        raise ValueError("matrix is not lower triangular")
    lam, first, second = cont_kappa(m)
    first_ls, second_ls = is_cont_ls(first, lam), is_cont_ls(second, lam)
    w, in_cell = weyl.identity(len(m)), False
    if first_ls and second_ls:
        d1, d2 = cont_ls_datum(first, lam), cont_ls_datum(second, lam)
        w = weyl.rep_for_weight(d2.iota, lam)
        in_cell = order_geq(d1.tau, d2.iota, lam)
    return Main2Report(m, lam, w, first, second, first_ls, second_ls, in_cell)


# ----------------------------------------------------------- random inputs

def random_fraction(rng: random.Random, max_num: int, max_den: int) -> Fraction:
    return Fraction(rng.randint(0, max_num * max_den), rng.randint(1, max_den))


def random_rat_matrix(rng: random.Random, n: int, max_den: int = 4, max_entry: int = 2,
                      lower: bool = False, density: float = 0.6) -> RatMatrix:
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if (lower and j > i) or rng.random() > density:
                row.append(Fraction(0))
            else:
                row.append(Fraction(rng.randint(0, max_entry * max_den), rng.randint(1, max_den)))
        rows.append(tuple(row))
    return tuple(rows)


def random_path(rng: random.Random, lam, steps: int = 4, max_den: int = 4) -> PLPath:
    """Random element of ``F(pi_lam)``: a few lowerings by rational amounts."""
    pi = straight(lam)
    n = len(lam)
    for _ in range(steps):
        i = rng.randint(1, n - 1)
        phi = cont_phi(pi, i)
        if phi == 0:
            continue
        den = rng.randint(1, max_den)
        r = Fraction(rng.randint(0, int(phi * den)), den)
        pi = cont_op(pi, i, -r)
    return pi
