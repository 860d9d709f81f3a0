"""
The crystal of words over [n] and the tableau crystal B(lambda).

Tensor convention: a word ``a_1 a_2 ... a_r`` is ``a_1 (x) a_2 (x) ... (x) a_r``
and the two-factor rule is

    e_i(b1 (x) b2) = e_i b1 (x) b2   if phi_i(b1) >= eps_i(b2), else b1 (x) e_i b2
    f_i(b1 (x) b2) = f_i b1 (x) b2   if phi_i(b1) >  eps_i(b2), else b1 (x) f_i b2

This is the convention under which ``"12"`` is highest weight of weight
(1, 1) and ``"21"`` lies in the component of the one-row tableau. Many
textbooks use the opposite order; everything downstream (the reading word,
RSK, Demazure sets) depends on this choice.

Tableaux are read column by column from right to left, each column from
top to bottom. With the convention above this makes the reading word of
the highest weight tableau a highest weight word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Literal, Sequence

from . import weyl

RAISE = "raise"
LOWER = "lower"
Direction = Literal["raise", "lower"]

Word = tuple


def _check_index(i: int, n: int) -> None:
    if not 1 <= i < n:
        raise IndexError(f"crystal index {i} out of range for gl_{n}")


def _check_dir(direction: str) -> None:
    if direction not in (RAISE, LOWER):
        raise ValueError(f"direction must be {RAISE!r} or {LOWER!r}, got {direction!r}")


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    return tuple(int(c) for c in text)


def format_word(a: Word) -> str:
    if all(1 <= x <= 9 for x in a):
        return "".join(str(x) for x in a)
    return ",".join(str(x) for x in a)


# ---------------------------------------------------------------- words

def _letter_eps_phi(x: int, i: int) -> tuple[int, int]:
    if x == i:
        return 0, 1
    if x == i + 1:
        return 1, 0
    return 0, 0


def _letter_pairing(x: int, i: int) -> int:
    return 1 if x == i else -1 if x == i + 1 else 0


def _prefix_phis(a: Word, i: int) -> list[int]:
    """phi_i of each prefix a_1..a_k, k = 0..r, folding the tensor rule."""
    phis = [0]
    phi = 0
    for x in a:
        eps_x, phi_x = _letter_eps_phi(x, i)
        phi = max(phi + _letter_pairing(x, i), phi_x)
        phis.append(phi)
    return phis


def _locate(a: Word, i: int, direction: str) -> int | None:
    """Position of the letter that e_i / f_i changes, or None for the zero element.

    Folds ``(((a_1 (x) a_2) (x) a_3) ...)``: walking from the right, the
    operator descends into the prefix while the rule selects the first factor.
    """
    phis = _prefix_phis(a, i)
    for k in range(len(a) - 1, -1, -1):
        eps_k, _ = _letter_eps_phi(a[k], i)
        if k == 0:
            go_left = False
        elif direction == RAISE:
            go_left = phis[k] >= eps_k
        else:
            go_left = phis[k] > eps_k
        if not go_left:
            target = i + 1 if direction == RAISE else i
            return k if a[k] == target else None
    return None


def word_op(a: Word, i: int, direction: Direction, n: int) -> Word | None:
    """Apply e_i (``"raise"``) or f_i (``"lower"``) to a word; None is the zero element."""
    _check_index(i, n)
    _check_dir(direction)
    k = _locate(a, i, direction)
    if k is None:
        return None
    new = i if direction == RAISE else i + 1
    return a[:k] + (new,) + a[k + 1:]


@dataclass(frozen=True)
class CrystalStats:
    wt: tuple
    eps: tuple
    phi: tuple


def stats(a: Word, n: int) -> CrystalStats:
    wt = [0] * n
    for x in a:
        wt[x - 1] += 1
    eps, phi = [], []
    for i in range(1, n):
        e = f = 0
        for x in a:
            ex, fx = _letter_eps_phi(x, i)
            # eps(b1 (x) b2) = max(eps b1, eps b2 - <wt b1, h_i>), with <wt b1, h_i> = f - e
            e, f = max(e, ex - (f - e)), max(f + _letter_pairing(x, i), fx)
        eps.append(e)
        phi.append(f)
    return CrystalStats(tuple(wt), tuple(eps), tuple(phi))


def raise_to_highest(a: Word, n: int) -> tuple[Word, tuple[int, ...]]:
    """Raise greedily (smallest index first) to a highest weight word.

    Returns the highest weight word and the sequence of indices applied.
    """
    script = []
    while True:
        for i in range(1, n):
            b = word_op(a, i, RAISE, n)
            if b is not None:
                a = b
                script.append(i)
                break
        else:
            return a, tuple(script)


# -------------------------------------------------------------- tableaux

@dataclass(frozen=True)
class Tableau:
    """A semistandard tableau with entries in [n]; ``rows`` omit empty rows."""

    rows: tuple
    n: int
    shape: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r) > 0)
        object.__setattr__(self, "rows", rows)
        if len(rows) > self.n:
            raise ValueError(f"tableau with {len(rows)} rows does not fit gl_{self.n}")
        shape = tuple(len(r) for r in rows) + (0,) * (self.n - len(rows))
        object.__setattr__(self, "shape", shape)
        if not weyl.is_dominant(shape):
            raise ValueError(f"row lengths {shape} are not a partition")
        for r in rows:
            if any(not 1 <= x <= self.n for x in r):
                raise ValueError(f"entries of {rows} must lie in 1..{self.n}")
            if any(r[c] > r[c + 1] for c in range(len(r) - 1)):
                raise ValueError(f"rows of {rows} must weakly increase")
        for k in range(len(rows) - 1):
            if any(rows[k][c] >= rows[k + 1][c] for c in range(len(rows[k + 1]))):
                raise ValueError(f"columns of {rows} must strictly increase")

    @classmethod
    def highest(cls, lam: Sequence[int], n: int | None = None) -> "Tableau":
        """v_lambda: row k filled with k."""
        n = len(lam) if n is None else n
        return cls(tuple((k + 1,) * p for k, p in enumerate(lam) if p), n)

    @classmethod
    def lowest(cls, lam: Sequence[int], n: int | None = None) -> "Tableau":
        """v_{w_0 lambda}: each column filled with the largest possible letters."""
        n = len(lam) if n is None else n
        conj = [sum(1 for p in lam if p > c) for c in range(lam[0] if lam else 0)]
        rows = [[0] * p for p in lam if p]
        for c, h in enumerate(conj):
            for r in range(h):
                rows[r][c] = n - h + 1 + r
        return cls(tuple(tuple(r) for r in rows), n)

    @cached_property
    def reading_positions(self) -> tuple:
        """Cells in reading order: columns right to left, each top to bottom."""
        width = len(self.rows[0]) if self.rows else 0
        return tuple((r, c) for c in range(width - 1, -1, -1)
                     for r in range(len(self.rows)) if c < len(self.rows[r]))

    @cached_property
    def reading_word(self) -> Word:
        return tuple(self.rows[r][c] for r, c in self.reading_positions)

    @property
    def weight(self) -> tuple:
        wt = [0] * self.n
        for r in self.rows:
            for x in r:
                wt[x - 1] += 1
        return tuple(wt)

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        return cls(tuple(tuple(r) for r in data["rows"]), len(data["shape"]))

    def __str__(self):
        return "/".join(",".join(str(x) for x in r) for r in self.rows) or "()"


def tableau_op(t: Tableau, i: int, direction: Direction) -> Tableau | None:
    _check_index(i, t.n)
    _check_dir(direction)
    k = _locate(t.reading_word, i, direction)
    if k is None:
        return None
    r, c = t.reading_positions[k]
    rows = [list(row) for row in t.rows]
    rows[r][c] = i if direction == RAISE else i + 1
    return Tableau(tuple(tuple(row) for row in rows), t.n)


def tableau_to_highest(t: Tableau) -> tuple[Tableau, tuple[int, ...]]:
    script = []
    while True:
        for i in range(1, t.n):
            u = tableau_op(t, i, RAISE)
            if u is not None:
                t = u
                script.append(i)
                break
        else:
            return t, tuple(script)


def word_to_tableau(a: Word, n: int) -> Tableau:
    """b_a: the tableau in the same position of its component as the word ``a``."""
    top, script = raise_to_highest(a, n)
    lam = stats(top, n).wt
    t = Tableau.highest(lam, n)
    for i in reversed(script):
        t = tableau_op(t, i, LOWER)
        if t is None:
            raise RuntimeError(f"replay of {script} failed on v_{lam}")
    return t


@lru_cache(maxsize=None)
def enumerate_crystal(lam: tuple, n: int | None = None) -> frozenset:
    """B(lambda): closure of v_lambda under all lowering operators."""
    n = len(lam) if n is None else n
    start = Tableau.highest(lam, n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            for i in range(1, n):
                u = tableau_op(t, i, LOWER)
                if u is not None and u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(seen)


def sorted_tableaux(ts: Iterable[Tableau]) -> list[Tableau]:
    return sorted(ts, key=lambda t: t.rows)
