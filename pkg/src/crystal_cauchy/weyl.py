"""
Root datum of gl_n: weights, partitions, and the symmetric group S_n acting
as the Weyl group.

Weights are plain tuples of length n (coefficients of e_1..e_n). Entries are
usually ints; the continuous crystal code reuses the orbit machinery with
``Fraction`` entries, so nothing here assumes integrality.

Permutations are 1-based one-line tuples: ``w[k-1]`` is the image of ``k``.
``w . mu`` moves coordinate ``k`` of ``mu`` to position ``w(k)``, so the simple
transposition ``s_i`` swaps coordinates ``i`` and ``i + 1``.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import permutations
from typing import Iterator, NewType, Sequence

Weight = tuple
Partition = NewType("Partition", tuple)
Permutation = NewType("Permutation", tuple)


# ---------------------------------------------------------------- weights

def zero_weight(n: int) -> Weight:
    return (0,) * n


def unit(k: int, n: int) -> Weight:
    """The weight e_k (1-based)."""
    return tuple(1 if j == k - 1 else 0 for j in range(n))


def simple_root(i: int, n: int) -> Weight:
    """alpha_i = e_i - e_{i+1}."""
    return tuple(1 if j == i - 1 else -1 if j == i else 0 for j in range(n))


def add(mu: Weight, nu: Weight) -> Weight:
    return tuple(a + b for a, b in zip(mu, nu))


def sub(mu: Weight, nu: Weight) -> Weight:
    return tuple(a - b for a, b in zip(mu, nu))


def scale(c, mu: Weight) -> Weight:
    return tuple(c * a for a in mu)


def pairing(mu: Weight, i: int):
    """<mu, h_i> = mu_i - mu_{i+1}."""
    return mu[i - 1] - mu[i]


def root_pairing(mu: Weight, a: int, b: int):
    """<mu, h_beta> for the positive root beta = e_a - e_b, a < b."""
    return mu[a - 1] - mu[b - 1]


def is_dominant(mu: Weight) -> bool:
    return all(mu[k] >= mu[k + 1] for k in range(len(mu) - 1))


def partition(parts: Sequence[int], n: int | None = None) -> Partition:
    """Validate and right-pad ``parts`` to a partition with ``n`` parts."""
    parts = tuple(int(p) for p in parts)
    if n is None:
        n = len(parts)
    if len(parts) > n:
        if any(parts[n:]):
            raise ValueError(f"partition {parts} has more than {n} nonzero parts")
        parts = parts[:n]
    parts = parts + (0,) * (n - len(parts))
    if any(p < 0 for p in parts) or not is_dominant(parts):
        raise ValueError(f"{parts} is not a weakly decreasing list of nonnegative integers")
    return Partition(parts)


def parse_partition(text: str, n: int | None = None) -> Partition:
    """Parse ``"2,1,0"``."""
    try:
        parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return partition(parts, n)


def partitions_of(total: int, n: int) -> Iterator[Partition]:
    """Partitions of ``total`` with at most ``n`` parts, in reverse lex order."""

    def rec(remaining, max_part, slots):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        for p in range(min(remaining, max_part), -1, -1):
            if p * slots < remaining:
                break
            for rest in rec(remaining - p, p, slots - 1):
                yield (p,) + rest

    for parts in rec(total, total, n):
        yield Partition(parts)


def partitions_up_to(total: int, n: int) -> Iterator[Partition]:
    for s in range(total + 1):
        yield from partitions_of(s, n)


# ----------------------------------------------------------- permutations

def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def simple(i: int, n: int) -> Permutation:
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a simple reflection of S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(tuple(w))


def longest(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def check_permutation(w: Sequence[int]) -> Permutation:
    w = tuple(int(k) for k in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation in one-line notation")
    return Permutation(w)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """The product ``uv`` acting as ``u(v(k))``."""
    return Permutation(tuple(u[v[k] - 1] for k in range(len(v))))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for k, image in enumerate(w, start=1):
        inv[image - 1] = k
    return Permutation(tuple(inv))


def length(w: Permutation) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def act(w: Permutation, mu: Weight) -> Weight:
    out = [None] * len(mu)
    for k, image in enumerate(w):
        out[image - 1] = mu[k]
    return tuple(out)


def reflect(mu: Weight, a: int, b: int) -> Weight:
    """s_beta(mu) for beta = e_a - e_b: swap coordinates a and b."""
    out = list(mu)
    out[a - 1], out[b - 1] = out[b - 1], out[a - 1]
    return tuple(out)


def from_word(word: Sequence[int], n: int) -> Permutation:
    """s_{i_1} s_{i_2} ... s_{i_k} for ``word = (i_1, ..., i_k)``."""
    w = identity(n)
    for i in word:
        w = compose(w, simple(i, n))
    return w


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Reduced word ``(i_1, ..., i_l)`` with ``w = s_{i_1} ... s_{i_l}``.

    Greedy: peel off the smallest left descent at each step.
    """
    n = len(w)
    word = []
    cur = w
    while True:
        pos = inverse(cur)
        for i in range(1, n):
            if pos[i - 1] > pos[i]:
                word.append(i)
                cur = compose(simple(i, n), cur)
                break
        else:
            return tuple(word)


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n ordered by (length, one-line window)."""
    return sorted((Permutation(p) for p in permutations(range(1, n + 1))),
                  key=lambda p: (length(p), p))


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Bruhat order via the tableau criterion.

    ``u <= v`` iff for every k the sorted prefix ``u(1..k)`` is entrywise
    <= the sorted prefix ``v(1..k)``.
    """
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    for k in range(1, len(u)):
        if any(a > b for a, b in zip(sorted(u[:k]), sorted(v[:k]))):
            return False
    return True


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse one-line (``"231"`` or ``"2,3,1"``) or generator words (``"s1*s2"``, ``"e"``)."""
    text = text.strip()
    if text in ("e", "id", ""):
        return identity(n)
    if text.startswith("s"):
        toks = [t for t in re.split(r"[*\s]+", text) if t]
        word = []
        for tok in toks:
            m = re.fullmatch(r"s_?(\d+)", tok)
            if not m:
                raise ValueError(f"cannot parse generator {tok!r} in {text!r}")
            word.append(int(m.group(1)))
        return from_word(word, n)
    if "," in text:
        digits = [int(t) for t in text.split(",")]
    elif text.isdigit():
        digits = [int(c) for c in text]
    else:
        raise ValueError(f"cannot parse permutation {text!r}")
    w = check_permutation(digits)
    if len(w) != n:
        raise ValueError(f"permutation {text!r} is not in S_{n}")
    return w


def format_permutation(w: Permutation) -> str:
    if len(w) <= 9:
        return "".join(str(k) for k in w)
    return ",".join(str(k) for k in w)


# ------------------------------------------------------------ cosets, orbits

def stabilizer_and_coset_reps(lam: Weight) -> tuple[tuple[int, ...], list[Permutation]]:
    """Generators of W_lam and the minimal-length representatives of W/W_lam.

    A representative ``w`` is minimal iff ``w(i) < w(i+1)`` whenever
    ``s_i`` fixes ``lam``. Representatives come ordered by (length, window).
    """
    n = len(lam)
    gens = tuple(i for i in range(1, n) if lam[i - 1] == lam[i])
    reps = [w for w in all_permutations(n) if all(w[i - 1] < w[i] for i in gens)]
    return gens, reps


@lru_cache(maxsize=None)
def coset_reps(lam: Weight) -> tuple[Permutation, ...]:
    return tuple(stabilizer_and_coset_reps(lam)[1])


def orbit(lam: Weight) -> set[Weight]:
    return {act(w, lam) for w in coset_reps(tuple(lam))}


@lru_cache(maxsize=None)
def _rep_by_weight(lam: Weight) -> dict:
    return {act(w, lam): w for w in coset_reps(lam)}


def rep_for_weight(mu: Weight, lam: Weight) -> Permutation:
    """The minimal coset representative ``w`` with ``w lam = mu``."""
    try:
        return _rep_by_weight(tuple(lam))[tuple(mu)]
    except KeyError:
        raise ValueError(f"{mu} is not in the W-orbit of {lam}") from None


def is_min_coset_rep(w: Permutation, lam: Weight) -> bool:
    return all(w[i - 1] < w[i] for i in range(1, len(lam)) if lam[i - 1] == lam[i])


def min_coset_rep(w: Permutation, lam: Weight) -> Permutation:
    return rep_for_weight(act(w, lam), lam)
