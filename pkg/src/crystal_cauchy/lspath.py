"""
Lakshmibai-Seshadri paths of class lambda for gl_n.

A path is stored as its directions ``nus = (nu_1, ..., nu_s)`` in the orbit
``W lambda`` together with cut points ``0 = a_0 < a_1 < ... < a_s = 1``; it
moves with velocity ``nu_k`` on ``[a_{k-1}, a_k]``. So ``len(cuts) ==
len(nus) + 1``, ``iota = nus[0]`` and ``tau = nus[-1]``.

Orbit order: ``nu >= mu`` when ``mu`` is reached from ``nu`` by reflections
``s_beta`` with ``<current, h_beta> < 0``. Each such step moves toward the
dominant chamber, so ``lambda`` is the minimum and ``w_0 lambda`` the maximum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from . import weyl
from .plpath import PLPath, format_frac, frac, from_segments
from .words import LOWER, RAISE, Tableau, _check_dir, _check_index, tableau_op, tableau_to_highest


class LSPathError(ValueError):
    pass


class NotInOrbitError(LSPathError):
    pass


class CutsError(LSPathError):
    pass


class UnorderedDirectionsError(LSPathError):
    pass


class MissingChainError(LSPathError):
    pass


# ------------------------------------------------------------ orbit poset

def _down_steps(nu: tuple) -> Iterator[tuple]:
    """``(mu, pairing)`` for each reflection s_beta with <nu, h_beta> < 0."""
    n = len(nu)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            p = weyl.root_pairing(nu, a, b)
            if p < 0:
                yield weyl.reflect(nu, a, b), p


@lru_cache(maxsize=None)
def _longest_from(nu: tuple) -> dict:
    """Longest reflection-chain length from ``nu`` to everything below it."""
    best = {nu: 0}
    for mu, _ in _down_steps(nu):
        for rho, d in _longest_from(mu).items():
            if best.get(rho, -1) < d + 1:
                best[rho] = d + 1
    return best


def _check_orbit(lam, *weights) -> None:
    orb = weyl.orbit(tuple(lam))
    for mu in weights:
        if tuple(mu) not in orb:
            raise NotInOrbitError(f"{tuple(mu)} is not in the W-orbit of {tuple(lam)}")


def dist(nu, mu, lam) -> int | None:
    """Maximal length of a chain from ``nu`` down to ``mu``; None if ``nu >= mu`` fails."""
    _check_orbit(lam, nu, mu)
    return _longest_from(tuple(nu)).get(tuple(mu))


def order_geq(nu, mu, lam) -> bool:
    return dist(nu, mu, lam) is not None


def order_gt(nu, mu, lam) -> bool:
    return tuple(nu) != tuple(mu) and order_geq(nu, mu, lam)


@lru_cache(maxsize=None)
def has_a_chain(nu: tuple, mu: tuple, a: Fraction) -> bool:
    """Is there a chain of covers nu > ... > mu with ``a * <current, h_beta>`` integral?"""
    if nu == mu:
        return True
    below = _longest_from(nu)
    if mu not in below:
        return False
    for rho, p in _down_steps(nu):
        if below[rho] != 1 or (a * p).denominator != 1:
            continue
        if mu in _longest_from(rho) and has_a_chain(rho, mu, a):
            return True
    return False


# --------------------------------------------------------------- LS paths

@dataclass(frozen=True)
class LSPath:
    lam: tuple
    nus: tuple
    cuts: tuple

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def iota(self) -> tuple:
        return self.nus[0]

    @property
    def tau(self) -> tuple:
        return self.nus[-1]

    def to_plpath(self) -> PLPath:
        durations = [b - a for a, b in zip(self.cuts, self.cuts[1:])]
        return from_segments(durations, self.nus)

    def __call__(self, t) -> tuple:
        return self.to_plpath()(t)

    @property
    def endpoint(self) -> tuple:
        return self.to_plpath().endpoint

    def to_json(self) -> dict:
        return {"nus": [[_num(x) for x in nu] for nu in self.nus],
                "cuts": [format_frac(a) for a in self.cuts]}

    @classmethod
    def from_json(cls, data: dict, lam) -> "LSPath":
        return validate_ls([tuple(frac(x) for x in nu) for nu in data["nus"]],
                           [frac(a) for a in data["cuts"]], lam)

    def __str__(self):
        nus = "; ".join(",".join(format_frac(x) for x in nu) for nu in self.nus)
        return f"({nus} | {', '.join(format_frac(a) for a in self.cuts)})"


def _num(x):
    x = frac(x)
    return int(x) if x.denominator == 1 else format_frac(x)


def _canon_weight(nu) -> tuple:
    out = []
    for x in nu:
        x = frac(x)
        out.append(int(x) if x.denominator == 1 else x)
    return tuple(out)


def validate_ls(nus, cuts, lam) -> LSPath:
    """Build an LS path of class ``lam`` or raise the matching :class:`LSPathError`."""
    lam = tuple(lam)
    nus = tuple(_canon_weight(nu) for nu in nus)
    cuts = tuple(frac(a) for a in cuts)
    if not nus:
        raise UnorderedDirectionsError("an LS path needs at least one direction")
    if len(cuts) != len(nus) + 1 or cuts[0] != 0 or cuts[-1] != 1:
        raise CutsError(f"cuts must be 0 < ... < 1 with one more entry than directions, got {cuts}")
    if any(a >= b for a, b in zip(cuts, cuts[1:])):
        raise CutsError(f"cuts {cuts} are not strictly increasing")
    _check_orbit(lam, *nus)
    for k in range(1, len(nus)):
        if not order_gt(nus[k - 1], nus[k], lam):
            raise UnorderedDirectionsError(f"{nus[k - 1]} > {nus[k]} fails in the orbit order")
    for k in range(1, len(nus)):
        if not has_a_chain(nus[k - 1], nus[k], cuts[k]):
            raise MissingChainError(
                f"no {format_frac(cuts[k])}-chain for ({nus[k - 1]}, {nus[k]})")
    return LSPath(lam, nus, cuts)


def straight_path(lam) -> LSPath:
    """pi_lambda."""
    lam = tuple(lam)
    return LSPath(lam, (lam,), (Fraction(0), Fraction(1)))


def from_plpath(p: PLPath, lam) -> LSPath:
    """Read off directions and cuts; no a-chain validation."""
    return LSPath(tuple(lam), tuple(_canon_weight(v) for v in p.velocities()), p.times)


# -------------------------------------------------------------- operators

def _with_times(p: PLPath, extra) -> tuple[list, list]:
    """Breakpoint lists of ``p`` refined by the times in ``extra``."""
    ts = sorted(set(p.times) | set(extra))
    return ts, [p(t) for t in ts]


def _crossing(t0, t1, l0, l1, target):
    return t0 + (target - l0) / (l1 - l0) * (t1 - t0)


def discrete_op(p: PLPath, i: int, direction: str) -> PLPath | None:
    """Littelmann's root operators on a piecewise-linear path.

    Raising: ``t1`` is the first time the level ``<pi(t), h_i>`` hits its
    minimum ``h``, ``t0 <= t1`` the last time before it at ``h + 1``.
    Lowering: ``t0`` is the last time at ``h``, ``t1 >= t0`` the first time
    after it at ``h + 1``. The piece on ``[t0, t1]`` is reflected by ``s_i``
    and the tail is translated by ``+alpha_i`` or ``-alpha_i``.
    """
    n = p.dim
    L = p.level(i)
    h = min(L)
    times = p.times
    if direction == RAISE:
        if h > -1:
            return None
        k1 = L.index(h)
        t1 = times[k1]
        t0 = None
        for k in range(k1, 0, -1):
            if L[k - 1] == h + 1:
                t0 = times[k - 1]
                break
            if min(L[k - 1], L[k]) < h + 1 < max(L[k - 1], L[k]):
                t0 = _crossing(times[k - 1], times[k], L[k - 1], L[k], h + 1)
                break
        shift = 1
    else:
        if L[-1] - h < 1:
            return None
        k0 = len(L) - 1 - L[::-1].index(h)
        t0 = times[k0]
        t1 = None
        for k in range(k0, len(L) - 1):
            if L[k + 1] == h + 1:
                t1 = times[k + 1]
                break
            if min(L[k], L[k + 1]) < h + 1 < max(L[k], L[k + 1]):
                t1 = _crossing(times[k], times[k + 1], L[k], L[k + 1], h + 1)
                break
        shift = -1
    if t0 is None or t1 is None:
        raise RuntimeError("level crossing not found; path is not integral")
    ts, vs = _with_times(p, (t0, t1))
    alpha = weyl.simple_root(i, n)
    base = p(t0)
    base_level = weyl.pairing(base, i)
    new = []
    for t, v in zip(ts, vs):
        if t <= t0:
            new.append(v)
        elif t <= t1:
            c = weyl.pairing(v, i) - base_level
            new.append(weyl.sub(v, weyl.scale(c, alpha)))
        else:
            new.append(weyl.add(v, weyl.scale(shift, alpha)))
    return PLPath(tuple(ts), tuple(new))


def path_op(pi: LSPath, i: int, direction: str) -> LSPath | None:
    _check_index(i, pi.n)
    _check_dir(direction)
    q = discrete_op(pi.to_plpath(), i, direction)
    return None if q is None else from_plpath(q, pi.lam)


def path_to_highest(pi: LSPath) -> tuple[LSPath, tuple[int, ...]]:
    script = []
    while True:
        for i in range(1, pi.n):
            q = path_op(pi, i, RAISE)
            if q is not None:
                pi = q
                script.append(i)
                break
        else:
            return pi, tuple(script)


def iota_tau(pi: LSPath) -> tuple[tuple, tuple]:
    return pi.iota, pi.tau


# ------------------------------------------------------------ psi_lambda

def psi(t: Tableau, lam=None) -> LSPath:
    """The crystal isomorphism B(lambda) -> LS paths with v_lambda -> pi_lambda."""
    top, script = tableau_to_highest(t)
    if lam is not None and tuple(lam) != top.shape:
        raise ValueError(f"tableau of shape {top.shape} is not in B({tuple(lam)})")
    pi = straight_path(top.shape)
    for i in reversed(script):
        pi = path_op(pi, i, LOWER)
        if pi is None:
            raise RuntimeError(f"replay of {script} failed on pi_{top.shape}")
    return pi


def psi_inv(pi: LSPath) -> Tableau:
    top, script = path_to_highest(pi)
    if top != straight_path(pi.lam):
        raise ValueError(f"{pi} does not raise to pi_lambda")
    t = Tableau.highest(pi.lam, pi.n)
    for i in reversed(script):
        t = tableau_op(t, i, LOWER)
        if t is None:
            raise RuntimeError(f"replay of {script} failed on v_{pi.lam}")
    return t


# ------------------------------------------------------------ enumeration

@lru_cache(maxsize=None)
def path_crystal(lam: tuple) -> frozenset:
    """Closure of pi_lambda under all lowering operators."""
    start = straight_path(lam)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for pi in frontier:
            for i in range(1, len(lam)):
                q = path_op(pi, i, LOWER)
                if q is not None and q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(seen)


def all_ls_paths(lam) -> set[LSPath]:
    """Every LS path of class ``lam``, by brute-force search over chains and cuts.

    Any cut ``a`` with an ``a``-chain satisfies ``a * p`` integral for some
    pairing ``0 < |p| <= lam_1 - lam_n``, which bounds the denominators.
    """
    lam = tuple(lam)
    spread = lam[0] - lam[-1] if lam else 0
    cands = sorted({Fraction(p, q) for q in range(1, spread + 1) for p in range(1, q)})
    orb = sorted(weyl.orbit(lam))
    out = set()

    def extend(nus, cuts):
        out.add(validate_ls(nus, cuts + [Fraction(1)], lam))
        last = nus[-1]
        for a in cands:
            if a <= cuts[-1]:
                continue
            for mu in orb:
                if order_gt(last, mu, lam) and has_a_chain(last, mu, a):
                    extend(nus + [mu], cuts + [a])

    for nu in orb:
        extend([nu], [Fraction(0)])
    return out
