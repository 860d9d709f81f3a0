"""
Demazure crystals, opposite Demazure crystals and their atoms inside the
tableau model of B(lambda), plus their characters.

Four kinds of sets, all indexed by (lambda, w):

    demazure        B_w(lambda)     closure of {v_lambda} under lowering
    opposite        B^w(lambda)     closure of {v_{w0 lambda}} under raising
    atom            B_w minus the B_{w'} with w' < w, w' lambda != w lambda
    opposite_atom   B^w minus the B^{w'} with w' > w, w' lambda != w lambda
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import weyl
from .lspath import order_geq, psi
from .poly import SparsePoly, poly_sum
from .words import LOWER, RAISE, Tableau, enumerate_crystal, sorted_tableaux, tableau_op

KINDS = ("demazure", "atom", "opposite", "opposite_atom")


class NotMinimalCosetRep(ValueError):
    pass


@dataclass(frozen=True)
class DemazureSet:
    lam: tuple
    w: tuple
    kind: str
    elements: frozenset

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(sorted_tableaux(self.elements))

    def __contains__(self, t):
        return t in self.elements

    @property
    def n(self) -> int:
        return len(self.lam)


def _string_closure(elements: Iterable[Tableau], i: int, direction: str) -> set:
    out = set(elements)
    frontier = list(out)
    while frontier:
        nxt = []
        for t in frontier:
            u = tableau_op(t, i, direction)
            if u is not None and u not in out:
                out.add(u)
                nxt.append(u)
        frontier = nxt
    return out


@lru_cache(maxsize=None)
def _demazure_elements(lam: tuple, w: tuple) -> frozenset:
    n = len(lam)
    current = {Tableau.highest(lam, n)}
    for i in reversed(weyl.reduced_word(w)):
        current = _string_closure(current, i, LOWER)
    return frozenset(current)


@lru_cache(maxsize=None)
def _opposite_elements(lam: tuple, w: tuple) -> frozenset:
    n = len(lam)
    # w = u w0 with l(w) = l(w0) - l(u); climb from w0 along a reduced word of u
    u = weyl.compose(w, weyl.longest(n))
    current = {Tableau.lowest(lam, n)}
    for i in reversed(weyl.reduced_word(u)):
        current = _string_closure(current, i, RAISE)
    return frozenset(current)


def demazure_crystal(lam, w) -> DemazureSet:
    lam, w = tuple(lam), tuple(w)
    return DemazureSet(lam, w, "demazure", _demazure_elements(lam, w))


def opposite_demazure_crystal(lam, w) -> DemazureSet:
    lam, w = tuple(lam), tuple(w)
    return DemazureSet(lam, w, "opposite", _opposite_elements(lam, w))


def _check_min_rep(lam, w) -> None:
    if not weyl.is_min_coset_rep(w, lam):
        raise NotMinimalCosetRep(
            f"{weyl.format_permutation(w)} is not a minimal coset representative for {lam}")


@lru_cache(maxsize=None)
def _atom_by_difference(lam: tuple, w: tuple, kind: str) -> frozenset:
    mu = weyl.act(w, lam)
    if kind == "atom":
        out = set(_demazure_elements(lam, w))
        for v in weyl.coset_reps(lam):
            if weyl.act(v, lam) != mu and weyl.bruhat_leq(v, w):
                out -= _demazure_elements(lam, v)
    else:
        out = set(_opposite_elements(lam, w))
        for v in weyl.coset_reps(lam):
            if weyl.act(v, lam) != mu and weyl.bruhat_leq(w, v):
                out -= _opposite_elements(lam, v)
    return frozenset(out)


def atom_by_paths(lam, w, kind: str = "atom") -> frozenset:
    """Atom via LS paths: ``iota(psi(b)) = w lambda`` (``tau`` for opposite atoms)."""
    lam, w = tuple(lam), tuple(w)
    mu = weyl.act(w, lam)
    pick = (lambda p: p.iota) if kind == "atom" else (lambda p: p.tau)
    return frozenset(t for t in enumerate_crystal(lam) if pick(psi(t)) == mu)


def atom(lam, w, kind: str = "atom", check: bool = True) -> DemazureSet:
    """Demazure atom (``kind="atom"``) or opposite atom (``kind="opposite_atom"``).

    Computed as a set difference over the other minimal coset
    representatives; with ``check`` the LS-path description is computed too
    and the two must agree.
    """
    if kind not in ("atom", "opposite_atom"):
        raise ValueError(f"unknown atom kind {kind!r}")
    lam, w = tuple(lam), tuple(w)
    _check_min_rep(lam, w)
    elements = _atom_by_difference(lam, w, kind)
    if check and elements != atom_by_paths(lam, w, kind):
        raise RuntimeError(f"{kind} for {lam}, {w}: set difference and LS-path cells disagree")
    return DemazureSet(lam, w, kind, elements)


def demazure_set(lam, w, kind: str) -> DemazureSet:
    if kind == "demazure":
        return demazure_crystal(lam, w)
    if kind == "opposite":
        return opposite_demazure_crystal(lam, w)
    if kind in ("atom", "opposite_atom"):
        return atom(lam, w, kind)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def cell_by_paths(lam, w, kind: str) -> frozenset:
    """Demazure cells on the path side: ``iota <= w lambda`` or ``tau >= w lambda``."""
    lam = tuple(lam)
    mu = weyl.act(w, lam)
    if kind == "demazure":
        keep = lambda p: order_geq(mu, p.iota, lam)
    elif kind == "opposite":
        keep = lambda p: order_geq(p.tau, mu, lam)
    else:
        return atom_by_paths(lam, w, kind)
    return frozenset(t for t in enumerate_crystal(lam) if keep(psi(t)))


# ------------------------------------------------------------- characters

def weight_monomial(wt, n: int, vars: str = "x") -> SparsePoly:
    if vars == "x":
        return SparsePoly.monomial(n, x=wt)
    if vars == "y":
        return SparsePoly.monomial(n, y=wt)
    raise ValueError(f"vars must be 'x' or 'y', got {vars!r}")


def character_of(elements: Iterable[Tableau], n: int, vars: str = "x") -> SparsePoly:
    return poly_sum((weight_monomial(t.weight, n, vars) for t in elements), n)


def character(ds: DemazureSet, vars: str = "x") -> SparsePoly:
    return character_of(ds.elements, ds.n, vars)


def schur(lam, vars: str = "x") -> SparsePoly:
    """s_lambda as the weight generating function of B(lambda)."""
    lam = tuple(lam)
    return character_of(enumerate_crystal(lam), len(lam), vars)


def isobaric_divided_difference(f: SparsePoly, i: int) -> SparsePoly:
    """pi_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}), exact division."""
    n = f.n
    xi, xj = SparsePoly.var(n, f"x{i}"), SparsePoly.var(n, f"x{i + 1}")
    return (xi * f - xj * f.swap_x(i)).exact_div(xi - xj)


def demazure_operator_oracle(lam, w) -> SparsePoly:
    """pi_{i_1} ... pi_{i_l} x^lambda for a reduced word of ``w``."""
    lam = tuple(lam)
    f = SparsePoly.monomial(len(lam), x=lam)
    for i in reversed(weyl.reduced_word(tuple(w))):
        f = isobaric_divided_difference(f, i)
    return f
