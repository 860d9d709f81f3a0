"""
Truncated Cauchy kernels and their expansions in Demazure characters and atoms.

Everything is truncated by total degree in all 2n variables. A matrix with
entry sum s contributes a monomial of degree 2s, so only even bounds give
complete homogeneous slices.

Variants:

    lower_KhatK   prod_{j<=i} 1/(1 - x_i y_j) = sum K^{w lam}(x)  Khat_{w lam}(y)
    lower_KKhat   prod_{j<=i} 1/(1 - x_i y_j) = sum Khat^{w lam}(x) K_{w lam}(y)
    staircase     prod_{i+j<=n+1} 1/(1 - x_i y_j) = sum K_{mu}(x) Khat_{w0 mu}(y)
    littlewood    prod_{i<=j} 1/(1 - x_i x_j) = sum s_{2 lam}(x)

In the staircase form ``mu`` runs over the orbit ``W lam`` and ``w0 mu`` is
``mu`` with its coordinates reversed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import weyl
from ._parallel import parallel_map
from .demazure import atom, character_of, demazure_crystal, opposite_demazure_crystal, schur
from .poly import SparsePoly, poly_sum
from .words import Tableau

SUPPORTS = ("lower", "upper", "staircase")
VARIANTS = ("lower_KhatK", "lower_KKhat", "staircase", "littlewood")


@dataclass(frozen=True)
class KernelSpec:
    n: int
    support: str
    degree: int

    def __post_init__(self):
        if self.support not in SUPPORTS:
            raise ValueError(f"support must be one of {SUPPORTS}")
        if self.degree < 0:
            raise ValueError("degree bound must be nonnegative")

    def pairs(self) -> list[tuple[int, int]]:
        n = self.n
        cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        if self.support == "lower":
            return [(i, j) for i, j in cells if j <= i]
        if self.support == "upper":
            return [(i, j) for i, j in cells if i <= j]
        return [(i, j) for i, j in cells if i + j <= n + 1]


def kernel_series(spec: KernelSpec) -> SparsePoly:
    """prod over support cells of sum_k (x_i y_j)^k, truncated at total degree D."""
    n, D = spec.n, spec.degree
    out = SparsePoly.one(n)
    for i, j in spec.pairs():
        geo = {}
        for k in range(D // 2 + 1):
            exp = [0] * (2 * n)
            exp[i - 1] += k
            exp[n + j - 1] += k
            geo[tuple(exp)] = 1
        out = out.mul(SparsePoly(n, geo), degree_bound=D)
    return out


def refined_character(pairs: Iterable[tuple[Tableau, Tableau]], n: int) -> SparsePoly:
    """sum of x^{wt P} y^{wt Q}."""
    return poly_sum((SparsePoly.monomial(n, x=p.weight, y=q.weight) for p, q in pairs), n)


@dataclass(frozen=True)
class Summand:
    """One term ``ch(x_set)(x) * ch(y_set)(y)`` of an expansion."""

    lam: tuple
    w: tuple
    x_set: frozenset
    y_set: frozenset

    def polynomial(self, n: int) -> SparsePoly:
        return character_of(self.x_set, n, "x").mul(character_of(self.y_set, n, "y"))


def _summand(lam: tuple, w: tuple, variant: str) -> Summand:
    if variant == "lower_KhatK":
        xs = opposite_demazure_crystal(lam, w).elements
        ys = atom(lam, w, "atom").elements
    elif variant == "lower_KKhat":
        xs = atom(lam, w, "opposite_atom").elements
        ys = demazure_crystal(lam, w).elements
    elif variant == "staircase":
        mu = weyl.act(w, lam)
        v = weyl.rep_for_weight(tuple(reversed(mu)), lam)
        xs = demazure_crystal(lam, w).elements
        ys = atom(lam, v, "atom").elements
    else:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS[:3]}")
    return Summand(lam, w, xs, ys)


def rhs_terms(n: int, D: int, variant: str) -> Iterator[Summand]:
    """Summands over partitions with 2|lam| <= D and minimal coset reps w."""
    for lam in weyl.partitions_up_to(D // 2, n):
        for w in weyl.coset_reps(tuple(lam)):
            yield _summand(tuple(lam), w, variant)


def _partition_block(args) -> SparsePoly:
    lam, n, variant = args
    return poly_sum((_summand(lam, w, variant).polynomial(n)
                     for w in weyl.coset_reps(lam)), n)


def rhs_sum(n: int, D: int, variant: str) -> SparsePoly:
    if variant == "littlewood":
        return littlewood_rhs(n, D)
    jobs = [(tuple(lam), n, variant) for lam in weyl.partitions_up_to(D // 2, n)]
    return poly_sum(parallel_map(_partition_block, jobs), n).truncate(D)


def littlewood_rhs(n: int, D: int) -> SparsePoly:
    """sum of s_{2 lam}(x) over 2|lam| <= D."""
    return poly_sum((schur(tuple(2 * p for p in lam)) for lam in weyl.partitions_up_to(D // 2, n)), n)


def lhs_series(n: int, D: int, variant: str) -> SparsePoly:
    if variant in ("lower_KhatK", "lower_KKhat"):
        return kernel_series(KernelSpec(n, "lower", D))
    if variant == "staircase":
        return kernel_series(KernelSpec(n, "staircase", D))
    if variant == "littlewood":
        return kernel_series(KernelSpec(n, "lower", D)).y_to_x()
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


@dataclass
class IdentityReport:
    variant: str
    n: int
    D: int
    difference: SparsePoly
    lhs_terms: dict = field(default_factory=dict)
    rhs_terms: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.difference.is_zero()

    def to_json(self) -> dict:
        return {"variant": self.variant, "n": self.n, "D": self.D,
                "difference_terms": len(self.difference), "ok": self.ok}

    def table(self) -> str:
        lines = [f"{self.variant}  n={self.n}  D={self.D}",
                 f"{'degree':>6}  {'lhs terms':>9}  {'rhs terms':>9}"]
        for d in range(self.D + 1):
            lines.append(f"{d:>6}  {self.lhs_terms.get(d, 0):>9}  {self.rhs_terms.get(d, 0):>9}")
        lines.append("ok" if self.ok else f"FAILED: difference has {len(self.difference)} terms")
        return "\n".join(lines)


def _term_counts(p: SparsePoly) -> dict:
    counts = {}
    for e in p.terms:
        counts[sum(e)] = counts.get(sum(e), 0) + 1
    return counts


def verify_identity(n: int, D: int, variant: str, rhs: SparsePoly | None = None) -> IdentityReport:
    lhs = lhs_series(n, D, variant)
    if rhs is None:
        rhs = rhs_sum(n, D, variant)
    return IdentityReport(variant, n, D, lhs - rhs, _term_counts(lhs), _term_counts(rhs))
