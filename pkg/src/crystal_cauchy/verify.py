"""
Exhaustive and randomized invariant suites.

Every suite returns a :class:`SuiteResult`; :func:`verify_all` runs them all
below a size bound. Suites take explicit bounds so tests can call them at
whatever scale they need.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from . import weyl
from .continuous import (build_pi_M, cont_eps, cont_kappa, cont_matrix_op, cont_op, cont_phi,
                         cont_raise_to_highest, matrix_eps, random_path, random_rat_matrix, scale_matrix,
                         verify_main2)
from .demazure import (atom, character, character_of, demazure_crystal, demazure_operator_oracle,
                       opposite_demazure_crystal, schur)
from .identities import lhs_series, littlewood_rhs, rhs_terms, verify_identity
from .lspath import order_geq, path_crystal, path_op, psi, psi_inv
from .matrices import (COL, ROW, bicrystal_op, classify_low, diagonal_op, diagonal_partition, is_lower,
                       matrices_with_sum, raise_to_highest, rsk, transpose)
from .poly import poly_sum
from .words import LOWER, RAISE, enumerate_crystal, tableau_op

MAX_FAILURES = 5


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, message) -> None:
        self.checks += 1
        if not cond and len(self.failures) < MAX_FAILURES:
            self.failures.append(message() if callable(message) else message)
        elif not cond:
            self.failures.append(None)

    def to_json(self) -> dict:
        shown = [f for f in self.failures if f is not None]
        return {"suite": self.name, "ok": self.ok, "checks": self.checks,
                "failures": len(self.failures), "examples": shown}

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        return f"{status}  {self.name:<24} {self.checks:>7} checks  {len(self.failures)} failures"


def _partitions(max_n: int, max_size: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        for lam in weyl.partitions_up_to(max_size, n):
            yield tuple(lam)


def weyl_dimension(lam) -> int:
    """|B(lam)| by the Weyl dimension formula."""
    n = len(lam)
    num = prod(lam[i] - lam[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


# ------------------------------------------------------------ identities

def _cases(max_n: int, max_degree: int, cases=None):
    """``(n, D)`` pairs: the explicit list if given, else every n <= max_n and even D <= max_degree."""
    if cases is not None:
        return list(cases)
    return [(n, D) for n in range(1, max_n + 1) for D in range(2, max_degree + 1, 2)]


def suite_cauchy(max_n: int, max_degree: int, variants=("lower_KhatK", "lower_KKhat"),
                 name: str = "cauchy_lower", tamper: bool = False, cases=None) -> SuiteResult:
    res = SuiteResult(name)
    for n, D in _cases(max_n, max_degree, cases):
        for v in variants:
            rhs = _tampered_rhs(n, D, v) if tamper else None
            rep = verify_identity(n, D, v, rhs=rhs)
            res.check(rep.ok, lambda: f"{v} n={n} D={D}: difference has {len(rep.difference)} terms")
    return res


def _tampered_rhs(n: int, D: int, variant: str):
    """The right-hand side with the last atom element of the largest summand dropped."""
    terms = list(rhs_terms(n, D, variant))
    total = poly_sum((t.polynomial(n) for t in terms), n)
    k = max(range(len(terms)), key=lambda j: len(_atom_side(terms[j], variant)))
    return total - _drop_atom_element(terms[k], variant, n)[0]


def _atom_side(term, variant: str) -> frozenset:
    return term.x_set if variant == "lower_KKhat" else term.y_set


def _drop_atom_element(term, variant: str, n: int, which: int = -1):
    """(contribution removed, remaining summand polynomial) after dropping one atom element."""
    old = term.polynomial(n)
    if variant == "lower_KKhat":
        elems = sorted(term.x_set, key=lambda t: t.rows)
        gone = elems[which]
        new = character_of(term.x_set - {gone}, n, "x").mul(character_of(term.y_set, n, "y"))
    else:
        elems = sorted(term.y_set, key=lambda t: t.rows)
        gone = elems[which]
        new = character_of(term.x_set, n, "x").mul(character_of(term.y_set - {gone}, n, "y"))
    return old - new, new


def suite_negative_control(max_n: int, max_degree: int, cases=None) -> SuiteResult:
    """Dropping any single atom element from any summand must break the identity."""
    res = SuiteResult("negative_control")
    for n, D in _cases(max_n, max_degree, cases):
        for v in ("lower_KhatK", "lower_KKhat"):
            lhs = lhs_series(n, D, v)
            terms = list(rhs_terms(n, D, v))
            polys = [t.polynomial(n) for t in terms]
            total = poly_sum(polys, n)
            for k, term in enumerate(terms):
                for which in range(len(_atom_side(term, v))):
                    _, new = _drop_atom_element(term, v, n, which)
                    perturbed = total - polys[k] + new
                    res.check(not (lhs - perturbed).truncate(D).is_zero(),
                              lambda: f"{v} n={n} D={D}: dropping element {which} of summand {k} went unnoticed")
    return res


def suite_littlewood(max_n: int, max_degree: int) -> SuiteResult:
    res = SuiteResult("littlewood")
    for n, D in _cases(max_n, max_degree):
        rep = verify_identity(n, D, "littlewood")
        res.check(rep.ok, lambda: f"littlewood n={n} D={D}")
        # the same specialization applied to the crystal side
        rhs = poly_sum((t.polynomial(n) for t in rhs_terms(n, D, "lower_KhatK")), n)
        rhs = rhs.y_to_x().truncate(D)
        res.check(rhs == littlewood_rhs(n, D), lambda: f"specialized crystal side n={n} D={D}")
    return res


# -------------------------------------------------------------- crystals

def suite_psi(max_n: int, max_size: int) -> SuiteResult:
    res = SuiteResult("psi_isomorphism")
    for lam in _partitions(max_n, max_size):
        n = len(lam)
        tabs = enumerate_crystal(lam)
        res.check(len(tabs) == weyl_dimension(lam), lambda: f"|B{lam}| = {len(tabs)}")
        image = {psi(t) for t in tabs}
        res.check(len(image) == len(tabs), lambda: f"psi not injective on {lam}")
        res.check(image == set(path_crystal(lam)), lambda: f"psi image differs from the path crystal for {lam}")
        for t in tabs:
            p = psi(t)
            res.check(psi_inv(p) == t, lambda: f"psi_inv(psi({t.rows})) != itself")
            for i in range(1, n):
                for d in (RAISE, LOWER):
                    u = tableau_op(t, i, d)
                    q = path_op(p, i, d)
                    res.check((u is None and q is None) or (u is not None and q == psi(u)),
                              lambda: f"{lam} {t.rows} {d} {i}")
    return res


def suite_demazure(max_n: int, max_size: int) -> SuiteResult:
    res = SuiteResult("demazure")
    for lam in _partitions(max_n, max_size):
        n = len(lam)
        whole = enumerate_crystal(lam)
        atoms, opp = [], []
        for w in weyl.coset_reps(lam):
            ds = demazure_crystal(lam, w)
            res.check(character(ds) == demazure_operator_oracle(lam, w),
                      lambda: f"character of B_{weyl.format_permutation(w)}{lam}")
            atoms.append(atom(lam, w).elements)
            opp.append(atom(lam, w, "opposite_atom").elements)
        for family, label in ((atoms, "atoms"), (opp, "opposite atoms")):
            res.check(sum(len(a) for a in family) == len(whole) and frozenset().union(*family) == whole,
                      lambda: f"{label} do not partition B{lam}")
        res.check(poly_sum((character_of(a, n) for a in atoms), n) == schur(lam),
                  lambda: f"atom characters do not sum to s_{lam}")
    return res


# -------------------------------------------------------------- matrices

def _all_matrices(max_n: int, max_sum: int, lower: bool = False, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        for s in range(max_sum + 1):
            yield from matrices_with_sum(s, n, lower_only=lower)


def suite_bijection(max_n: int, max_sum: int) -> SuiteResult:
    res = SuiteResult("main_bijection")
    for n in range(1, max_n + 1):
        for s in range(max_sum + 1):
            seen = {}
            for m in matrices_with_sum(s, n, lower_only=True):
                lam, w, p, q = classify_low(m)
                key = (lam, w, p, q)
                res.check(key not in seen, lambda: f"{m} and {seen[key]} share an image")
                seen[key] = m
                res.check(p in opposite_demazure_crystal(lam, w) and q in atom(lam, w),
                          lambda: f"{m} lands outside B^w x atom_w")
                res.check(order_geq(psi(p).tau, psi(q).iota, lam), lambda: f"{m}: tau(P) < iota(Q)")
            target = set()
            for lam in weyl.partitions_of(s, n):
                lam = tuple(lam)
                for w in weyl.coset_reps(lam):
                    for p in opposite_demazure_crystal(lam, w).elements:
                        for q in atom(lam, w).elements:
                            target.add((lam, w, p, q))
            res.check(set(seen) == target,
                      lambda: f"n={n} s={s}: {len(seen)} images vs {len(target)} targets")
    return res


def suite_bicrystal(max_n: int, max_sum: int) -> SuiteResult:
    res = SuiteResult("bicrystal")
    for m in _all_matrices(max_n, max_sum, min_n=2):
        n = len(m)
        for i in range(1, n):
            for j in range(1, n):
                for d1 in (RAISE, LOWER):
                    for d2 in (RAISE, LOWER):
                        a = bicrystal_op(m, i, d1, ROW)
                        a = None if a is None else bicrystal_op(a, j, d2, COL)
                        b = bicrystal_op(m, j, d2, COL)
                        b = None if b is None else bicrystal_op(b, i, d1, ROW)
                        res.check(a == b, lambda: f"{m}: row {d1} {i} vs col {d2} {j}")
        # the component of m under row and column raises contains one M_lam
        cur = m
        moved = True
        while moved:
            moved = False
            for side in (ROW, COL):
                for i in range(1, n):
                    r = bicrystal_op(cur, i, RAISE, side)
                    if r is not None:
                        cur, moved = r, True
        res.check(diagonal_partition(cur) == rsk(m)[0].shape, lambda: f"{m} raises to {cur}")
    return res


def suite_low_closure(max_n: int, max_sum: int) -> SuiteResult:
    res = SuiteResult("low_closure")
    for m in _all_matrices(max_n, max_sum, lower=True, min_n=2):
        n = len(m)
        extremal = True
        for i in range(1, n):
            for d in (RAISE, LOWER):
                r = diagonal_op(m, i, d)
                res.check(r is None or is_lower(r), lambda: f"{m} {d} {i} -> {r}")
                if d == RAISE and r is not None:
                    extremal = False
        res.check(extremal == (diagonal_partition(m) is not None),
                  lambda: f"{m}: raise-extremal={extremal}")
        lam, _ = raise_to_highest(m)
        res.check(lam == rsk(m)[0].shape, lambda: f"{m} raises to {lam}")
    return res


# ------------------------------------------------------------ continuous

def _rand_r(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int) -> Fraction:
    """Rational in [lo, hi], sometimes an endpoint, sometimes slightly outside."""
    roll = rng.random()
    if roll < 0.1:
        return lo
    if roll < 0.2:
        return hi
    den = rng.randint(1, max_den)
    span = (hi - lo) * den
    k = rng.randint(-1, int(span) + 1)
    return lo + Fraction(k, den)


def suite_group_law(rng: random.Random, trials: int, max_n: int = 3) -> SuiteResult:
    res = SuiteResult("cont_group_law")
    for _ in range(trials):
        n = rng.randint(2, max_n)
        lam = tuple(sorted((Fraction(rng.randint(0, 12), rng.randint(1, 4)) for _ in range(n)), reverse=True))
        pi = random_path(rng, lam, steps=rng.randint(0, 5))
        i = rng.randint(1, n - 1)
        lo, hi = -cont_phi(pi, i), cont_eps(pi, i)
        r = _rand_r(rng, lo, hi, 4)
        first = cont_op(pi, i, r)
        if first is None:
            res.check(not (lo <= r <= hi), lambda: f"null inside the admissible range r={r}")
            continue
        s = _rand_r(rng, -cont_phi(first, i), cont_eps(first, i), 4)
        lhs, rhs = cont_op(first, i, s), cont_op(pi, i, r + s)
        res.check(lhs == rhs, lambda: f"e^{s} e^{r} != e^{r + s} on {pi.to_json()} i={i}")
        res.check(cont_eps(first, i) == hi - r and cont_phi(first, i) == -lo + r,
                  lambda: f"eps/phi do not shift by r={r}")
    return res


def _int_power(m, i, k, side):
    d = RAISE if k > 0 else LOWER
    for _ in range(abs(k)):
        m = bicrystal_op(m, i, d, side)
        if m is None:
            return None
    return m


def suite_scaling(rng: random.Random, max_sum: int = 3, max_den: int = 4, max_n: int = 3) -> SuiteResult:
    """Continuous operators on M/N against integer operators on M."""
    res = SuiteResult("cont_scaling")
    for n in range(2, max_n + 1):
        for s in range(1, max_sum + 1):
            for m in matrices_with_sum(s, n):
                for N in range(1, max_den + 1):
                    small = scale_matrix(m, Fraction(1, N))
                    i = rng.randint(1, n - 1)
                    side = rng.choice((ROW, COL))
                    k = rng.randint(-s, s)
                    got = cont_matrix_op(small, i, Fraction(k, N), side)
                    want = _int_power(m, i, k, side)
                    res.check((got is None and want is None) or
                              (want is not None and got == scale_matrix(want, Fraction(1, N))),
                              lambda: f"{m}/{N}: e^{k}/{N}_{i} {side}")
                    if N == max_den or is_lower(m):
                        lam, first, second = cont_kappa(small)
                        p, q = rsk(m)
                        res.check(lam == tuple(Fraction(x, N) for x in p.shape), lambda: f"{m}/{N}: shape")
                        res.check(first == psi(p).to_plpath().scaled(Fraction(1, N))
                                  and second == psi(q).to_plpath().scaled(Fraction(1, N)),
                                  lambda: f"{m}/{N}: kappa is not a scaled psi(P), psi(Q)")
    return res


def suite_cont_commutation(rng: random.Random, trials: int, max_n: int = 3) -> SuiteResult:
    res = SuiteResult("cont_commutation")
    done = 0
    while done < trials:
        n = 2 + done % (max_n - 1)
        m = random_rat_matrix(rng, n, max_den=4)
        if all(x == 0 for row in m for x in row):
            continue
        done += 1
        i, j = rng.randint(1, n - 1), rng.randint(1, n - 1)
        r = _rand_r(rng, -_mphi(m, i, ROW), matrix_eps(m, i, ROW), 4)
        s = _rand_r(rng, -_mphi(m, j, COL), matrix_eps(m, j, COL), 4)
        a = cont_matrix_op(m, i, r, ROW)
        a = None if a is None else cont_matrix_op(a, j, s, COL)
        b = cont_matrix_op(m, j, s, COL)
        b = None if b is None else cont_matrix_op(b, i, r, ROW)
        res.check(a == b, lambda: f"{m}: row e^{r}_{i} vs col e^{s}_{j}")
    return res


def _mphi(m, i, side):
    return cont_phi(build_pi_M(m if side == ROW else transpose(m)), i)


def suite_main2(rng: random.Random, trials: int, max_n: int = 3) -> SuiteResult:
    res = SuiteResult("cont_main2")
    done = 0
    while done < trials:
        n = 2 + done % (max_n - 1)
        m = random_rat_matrix(rng, n, max_den=4, lower=True)
        done += 1
        rep = verify_main2(m)
        res.check(rep.ok, lambda: f"{m}: {rep.to_json()}")
        lam, script = cont_raise_to_highest(m)
        res.check(all(x >= 0 for x in lam), lambda: f"{m}: negative lambda")
    return res


def suite_continuous(seed: int, group_trials: int = 1000, matrix_trials: int = 200,
                     max_den: int = 4, max_n: int = 3) -> list[SuiteResult]:
    rng = random.Random(seed)
    return [suite_group_law(rng, group_trials, max_n),
            suite_scaling(rng, max_den=max_den, max_n=max_n),
            suite_cont_commutation(rng, matrix_trials, max_n),
            suite_main2(rng, matrix_trials, max_n)]


# ---------------------------------------------------------------- driver

def verify_all(max_n: int, max_degree: int, seed: int = 0, tamper: bool = False,
               group_trials: int = 1000, matrix_trials: int = 200) -> list[SuiteResult]:
    """Every suite below ``max_n`` and ``max_degree``; entry sums and |lam| go up to ``max_degree / 2``."""
    if max_n <= 0:
        return []
    half = max_degree // 2
    out = [
        suite_cauchy(max_n, max_degree, tamper=tamper),
        suite_cauchy(max_n, max_degree, ("staircase",), name="cauchy_staircase", tamper=False),
        suite_littlewood(max_n, max_degree),
        suite_negative_control(max_n, max_degree),
        suite_bijection(max_n, half),
        suite_demazure(max_n, half),
        suite_psi(max_n, half),
        suite_bicrystal(max_n, half),
        suite_low_closure(max_n, half),
    ]
    if max_n >= 2:
        out.extend(suite_continuous(seed, group_trials, matrix_trials, max_n=min(max_n, 3)))
    return out
