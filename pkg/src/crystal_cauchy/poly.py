"""
Sparse polynomials with integer coefficients in x_1..x_n, y_1..y_n.

Exponent vectors have length 2n: the first n entries belong to x, the last
n to y. Terms print in graded order (lowest total degree first) and, within
a degree, in descending lex order of the exponent vector, which puts x
before y and x_1 before x_2.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping


class PolynomialDivisionError(ArithmeticError):
    """An exact division left a nonzero remainder."""


class SparsePoly:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple, int] | None = None):
        self.n = n
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != 2 * n:
                    raise ValueError(f"exponent {exp} does not have length {2 * n}")
                if c:
                    clean[exp] = clean.get(exp, 0) + int(c)
            clean = {e: c for e, c in clean.items() if c}
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls, n: int) -> "SparsePoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "SparsePoly":
        return cls(n, {(0,) * (2 * n): 1})

    @classmethod
    def monomial(cls, n: int, x=None, y=None, coef: int = 1) -> "SparsePoly":
        x = tuple(x) if x is not None else (0,) * n
        y = tuple(y) if y is not None else (0,) * n
        return cls(n, {x + y: coef})

    @classmethod
    def var(cls, n: int, name: str) -> "SparsePoly":
        """``var(n, "x2")`` or ``var(n, "y1")``."""
        k = int(name[1:]) - 1
        exp = [0] * (2 * n)
        exp[k if name[0] == "x" else n + k] = 1
        return cls(n, {tuple(exp): 1})

    # arithmetic
    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.n, out)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            return SparsePoly(self.n, {e: c * other for e, c in self.terms.items()})
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "SparsePoly", degree_bound: int | None = None) -> "SparsePoly":
        """Product, dropping terms of total degree above ``degree_bound``."""
        out = defaultdict(int)
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if degree_bound is not None and d1 + sum(e2) > degree_bound:
                    continue
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return SparsePoly(self.n, out)

    def truncate(self, degree_bound: int) -> "SparsePoly":
        return SparsePoly(self.n, {e: c for e, c in self.terms.items() if sum(e) <= degree_bound})

    def homogeneous(self, degree: int) -> "SparsePoly":
        return SparsePoly(self.n, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def bidegree_part(self, dx: int, dy: int) -> "SparsePoly":
        n = self.n
        return SparsePoly(n, {e: c for e, c in self.terms.items()
                              if sum(e[:n]) == dx and sum(e[n:]) == dy})

    # substitutions
    def permute_vars(self, perm: Iterable[int]) -> "SparsePoly":
        """Send variable ``k`` to variable ``perm[k]`` (0-based over all 2n variables)."""
        perm = list(perm)
        out = defaultdict(int)
        for e, c in self.terms.items():
            new = [0] * len(e)
            for k, a in enumerate(e):
                new[perm[k]] += a
            out[tuple(new)] += c
        return SparsePoly(self.n, out)

    def reverse_x(self) -> "SparsePoly":
        """x_k -> x_{n+1-k}."""
        n = self.n
        return self.permute_vars([n - 1 - k for k in range(n)] + list(range(n, 2 * n)))

    def reverse_y(self) -> "SparsePoly":
        n = self.n
        return self.permute_vars(list(range(n)) + [2 * n - 1 - k for k in range(n)])

    def swap_xy(self) -> "SparsePoly":
        n = self.n
        return self.permute_vars(list(range(n, 2 * n)) + list(range(n)))

    def y_to_x(self) -> "SparsePoly":
        """Specialize y_k := x_k."""
        n = self.n
        return self.permute_vars(list(range(n)) + list(range(n)))

    def swap_x(self, i: int) -> "SparsePoly":
        """s_i acting on x: exchange x_i and x_{i+1}."""
        perm = list(range(2 * self.n))
        perm[i - 1], perm[i] = i, i - 1
        return self.permute_vars(perm)

    # division
    def divmod(self, divisor: "SparsePoly") -> tuple["SparsePoly", "SparsePoly"]:
        """Multivariate division with respect to lex order on exponent vectors."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = max(divisor.terms)
        lead_c = divisor.terms[lead]
        rest = dict(self.terms)
        quot, rem = defaultdict(int), defaultdict(int)
        while rest:
            e = max(rest)
            c = rest[e]
            shift = tuple(a - b for a, b in zip(e, lead))
            if all(s >= 0 for s in shift) and c % lead_c == 0:
                q = c // lead_c
                quot[shift] += q
                for de, dc in divisor.terms.items():
                    key = tuple(a + b for a, b in zip(shift, de))
                    rest[key] = rest.get(key, 0) - q * dc
                    if rest[key] == 0:
                        del rest[key]
            else:
                rem[e] += c
                del rest[e]
        return SparsePoly(self.n, quot), SparsePoly(self.n, rem)

    def exact_div(self, divisor: "SparsePoly") -> "SparsePoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise PolynomialDivisionError(f"({self}) / ({divisor}) leaves remainder {r}")
        return q

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SparsePoly.one(self.n) * other
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def coefficient(self, x=None, y=None) -> int:
        x = tuple(x) if x is not None else (0,) * self.n
        y = tuple(y) if y is not None else (0,) * self.n
        return self.terms.get(x + y, 0)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-a for a in kv[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        n = self.n
        names = [f"x{k + 1}" for k in range(n)] + [f"y{k + 1}" for k in range(n)]
        out = []
        for e, c in self.sorted_terms():
            factors = [nm if a == 1 else f"{nm}^{a}" for nm, a in zip(names, e) if a]
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"SparsePoly({self.n}, {self})"

    def to_json(self) -> list:
        return [{"exp": list(e), "coef": c} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list, n: int) -> "SparsePoly":
        return cls(n, {tuple(t["exp"]): t["coef"] for t in data})


def poly_sum(polys: Iterable[SparsePoly], n: int) -> SparsePoly:
    out = defaultdict(int)
    for p in polys:
        for e, c in p.terms.items():
            out[e] += c
    return SparsePoly(n, out)
