"""Exact piecewise-linear paths [0, 1] -> Q^n."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import weyl


def frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def format_frac(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class PLPath:
    """Breakpoints ``0 = t_0 < ... < t_s = 1`` and the path's values there.

    Construction normalizes: fractions are exact, ``values[0]`` must be the
    origin, and interior breakpoints between segments of equal velocity are
    dropped, so equal paths have equal data.
    """

    times: tuple
    values: tuple

    def __post_init__(self):
        times = tuple(frac(t) for t in self.times)
        values = tuple(tuple(frac(x) for x in v) for v in self.values)
        if len(times) != len(values) or len(times) < 2:
            raise ValueError("a path needs at least two breakpoints, one value per breakpoint")
        if times[0] != 0 or times[-1] != 1:
            raise ValueError("breakpoints must run from 0 to 1")
        if any(a >= b for a, b in zip(times, times[1:])):
            raise ValueError("breakpoints must strictly increase")
        if any(x != 0 for x in values[0]):
            raise ValueError("paths start at the origin")
        keep_t, keep_v = [times[0]], [values[0]]
        last_vel = None
        for k in range(1, len(times)):
            vel = _velocity(times[k - 1], values[k - 1], times[k], values[k])
            if vel == last_vel:
                keep_t[-1], keep_v[-1] = times[k], values[k]
            else:
                keep_t.append(times[k])
                keep_v.append(values[k])
            last_vel = vel
        object.__setattr__(self, "times", tuple(keep_t))
        object.__setattr__(self, "values", tuple(keep_v))

    @property
    def dim(self) -> int:
        return len(self.values[0])

    @property
    def endpoint(self) -> tuple:
        return self.values[-1]

    def segments(self):
        """Yield ``(t0, t1, v0, v1)`` per linear piece."""
        for k in range(len(self.times) - 1):
            yield self.times[k], self.times[k + 1], self.values[k], self.values[k + 1]

    def velocities(self) -> tuple:
        return tuple(_velocity(t0, v0, t1, v1) for t0, t1, v0, v1 in self.segments())

    def __call__(self, t) -> tuple:
        t = frac(t)
        for t0, t1, v0, v1 in self.segments():
            if t0 <= t <= t1:
                s = (t - t0) / (t1 - t0)
                return tuple(a + s * (b - a) for a, b in zip(v0, v1))
        raise ValueError(f"time {t} outside [0, 1]")

    def level(self, i: int) -> tuple:
        """<pi(t_k), h_i> at every breakpoint."""
        return tuple(weyl.pairing(v, i) for v in self.values)

    def scaled(self, c) -> "PLPath":
        c = frac(c)
        return PLPath(self.times, tuple(tuple(c * x for x in v) for v in self.values))

    def trace(self) -> tuple:
        """Displacements of maximal straight pieces, ignoring parametrization.

        Two paths that differ only by a monotone reparametrization (and by
        pauses) have the same trace.
        """
        out = []
        for t0, t1, v0, v1 in self.segments():
            d = weyl.sub(v1, v0)
            if all(x == 0 for x in d):
                continue
            if out and _parallel(out[-1], d):
                out[-1] = weyl.add(out[-1], d)
            else:
                out.append(d)
        return tuple(out)

    def to_json(self) -> dict:
        return {"t": [format_frac(t) for t in self.times],
                "v": [[format_frac(x) for x in v] for v in self.values]}

    @classmethod
    def from_json(cls, data: dict) -> "PLPath":
        return cls(tuple(data["t"]), tuple(tuple(v) for v in data["v"]))


def _velocity(t0, v0, t1, v1) -> tuple:
    dt = t1 - t0
    return tuple((b - a) / dt for a, b in zip(v0, v1))


def _parallel(d1, d2) -> bool:
    """Positively parallel nonzero vectors."""
    k = next(j for j, x in enumerate(d1) if x != 0)
    if d2[k] == 0 or (d2[k] > 0) != (d1[k] > 0):
        return False
    c = d2[k] / d1[k]
    return all(c * a == b for a, b in zip(d1, d2))


def straight(direction: Sequence) -> PLPath:
    """t -> t * direction."""
    direction = tuple(frac(x) for x in direction)
    return PLPath((0, 1), ((Fraction(0),) * len(direction), direction))


def from_segments(durations: Sequence, directions: Sequence) -> PLPath:
    """Path moving with velocity ``directions[k]`` for time ``durations[k]``."""
    durations = [frac(d) for d in durations]
    if sum(durations) != 1 or any(d <= 0 for d in durations):
        raise ValueError("segment durations must be positive and sum to 1")
    dim = len(directions[0])
    times, values = [Fraction(0)], [(Fraction(0),) * dim]
    for d, nu in zip(durations, directions):
        times.append(times[-1] + d)
        values.append(tuple(a + d * frac(x) for a, x in zip(values[-1], nu)))
    return PLPath(tuple(times), tuple(values))


def concat(*paths: PLPath) -> PLPath:
    """Concatenation, each constituent getting an equal share of [0, 1]."""
    if not paths:
        raise ValueError("nothing to concatenate")
    share = Fraction(1, len(paths))
    times, values = [Fraction(0)], [paths[0].values[0]]
    offset = values[0]
    for k, p in enumerate(paths):
        base = k * share
        for t, v in zip(p.times[1:], p.values[1:]):
            times.append(base + share * t)
            values.append(weyl.add(offset, v))
        offset = values[-1]
    return PLPath(tuple(times), tuple(values))


def split(p: PLPath, parts: int) -> list[PLPath]:
    """Inverse of :func:`concat` for ``parts`` equal time shares."""
    share = Fraction(1, parts)
    cuts = [k * share for k in range(parts + 1)]
    out = []
    for k in range(parts):
        a, b = cuts[k], cuts[k + 1]
        origin = p(a)
        ts = [a] + [t for t in p.times if a < t < b] + [b]
        out.append(PLPath(tuple((t - a) / share for t in ts),
                          tuple(weyl.sub(p(t), origin) for t in ts)))
    return out
