"""Generalised Catalan numbers and the densities that realise them.

Every closed form divides exactly; the division is checked so a bad
parameter shows up as an ``ArithmeticError`` instead of a silently floored
value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Density, Shape
from .enumeration import TwoRowDensity, count_closed_form


def _exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def catalan_k(n: int, k: int) -> int:
    """k-Catalan number C(kn+1, n) / (kn+1)."""
    _require(n >= 0 and k >= 1, "need n >= 0 and k >= 1")
    return _exact_div(math.comb(k * n + 1, n), k * n + 1)


def raney(n: int, k: int, r: int) -> int:
    """Raney number r/(kn+r) * C(kn+r, n)."""
    _require(n >= 0 and k >= 1 and r >= 1, "need n >= 0 and k, r >= 1")
    return _exact_div(r * math.comb(k * n + r, n), k * n + r)


def catalan_k_sequence(n: int, k: int) -> list[int]:
    return [catalan_k(i, k) for i in range(n + 1)]


def raney_by_convolution(n: int, k: int, r: int) -> int:
    """Sum over ordered r-part compositions of n of products of k-Catalan numbers.

    Computed as the r-th convolution power of the k-Catalan sequence,
    truncated at n.
    """
    _require(n >= 0 and k >= 1 and r >= 1, "need n >= 0 and k, r >= 1")
    base = catalan_k_sequence(n, k)
    acc = base[:]
    for _ in range(r - 1):
        acc = [sum(acc[i] * base[s - i] for i in range(s + 1)) for s in range(n + 1)]
    return acc[n]


def rational_catalan(a: int, b: int) -> int:
    """Rational Catalan number C(a+b, a) / (a+b) for coprime a, b."""
    _require(a >= 1 and b >= 1, "need a, b >= 1")
    if math.gcd(a, b) != 1:
        raise ValueError("parameters must be coprime")
    return _exact_div(math.comb(a + b, a), a + b)


def rational_steps(a: int, b: int) -> tuple[int, ...]:
    """floor(bj/a) - floor(b(j-1)/a) for j = 1..a."""
    return tuple((b * j) // a - (b * (j - 1)) // a for j in range(1, a + 1))


# Family parameters.  Each knows the (shape, density) it is counted by.
# Row-constant families use first row 1 / second row k-1 (not the reflected
# grid); the two orientations have equal counts under the 180-degree
# involution and this is the one the path and concatenation maps use.


@dataclass(frozen=True)
class KCatalan:
    n: int
    k: int

    def __post_init__(self):
        _require(self.n >= 0 and self.k >= 1, "k-Catalan needs n >= 0, k >= 1")

    def density(self) -> tuple[Shape, Density]:
        if self.n == 0:
            return (), ()
        return (self.n, self.n), ((1,) * self.n, (self.k - 1,) * self.n)

    def value(self) -> int:
        return catalan_k(self.n, self.k)


@dataclass(frozen=True)
class Raney:
    n: int
    k: int
    r: int

    def __post_init__(self):
        _require(self.n >= 0 and self.k >= 1 and self.r >= 1, "Raney needs n >= 0, k >= 1, r >= 1")

    def density(self) -> tuple[Shape, Density]:
        c = self.n + 1
        return (c, c), ((1,) * c, (self.r - 1,) + (self.k - 1,) * self.n)

    def value(self) -> int:
        return raney(self.n, self.k, self.r)


@dataclass(frozen=True)
class Rational:
    a: int
    b: int

    def __post_init__(self):
        _require(self.a >= 1 and self.b >= 1, "rational Catalan needs a, b >= 1")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError("parameters must be coprime")

    def density(self) -> tuple[Shape, Density]:
        return (self.a, self.a), ((1,) * self.a, rational_steps(self.a, self.b))

    def value(self) -> int:
        return rational_catalan(self.a, self.b)


@dataclass(frozen=True)
class Tennis:
    n: int
    s: int
    t: int

    def __post_init__(self):
        _require(self.n >= 0, "tennis needs n >= 0")
        _require(self.s >= self.t >= 1, "tennis needs s >= t >= 1")

    def density(self) -> tuple[Shape, Density]:
        c = self.n + 1
        return (c, c), ((self.t,) * c, (self.s - self.t,) * c)

    def value(self) -> int:
        return tennis_count(self.n, self.s, self.t)


@dataclass(frozen=True)
class TennisGeneral:
    s: tuple[int, ...]
    t: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))
        object.__setattr__(self, "t", tuple(self.t))
        _require(len(self.s) == len(self.t), "s and t vectors must have equal length")
        _require(all(1 <= ti < si for si, ti in zip(self.s, self.t)), "need 1 <= t_i < s_i")

    @property
    def n(self) -> int:
        return len(self.s)

    def density(self) -> tuple[Shape, Density]:
        c = self.n + 1
        top = (1,) + self.t
        bottom = tuple(si - ti for si, ti in zip(self.s, self.t)) + (1,)
        return (c, c), (top, bottom)

    def value(self) -> int:
        return tennis_count_general(self.s, self.t)


FAMILIES = {
    "catalan-k": KCatalan,
    "raney": Raney,
    "rational": Rational,
    "tennis": Tennis,
    "tennis-general": TennisGeneral,
}


def build_density(p) -> tuple[Shape, Density]:
    return p.density()


def _count_two_row(shape, rho) -> int:
    return count_closed_form(TwoRowDensity.from_grid(shape, rho))


def tennis_count(n: int, s: int, t: int) -> int:
    return _count_two_row(*Tennis(n, s, t).density())


def tennis_count_general(s_vec, t_vec, n: int | None = None) -> int:
    p = TennisGeneral(tuple(s_vec), tuple(t_vec))
    if n is not None and n != p.n:
        raise ValueError(f"n={n} does not match {p.n} turns in the s/t vectors")
    return _count_two_row(*p.density())
