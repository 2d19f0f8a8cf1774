"""Counting two-row set-valued tableaux without generating them.

Two ways are provided, both working on the padded view of a two-row density
(first-row sizes ``a``, second-row sizes ``b`` with ``b[j] = 0`` past the end
of the second row):

* :func:`count_shift_recursion` peels off the first column repeatedly,
  summing over how many entries of cell (2,1) end up in cell (1,2);
* :func:`count_closed_form` sums a product of binomials over all tuples
  dominated by the prefix sums of ``b``, evaluated as a DP over
  (column, remaining slack) instead of by listing tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .core import check_density


def binomial(n: int, k: int) -> int:
    """``C(n, k)`` with ``C(-1, 0) = 1`` and zero outside the usual range."""
    if k == 0 and n >= -1:
        return 1
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class TwoRowDensity:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        b = tuple(int(x) for x in self.b)
        if len(a) != len(b):
            raise ValueError("first and second row density lists must have equal length")
        if any(x < 0 for x in a + b):
            raise ValueError("cell densities must be non-negative")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_grid(cls, shape, rho) -> "TwoRowDensity":
        rho = check_density(shape, rho)
        if len(rho) > 2:
            raise ValueError("two-row counting needs a shape with at most two rows")
        n1 = len(rho[0]) if rho else 0
        a = rho[0] if rho else ()
        b = (rho[1] if len(rho) > 1 else ()) + (0,) * (n1 - (len(rho[1]) if len(rho) > 1 else 0))
        return cls(a, b)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def mass(self) -> int:
        return sum(self.a) + sum(self.b)

    def grid(self):
        """Rectangular (shape, density) with the padded zeros kept as cells."""
        if not self.a:
            return (), ()
        return (self.n, self.n), (self.a, self.b)


def _as_two_row(d) -> TwoRowDensity:
    if isinstance(d, TwoRowDensity):
        return d
    a, b = d
    return TwoRowDensity(tuple(a), tuple(b))


def count_shift_recursion(d) -> int:
    """Count by repeated density shifting of the first column."""
    d = _as_two_row(d)
    a, b = d.a, d.b

    @lru_cache(maxsize=None)
    def rec(col: int, first_b: int) -> int:
        # columns col.. remain; second-row cell of column col currently holds first_b
        if d.n - col <= 1:
            return 1
        nxt = a[col + 1]
        return sum(
            binomial(nxt + i - 1, i) * rec(col + 1, first_b + b[col + 1] - i)
            for i in range(first_b + 1)
        )

    if d.n == 0:
        return 1
    return rec(0, b[0])


def count_closed_form(d) -> int:
    """Sum of prod_j C(a[j+1] + i_j - 1, i_j) over tuples i dominated by b."""
    d = _as_two_row(d)
    a, b = d.a, d.b
    slack = {0: 1}  # unused prefix mass -> accumulated weight
    for j in range(d.n - 1):
        nxt: dict[int, int] = {}
        for s, w in slack.items():
            room = s + b[j]
            for i in range(room + 1):
                c = binomial(a[j + 1] + i - 1, i)
                if c:
                    nxt[room - i] = nxt.get(room - i, 0) + w * c
        slack = nxt
    return sum(slack.values())


def enumerate_dominated_tuples(b_prefix: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield all non-negative tuples i with i_1+..+i_k <= b_1+..+b_k for every k.

    Tuples come out in colexicographic order (last coordinate slowest), e.g.
    ``(2, 0)`` gives (0,0), (1,0), (2,0), (0,1), (1,1), (0,2).
    """
    b_prefix = tuple(int(x) for x in b_prefix)
    if any(x < 0 for x in b_prefix):
        raise ValueError("entries must be non-negative")
    n = len(b_prefix)
    bounds = [sum(b_prefix[: k + 1]) for k in range(n)]

    # fill coordinates from the last one down; a partial suffix is completable
    # iff it fits with zeros in front, so each coordinate's range is exact
    def extend(k: int, suffix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if k < 0:
            yield suffix
            return
        top = bounds[k]
        run = 0
        for off, x in enumerate(suffix):
            run += x
            top = min(top, bounds[k + 1 + off] - run)
        for x in range(top + 1):
            yield from extend(k - 1, (x,) + suffix)

    yield from extend(n - 1, ())


def dominates(x: Sequence[int], y: Sequence[int]) -> bool:
    """True when x precedes y in dominance order (prefix sums of x never exceed y's)."""
    if len(x) != len(y):
        raise ValueError("tuples must have equal length")
    sx = sy = 0
    for p, q in zip(x, y):
        sx += p
        sy += q
        if sx > sy:
            return False
    return True


def closed_form_by_tuples(d) -> int:
    """Closed form evaluated literally over the listed tuples (slow; for testing)."""
    d = _as_two_row(d)
    if d.n <= 1:
        return 1
    total = 0
    for tup in enumerate_dominated_tuples(d.b[:-1]):
        w = 1
        for j, i in enumerate(tup):
            w *= binomial(d.a[j + 1] + i - 1, i)
        total += w
    return total
