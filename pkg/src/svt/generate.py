"""Exhaustive generation of standard set-valued tableaux of a given density.

Integers ``1..m`` are placed one at a time in increasing order.  Integer
``t`` may enter a cell when the cell still has room and every non-empty cell
weakly north-west of it is already full.  Because fullness only ever grows,
it is enough to look at the nearest non-empty predecessors of each cell
(its covers among non-empty cells); with no zero densities these are just
the cells directly above and to the left.

Cells are tried in row-major order at every step, so tableaux come out in
lexicographic order of the sequence (cell of 1, cell of 2, ..., cell of m).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .core import Density, SetValuedTableau, Shape, cells_of, check_density, total_mass


def _placement_graph(shape: Shape, rho: Density):
    cells = cells_of(shape)
    caps = [rho[i][j] for i, j in cells]
    full = [k for k, c in enumerate(cells) if caps[k] > 0]
    covers: list[tuple[int, ...]] = []
    for k, (i, j) in enumerate(cells):
        below = [
            q for q in full
            if q != k and cells[q][0] <= i and cells[q][1] <= j
        ]
        # keep only maximal predecessors: nothing non-empty between q and (i, j)
        maximal = [
            q for q in below
            if not any(
                p != q and cells[q][0] <= cells[p][0] and cells[q][1] <= cells[p][1]
                for p in below
            )
        ]
        covers.append(tuple(maximal))
    return cells, caps, covers


def generate_all(shape, rho) -> Iterator[SetValuedTableau]:
    """Yield every tableau in SVT(shape, rho) exactly once, in generation order."""
    rho = check_density(shape, rho)
    shape = tuple(len(r) for r in rho)
    cells, caps, covers = _placement_graph(shape, rho)
    m = total_mass(rho)
    ncells = len(cells)
    fill = [0] * ncells
    where = [0] * (m + 1)  # where[t] = cell index holding integer t

    def build() -> SetValuedTableau:
        grid = [[[] for _ in range(length)] for length in shape]
        for t in range(1, m + 1):
            i, j = cells[where[t]]
            grid[i][j].append(t)
        return SetValuedTableau._trusted(tuple(tuple(tuple(c) for c in row) for row in grid))

    def place(t: int) -> Iterator[SetValuedTableau]:
        if t > m:
            yield build()
            return
        for k in range(ncells):
            if fill[k] < caps[k] and all(fill[q] == caps[q] for q in covers[k]):
                fill[k] += 1
                where[t] = k
                yield from place(t + 1)
                fill[k] -= 1

    yield from place(1)


def count_by_generation(shape, rho) -> int:
    """Length of the :func:`generate_all` stream.

    Walks the same search tree as :func:`generate_all` but only counts the
    leaves, skipping tableau construction.
    """
    rho = check_density(shape, rho)
    shape = tuple(len(r) for r in rho)
    _, caps, covers = _placement_graph(shape, rho)
    m = total_mass(rho)
    ncells = len(caps)
    fill = [0] * ncells

    def leaves(t: int) -> int:
        if t > m:
            return 1
        n = 0
        for k in range(ncells):
            if fill[k] < caps[k]:
                for q in covers[k]:
                    if fill[q] != caps[q]:
                        break
                else:
                    fill[k] += 1
                    n += leaves(t + 1)
                    fill[k] -= 1
        return n

    return leaves(1)


def count_by_placement(shape, rho) -> int:
    """Count SVT(shape, rho) by memoising the placement process on fill states.

    Same placement rule as :func:`generate_all`, but the number of ways to
    finish depends only on how full each cell is, so states are shared.  Used
    where materialising every tableau would be too slow.
    """
    rho = check_density(shape, rho)
    shape = tuple(len(r) for r in rho)
    cells, caps, covers = _placement_graph(shape, rho)
    caps_t = tuple(caps)

    @lru_cache(maxsize=None)
    def ways(fill: tuple[int, ...]) -> int:
        if fill == caps_t:
            return 1
        total = 0
        for k in range(len(fill)):
            if fill[k] < caps_t[k] and all(fill[q] == caps_t[q] for q in covers[k]):
                total += ways(fill[:k] + (fill[k] + 1,) + fill[k + 1:])
        return total

    return ways(tuple(0 for _ in caps))
