"""Shapes, densities and standard set-valued tableaux.

A shape is a tuple of non-increasing positive row lengths; a density is a
tuple of rows of non-negative cell sizes aligned with a shape.  Cells are
addressed 0-based internally; every user-facing message uses the 1-based
``(row, col)`` convention.

Standardness is the order relation of the Young diagram: every integer in a
cell is smaller than every integer in any cell weakly south-east of it.  When
all cells are non-empty this is the same as comparing each cell with its
right and lower neighbours; when a cell has density zero the relation still
passes through it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

Shape = tuple[int, ...]
Density = tuple[tuple[int, ...], ...]


def check_shape(shape: Sequence[int]) -> Shape:
    shape = tuple(int(x) for x in shape)
    if any(x < 1 for x in shape):
        raise ValueError(f"row lengths must be positive: {shape}")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"row lengths must be non-increasing: {shape}")
    return shape


def check_density(shape: Sequence[int], rho: Iterable[Iterable[int]]) -> Density:
    """Normalise ``rho`` to a tuple grid and check it against ``shape``."""
    shape = check_shape(shape)
    rho = tuple(tuple(int(x) for x in row) for row in rho)
    if tuple(len(row) for row in rho) != shape:
        raise ValueError(f"density grid {[len(r) for r in rho]} does not match shape {list(shape)}")
    if any(x < 0 for row in rho for x in row):
        raise ValueError("cell densities must be non-negative")
    return rho


def total_mass(rho: Density) -> int:
    return sum(sum(row) for row in rho)


def cells_of(shape: Shape) -> list[tuple[int, int]]:
    """Cells of ``shape`` in row-major order (0-based)."""
    return [(i, j) for i, length in enumerate(shape) for j in range(length)]


def is_rectangular(shape: Shape) -> bool:
    return len(set(shape)) <= 1


@dataclass(frozen=True, order=True)
class SetValuedTableau:
    """A filling of a Young diagram by finite sets of integers.

    ``cells[i][j]`` is the ascending tuple of integers in row ``i``, column
    ``j``.  Construction sorts each cell but performs no other checking; use
    :func:`validate` for that.
    """

    cells: tuple[tuple[tuple[int, ...], ...], ...]

    def __init__(self, cells):
        object.__setattr__(
            self, "cells", tuple(tuple(tuple(sorted(int(x) for x in c)) for c in row) for row in cells)
        )

    @classmethod
    def _trusted(cls, cells) -> "SetValuedTableau":
        # cells already nested tuples with ascending cells
        t = object.__new__(cls)
        object.__setattr__(t, "cells", cells)
        return t

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.cells)

    @property
    def density(self) -> Density:
        return density_of(self)

    @property
    def size(self) -> int:
        return sum(len(c) for row in self.cells for c in row)

    def row_entries(self, i: int) -> list[int]:
        if i >= len(self.cells):
            return []
        return [x for c in self.cells[i] for x in c]

    def to_lists(self) -> list[list[list[int]]]:
        return [[list(c) for c in row] for row in self.cells]

    def __str__(self):
        return " / ".join(
            " ".join("{" + ",".join(map(str, c)) + "}" for c in row) for row in self.cells
        )


EMPTY_TABLEAU = SetValuedTableau(())


@dataclass(frozen=True)
class Violation:
    rule: str  # structure, density, partition, row, column or quadrant
    cells: tuple[tuple[int, int], ...] = ()  # 1-based coordinates
    message: str = ""


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def _one_based(c):
    return (c[0] + 1, c[1] + 1)


def validate(t: SetValuedTableau, rho: Density | None = None) -> ValidationReport:
    """Check ``t`` is a standard set-valued tableau.

    If ``rho`` is given the cell sizes must match it and the entries must be
    exactly ``1..total_mass(rho)``; otherwise the density is read off ``t``.
    Order violations are only reported between cells with nothing non-empty
    strictly between them, so one misplaced entry does not produce a cascade
    of transitive complaints.
    """
    out: list[Violation] = []
    shape = t.shape
    if any(x < 1 for x in shape) or any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        out.append(Violation("structure", (), f"row lengths {list(shape)} are not a partition"))
        return ValidationReport(tuple(out))

    entries = sorted(x for row in t.cells for c in row for x in c)
    m = len(entries)
    if rho is not None:
        rho = tuple(tuple(row) for row in rho)
        if tuple(len(row) for row in rho) != shape:
            out.append(Violation("structure", (), f"density grid does not match shape {list(shape)}"))
            return ValidationReport(tuple(out))
        for i, j in cells_of(shape):
            if len(t.cells[i][j]) != rho[i][j]:
                out.append(
                    Violation(
                        "density",
                        ((i + 1, j + 1),),
                        f"cell {(i + 1, j + 1)} holds {len(t.cells[i][j])} entries, expected {rho[i][j]}",
                    )
                )
        m = total_mass(rho)
    if entries != list(range(1, m + 1)):
        out.append(Violation("partition", (), f"entries do not partition [{m}]"))

    full = tuple((i, j) for (i, j) in cells_of(shape) if t.cells[i][j])
    for c, d in _cover_pairs(full):
        if t.cells[c[0]][c[1]][-1] >= min(t.cells[d[0]][d[1]]):
                rule = "row" if c[0] == d[0] else "column" if c[1] == d[1] else "quadrant"
                out.append(
                    Violation(
                        rule,
                        (_one_based(c), _one_based(d)),
                        f"{rule}-standardness fails at {_one_based(c)}/{_one_based(d)}",
                    )
                )
    return ValidationReport(tuple(out))


@lru_cache(maxsize=4096)
def _cover_pairs(full: tuple[tuple[int, int], ...]) -> tuple:
    """Pairs c < d of non-empty cells with no non-empty cell strictly between."""
    out = []
    for c in full:
        for d in full:
            if d == c or not (c[0] <= d[0] and c[1] <= d[1]):
                continue
            if not any(
                e != c and e != d and c[0] <= e[0] <= d[0] and c[1] <= e[1] <= d[1] for e in full
            ):
                out.append((c, d))
    return tuple(out)


def is_standard(t: SetValuedTableau, rho: Density | None = None) -> bool:
    return validate(t, rho).ok


def density_of(t: SetValuedTableau) -> Density:
    return tuple(tuple(len(c) for c in row) for row in t.cells)


def reverse_density(rho: Density, shape: Sequence[int]) -> Density:
    """Rotate a density grid on a rectangular shape by 180 degrees."""
    shape = check_shape(shape)
    if not is_rectangular(shape):
        raise ValueError("involution requires rectangular shape")
    rho = check_density(shape, rho)
    return tuple(tuple(reversed(row)) for row in reversed(rho))


def schutzenberger(t: SetValuedTableau) -> SetValuedTableau:
    """Reverse the alphabet (x -> m+1-x) and rotate the grid by 180 degrees."""
    if not is_rectangular(t.shape):
        raise ValueError("involution requires rectangular shape")
    m = t.size
    return SetValuedTableau(
        [[[m + 1 - x for x in c] for c in reversed(row)] for row in reversed(t.cells)]
    )
