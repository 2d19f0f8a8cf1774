"""Structural maps on two-row set-valued tableaux.

* tableau <-> N-E lattice path (first-row entries are East steps, second-row
  entries North steps), the maximal path of a density and the order ideal
  below it;
* the density shift that deletes the first column, and its family of
  inverses indexed by which shifted entries came from cell (2,1);
* horizontal concatenation of an r-tuple of k-Catalan tableaux into one
  tableau of density rho(k, r), and the splitting map back;
* tennis-ball lawn sets <-> tableaux, with a brute-force simulator of the
  throwing process as an oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import SetValuedTableau, check_density, density_of, validate
from .enumeration import TwoRowDensity
from .numbers import Raney

# -- lattice paths ------------------------------------------------------------


@dataclass(frozen=True, order=True)
class LatticePath:
    steps: str

    def __post_init__(self):
        steps = "".join(self.steps).upper()
        if set(steps) - {"E", "N"}:
            raise ValueError(f"path steps must be E or N, got {self.steps!r}")
        object.__setattr__(self, "steps", steps)

    @property
    def shape(self) -> tuple[int, int]:
        return self.steps.count("E"), self.steps.count("N")

    def heights(self) -> tuple[int, ...]:
        """Number of N steps taken before each E step."""
        out, h = [], 0
        for c in self.steps:
            if c == "E":
                out.append(h)
            else:
                h += 1
        return tuple(out)

    @classmethod
    def from_heights(cls, heights: Sequence[int], b: int) -> "LatticePath":
        steps, h = [], 0
        for x in heights:
            steps.append("N" * (x - h) + "E")
            h = x
        steps.append("N" * (b - h))
        return cls("".join(steps))

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return self.steps


def path_leq(p1: LatticePath, p2: LatticePath) -> bool:
    """True when p1 lies weakly below p2 (same endpoints)."""
    if p1.shape != p2.shape:
        raise ValueError(f"paths have different shapes {p1.shape} and {p2.shape}")
    return all(x <= y for x, y in zip(p1.heights(), p2.heights()))


def _two_row(t: SetValuedTableau) -> tuple[tuple, tuple]:
    if len(t.cells) > 2:
        raise ValueError("path correspondence needs a tableau with at most two rows")
    top = t.cells[0] if t.cells else ()
    bottom = t.cells[1] if len(t.cells) > 1 else ()
    return top, bottom


def _check_unambiguous(d: TwoRowDensity):
    for j in range(d.n - 1):
        if d.b[j] == 0 and d.a[j + 1] == 0:
            raise ValueError(
                f"ambiguous zero densities: cells (2,{j + 1}) and (1,{j + 2}) are both empty"
            )


def tableau_to_path(t: SetValuedTableau) -> LatticePath:
    """Step x is E when x sits in the first row, N when it sits in the second."""
    top, _ = _two_row(t)
    _check_unambiguous(TwoRowDensity.from_grid(t.shape, density_of(t)))
    first = {x for c in top for x in c}
    return LatticePath("".join("E" if x in first else "N" for x in range(1, t.size + 1)))


def path_to_tableau(p: LatticePath, shape, rho) -> SetValuedTableau:
    """Inverse of :func:`tableau_to_path` for a fixed two-row density."""
    rho = check_density(shape, rho)
    if len(rho) > 2:
        raise ValueError("path correspondence needs a shape with at most two rows")
    top = rho[0] if rho else ()
    bottom = rho[1] if len(rho) > 1 else ()
    if p.shape != (sum(top), sum(bottom)):
        raise ValueError(f"path shape {p.shape} does not match density sums {(sum(top), sum(bottom))}")
    east = [x for x, c in enumerate(p.steps, 1) if c == "E"]
    north = [x for x, c in enumerate(p.steps, 1) if c == "N"]

    def chunk(xs, sizes):
        out, pos = [], 0
        for s in sizes:
            out.append(xs[pos:pos + s])
            pos += s
        return out

    rows = [chunk(east, top)] + ([chunk(north, bottom)] if len(rho) > 1 else [])
    t = SetValuedTableau(rows)
    if not validate(t).ok:
        raise ValueError("path not weakly below P_max")
    return t


def p_max(d) -> LatticePath:
    """E^{a_1} N^{b_1} ... E^{a_n} N^{b_n} for a two-row density."""
    if not isinstance(d, TwoRowDensity):
        d = TwoRowDensity.from_grid(*d)
    _check_unambiguous(d)
    return LatticePath("".join("E" * x + "N" * y for x, y in zip(d.a, d.b)))


def t_max(shape, rho) -> SetValuedTableau:
    """The tableau whose columns are filled consecutively, left to right."""
    return path_to_tableau(p_max((shape, rho)), shape, rho)


def paths_below(top: LatticePath) -> Iterator[LatticePath]:
    """All paths of the same shape weakly below ``top``, lexicographic with E < N."""
    a, b = top.shape
    bound = top.heights()
    steps: list[str] = []

    def walk(e: int, h: int) -> Iterator[LatticePath]:
        if e == a and h == b:
            yield LatticePath("".join(steps))
            return
        if e < a:
            steps.append("E")
            yield from walk(e + 1, h)
            steps.pop()
        if h < b and (e == a or h + 1 <= bound[e]):
            steps.append("N")
            yield from walk(e, h + 1)
            steps.pop()

    yield from walk(0, 0)


def count_paths_below(top: LatticePath) -> int:
    """Size of the order ideal below ``top``; O(a*b) prefix DP."""
    a, b = top.shape
    bound = list(top.heights()) + [b]
    # ways[h] = number of admissible prefixes ending with e East steps at height h
    ways = [1 if h <= bound[0] else 0 for h in range(b + 1)]
    for e in range(1, a + 1):
        nxt = [0] * (b + 1)
        run = 0
        for h in range(b + 1):
            run += ways[h]
            nxt[h] = run if h <= bound[e] else 0
        ways = nxt
    return ways[b]


def swap_cover(t: SetValuedTableau, i: int) -> SetValuedTableau:
    """Swap i (second row) and i+1 (first row), turning an NE pair of the path into EN."""
    top, bottom = _two_row(t)
    rows = [[list(c) for c in top], [list(c) for c in bottom]]
    where = {}
    for r, row in enumerate(rows):
        for j, c in enumerate(row):
            for x in c:
                where[x] = (r, j)
    if where.get(i, (None,))[0] != 1 or where.get(i + 1, (None,))[0] != 0:
        raise ValueError(f"{i} must be in the second row and {i + 1} in the first")
    (r1, j1), (r2, j2) = where[i], where[i + 1]
    rows[r1][j1][rows[r1][j1].index(i)] = i + 1
    rows[r2][j2][rows[r2][j2].index(i + 1)] = i
    return SetValuedTableau(rows[: len(t.cells)])


# -- density shifting ---------------------------------------------------------


def density_shift(t: SetValuedTableau) -> tuple[SetValuedTableau, int]:
    """Delete the first column, pushing entries of (2,1) into column 2.

    Entries of (2,1) smaller than the largest entry of (1,2) move up into
    (1,2); the rest join (2,2).  Everything is then shifted down by the size
    of (1,1).  Returns the new tableau and the number ``i`` of entries that
    moved up.
    """
    top, bottom = _two_row(t)
    n1, n2 = len(top), len(bottom)
    if n1 < 2:
        raise ValueError("density shift needs at least two columns")
    a1 = len(top[0])
    beta = bottom[0] if n2 else ()
    alpha = top[1]
    cut = max(alpha) if alpha else 0
    up = [x for x in beta if x < cut]
    down = [x for x in beta if x >= cut]
    new_top = [list(alpha) + up] + [list(c) for c in top[2:]]
    if n2 >= 2:
        new_bottom = [down + list(bottom[1])] + [list(c) for c in bottom[2:]]
    elif n2 == 1:
        new_bottom = [down]
    else:
        new_bottom = []
    rows = [[[x - a1 for x in c] for c in row] for row in (new_top, new_bottom) if row]
    return SetValuedTableau(rows), len(up)


def shifted_grid(shape, rho, i: int, corner: int | None = None):
    """Shape and density of the shifted tableaux in class ``i``.

    Cell (1,1) gets ``corner`` entries, by default a_2 + i (what the shift
    actually produces); cell (2,1) gets b_1 + b_2 - i.
    """
    rho = check_density(shape, rho)
    d = TwoRowDensity.from_grid(shape, rho)
    if d.n < 2:
        raise ValueError("density shift needs at least two columns")
    n2 = len(rho[1]) if len(rho) > 1 else 0
    rows2 = max(n2 - 1, 1) if n2 else 0
    top = (d.a[1] + i if corner is None else corner,) + d.a[2:]
    bottom = ((d.b[0] + d.b[1] - i,) + d.b[2:])[:rows2]
    if rows2 == 0:
        return (d.n - 1,), (top,)
    return (d.n - 1, rows2), (top, bottom)


def density_shift_inverse(
    tp: SetValuedTableau,
    i: int,
    u: Sequence[int],
    a1: int,
    b1: int,
    n2: int | None = None,
) -> SetValuedTableau:
    """Rebuild a first column so that :func:`density_shift` returns ``(tp, i)``.

    ``u`` picks which ``i`` entries of cell (1,1) of ``tp`` came from cell
    (2,1); it may not contain the largest entry.  ``n2`` is the length of the
    second row of the result; by default it is one more than in ``tp``.
    """
    top, bottom = _two_row(tp)
    u = sorted(set(int(x) for x in u))
    if len(u) != i:
        raise ValueError(f"u must have exactly i={i} entries")
    if i > b1:
        raise ValueError(f"cannot move i={i} entries out of a cell of size b1={b1}")
    corner = list(top[0]) if top else []
    if any(x not in corner for x in u):
        raise ValueError("u must be a subset of cell (1,1)")
    if corner and u and max(corner) in u:
        raise ValueError("u may not contain the largest entry of cell (1,1)")
    low = list(bottom[0]) if bottom else []
    if len(low) < b1 - i:
        raise ValueError(f"cell (2,1) has {len(low)} entries, need at least {b1 - i}")
    taken = low[: b1 - i]
    col_bottom = u + taken
    rest_corner = [x for x in corner if x not in u]
    rest_low = low[b1 - i:]
    new_top = [[], rest_corner] + [list(c) for c in top[1:]]
    new_bottom = [col_bottom] + ([rest_low] + [list(c) for c in bottom[1:]] if bottom else [])
    if n2 is not None:
        while len(new_bottom) > n2:
            if new_bottom[-1]:
                raise ValueError(f"second row does not fit in {n2} cells")
            new_bottom.pop()
        while len(new_bottom) < n2:
            new_bottom.append([])
    rows = [[[x + a1 for x in c] for c in row] for row in (new_top, new_bottom)]
    rows[0][0] = list(range(1, a1 + 1))
    return SetValuedTableau([row for row in rows if row])


# -- Raney concatenation --------------------------------------------------------


def catalan_block_density(size: int, k: int):
    if size == 0:
        return (), ()
    return (size, size), ((1,) * size, (k - 1,) * size)


@dataclass(frozen=True)
class RaneyTuple:
    """Ordered r-tuple of tableaux with first row 1 and second row k-1 per cell."""

    blocks: tuple[SetValuedTableau, ...]
    k: int
    r: int

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if self.k < 1 or self.r < 1:
            raise ValueError("need k, r >= 1")
        if len(self.blocks) != self.r:
            raise ValueError(f"expected {self.r} blocks, got {len(self.blocks)}")
        for idx, blk in enumerate(self.blocks):
            size = len(blk.cells[0]) if blk.cells else 0
            shape, rho = catalan_block_density(size, self.k)
            if blk.shape != shape or not validate(blk, rho).ok:
                raise ValueError(f"block {idx + 1} is not a valid tableau of shape {size}x2 "
                                 f"with densities 1/{self.k - 1}")

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b.cells[0]) if b.cells else 0 for b in self.blocks)

    @property
    def n(self) -> int:
        return sum(self.sizes)


def raney_concat(rt: RaneyTuple) -> SetValuedTableau:
    """Concatenate the blocks into one tableau of density rho(k, r).

    A marked column precedes each block (top marked for the first, bottom for
    the others).  Labels are handed out left to right; then the second row is
    repacked leftwards into cells of sizes r-1, k-1, k-1, ... .
    """
    k, r = rt.k, rt.r
    label = 1
    first_row = [[label]]
    second_seq: list[int] = []
    for j, blk in enumerate(rt.blocks):
        if j > 0:
            label += 1
            second_seq.append(label)
        offset = label
        for col in range(len(blk.cells[0]) if blk.cells else 0):
            first_row.append([x + offset for x in blk.cells[0][col]])
        second_seq.extend(x + offset for x in blk.row_entries(1))
        label += blk.size
    second_seq.sort()
    sizes = [r - 1] + [k - 1] * rt.n
    second_row, pos = [], 0
    for s in sizes:
        second_row.append(second_seq[pos:pos + s])
        pos += s
    return SetValuedTableau([first_row, second_row])


def raney_split(t: SetValuedTableau, k: int, r: int) -> RaneyTuple:
    """Inverse of :func:`raney_concat`.

    Walks the first-row entries left to right.  A second-row entry smaller
    than the next first-row entry cannot sit under it, so it must be one of
    the r-1 markers; each marker opens a new block.  Second-row entries left
    over at the end are markers of trailing empty blocks.
    """
    if not t.cells:
        raise ValueError("tableau is not of density rho(k, r)")
    n = len(t.cells[0]) - 1
    shape, rho = Raney(n, k, r).density()
    if t.shape != shape or not validate(t, rho).ok:
        raise ValueError(f"tableau is not a valid tableau of density rho({k},{r})")
    tops = [c[0] for c in t.cells[0][1:]]
    queue = sorted(t.row_entries(1))
    pos = 0
    blocks: list[list[tuple[int, list[int]]]] = [[]]
    for x in tops:
        while pos < len(queue) and queue[pos] < x:
            blocks.append([])
            pos += 1
        col = queue[pos:pos + k - 1]
        pos += k - 1
        blocks[-1].append((x, col))
    while pos < len(queue):
        blocks.append([])
        pos += 1
    if len(blocks) != r:
        raise ValueError(f"found {len(blocks) - 1} markers, expected {r - 1}")

    out = []
    for cols in blocks:
        if not cols:
            out.append(SetValuedTableau(()))
            continue
        labels = sorted(x for top, bot in cols for x in [top, *bot])
        rank = {x: idx + 1 for idx, x in enumerate(labels)}
        out.append(SetValuedTableau([
            [[rank[top]] for top, _ in cols],
            [[rank[x] for x in bot] for _, bot in cols],
        ]))
    return RaneyTuple(tuple(out), k, r)


# -- tennis balls -------------------------------------------------------------


def _cumulative(xs: Sequence[int]) -> list[int]:
    return list(itertools.accumulate(xs))


def _constant(s_vec, t_vec) -> bool:
    return len(set(s_vec)) <= 1 and len(set(t_vec)) <= 1


@dataclass(frozen=True)
class TennisArrangement:
    """The set of balls on the lawn after ``n`` turns.

    During turn i, balls S_{i-1}+1 .. S_i join the room and t_i balls from the
    room go out of the window (S_i, T_i are running sums of s and t).
    """

    s_vec: tuple[int, ...]
    t_vec: tuple[int, ...]
    lawn: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "s_vec", tuple(self.s_vec))
        object.__setattr__(self, "t_vec", tuple(self.t_vec))
        object.__setattr__(self, "lawn", tuple(sorted(self.lawn)))
        if len(self.s_vec) != len(self.t_vec):
            raise ValueError("s and t vectors must have equal length")
        if any(not 1 <= t <= s for s, t in zip(self.s_vec, self.t_vec)):
            raise ValueError("need 1 <= t_i <= s_i")

    @classmethod
    def constant(cls, n: int, s: int, t: int, lawn) -> "TennisArrangement":
        return cls((s,) * n, (t,) * n, tuple(lawn))

    @property
    def n(self) -> int:
        return len(self.s_vec)

    def problems(self) -> list[str]:
        """Reasons the lawn set is unreachable (empty if it is reachable)."""
        out = []
        big_s, big_t = _cumulative(self.s_vec), _cumulative(self.t_vec)
        total_s = big_s[-1] if big_s else 0
        total_t = big_t[-1] if big_t else 0
        if len(set(self.lawn)) != len(self.lawn):
            out.append("repeated ball on the lawn")
        if any(not 1 <= x <= total_s for x in self.lawn):
            out.append(f"lawn balls must lie in 1..{total_s}")
        if len(self.lawn) != total_t:
            out.append(f"lawn holds {len(self.lawn)} balls, expected {total_t}")
        for i, (si, ti) in enumerate(zip(big_s, big_t), 1):
            if sum(1 for x in self.lawn if x <= si) < ti:
                out.append(f"after turn {i} fewer than {ti} lawn balls are labelled <= {si}")
        return out

    def is_valid(self) -> bool:
        return not self.problems()


def simulate_tennis(s_vec: Sequence[int], t_vec: Sequence[int]) -> set[frozenset[int]]:
    """Every lawn set reachable by some sequence of throws (brute force)."""
    lawns: set[frozenset[int]] = {frozenset()}
    added = 0
    for s, t in zip(s_vec, t_vec):
        added += s
        nxt = set()
        for lawn in lawns:
            room = [x for x in range(1, added + 1) if x not in lawn]
            for throw in itertools.combinations(room, t):
                nxt.add(lawn | frozenset(throw))
        lawns = nxt
    return lawns


def tennis_arrangements(s_vec: Sequence[int], t_vec: Sequence[int]) -> Iterator[TennisArrangement]:
    """All lawn sets satisfying the cumulative condition, lexicographically."""
    total_s, total_t = sum(s_vec), sum(t_vec)
    for lawn in itertools.combinations(range(1, total_s + 1), total_t):
        arr = TennisArrangement(tuple(s_vec), tuple(t_vec), lawn)
        if arr.is_valid():
            yield arr


def _tennis_padding(s_vec, t_vec) -> tuple[int, int]:
    if _constant(s_vec, t_vec) and s_vec:
        return t_vec[0], s_vec[0] - t_vec[0]
    return 1, 1


def tennis_density(s_vec, t_vec):
    """Density used by the tennis maps (constant rates use t / s-t padding)."""
    if not s_vec:
        raise ValueError("need at least one turn to infer the padding sizes")
    return _tennis_grid(s_vec, t_vec, *_tennis_padding(s_vec, t_vec))


def _tennis_grid(s_vec, t_vec, head, tail):
    n = len(s_vec)
    return (n + 1, n + 1), ((head,) + tuple(t_vec), tuple(s - t for s, t in zip(s_vec, t_vec)) + (tail,))


def tennis_to_tableau(arr: TennisArrangement, head: int | None = None, tail: int | None = None) -> SetValuedTableau:
    """Lawn balls fill the first row from column 2, the rest the second row.

    Labels shift up by ``head`` to make room for 1..head in cell (1,1); the
    last ``tail`` labels go in the final second-row cell.  For constant
    rates head=t and tail=s-t, otherwise both default to 1.
    """
    probs = arr.problems()
    if probs:
        raise ValueError("invalid arrangement: " + "; ".join(probs))
    if head is None or tail is None:
        if arr.n == 0:
            raise ValueError("an arrangement with no turns needs explicit padding sizes")
        head, tail = _tennis_padding(arr.s_vec, arr.t_vec)
    total_s = sum(arr.s_vec)
    lawn = list(arr.lawn)
    room = [x for x in range(1, total_s + 1) if x not in set(lawn)]
    top, pos = [list(range(1, head + 1))], 0
    for t in arr.t_vec:
        top.append([x + head for x in lawn[pos:pos + t]])
        pos += t
    bottom, pos = [], 0
    for s, t in zip(arr.s_vec, arr.t_vec):
        bottom.append([x + head for x in room[pos:pos + s - t]])
        pos += s - t
    bottom.append(list(range(total_s + head + 1, total_s + head + tail + 1)))
    return SetValuedTableau([top, bottom])


def tableau_to_tennis(t: SetValuedTableau, s, t_, n: int | None = None) -> TennisArrangement:
    """Recover the lawn set from a tableau built by :func:`tennis_to_tableau`.

    ``s`` and ``t_`` are either integers (constant rates, ``n`` turns) or
    per-turn sequences.
    """
    if isinstance(s, int):
        if n is None:
            n = len(t.cells[0]) - 1 if t.cells else 0
        s_vec, t_vec = (s,) * n, (t_,) * n
        head, tail = t_, s - t_
    else:
        s_vec, t_vec = tuple(s), tuple(t_)
        if n is not None and n != len(s_vec):
            raise ValueError("n does not match the length of the s/t vectors")
        head, tail = _tennis_padding(s_vec, t_vec)
    shape, rho = _tennis_grid(s_vec, t_vec, head, tail)
    if t.shape != shape or not validate(t, rho).ok:
        raise ValueError("tableau does not have the tennis density for these parameters")
    lawn = [x - head for c in t.cells[0][1:] for x in c]
    return TennisArrangement(s_vec, t_vec, tuple(lawn))
