"""Cross-checks between independent counting and mapping routes.

Each check is a function taking a :class:`Bounds` and returning a
:class:`CheckResult`.  ``svt verify`` runs them all and prints one line per
check.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import bijections as bj
from .core import SetValuedTableau, reverse_density, schutzenberger, validate
from .enumeration import TwoRowDensity, binomial, count_closed_form, count_shift_recursion
from .generate import count_by_generation, generate_all
from .numbers import (
    KCatalan,
    Raney,
    Rational,
    Tennis,
    TennisGeneral,
    catalan_k,
    raney,
    raney_by_convolution,
    rational_catalan,
)

FIGURE_1 = [
    [[[1, 2], [3, 4]], [[5, 6], [7, 8]]],
    [[[1, 2], [3, 5]], [[4, 6], [7, 8]]],
    [[[1, 2], [3, 6]], [[4, 5], [7, 8]]],
    [[[1, 2], [4, 5]], [[3, 6], [7, 8]]],
    [[[1, 2], [4, 6]], [[3, 5], [7, 8]]],
    [[[1, 2], [5, 6]], [[3, 4], [7, 8]]],
]

FIGURE_4_BLOCKS = [
    [[[1]], [[2, 3]]],
    [[[1], [3]], [[2, 4], [5, 6]]],
    [],
    [[[1], [4]], [[2, 3], [5, 6]]],
]
FIGURE_4_TABLEAU = [
    [[1], [2], [6], [8], [14], [17]],
    [[3, 4, 5], [7, 9], [10, 11], [12, 13], [15, 16], [18, 19]],
]

# hand-picked non-constant tennis schedules
TENNIS_GENERAL_CASES = [((2, 3), (1, 1)), ((3, 2, 2), (2, 1, 1)), ((2, 3, 2), (1, 2, 1))]


@dataclass(frozen=True)
class Bounds:
    max_mass: int = 12
    max_cols: int = 4
    max_entry: int = 3

    @classmethod
    def suite(cls, name: str, max_mass: int | None = None) -> "Bounds":
        b = {"small": cls(max_mass=9), "full": cls(max_mass=12)}[name]
        if max_mass is not None:
            b = cls(max_mass=max_mass, max_cols=b.max_cols, max_entry=b.max_entry)
        return b


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""
    seconds: float = 0.0


def two_row_grids(bounds: Bounds, positive: bool = False) -> Iterator[tuple[tuple, tuple]]:
    """Two-row shapes with n2 <= n1 <= max_cols and bounded cell densities."""
    lo = 1 if positive else 0
    for n1 in range(1, bounds.max_cols + 1):
        for n2 in range(1, n1 + 1):
            for vals in itertools.product(range(lo, bounds.max_entry + 1), repeat=n1 + n2):
                if sum(vals) <= bounds.max_mass:
                    yield (n1, n2), (vals[:n1], vals[n1:])


def _result(name, failures, cases, start):
    detail = "; ".join(failures[:3]) + (f" (+{len(failures) - 3} more)" if len(failures) > 3 else "")
    return CheckResult(name, not failures, cases, detail, time.perf_counter() - start)


def check_figure_1(bounds: Bounds) -> CheckResult:
    start = time.perf_counter()
    got = sorted(t.to_lists() for t in generate_all((2, 2), ((2, 2), (2, 2))))
    fails = [] if got == sorted(FIGURE_1) else [f"generated {len(got)} tableaux differing from the figure"]
    return _result("figure 1: SVT((2,2), all-2)", fails, 1, start)


def check_triple_agreement(bounds: Bounds) -> CheckResult:
    start = time.perf_counter()
    fails, cases = [], 0
    for shape, rho in two_row_grids(bounds):
        d = TwoRowDensity.from_grid(shape, rho)
        brute = count_by_generation(shape, rho)
        rec, closed = count_shift_recursion(d), count_closed_form(d)
        cases += 1
        if not brute == rec == closed:
            fails.append(f"{shape} {rho}: brute={brute} shift={rec} closed={closed}")
    return _result("brute = shift recursion = closed form", fails, cases, start)


def check_k_catalan(bounds: Bounds) -> CheckResult:
    start = time.perf_counter()
    fails, cases = [], 0
    for k in range(1, bounds.max_mass + 1):
        for n in range(0, bounds.max_mass // k + 1):
            got = count_by_generation(*KCatalan(n, k).density())
            cases += 1
            if got != catalan_k(n, k):
                fails.append(f"n={n} k={k}: {got} != {catalan_k(n, k)}")
    return _result("k-Catalan densities", fails, cases, start)


def check_raney(bounds: Bounds) -> CheckResult:
    start = time.perf_counter()
    fails, cases = [], 0
    for n, k, r in itertools.product(range(9), range(1, 5), range(1, 5)):
        cases += 1
        if raney(n, k, r) != raney_by_convolution(n, k, r):
            fails.append(f"convolution n={n} k={k} r={r}")
    for k in range(1, bounds.max_mass + 1):
        for r in range(1, bounds.max_mass + 1):
            for n in range(0, bounds.max_mass + 1):
                if k * n + r > bounds.max_mass:
                    break
                cases += 1
                got = count_by_generation(*Raney(n, k, r).density())
                if got != raney(n, k, r):
                    fails.append(f"SVT n={n} k={k} r={r}: {got} != {raney(n, k, r)}")
    return _result("Raney: closed = convolution = SVT", fails, cases, start)


def check_rational(bounds: Bounds) -> CheckResult:
    start = time.perf_counter()
    fails, cases = [], 0
    for a in range(1, bounds.max_mass):
        for b in range(1, bounds.max_mass - a + 1):
            if math.gcd(a, b) != 1:
                continue
            cases += 1
            got = count_by_generation(*Rational(a, b).density())
            if got != rational_catalan(a, b):
                fails.append(f"a={a} b={b}: {got} != {rational_catalan(a, b)}")
    return _result("rational Catalan densities", fails, cases, start)


def check_tennis(bounds: Bounds) -> CheckResult:
    start = time.perf_counter()
    fails, cases = [], 0
    for s in range(1, 4):
        for t in range(1, s):
            for n in range(0, bounds.max_mass // s + 1):
                sim = len(bj.simulate_tennis((s,) * n, (t,) * n))
                svt = count_by_generation(*Tennis(n, s, t).density())
                cases += 1
                if not sim == svt == Tennis(n, s, t).value():
                    fails.append(f"(s,t,n)=({s},{t},{n}): sim={sim} svt={svt}")
                if t == 1 and s * n <= 10 and svt != catalan_k(n + 1, s):
                    fails.append(f"B_{s},1({n}) != C_{n + 1}^{s}")
    for s_vec, t_vec in TENNIS_GENERAL_CASES:
        sim = len(bj.simulate_tennis(s_vec, t_vec))
        svt = count_by_generation(*TennisGeneral(s_vec, t_vec).density())
        cases += 1
        if sim != svt:
            fails.append(f"s={s_vec} t={t_vec}: sim={sim} svt={svt}")
    return _result("tennis: simulation = SVT count", fails, cases, start)


def check_paths(bounds: Bounds) -> CheckResult:
    start = time.perf_counter()
    fails, cases = [], 0
    for shape, rho in two_row_grids(bounds, positive=True):
        cases += 1
        tableaux = list(generate_all(shape, rho))
        top = bj.p_max((shape, rho))
        image = set()
        for t in tableaux:
            p = bj.tableau_to_path(t)
            image.add(p)
            if bj.path_to_tableau(p, shape, rho) != t:
                fails.append(f"{rho}: round trip failed on {t}")
                break
        ideal = set(bj.paths_below(top))
        if image != ideal:
            fails.append(f"{rho}: image differs from order ideal ({len(image)} vs {len(ideal)})")
        if bj.count_paths_below(top) != len(tableaux):
            fails.append(f"{rho}: path DP {bj.count_paths_below(top)} != {len(tableaux)}")
    return _result("tableau <-> path and order ideal below P_max", fails, cases, start)


def check_density_shift(bounds: Bounds) -> CheckResult:
    start = time.perf_counter()
    fails, cases = [], 0
    limit = min(bounds.max_mass, 10)
    for shape, rho in two_row_grids(Bounds(limit, bounds.max_cols, bounds.max_entry)):
        if shape[0] < 2:
            continue
        cases += 1
        a1, a2, b1 = rho[0][0], rho[0][1], rho[1][0]
        classes: dict[tuple, set] = {}
        for t in generate_all(shape, rho):
            tp, i = bj.density_shift(t)
            classes.setdefault((i, tp.density), set()).add(t)
        rebuilt: dict[tuple, set] = {}
        for i in range(b1 + 1):
            for tp in generate_all(*bj.shifted_grid(shape, rho, i)):
                for u in itertools.combinations(range(1, a2 + i), i):
                    t = bj.density_shift_inverse(tp, i, u, a1, b1, n2=shape[1])
                    if bj.density_shift(t) != (tp, i) or not validate(t, rho).ok:
                        fails.append(f"{rho}: inverse failed for i={i} u={u}")
                    rebuilt.setdefault((i, tp.density), set()).add(t)
        if rebuilt != classes:
            fails.append(f"{rho}: inverse maps do not partition SVT")
        # class sizes, with cell (1,1) normalised back to a_2
        for i in range(b1 + 1):
            size = sum(len(v) for (j, _), v in classes.items() if j == i)
            want = binomial(a2 + i - 1, i) * count_by_generation(*bj.shifted_grid(shape, rho, i, corner=a2))
            if size != want:
                fails.append(f"{rho}: class {i} has {size} tableaux, expected {want}")
    return _result("density shift classes", fails, cases, start)


def _raney_tuples(n: int, k: int, r: int) -> Iterator[bj.RaneyTuple]:
    for sizes in itertools.product(range(n + 1), repeat=r):
        if sum(sizes) != n:
            continue
        pools = [list(generate_all(*bj.catalan_block_density(s, k))) for s in sizes]
        for blocks in itertools.product(*pools):
            yield bj.RaneyTuple(blocks, k, r)


def check_raney_maps(bounds: Bounds) -> CheckResult:
    start = time.perf_counter()
    fails, cases = [], 0
    fig_in = bj.RaneyTuple(tuple(SetValuedTableau(b) for b in FIGURE_4_BLOCKS), 3, 4)
    fig_out = SetValuedTableau(FIGURE_4_TABLEAU)
    cases += 1
    if bj.raney_concat(fig_in) != fig_out or bj.raney_split(fig_out, 3, 4) != fig_in:
        fails.append("figure 4 pair not reproduced")
    limit = min(bounds.max_mass, 10)
    for k in range(1, limit + 1):
        for r in range(1, limit + 1):
            for n in range(0, limit + 1):
                if k * n + r > limit:
                    break
                shape, rho = Raney(n, k, r).density()
                images = set()
                for rt in _raney_tuples(n, k, r):
                    cases += 1
                    t = bj.raney_concat(rt)
                    images.add(t)
                    if bj.raney_split(t, k, r) != rt:
                        fails.append(f"split(concat) != id at n={n} k={k} r={r}")
                target = set(generate_all(shape, rho))
                if images != target:
                    fails.append(f"concat image != SVT at n={n} k={k} r={r}")
    return _result("Raney concat/split", fails, cases, start)


def _rectangular_grids(bounds: Bounds):
    limit = bounds.max_mass
    for rows in range(1, 4):
        for cols in range(1, 5):
            if rows * cols > 6:
                continue
            top = 3 if rows * cols <= 4 else 2
            for vals in itertools.product(range(top + 1), repeat=rows * cols):
                if sum(vals) <= limit:
                    yield (cols,) * rows, tuple(vals[i * cols:(i + 1) * cols] for i in range(rows))


def check_schutzenberger(bounds: Bounds) -> CheckResult:
    start = time.perf_counter()
    fails, cases = [], 0
    for shape, rho in _rectangular_grids(bounds):
        cases += 1
        flipped = reverse_density(rho, shape)
        count = 0
        for t in generate_all(shape, rho):
            count += 1
            s = schutzenberger(t)
            if s.density != flipped or not validate(s).ok or schutzenberger(s) != t:
                fails.append(f"{rho}: involution fails on {t}")
                break
        if count != count_by_generation(shape, flipped):
            fails.append(f"{rho}: counts differ after reversing the density")
    return _result("Schutzenberger involution", fails, cases, start)


CHECKS: list[Callable[[Bounds], CheckResult]] = [
    check_figure_1,
    check_triple_agreement,
    check_k_catalan,
    check_raney,
    check_rational,
    check_tennis,
    check_paths,
    check_density_shift,
    check_raney_maps,
    check_schutzenberger,
]


def run_checks(bounds: Bounds, checks=None) -> list[CheckResult]:
    return [check(bounds) for check in (checks or CHECKS)]


def format_report(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        line = f"{mark}  {r.name:<{width}}  {r.cases:>6} cases  {r.seconds:6.2f}s"
        if r.detail:
            line += f"  {r.detail}"
        lines.append(line)
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
