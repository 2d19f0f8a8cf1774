"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line (visible with ``pytest -s``
or by running this file directly).  All comparisons are exact integer
equalities; the only tolerances are the wall-clock limits pinned below.
"""

from __future__ import annotations

import io
import json
import sys
import time
from contextlib import redirect_stdout

from svt.cli import main
from svt.verify import (
    FIGURE_1,
    Bounds,
    check_density_shift,
    check_k_catalan,
    check_paths,
    check_raney,
    check_raney_maps,
    check_rational,
    check_schutzenberger,
    check_tennis,
    check_triple_agreement,
)
from svt.numbers import catalan_k, raney, rational_catalan, tennis_count

FIGURE_1_SECONDS = 1.0
SWEEP_SECONDS = 60.0
FULL = Bounds(max_mass=12, max_cols=4, max_entry=3)


def report(n, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {n}: {title}"
    if detail.strip():
        line += f"  [{detail.strip()}]"
    print(line)
    return ok


def _run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def criterion_1():
    start = time.perf_counter()
    code, out = _run_cli(["generate", "--shape", "2,2", "--density", "2,2;2,2"])
    elapsed = time.perf_counter() - start
    lines = [json.loads(x) for x in out.splitlines()]
    tableaux = sorted(x["cells"] for x in lines if "cells" in x)
    count = lines[-1]["count"]
    ok = code == 0 and tableaux == sorted(FIGURE_1) and count == "6" and elapsed < FIGURE_1_SECONDS
    return report(1, "Figure 1 reproduced by `svt generate`", ok, f"count={count} {elapsed:.3f}s < {FIGURE_1_SECONDS}s")


def criterion_2():
    r = check_triple_agreement(FULL)
    ok = r.passed and r.seconds < SWEEP_SECONDS
    return report(2, "brute = recursion = closed form", ok, f"{r.cases} grids {r.seconds:.1f}s < {SWEEP_SECONDS}s {r.detail}")


def criterion_3():
    r = check_k_catalan(FULL)
    ok = r.passed and catalan_k(3, 3) == 12 and catalan_k(3, 2) == 5
    return report(3, "k-Catalan for kn <= 12", ok, f"{r.cases} cases {r.detail}")


def criterion_4():
    r = check_raney(FULL)
    ok = r.passed and raney(2, 2, 2) == 5
    return report(4, "Raney closed = convolution = SVT", ok, f"{r.cases} cases {r.detail}")


def criterion_5():
    r = check_rational(Bounds(max_mass=10))
    ok = r.passed and rational_catalan(3, 5) == 7 and rational_catalan(2, 3) == 2
    return report(5, "rational Catalan for a+b <= 10", ok, f"{r.cases} cases {r.detail}")


def criterion_6():
    r = check_tennis(FULL)
    ok = r.passed and tennis_count(2, 2, 1) == 5
    return report(6, "tennis simulation = SVT count", ok, f"{r.cases} cases {r.detail}")


def criterion_7():
    results = [
        check_paths(FULL),
        check_density_shift(Bounds(max_mass=10)),
        check_raney_maps(Bounds(max_mass=10)),
        check_schutzenberger(FULL),
    ]
    ok = all(r.passed for r in results)
    detail = ", ".join(f"{r.name}: {'ok' if r.passed else r.detail}" for r in results)
    return report(7, "bijection suites", ok, detail)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7]


def test_criterion_1_figure_1():
    assert criterion_1()


def test_criterion_2_triple_agreement():
    assert criterion_2()


def test_criterion_3_k_catalan():
    assert criterion_3()


def test_criterion_4_raney():
    assert criterion_4()


def test_criterion_5_rational():
    assert criterion_5()


def test_criterion_6_tennis():
    assert criterion_6()


def test_criterion_7_bijections():
    assert criterion_7()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
