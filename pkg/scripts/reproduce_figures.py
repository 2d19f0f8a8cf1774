"""Print the worked examples: Figure 1 list, psi, density shift, Raney concat, tennis."""

from svt import bijections as bj
from svt.core import SetValuedTableau, schutzenberger
from svt.generate import generate_all
from svt.serialize import render_tableau
from svt.verify import FIGURE_4_BLOCKS, FIGURE_4_TABLEAU


def section(title):
    print(f"\n== {title} ==")


def main():
    section("SVT((2,2)) with every cell of size 2")
    ts = list(generate_all((2, 2), ((2, 2), (2, 2))))
    for t in ts:
        print(render_tableau(t))
    print(f"{len(ts)} tableaux")

    section("tableau -> lattice path")
    t = SetValuedTableau([[[1], [3], [7]], [[2, 4], [5, 6], [8, 9]]])
    print(render_tableau(t))
    print("path:", bj.tableau_to_path(t).steps)
    print("Schutzenberger image:")
    print(render_tableau(schutzenberger(t)))

    section("density shift")
    t = SetValuedTableau([[[1, 2], [3, 6], [7, 10]], [[4, 5], [8, 9], [11]]])
    tp, i = bj.density_shift(t)
    print(render_tableau(t))
    print(f"-> i = {i}")
    print(render_tableau(tp))

    section("Raney concatenation, k=3 r=4")
    rt = bj.RaneyTuple(tuple(SetValuedTableau(b) for b in FIGURE_4_BLOCKS), 3, 4)
    out = bj.raney_concat(rt)
    print(render_tableau(out))
    print("matches stored figure:", out == SetValuedTableau(FIGURE_4_TABLEAU))
    print("split sizes:", bj.raney_split(out, 3, 4).sizes)

    section("tennis, s=2 t=1 n=2")
    for arr in bj.tennis_arrangements((2, 2), (1, 1)):
        print("lawn", arr.lawn, "->", bj.tennis_to_tableau(arr))


if __name__ == "__main__":
    main()
