import pytest
from hypothesis import given, strategies as st

from svt import bijections as bj
from svt.core import SetValuedTableau, schutzenberger, validate
from svt.generate import count_by_generation, generate_all
from svt.numbers import Raney, Tennis, catalan_k
from svt.verify import FIGURE_4_BLOCKS, FIGURE_4_TABLEAU

FIG3 = SetValuedTableau([[[1], [3], [7]], [[2, 4], [5, 6], [8, 9]]])
FIG5 = SetValuedTableau([[[1, 2], [3, 6], [7, 10]], [[4, 5], [8, 9], [11]]])


def test_psi_example():
    p = bj.tableau_to_path(SetValuedTableau([[[1, 2], [4, 5], [6, 8]], [[3], [7], [9]]]))
    assert p.steps == "EENEEENEN"
    assert bj.tableau_to_path(FIG3).steps == "ENENNNENN"
    assert bj.path_to_tableau(bj.tableau_to_path(FIG3), (3, 3), ((1, 1, 1), (2, 2, 2))) == FIG3


def test_p_max_and_t_max():
    rho = ((1, 1, 1), (2, 2, 2))
    assert bj.p_max(((3, 3), rho)).steps == "ENNENNENN"
    assert bj.tableau_to_path(bj.t_max((3, 3), rho)) == bj.p_max(((3, 3), rho))


def test_path_above_p_max_rejected():
    with pytest.raises(ValueError):
        bj.path_to_tableau(bj.LatticePath("NNNNNNEEE"), (3, 3), ((1, 1, 1), (2, 2, 2)))


def test_heights_round_trip():
    p = bj.LatticePath("ENNENEN")
    assert p.heights() == (0, 2, 3)
    assert bj.LatticePath.from_heights(p.heights(), 4) == p
    assert bj.path_leq(bj.LatticePath("EENN"), bj.LatticePath("ENEN"))
    assert not bj.path_leq(bj.LatticePath("NNEE"), bj.LatticePath("ENEN"))


def test_count_paths_below_small():
    assert bj.count_paths_below(bj.LatticePath("EEENNN")) == 1
    assert bj.count_paths_below(bj.LatticePath("NNNEEE")) == 20
    assert bj.count_paths_below(bj.LatticePath("ENENEN")) == 5


def test_swap_cover_moves_one_step():
    t = SetValuedTableau([[[1], [3]], [[2], [4]]])
    s = bj.swap_cover(t, 2)
    assert s == SetValuedTableau([[[1], [2]], [[3], [4]]])
    assert bj.path_leq(bj.tableau_to_path(s), bj.tableau_to_path(t))


def test_density_shift_example():
    tp, i = bj.density_shift(FIG5)
    assert i == 2
    assert tp == SetValuedTableau([[[1, 2, 3, 4], [5, 8]], [[6, 7], [9]]])
    assert bj.density_shift_inverse(tp, i, [2, 3], 2, 2, n2=3) == FIG5


def test_density_shift_inverse_rejects_largest():
    tp, i = bj.density_shift(FIG5)
    with pytest.raises(ValueError):
        bj.density_shift_inverse(tp, i, [1, 4, 4], 2, 2)  # sizes must match i
    with pytest.raises(ValueError):
        bj.density_shift_inverse(tp, i, [1, max(tp.cells[0][0])], 2, 2)


def test_figure_4_pair():
    rt = bj.RaneyTuple(tuple(SetValuedTableau(b) for b in FIGURE_4_BLOCKS), 3, 4)
    t = SetValuedTableau(FIGURE_4_TABLEAU)
    assert bj.raney_concat(rt) == t
    split = bj.raney_split(t, 3, 4)
    assert split == rt and split.sizes == (1, 2, 0, 2)


@given(st.integers(0, 3), st.integers(1, 3), st.integers(1, 3))
def test_raney_split_inverts_concat_on_all_tableaux(n, k, r):
    shape, rho = Raney(n, k, r).density()
    if sum(map(sum, rho)) > 10:
        return
    for t in generate_all(shape, rho):
        assert bj.raney_concat(bj.raney_split(t, k, r)) == t


def test_tennis_example():
    arr = bj.TennisArrangement.constant(2, 2, 1, [1, 3])
    assert bj.tennis_to_tableau(arr) == SetValuedTableau([[[1], [2], [4]], [[3], [5], [6]]])
    assert bj.tableau_to_tennis(bj.tennis_to_tableau(arr), 2, 1) == arr
    assert len(bj.simulate_tennis((2, 2), (1, 1))) == 5


def test_tennis_validity_matches_simulation():
    for s_vec, t_vec in [((2, 2, 2), (1, 1, 1)), ((3, 2), (2, 1)), ((2, 3, 2), (1, 2, 1))]:
        sim = bj.simulate_tennis(s_vec, t_vec)
        valid = {frozenset(a.lawn) for a in bj.tennis_arrangements(s_vec, t_vec)}
        assert sim == valid


def test_tennis_invalid_lawn():
    arr = bj.TennisArrangement.constant(2, 2, 1, [3, 4])
    assert not arr.is_valid()
    with pytest.raises(ValueError):
        bj.tennis_to_tableau(arr)


@given(st.integers(0, 4), st.integers(2, 3))
def test_tennis_map_is_a_bijection(n, s):
    if n * s > 9 or n == 0:
        return
    images = {bj.tennis_to_tableau(a) for a in bj.tennis_arrangements((s,) * n, (1,) * n)}
    assert images == set(generate_all(*Tennis(n, s, 1).density()))
    assert len(images) == catalan_k(n + 1, s)


rect = st.tuples(st.integers(1, 2), st.integers(1, 3)).flatmap(
    lambda rc: st.lists(st.integers(0, 2), min_size=rc[0] * rc[1], max_size=rc[0] * rc[1]).map(
        lambda v: tuple(tuple(v[i * rc[1]:(i + 1) * rc[1]]) for i in range(rc[0]))
    )
)


@given(rect)
def test_schutzenberger_involution(rho):
    shape = tuple(len(r) for r in rho)
    if sum(map(sum, rho)) > 8:
        return
    for t in generate_all(shape, rho):
        s = schutzenberger(t)
        assert validate(s).ok and schutzenberger(s) == t


@given(st.lists(st.integers(1, 3), min_size=2, max_size=6))
def test_psi_round_trip_positive(vals):
    n = len(vals) // 2
    a, b = tuple(vals[:n]), tuple(vals[n:2 * n])
    if sum(a) + sum(b) > 10:
        return
    shape, rho = (n, n), (a, b)
    top = bj.p_max((shape, rho))
    for t in generate_all(shape, rho):
        p = bj.tableau_to_path(t)
        assert bj.path_leq(p, top)
        assert bj.path_to_tableau(p, shape, rho) == t
    assert bj.count_paths_below(top) == count_by_generation(shape, rho)
