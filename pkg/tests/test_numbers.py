import math

import pytest
from hypothesis import given, strategies as st

from svt.generate import count_by_generation
from svt.numbers import (
    FAMILIES,
    KCatalan,
    Raney,
    Rational,
    Tennis,
    TennisGeneral,
    catalan_k,
    raney,
    raney_by_convolution,
    rational_catalan,
    rational_steps,
    tennis_count,
)


def test_known_values():
    assert [catalan_k(n, 2) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    assert catalan_k(3, 3) == 12
    assert raney(2, 2, 2) == 5
    assert raney(5, 3, 4) == raney_by_convolution(5, 3, 4) == 2448
    assert rational_catalan(3, 5) == 7 and rational_catalan(2, 3) == 2
    assert tennis_count(2, 2, 1) == 5


def test_rational_needs_coprime():
    with pytest.raises(ValueError):
        rational_catalan(2, 4)


def test_rational_steps_sum_to_b():
    assert rational_steps(3, 5) == (1, 2, 2)
    assert sum(rational_steps(4, 7)) == 7


def test_densities():
    assert Rational(3, 5).density() == ((3, 3), ((1, 1, 1), (1, 2, 2)))
    assert Raney(5, 3, 4).density()[1][1] == (3, 2, 2, 2, 2, 2)
    assert KCatalan(0, 3).density() == ((), ())


def test_family_table():
    assert set(FAMILIES) == {"catalan-k", "raney", "rational", "tennis", "tennis-general"}


@given(st.integers(0, 5), st.integers(1, 4), st.integers(1, 4))
def test_raney_closed_equals_convolution(n, k, r):
    assert raney(n, k, r) == raney_by_convolution(n, k, r)


@given(st.integers(1, 7), st.integers(1, 7))
def test_rational_matches_svt(a, b):
    if math.gcd(a, b) != 1 or a + b > 9:
        return
    assert count_by_generation(*Rational(a, b).density()) == rational_catalan(a, b)


@given(st.integers(0, 4), st.integers(2, 3))
def test_tennis_t1_is_k_catalan(n, s):
    assert Tennis(n, s, 1).value() == catalan_k(n + 1, s)


def test_tennis_general_validation():
    with pytest.raises(ValueError):
        TennisGeneral((2, 2), (2, 1))
    assert TennisGeneral((2, 2), (1, 1)).value() == Tennis(2, 2, 1).value()
