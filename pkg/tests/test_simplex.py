from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from latticegames import simplex


def test_known_optimum():
    # min x + y  s.t.  x + 2y - s1 = 4, 3x + y - s2 = 6
    A = [[1, 2, -1, 0], [3, 1, 0, -1]]
    x = simplex.solve(A, [4, 6], [1, 1, 0, 0])
    assert x[:2] == [Fraction(8, 5), Fraction(6, 5)]


def test_infeasible():
    assert simplex.solve([[1, 1]], [-1]) is None


def test_redundant_rows():
    x = simplex.solve([[1, 1], [2, 2]], [1, 2])
    assert x is not None and x[0] + x[1] == 1


def test_unbounded():
    with pytest.raises(simplex.Unbounded):
        simplex.solve([[1, -1]], [0], [-1, 0])


matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.tuples(
            st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m, max_size=m),
            st.lists(st.integers(-4, 4), min_size=m, max_size=m),
        )
    )
)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_feasibility_agrees_with_highs(prob):
    A, b = prob
    x = simplex.solve(A, b)
    ref = linprog(np.zeros(len(A[0])), A_eq=np.array(A, float), b_eq=np.array(b, float), bounds=(0, None), method="highs")
    if x is None:
        assert ref.status == 2
    else:
        assert all(v >= 0 for v in x)
        assert all(sum(a * v for a, v in zip(row, x)) == rhs for row, rhs in zip(A, b))
        assert ref.status == 0
