import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import gaussians
from quiversing import linalg as la
from quiversing.gauss import GaussianRational as G

small = st.sampled_from([G(0), G(0), G(1), G(-1), G(0, 1), G(2, -1), G(1, 1) / 2])


def _sympy_rank(m):
    return sympy.Matrix([[sympy.Rational(z.re) + sympy.I * sympy.Rational(z.im) for z in row] for row in m]).rank()


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_rank_matches_sympy(rows, cols, data):
    m = [[data.draw(small) for _ in range(cols)] for _ in range(rows)]
    assert la.rank(m) == _sympy_rank(m)


@given(st.integers(1, 4), st.data())
def test_rank_of_product_bound(n, data):
    a = [[data.draw(gaussians) for _ in range(n)] for _ in range(n)]
    b = [[data.draw(small) for _ in range(n)] for _ in range(n)]
    ab = la.matmul(la.matrix(a), la.matrix(b), n, n)
    assert la.rank(ab) <= min(la.rank(a), la.rank(b))


def test_rank_examples():
    assert la.rank([]) == 0
    assert la.rank(la.zeros(3, 2)) == 0
    assert la.rank(la.identity(4)) == 4
    # second row is i times the first
    assert la.rank(la.matrix([[1, G(0, 1)], [G(0, 1), -1]])) == 1
    assert la.rational_rank([[1, 2, 3], [2, 4, 6], [1, 0, 0]]) == 2


def test_empty_shapes():
    a = la.zeros(0, 3)
    b = la.zeros(3, 2)
    assert la.matmul(a, b, 3, 2) == ()
    c = la.matmul(la.zeros(2, 0), la.zeros(0, 2), 0, 2)
    assert c == la.zeros(2, 2)


def test_conj_transpose_and_trace():
    m = la.matrix([[1, G(0, 1)], [G(2, 3), 4]])
    assert la.conj_transpose(m, 2) == la.matrix([[1, G(2, -3)], [G(0, -1), 4]])
    assert la.trace(m) == 5
