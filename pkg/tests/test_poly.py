import pytest
from hypothesis import given
from hypothesis import strategies as st

from frsprune.errors import DegreeTooHigh, OrderTooSmall
from frsprune.poly import Polynomial, eval_geometric, eval_poly, evaluate

Q = 17


def test_eval_examples():
    assert eval_poly(Polynomial([1, 0, 1], Q), 4) == 0  # 16 + 1 = 17
    assert eval_poly(Polynomial([], Q), 9) == 0
    assert evaluate(Polynomial([7], Q), 13).value == 7


def test_eval_geometric_examples():
    assert eval_geometric(Polynomial([0, 1], Q), 3, 4) == [1, 3, 9, 10]
    assert eval_geometric(Polynomial([1], Q), 5, 3) == [1, 1, 1]
    with pytest.raises(OrderTooSmall):
        eval_geometric(Polynomial([0, 1], Q), 16, 4)  # 16 = -1 has order 2


def test_normalization_and_bound():
    f = Polynomial([1, 2, 0, 0], Q)
    assert f.coeffs == (1, 2) and f.degree == 1
    assert Polynomial([0, 0], Q).degree == -1
    with pytest.raises(DegreeTooHigh):
        Polynomial([1, 2, 3], Q, degree_bound=2)


def test_text_roundtrip():
    f = Polynomial([3, 0, 5], Q)
    assert Polynomial.from_text(f.to_text(), Q) == f
    assert Polynomial.from_text("0", Q).is_zero()


coeffs = st.lists(st.integers(0, Q - 1), max_size=6)


@given(coeffs, coeffs, st.integers(0, Q - 1), st.integers(0, Q - 1), st.integers(0, Q - 1))
def test_eval_is_linear(fc, gc, a, b, x):
    f, g = Polynomial(fc, Q), Polynomial(gc, Q)
    lhs = eval_poly(f.scale(a) + g.scale(b), x)
    assert lhs == (a * eval_poly(f, x) + b * eval_poly(g, x)) % Q


@given(st.lists(st.integers(0, Q - 1), min_size=1, max_size=8))
def test_geometric_matches_pointwise(fc):
    f = Polynomial(fc, Q)
    vals = eval_geometric(f, 3, 16)
    assert vals == [eval_poly(f, pow(3, t, Q)) for t in range(16)]


@given(st.lists(st.integers(0, Q - 1), min_size=1, max_size=8).filter(lambda c: any(c)))
def test_root_count_bounded_by_degree(fc):
    f = Polynomial(fc, Q)
    vals = eval_geometric(f, 3, 16)
    assert sum(v == 0 for v in vals) <= f.degree
