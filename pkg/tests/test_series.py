import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayley import (
    DomainError,
    FormalSeries,
    TreeCountTable,
    lagrange_invert,
    residual_functional,
    residual_log,
    residual_ode,
    residual_square,
    series_add,
    series_diff,
    series_div_by_s,
    series_exp,
    series_log,
    series_mul,
    tree_egf,
)
from cayley.series import series_compose

F = Fraction
S = lambda order: FormalSeries.variable(order)


def naive_exp(a):
    # sum_k a^k / k!; terminates since a has no constant term
    total, power = FormalSeries.constant(1, a.order), FormalSeries.constant(1, a.order)
    for k in range(1, a.order + 1):
        power = power * a
        total = total + power * F(1, math.factorial(k))
    return total


def naive_log1p(u):
    total, power = FormalSeries.zero(u.order), FormalSeries.constant(1, u.order)
    for k in range(1, u.order + 1):
        power = power * u
        total = total + power * F((-1) ** (k + 1), k)
    return total


def coeffs(*cs):
    return tuple(F(c) for c in cs)


# --- construction and arithmetic


def test_order_padding_and_truncation():
    s = FormalSeries([1, 2], order=4)
    assert s.coeffs == coeffs(1, 2, 0, 0, 0) and s.order == 4
    assert FormalSeries([1, 2, 3], order=1).coeffs == coeffs(1, 2)


def test_add_examples():
    assert series_add(FormalSeries([1, 1]), FormalSeries([1, -1])).coeffs == coeffs(2, 0)
    a = FormalSeries([3, F(1, 2), 7])
    assert series_add(a, FormalSeries.zero(2)) == a
    assert series_add(FormalSeries([0, 1, 0]), FormalSeries([0, 0, 1])).coeffs == coeffs(0, 1, 1)


def test_binary_ops_truncate_to_smaller_order():
    a, b = FormalSeries([1] * 6), FormalSeries([1] * 3)
    assert (a + b).order == 2 and (a * b).order == 2


def test_mul_examples():
    assert series_mul(FormalSeries([1, 1, 0]), FormalSeries([1, -1, 0])).coeffs == coeffs(1, 0, -1)
    a = FormalSeries([2, F(1, 3), 5])
    assert series_mul(a, FormalSeries.constant(1, 2)) == a
    t = FormalSeries([0, 1, 1, F(3, 2)])
    assert series_mul(t, t).coeffs == coeffs(0, 0, 1, 2)


def test_diff_examples():
    assert series_diff(FormalSeries([0, 0, 1])).coeffs == coeffs(0, 2)
    assert series_diff(FormalSeries([5, 0, 0])).coeffs == coeffs(0, 0)
    assert series_diff(FormalSeries([0, 1, F(1, 2)])).coeffs == coeffs(1, 1)
    with pytest.raises(DomainError):
        series_diff(FormalSeries([1]))


def test_div_by_s_examples():
    assert series_div_by_s(FormalSeries([0, 1, 1])).coeffs == coeffs(1, 1)
    assert series_div_by_s(FormalSeries([0, 1])).coeffs == coeffs(1)
    with pytest.raises(DomainError):
        series_div_by_s(FormalSeries([1, 1]))


def test_exp_examples():
    assert series_exp(FormalSeries.zero(5)) == FormalSeries.constant(1, 5)
    assert series_exp(S(6)).coeffs == tuple(F(1, math.factorial(k)) for k in range(7))
    e = series_exp(FormalSeries([0, 1, 1], order=4))
    assert e[2] == F(3, 2)
    assert e == naive_exp(FormalSeries([0, 1, 1], order=4))
    with pytest.raises(DomainError):
        series_exp(FormalSeries([1, 1]))


def test_log_examples():
    assert series_log(FormalSeries.constant(1, 4)).is_zero()
    assert series_log(FormalSeries([1, 1], order=5)).coeffs == coeffs(
        0, 1, F(-1, 2), F(1, 3), F(-1, 4), F(1, 5))
    a = FormalSeries([0, 1, 2], order=8)
    assert series_log(series_exp(a)) == a
    with pytest.raises(DomainError):
        series_log(FormalSeries([2, 1]))


def test_compose_against_direct_expansion():
    outer = FormalSeries([1, 2, 3], order=4)
    inner = FormalSeries([0, 1, 1], order=4)
    assert series_compose(outer, inner) == 1 + 2 * inner + 3 * inner * inner


# --- tree EGF and Lagrange inversion


def test_tree_egf_examples():
    table = TreeCountTable(4)
    assert tree_egf(2, table).coeffs == coeffs(0, 1, 1)
    assert tree_egf(3, table).coeffs == coeffs(0, 1, 1, F(3, 2))
    assert tree_egf(4, table)[4] == F(8, 3)
    with pytest.raises(DomainError):
        tree_egf(5, table)


@pytest.mark.parametrize("method", ["formula", "fixed_point"])
def test_lagrange_examples(method):
    assert lagrange_invert(series_exp(S(4)), 4, method).coeffs == coeffs(0, 1, 1, F(3, 2), F(8, 3))
    assert lagrange_invert(FormalSeries.constant(1, 6), 6, method) == S(6)
    # T = S(1 + T) gives S / (1 - S)
    assert lagrange_invert(FormalSeries([1, 1], order=3), 3, method).coeffs == coeffs(0, 1, 1, 1)
    # T = S / (1 - T) gives Catalan numbers
    assert lagrange_invert(FormalSeries([1] * 6), 6, method).coeffs == coeffs(0, 1, 1, 2, 5, 14, 42)


def test_lagrange_methods_agree_on_awkward_phi():
    phi = FormalSeries([F(-2, 3), 5, F(1, 7), 0, -1, F(9, 4), 3, 0, 1])
    assert lagrange_invert(phi, 9, "formula") == lagrange_invert(phi, 9, "fixed_point")


def test_lagrange_errors():
    with pytest.raises(DomainError):
        lagrange_invert(FormalSeries([0, 1, 1]), 2)
    with pytest.raises(DomainError):
        lagrange_invert(FormalSeries([1, 1]), 5)
    with pytest.raises(DomainError):
        lagrange_invert(FormalSeries([1, 1]), 2, "newton")


def test_lagrange_exp_matches_closed_form():
    t = lagrange_invert(series_exp(S(40)), 40)
    assert all(t[n] == F(n ** (n - 1), math.factorial(n)) for n in range(1, 41))


# --- residuals


def test_residuals_vanish_on_tree_egf():
    table = TreeCountTable(50)
    for order in range(1, 51):
        t = tree_egf(order, table)
        assert residual_square(t, table).is_zero()
        assert residual_ode(t).is_zero()
        assert residual_log(t).is_zero()
        assert residual_functional(t).is_zero()


def test_residual_functional_examples():
    r = residual_functional(S(4))
    assert r.coeffs == coeffs(0, 0, -1, F(-1, 2), F(-1, 6))
    assert residual_functional(tree_egf(2, TreeCountTable(2))).is_zero()


def test_residual_log_examples():
    assert residual_log(S(1)).is_zero()
    assert not residual_log(FormalSeries([0, 1, 2])).is_zero()
    with pytest.raises(DomainError):
        residual_log(FormalSeries([0, 2, 1]))


def test_residual_ode_examples():
    assert residual_ode(FormalSeries.zero(5)).is_zero()
    assert not residual_ode(FormalSeries([0, 0, 1])).is_zero()


def test_residual_square_examples():
    table = TreeCountTable(2)
    assert residual_square(tree_egf(2, table), table).is_zero()
    assert residual_square(tree_egf(1, table), table).is_zero()


# --- properties

small = st.fractions(min_value=-3, max_value=3, max_denominator=5)


def series_st(order, const=None):
    body = st.lists(small, min_size=order, max_size=order)
    if const is None:
        return st.builds(lambda c0, cs: FormalSeries([c0, *cs]), small, body)
    return body.map(lambda cs: FormalSeries([const, *cs]))


@settings(max_examples=100, deadline=None)
@given(series_st(20, const=0))
def test_exp_log_round_trip(a):
    assert series_log(series_exp(a)) == a
    assert series_exp(series_log(1 + a)) == 1 + a


@settings(max_examples=25, deadline=None)
@given(series_st(10, const=0))
def test_exp_log_match_naive_definitions(a):
    assert series_exp(a) == naive_exp(a)
    assert series_log(1 + a) == naive_log1p(a)


@settings(max_examples=50, deadline=None)
@given(series_st(8), series_st(8), series_st(8))
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100, deadline=None)
@given(series_st(12), series_st(12), small)
def test_leibniz_and_linearity(a, b, k):
    assert series_diff(a * b) == series_diff(a) * b.truncate(11) + a.truncate(11) * series_diff(b)
    assert series_diff(a + k * b) == series_diff(a) + k * series_diff(b)


@settings(max_examples=20, deadline=None)
@given(small.filter(bool), series_st(7, const=0))
def test_lagrange_solves_functional_equation(c0, tail):
    phi = FormalSeries([c0, *tail.coeffs[1:]])
    t = lagrange_invert(phi, 8)
    assert (t - S(8) * series_compose(FormalSeries(phi.coeffs, 8), t)).is_zero()
