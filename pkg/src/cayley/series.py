"""Truncated formal power series in S with exact rational coefficients.

A :class:`FormalSeries` of order N holds the coefficients of S^0..S^N.
Binary operations truncate to the smaller of the two orders; unary calculus
operations document their own result order.  Coefficients are
``fractions.Fraction`` throughout, so every identity is checked exactly.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

from .errors import DomainError
from .recurrence import TreeCountTable


@dataclass(frozen=True, init=False)
class FormalSeries:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise DomainError(f"order must be >= 0, got {order}")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise DomainError("a series needs at least a constant term")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "FormalSeries":
        return cls([], order)

    @classmethod
    def constant(cls, c, order: int) -> "FormalSeries":
        return cls([c], order)

    @classmethod
    def variable(cls, order: int) -> "FormalSeries":
        """The series S (just 0 when order is 0)."""
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "FormalSeries":
        if order > self.order:
            raise DomainError(f"cannot raise order {self.order} to {order}")
        return FormalSeries(self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        if isinstance(other, FormalSeries):
            return series_add(self, other)
        if isinstance(other, (int, Rational)):
            return FormalSeries((self[0] + other, *self.coeffs[1:]))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "FormalSeries":
        return FormalSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (FormalSeries, int, Rational)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FormalSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Rational)):
            return FormalSeries(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if n == 0 else f"({c})*S^{n}")
        body = " + ".join(terms) or "0"
        return f"{body} + O(S^{self.order + 1})"


def series_add(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    n = min(a.order, b.order)
    return FormalSeries(a[i] + b[i] for i in range(n + 1))


def series_mul(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    """Cauchy product truncated to min(a.order, b.order)."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for m in range(n + 1):
        out.append(sum((ac[i] * bc[m - i] for i in range(m + 1) if ac[i] and bc[m - i]), Fraction(0)))
    return FormalSeries(out)


def series_diff(a: FormalSeries) -> FormalSeries:
    """Termwise derivative; result order is a.order - 1."""
    if a.order < 1:
        raise DomainError("cannot differentiate an order-0 series")
    return FormalSeries(n * a[n] for n in range(1, a.order + 1))


def series_div_by_s(a: FormalSeries) -> FormalSeries:
    """a / S; result order is a.order - 1."""
    if a[0] != 0:
        raise DomainError(f"not divisible by S: constant term {a[0]}")
    if a.order < 1:
        raise DomainError("cannot divide an order-0 series by S")
    return FormalSeries(a.coeffs[1:])


def series_mul_by_s(a: FormalSeries) -> FormalSeries:
    """S * a, kept at a.order (the top coefficient falls off)."""
    return FormalSeries((0, *a.coeffs[:-1]))


def series_exp(a: FormalSeries) -> FormalSeries:
    """exp(a) for a with zero constant term.

    Solves B' = A'B coefficientwise: n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
    """
    if a[0] != 0:
        raise DomainError(f"exp needs a zero constant term, got {a[0]}")
    b = [Fraction(1)]
    for n in range(1, a.order + 1):
        s = sum((k * a[k] * b[n - k] for k in range(1, n + 1) if a[k]), Fraction(0))
        b.append(s / n)
    return FormalSeries(b)


def series_log(a: FormalSeries) -> FormalSeries:
    """log(a) for a with constant term 1.

    Solves A L' = A' coefficientwise:
    n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}.
    """
    if a[0] != 1:
        raise DomainError(f"log needs constant term 1, got {a[0]}")
    l = [Fraction(0)]
    for n in range(1, a.order + 1):
        s = n * a[n] - sum((k * l[k] * a[n - k] for k in range(1, n) if a[n - k]), Fraction(0))
        l.append(s / n)
    return FormalSeries(l)


def series_compose(outer: FormalSeries, inner: FormalSeries) -> FormalSeries:
    """outer(inner) for inner with zero constant term, by Horner's rule.

    Result order is min(outer.order, inner.order).
    """
    if inner[0] != 0:
        raise DomainError(f"composition needs inner constant term 0, got {inner[0]}")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = FormalSeries.constant(outer[n], n)
    for c in reversed(outer.coeffs[:n]):
        acc = acc * inner + c
    return acc


def tree_egf(order: int, table: TreeCountTable) -> FormalSeries:
    """sum_{n=1}^{order} T_n S^n / (n-1)!, using the table's T_n."""
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    if order not in table:
        raise DomainError(f"table covers 1..{table.max_n}, need 1..{order}")
    coeffs = [Fraction(0)]
    coeffs += [Fraction(table[n], math.factorial(n - 1)) for n in range(1, order + 1)]
    return FormalSeries(coeffs)


def lagrange_invert(phi: FormalSeries, order: int, method: str = "formula") -> FormalSeries:
    """The series T with T(0) = 0 solving T = S * phi(T), to the given order.

    ``method="formula"`` uses [S^n]T = [x^(n-1)] phi(x)^n / n.  ``method="fixed_point"``
    iterates T <- S * phi(T); each pass fixes one more coefficient.
    """
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    if phi[0] == 0:
        raise DomainError("phi(0) must be nonzero")
    if phi.order < order - 1:
        raise DomainError(f"phi has order {phi.order}, need at least {order - 1}")
    if method == "formula":
        return FormalSeries(_lagrange_coefficients(phi.coeffs[:order], order))
    if method == "fixed_point":
        phi = phi.truncate(order) if phi.order >= order else FormalSeries(phi.coeffs, order)
        t = FormalSeries.zero(order)
        for _ in range(order):
            t = series_mul_by_s(series_compose(phi, t))
        return t
    raise DomainError(f"unknown method {method!r}")


def _lagrange_coefficients(phi: tuple[Fraction, ...], order: int) -> list[Fraction]:
    # Write phi = c * psi with psi(0) = 1.  Coefficients of psi^m follow
    # p_0 = 1, k p_k = sum_{j=1}^{k} ((m+1) j - k) psi_j p_{k-j}, and only
    # p_0..p_{m-1} are needed for the m-th term.  mpq is several times faster
    # than Fraction here; results are converted back.
    c = mpq(phi[0].numerator, phi[0].denominator)
    psi = [mpq(a.numerator, a.denominator) / c for a in phi]
    nz = [j for j in range(1, len(psi)) if psi[j]]
    out = [Fraction(0)]
    for m in range(1, order + 1):
        p = [mpq(1)]
        for k in range(1, m):
            s = mpq(0)
            for j in nz:
                if j > k:
                    break
                s += ((m + 1) * j - k) * psi[j] * p[k - j]
            p.append(s / k)
        t = c**m * p[m - 1] / m
        out.append(Fraction(int(t.numerator), int(t.denominator)))
    return out


# --- residuals: each is the zero series exactly when t satisfies the identity


def residual_functional(t: FormalSeries) -> FormalSeries:
    """t - S * exp(t), at t.order."""
    if t[0] != 0:
        raise DomainError(f"need t(0) = 0, got {t[0]}")
    return t - series_mul_by_s(series_exp(t))


def residual_log(t: FormalSeries) -> FormalSeries:
    """t - log(t / S), at t.order - 1."""
    return t - series_log(series_div_by_s(t))


def residual_ode(t: FormalSeries) -> FormalSeries:
    """t t' - t' + t / S, at t.order - 1."""
    if t[0] != 0:
        raise DomainError(f"need t(0) = 0, got {t[0]}")
    dt = series_diff(t)
    return t * dt - dt + series_div_by_s(t)


def residual_square(t: FormalSeries, table: TreeCountTable) -> FormalSeries:
    """t^2 - sum_{n>=1} 2 (n-1)/n T_n S^n / (n-1)!, at t.order."""
    n_max = t.order
    if n_max >= 1 and n_max not in table:
        raise DomainError(f"table covers 1..{table.max_n}, need 1..{n_max}")
    rhs = [Fraction(0)]
    rhs += [Fraction(2 * (n - 1) * table[n], n * math.factorial(n - 1)) for n in range(1, n_max + 1)]
    return t * t - FormalSeries(rhs)


RESIDUALS: dict[str, Callable[[FormalSeries, TreeCountTable], FormalSeries]] = {
    "square": residual_square,
    "ode": lambda t, table: residual_ode(t),
    "log": lambda t, table: residual_log(t),
    "functional": lambda t, table: residual_functional(t),
}


def first_nonzero(s: FormalSeries) -> int | None:
    return next((i for i, c in enumerate(s.coeffs) if c), None)


def max_abs_coefficient(s: FormalSeries) -> Fraction:
    return max(abs(c) for c in s.coeffs)
