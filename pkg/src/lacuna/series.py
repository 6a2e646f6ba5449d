"""Truncated formal power series with exact rational coefficients.

A :class:`TruncSeries` of order N stores the coefficients of degrees 0..N;
every operation is exact in those degrees and discards the rest.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

from lacuna.exactnum import DomainError, Number, binom_int
from lacuna.stirling import StirlingKind, stirling1, stirling2

__all__ = [
    "TruncSeries",
    "adelberg_gf_coeff",
    "binomial_series",
    "ce_lemma_check",
    "egf_stirling_check",
    "exp_m1",
    "log_recip",
]


@dataclass(frozen=True)
class TruncSeries:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        values = [Fraction(c) for c in coeffs]
        if order is not None:
            values = (values + [Fraction(0)] * (order + 1))[: order + 1]
        if not values:
            raise DomainError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def constant(cls, c: Number, order: int) -> TruncSeries:
        return cls([c], order)

    @classmethod
    def monomial(cls, degree: int, order: int, c: Number = 1) -> TruncSeries:
        values = [0] * (order + 1)
        if degree <= order:
            values[degree] = c
        return cls(values)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise DomainError(f"degree {n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> TruncSeries:
        return TruncSeries(self.coeffs, order)

    def _coerce(self, other) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.constant(other, self.order)

    def __add__(self, other) -> TruncSeries:
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncSeries(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries(-a for a in self.coeffs)

    def __sub__(self, other) -> TruncSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> TruncSeries:
        return self._coerce(other) - self

    def __mul__(self, other) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            c = Fraction(other)
            return TruncSeries(a * c for a in self.coeffs)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    def inverse(self) -> TruncSeries:
        """Multiplicative inverse; the constant coefficient must be nonzero."""
        a = self.coeffs
        if a[0] == 0:
            raise DomainError("series with zero constant term is not invertible")
        out = [1 / a[0]]
        for n in range(1, self.order + 1):
            out.append(-sum(a[k] * out[n - k] for k in range(1, n + 1)) / a[0])
        return TruncSeries(out)

    def __pow__(self, exponent: int) -> TruncSeries:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncSeries.constant(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def derivative(self) -> TruncSeries:
        """Formal derivative; its order is one less."""
        if self.order == 0:
            return TruncSeries([0])
        return TruncSeries(n * self.coeffs[n] for n in range(1, self.order + 1))

    def shift_down(self) -> TruncSeries:
        """Divide by the variable; the constant coefficient must vanish."""
        if self.coeffs[0] != 0:
            raise DomainError("division by the variable needs a zero constant term")
        return TruncSeries(self.coeffs[1:] or [0])


def log_recip(order: int) -> TruncSeries:
    """log(1 / (1 - w)) = sum_{n>=1} w^n / n."""
    if order < 0:
        raise DomainError("order must be nonnegative")
    return TruncSeries([0] + [Fraction(1, n) for n in range(1, order + 1)])


def exp_m1(order: int) -> TruncSeries:
    """exp(x) - 1 = sum_{n>=1} x^n / n!."""
    if order < 0:
        raise DomainError("order must be nonnegative")
    return TruncSeries([0] + [Fraction(1, factorial(n)) for n in range(1, order + 1)])


def binomial_series(x0: int, order: int) -> TruncSeries:
    """(1 + z)^x0 for any integer x0, via its binomial coefficients."""
    return TruncSeries(binom_int(x0, j) for j in range(order + 1))


def egf_stirling_check(kind: StirlingKind | int, k: int, order: int) -> bool:
    """Compare n! [t^n] f^k / k! with the Stirling table for all n <= order.

    f is log(1/(1-t)) for cycle numbers and exp(t) - 1 for partition numbers.
    """
    kind = StirlingKind(kind)
    if k < 0 or order < k:
        raise DomainError("need 0 <= k <= order")
    if kind is StirlingKind.CYCLE:
        f, exact = log_recip(order), stirling1
    else:
        f, exact = exp_m1(order), stirling2
    g = f**k / factorial(k)
    return all(factorial(n) * g[n] == exact(n, k) for n in range(order + 1))


def ce_lemma_check(f: TruncSeries, alpha: int, n: int) -> bool:
    """[w^n] f^alpha / alpha == [w^(n-1)] f^(alpha-1) f' / n."""
    if alpha < 1:
        raise DomainError("alpha must be at least 1")
    if n < 1 or f.order < n:
        raise DomainError(f"need 1 <= n <= order, got n={n}, order={f.order}")
    lhs = (f**alpha)[n] / alpha
    rhs = (f.truncate(n - 1) ** (alpha - 1) * f.derivative())[n - 1] / n
    return lhs == rhs


def _adelberg_kernel(y0: int, order: int) -> TruncSeries:
    """((1 + z)^y0 - 1) / (y0 z) to the given order, for integer y0 >= 1."""
    one_plus_z = TruncSeries([1, 1], order + 1)
    power = TruncSeries.constant(1, order + 1)
    for _ in range(y0):
        power = power * one_plus_z
    return (power - 1).shift_down() / y0


def adelberg_gf_coeff(y0: int, m0: int, u: int, with_x: int | None = None) -> Fraction:
    """[z^u] (1+z)^x0 (((1+z)^y0 - 1) / (y0 z))^m0, the x-factor being optional."""
    if y0 == 0:
        raise DomainError("y0 must be nonzero")
    if y0 < 0 or m0 < 0 or u < 0:
        raise DomainError("need y0 >= 1, m0 >= 0, u >= 0")
    series = _adelberg_kernel(y0, u) ** m0
    if with_x is not None:
        series = series * binomial_series(with_x, u)
    return series[u]

