"""Adelberg polynomials B_u(y, m) and A_u(x, y, m).

B_u(y, m) is the m-th divided difference, with increment y, of C(x, m + u)
taken at x = 0, and A_u(x, y, m) is the same difference taken at x.  Both
are polynomials in all their arguments, including m.

Symbolic polynomials come from the sum over partitions of u
(:func:`b_poly`) and the Vandermonde split A_u = sum_j C(x, j) B_{u-j}
(:func:`a_poly`).  For evaluation at integer points with large u there is
:func:`b_value`, which groups the same partition sum by number of parts
instead of expanding it.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from lacuna.exactnum import DomainError, Number, binom_int, is_prime
from lacuna.multipoly import MultiPoly, binom_poly
from lacuna.partitions import iter_partitions, weak_compositions

__all__ = [
    "AdelbergIndex",
    "a_num_divided_difference",
    "a_poly",
    "a_value",
    "b_poly",
    "b_value",
    "b_weak_composition",
    "divided_difference",
    "scaled_a_integrality",
    "scaled_b_integrality",
    "sym_sxvi_check",
]

_M = MultiPoly.var("m")
_X = MultiPoly.var("x")
_Y = MultiPoly.var("y")


@dataclass(frozen=True)
class AdelbergIndex:
    """Polynomial index u tied to congruence parameters by u = l(p-1) + s - 1."""

    u: int
    s: int
    l: int
    p: int

    @classmethod
    def from_params(cls, p: int, l: int, s: int) -> AdelbergIndex:
        if not 0 < s < p:
            raise DomainError(f"need 0 < s < p, got s={s}, p={p}")
        if l < 0:
            raise DomainError("l must be nonnegative")
        return cls(u=l * (p - 1) + s - 1, s=s, l=l, p=p)


@lru_cache(maxsize=None)
def _y_factor(j: int) -> MultiPoly:
    return binom_poly(_Y - 1, j) / (j + 1)


@lru_cache(maxsize=None)
def b_poly(u: int) -> MultiPoly:
    """B_u(y, m) summed over the partitions (t_1, ..., t_u) of u.

    Each partition contributes C(m, t_u) C(m - t_u, t_{u-1}) ... C(m - t_u - ... - t_2, t_1)
    times prod_j (C(y - 1, j) / (j + 1))^t_j.
    """
    if u < 0:
        raise DomainError(f"u must be nonnegative, got {u}")
    total = MultiPoly()
    for t in iter_partitions(u):
        term = MultiPoly.const(1)
        remaining = _M
        for j in range(u, 0, -1):
            tj = t[j - 1]
            if tj:
                term = term * binom_poly(remaining, tj) * _y_factor(j) ** tj
                remaining = remaining - tj
        total = total + term
    return total


@lru_cache(maxsize=None)
def a_poly(u: int) -> MultiPoly:
    """A_u(x, y, m) = sum_{j=0}^{u} C(x, j) B_{u-j}(y, m)."""
    if u < 0:
        raise DomainError(f"u must be nonnegative, got {u}")
    total = MultiPoly()
    for j in range(u + 1):
        total = total + binom_poly(_X, j) * b_poly(u - j)
    return total


def b_weak_composition(u: int, m0: int) -> MultiPoly:
    """B_u(y, m0) as a polynomial in y, summed over weak compositions of u into m0 parts."""
    if m0 < 0:
        raise DomainError("m0 must be nonnegative")
    total = MultiPoly()
    for ks in weak_compositions(u, m0):
        term = MultiPoly.const(1)
        for k in ks:
            term = term * _y_factor(k)
        total = total + term
    return total


class _GroupedPartitionSums:
    """For fixed y0, E[T][s] = [z^s] (sum_{j>=1} C(y0-1, j)/(j+1) z^j)^T.

    Grouping the partitions of u by their number of parts T gives
    B_u(y0, m0) = sum_T C(m0, T) E[T][u], valid for every integer m0.
    """

    def __init__(self, y0: int):
        self.y0 = y0
        self.order = -1
        self.rows: list[list[Fraction]] = []
        self._lock = threading.Lock()

    def ensure(self, order: int) -> None:
        if order <= self.order:
            return
        with self._lock:
            if order <= self.order:
                return
            order = max(order, 2 * self.order, 8)
            g = [Fraction(0)] + [
                Fraction(binom_int(self.y0 - 1, j), j + 1) for j in range(1, order + 1)
            ]
            rows = [[Fraction(1)] + [Fraction(0)] * order]
            for _ in range(order):
                prev = rows[-1]
                nxt = [Fraction(0)] * (order + 1)
                for i, a in enumerate(prev):
                    if a:
                        for j in range(1, order + 1 - i):
                            if g[j]:
                                nxt[i + j] += a * g[j]
                rows.append(nxt)
            self.rows = rows
            self.order = order

    def value(self, u: int, m0: int) -> Fraction:
        self.ensure(u)
        rows = self.rows
        return sum((binom_int(m0, T) * rows[T][u] for T in range(u + 1)), Fraction(0))


_grouped_cache: dict[int, _GroupedPartitionSums] = {}
_grouped_lock = threading.Lock()


def _grouped(y0: int) -> _GroupedPartitionSums:
    with _grouped_lock:
        if y0 not in _grouped_cache:
            _grouped_cache[y0] = _GroupedPartitionSums(y0)
        return _grouped_cache[y0]


def b_value(u: int, y0: int, m0: int) -> Fraction:
    """B_u(y0, m0) at integers, for any sign of m0."""
    if u < 0:
        raise DomainError(f"u must be nonnegative, got {u}")
    return _grouped(y0).value(u, m0)


def a_value(u: int, x0: int, y0: int, m0: int) -> Fraction:
    """A_u(x0, y0, m0) at integers via the Vandermonde split."""
    if u < 0:
        raise DomainError(f"u must be nonnegative, got {u}")
    return sum(
        (binom_int(x0, j) * b_value(u - j, y0, m0) for j in range(u + 1)),
        Fraction(0),
    )


def divided_difference(f: Callable[[int], Number], x0: int, y0: int, m0: int) -> Fraction:
    """m0-th divided difference of f at x0 with increment y0."""
    if y0 == 0:
        raise DomainError("increment must be nonzero")
    if m0 < 0:
        raise DomainError("order must be nonnegative")
    total = sum((-1) ** (m0 - k) * binom_int(m0, k) * f(x0 + k * y0) for k in range(m0 + 1))
    return Fraction(total, 1) / Fraction(y0) ** m0


def a_num_divided_difference(u: int, x0: int, y0: int, m0: int) -> Fraction:
    """A_u(x0, y0, m0) straight from its definition as a divided difference."""
    if u < 0:
        raise DomainError(f"u must be nonnegative, got {u}")
    return divided_difference(lambda x: binom_int(x, m0 + u), x0, y0, m0)


def sym_sxvi_check(u: int, m0: int, y0: int) -> bool:
    """sum_j C(m0, j) y0^j A_u(x + j, y0, j) == (y0 + 1)^m0 A_u(x, y0 + 1, m0) in x."""
    if u < 0 or m0 < 0 or y0 < 1:
        raise DomainError("need u >= 0, m0 >= 0, y0 >= 1")
    a = a_poly(u)
    lhs = MultiPoly()
    for j in range(m0 + 1):
        lhs = lhs + binom_int(m0, j) * y0**j * a.subs(x=_X + j, y=y0, m=j)
    rhs = (y0 + 1) ** m0 * a.subs(y=y0 + 1, m=m0)
    return lhs == rhs


def _check_integrality_params(p: int, l: int, s: int) -> AdelbergIndex:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return AdelbergIndex.from_params(p, l, s)


def scaled_b_integrality(p: int, l: int, s: int, m_range: Iterable[int]) -> bool:
    """p^l B_{l(p-1)+s-1}(p, m0) has denominator 1 for every m0 in m_range."""
    idx = _check_integrality_params(p, l, s)
    return all((p**l * b_value(idx.u, p, m0)).denominator == 1 for m0 in m_range)


def scaled_a_integrality(p: int, l: int, s: int, m_range: Iterable[int]) -> bool:
    """p^l A_{l(p-1)+s-1}(s-1, p, m0) has denominator 1 for every m0 in m_range."""
    idx = _check_integrality_params(p, l, s)
    return all((p**l * a_value(idx.u, s - 1, p, m0)).denominator == 1 for m0 in m_range)
