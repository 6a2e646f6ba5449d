"""Exact integer and rational helpers.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.  Nothing in this package ever touches floats.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Union

Number = Union[int, Fraction]

__all__ = [
    "DomainError",
    "VerificationError",
    "Fraction",
    "as_integer",
    "binom_int",
    "divides",
    "format_int",
    "format_rational",
    "is_prime",
    "multinomial",
    "parse_rational",
    "primes_upto",
]


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class VerificationError(ArithmeticError):
    """Raised when an internally asserted identity or congruence fails."""


def binom_int(n: int, k: int) -> int:
    """Coefficient of x**k in (1 + x)**n, for any integer n.

    Returns 0 for k < 0.  Uses the falling factorial with exact division at
    every step, so intermediate values never exceed the final result by more
    than a factor of k.
    """
    if k < 0:
        return 0
    if n >= 0:
        if k > n:
            return 0
        k = min(k, n - k)
    result = 1
    for i in range(k):
        # result == C(n, i) here, and C(n, i) * (n - i) == (i + 1) * C(n, i + 1)
        result = result * (n - i) // (i + 1)
    return result


def multinomial(total: int, parts: Iterable[int]) -> int:
    """total! / prod(part!) for nonnegative parts summing to total."""
    parts = list(parts)
    if total < 0 or any(t < 0 for t in parts):
        raise DomainError("multinomial needs nonnegative total and parts")
    if sum(parts) != total:
        raise DomainError(f"parts {parts} do not sum to {total}")
    result = 1
    remaining = total
    for t in parts:
        result *= binom_int(remaining, t)
        remaining -= t
    return result


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    for d in range(5, isqrt(n) + 1, 6):
        if n % d == 0 or n % (d + 2) == 0:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if is_prime(q)]


def divides(modulus: int, value: Number) -> bool:
    """True iff modulus | value over the integers.

    A rational value is divisible only if it is an integer.  modulus == 0
    means exact equality with zero; modulus == 1 is vacuous for integers.
    """
    value = Fraction(value)
    if value.denominator != 1:
        return False
    if modulus == 0:
        return value == 0
    return value.numerator % modulus == 0


def as_integer(value: Number) -> int:
    """Convert an integral rational to int, raising if it is not integral."""
    value = Fraction(value)
    if value.denominator != 1:
        raise DomainError(f"{value} is not an integer")
    return value.numerator


def format_int(value: int) -> str:
    return str(int(value))


def format_rational(value: Number) -> str:
    """Serialize as "num/den", dropping the denominator when it is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    if not sep:
        return Fraction(int(num))
    return Fraction(int(num), int(den))
