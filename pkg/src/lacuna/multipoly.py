"""Sparse polynomials in the variables m, x, y over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from lacuna.exactnum import DomainError, Number, format_rational

__all__ = ["MultiPoly", "VARIABLES", "binom_poly"]

VARIABLES = ("m", "x", "y")
Exponents = tuple[int, int, int]
Scalar = Union[int, Fraction]


class MultiPoly:
    """Immutable polynomial stored as {(e_m, e_x, e_y): nonzero coefficient}.

    >>> m, y = MultiPoly.var("m"), MultiPoly.var("y")
    >>> str(Fraction(1, 2) * m * (y - 1))
    '-1/2*m + 1/2*m*y'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, Number] | None = None):
        clean: dict[Exponents, Fraction] = {}
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(exps)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: Number) -> MultiPoly:
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        exps = [0, 0, 0]
        exps[VARIABLES.index(name)] = 1
        return cls({tuple(exps): 1})

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial."""
        if any(e != (0, 0, 0) for e in self._terms):
            raise DomainError(f"{self} is not constant")
        return self._terms.get((0, 0, 0), Fraction(0))

    def degree(self, var: str | None = None) -> int:
        """Degree in one variable, or total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        i = VARIABLES.index(var)
        return max(e[i] for e in self._terms)

    @staticmethod
    def _lift(other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> MultiPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> MultiPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other) -> MultiPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[Exponents, Fraction] = {}
        for (a1, b1, c1), k1 in self._terms.items():
            for (a2, b2, c2), k2 in other._terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, 0) + k1 * k2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> MultiPoly:
        c = Fraction(other)
        return MultiPoly({e: k / c for e, k in self._terms.items()})

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise DomainError("negative powers are not polynomials")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def subs(self, **values: Union[Scalar, MultiPoly]) -> MultiPoly:
        """Substitute numbers or polynomials for any of m, x, y."""
        unknown = set(values) - set(VARIABLES)
        if unknown:
            raise DomainError(f"unknown variables {sorted(unknown)}")
        images = [MultiPoly._lift(values.get(v, MultiPoly.var(v))) for v in VARIABLES]
        powers: list[dict[int, MultiPoly]] = [{0: MultiPoly.const(1)} for _ in VARIABLES]

        def power(i: int, e: int) -> MultiPoly:
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        out = MultiPoly()
        for e, c in self._terms.items():
            term = MultiPoly.const(c)
            for i, ei in enumerate(e):
                if ei:
                    term = term * power(i, ei)
            out = out + term
        return out

    def __call__(self, m: Number = None, x: Number = None, y: Number = None) -> Fraction:
        """Evaluate at numbers; omitted variables must not occur."""
        point = (m, x, y)
        total = Fraction(0)
        for e, c in self._terms.items():
            value = c
            for v, ei, name in zip(point, e, VARIABLES):
                if ei:
                    if v is None:
                        raise DomainError(f"no value given for {name}")
                    value *= Fraction(v) ** ei
            total += value
        return total

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def __str__(self) -> str:
        """Canonical form: terms by total degree, then by (e_m, e_x, e_y)."""
        if not self._terms:
            return "0"
        pieces = []
        for idx, (exps, c) in enumerate(self.sorted_terms()):
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(VARIABLES, exps)
                if e
            ]
            magnitude = abs(c)
            if factors and magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(magnitude)] + factors)
            if idx == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"


def binom_poly(poly: Union[MultiPoly, Scalar], k: int) -> MultiPoly:
    """C(poly, k) = poly (poly - 1) ... (poly - k + 1) / k! as a polynomial."""
    poly = MultiPoly._lift(poly)
    if k < 0:
        return MultiPoly()
    result = MultiPoly.const(1)
    for i in range(k):
        result = result * (poly - i) / (i + 1)
    return result
