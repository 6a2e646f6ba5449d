"""Exact Stirling numbers of both kinds and their reductions modulo a prime.

``stirling1`` gives the unsigned cycle numbers [n, k] and ``stirling2`` the
partition numbers {n, k}.  Both are served from triangular tables that grow
on demand and are shared between threads.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum

from lacuna import _kernels
from lacuna.exactnum import DomainError, VerificationError, binom_int, is_prime

__all__ = [
    "EuclideanSplit",
    "StirlingKind",
    "StirlingTable",
    "euclidean_split",
    "identity_628_check",
    "lacunary_stirling_mod",
    "stirling1",
    "stirling1_mod_p",
    "stirling1_row_mod_p",
    "stirling2",
    "stirling2_col_mod_p",
    "stirling_row_mod",
]


class StirlingKind(Enum):
    CYCLE = 1
    PARTITION = 2


class StirlingTable:
    """Triangle of exact Stirling numbers, grown row by row under a lock."""

    def __init__(self, kind: StirlingKind):
        self.kind = kind
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def _grow(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            cycle = self.kind is StirlingKind.CYCLE
            while len(rows) <= n:
                i = len(rows)
                prev = rows[-1]
                row = [0] * (i + 1)
                for k in range(i + 1):
                    below = prev[k] if k < i else 0
                    diag = prev[k - 1] if k >= 1 else 0
                    row[k] = (i - 1 if cycle else k) * below + diag
                rows.append(row)

    def row(self, n: int) -> list[int]:
        if n < 0:
            raise DomainError(f"row index must be nonnegative, got {n}")
        if n >= len(self._rows):
            self._grow(n)
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        row = self.row(n)
        if k < 0 or k > n:
            return 0
        return row[k]


_CYCLE = StirlingTable(StirlingKind.CYCLE)
_PARTITION = StirlingTable(StirlingKind.PARTITION)


def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind [n, k]."""
    return _CYCLE(n, k)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind {n, k}."""
    return _PARTITION(n, k)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


@dataclass(frozen=True)
class EuclideanSplit:
    """Index bookkeeping for reducing [n, k] modulo a prime p.

    n = q*p + r, rho = (k - q) mod (p - 1), and j = rho except that j = p - 1
    when rho == 0 and r == p - 1.  ``t`` is (k - q - j) / (p - 1), the lower
    index of the binomial factor.
    """

    n: int
    k: int
    p: int
    q: int
    r: int
    rho: int
    j: int

    @property
    def t(self) -> int:
        return (self.k - self.q - self.j) // (self.p - 1)


def euclidean_split(n: int, k: int, p: int) -> EuclideanSplit:
    q, r = divmod(n, p)
    rho = (k - q) % (p - 1)
    j = p - 1 if (rho == 0 and r == p - 1) else rho
    return EuclideanSplit(n=n, k=k, p=p, q=q, r=r, rho=rho, j=j)


def stirling1_mod_p(n: int, k: int, p: int) -> int:
    """[n, k] mod p without computing [n, k].

    Uses (-1)^(q - t) * [r, j] * C(q, t) with the indices of
    :func:`euclidean_split`.  When p | n we have r = 0 and only j = 0 can
    contribute; when j > r or t falls outside [0, q] the residue is 0.
    """
    _require_prime(p)
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    split = euclidean_split(n, k, p)
    if split.j > split.r:
        return 0
    t = split.t
    if t < 0 or t > split.q:
        return 0
    value = stirling1(split.r, split.j) * _kernels.binom_mod_p(split.q, t, p)
    if (split.q - t) % 2:
        value = -value
    return value % p


def stirling2_col_mod_p(n: int, p: int) -> int:
    """{n, p-1} mod p, checked against the indicator [(p - 1) | n]."""
    _require_prime(p)
    if n <= 0:
        raise DomainError(f"n must be positive, got {n}")
    residue = stirling2(n, p - 1) % p
    expected = 1 if n % (p - 1) == 0 else 0
    if residue != expected:
        raise VerificationError(f"{{{n}, {p - 1}}} mod {p} = {residue}, expected {expected}")
    return residue


def lacunary_stirling_mod(m: int, s: int, i: int, p: int) -> int:
    """[m + s + m(p-1), m + s + i(p-1)] mod p.

    Computed through :func:`stirling1_mod_p` and checked against
    (-1)^(m-i) C(m + s//p, i + s//p) mod p.
    """
    _require_prime(p)
    if min(m, s, i) < 0:
        raise DomainError("m, s, i must be nonnegative")
    n = m * p + s
    k = m + s + i * (p - 1)
    residue = stirling1_mod_p(n, k, p) if k <= n else 0
    f = s // p
    expected = (-1) ** ((m - i) % 2) * binom_int(m + f, i + f) % p
    if residue != expected:
        raise VerificationError(f"[{n}, {k}] mod {p} = {residue}, closed form gives {expected}")
    return residue


def identity_628_check(l: int, m: int, n: int) -> bool:
    """C(l+m, l) {n, l+m} == sum_k {k, l} {n-k, m} C(n, k) for l, m, n >= 0."""
    if min(l, m, n) < 0:
        raise DomainError("identity is checked for nonnegative arguments only")
    lhs = binom_int(l + m, l) * stirling2(n, l + m)
    rhs = sum(stirling2(k, l) * stirling2(n - k, m) * binom_int(n, k) for k in range(n + 1))
    return lhs == rhs


def stirling_row_mod(kind: int | StirlingKind, n: int, p: int) -> list[int]:
    """Row n of either triangle reduced mod p, by the recurrence on residues."""
    kind = StirlingKind(kind)
    _require_prime(p)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return list(_kernels.stirling_row_mod(kind.value, n, p))


def stirling1_row_mod_p(n: int, p: int) -> list[int]:
    """Row n of the cycle triangle mod p, entry by entry from the closed form."""
    _require_prime(p)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return list(_kernels.stirling1_row_closed_mod(n, p))
