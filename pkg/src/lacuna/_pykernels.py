"""Pure-Python modular Stirling kernels.

Same signatures and outputs as the compiled ``_ckernels`` module; used when
the extension is not built or ``LACUNA_PURE_PYTHON`` is set.
"""
from __future__ import annotations

from array import array


def stirling_row_mod(kind: int, n: int, p: int) -> array:
    """Row n of the cycle (kind 1) or partition (kind 2) triangle mod p."""
    row = array("q", bytes(8 * (n + 1)))
    row[0] = 1 % p
    for i in range(1, n + 1):
        im1 = (i - 1) % p
        for k in range(i, 0, -1):
            mult = im1 if kind == 1 else k % p
            row[k] = (mult * row[k] + row[k - 1]) % p
        row[0] = (im1 * row[0]) % p if kind == 1 else 0
    return row


def _lucas_tables(p: int) -> tuple[list[int], list[int]]:
    fact = [1] * p
    for i in range(1, p):
        fact[i] = fact[i - 1] * i % p
    inv_fact = [pow(f, p - 2, p) for f in fact]
    return fact, inv_fact


def _lucas(n: int, k: int, p: int, fact: list[int], inv_fact: list[int]) -> int:
    res = 1
    while n or k:
        a, b = n % p, k % p
        if b > a:
            return 0
        res = res * fact[a] % p * inv_fact[b] % p * inv_fact[a - b] % p
        n //= p
        k //= p
    return res


def binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p for n, k >= 0 by Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    fact, inv_fact = _lucas_tables(p)
    return _lucas(n, k, p, fact, inv_fact)


def stirling1_row_closed_mod(n: int, p: int) -> array:
    """Row n of the cycle triangle mod p from the closed-form p-reduction.

    Writes n = q*p + r and reads every entry off a single small row r < p
    and a binomial C(q, t) reduced by Lucas' theorem.
    """
    q, r = divmod(n, p)
    small = stirling_row_mod(1, r, p)
    fact, inv_fact = _lucas_tables(p)
    out = array("q", bytes(8 * (n + 1)))
    pm1 = p - 1
    for k in range(n + 1):
        kq = k - q
        rho = kq % pm1
        j = rho + pm1 if (rho == 0 and r == pm1) else rho
        if j > r:
            continue
        t = (kq - j) // pm1
        if t < 0 or t > q:
            continue
        val = small[j] * _lucas(q, t, p, fact, inv_fact) % p
        if (q - t) & 1:
            val = (p - val) % p
        out[k] = val
    return out
