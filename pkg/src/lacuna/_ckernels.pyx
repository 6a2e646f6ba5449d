# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular Stirling kernels; mirrors ``_pykernels`` exactly."""
from cpython cimport array
import array

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef inline i64 _powmod(i64 b, i64 e, i64 p) nogil:
    cdef i64 r = 1
    b %= p
    while e > 0:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


cdef array.array _zeros(Py_ssize_t size):
    cdef array.array out = array.clone(array.array("q"), size, zero=True)
    return out


cdef void _row_inplace(int kind, Py_ssize_t n, i64 p, i64[:] row) noexcept nogil:
    cdef Py_ssize_t i, k
    cdef i64 im1, mult
    row[0] = 1 % p
    for i in range(1, n + 1):
        im1 = (i - 1) % p
        for k in range(i, 0, -1):
            mult = im1 if kind == 1 else k % p
            row[k] = (mult * row[k] + row[k - 1]) % p
        row[0] = (im1 * row[0]) % p if kind == 1 else 0


def stirling_row_mod(int kind, Py_ssize_t n, i64 p):
    """Row n of the cycle (kind 1) or partition (kind 2) triangle mod p."""
    cdef array.array row = _zeros(n + 1)
    cdef i64[:] view = row
    with nogil:
        _row_inplace(kind, n, p, view)
    return row


cdef i64 _lucas(i64 n, i64 k, i64 p, const i64* fact, const i64* inv_fact) noexcept nogil:
    cdef i64 res = 1, a, b
    while n > 0 or k > 0:
        a = n % p
        b = k % p
        if b > a:
            return 0
        res = res * fact[a] % p * inv_fact[b] % p * inv_fact[a - b] % p
        n //= p
        k //= p
    return res


cdef int _fill_tables(i64 p, i64* fact, i64* inv_fact) noexcept nogil:
    cdef i64 i
    fact[0] = 1
    for i in range(1, p):
        fact[i] = fact[i - 1] * i % p
    for i in range(p):
        inv_fact[i] = _powmod(fact[i], p - 2, p)
    return 0


def binom_mod_p(i64 n, i64 k, i64 p):
    """C(n, k) mod p for n, k >= 0 by Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    cdef i64* fact = <i64*> malloc(p * sizeof(i64))
    cdef i64* inv_fact = <i64*> malloc(p * sizeof(i64))
    if fact == NULL or inv_fact == NULL:
        free(fact)
        free(inv_fact)
        raise MemoryError()
    cdef i64 res
    try:
        _fill_tables(p, fact, inv_fact)
        res = _lucas(n, k, p, fact, inv_fact)
    finally:
        free(fact)
        free(inv_fact)
    return res


def stirling1_row_closed_mod(i64 n, i64 p):
    """Row n of the cycle triangle mod p from the closed-form p-reduction."""
    cdef i64 q = n // p
    cdef i64 r = n % p
    cdef i64 pm1 = p - 1
    cdef array.array small = _zeros(r + 1)
    cdef i64[:] sv = small
    cdef array.array out = _zeros(n + 1)
    cdef i64[:] ov = out
    cdef i64* fact = <i64*> malloc(p * sizeof(i64))
    cdef i64* inv_fact = <i64*> malloc(p * sizeof(i64))
    cdef i64 k, kq, rho, j, t, val
    if fact == NULL or inv_fact == NULL:
        free(fact)
        free(inv_fact)
        raise MemoryError()
    try:
        with nogil:
            _row_inplace(1, r, p, sv)
            _fill_tables(p, fact, inv_fact)
            for k in range(n + 1):
                kq = k - q
                rho = kq % pm1
                if rho < 0:
                    rho += pm1
                j = rho + pm1 if (rho == 0 and r == pm1) else rho
                if j > r:
                    continue
                t = kq - j
                if t < 0:
                    continue
                t //= pm1
                if t > q:
                    continue
                val = sv[j] * _lucas(q, t, p, fact, inv_fact) % p
                if (q - t) & 1:
                    val = (p - val) % p
                ov[k] = val
    finally:
        free(fact)
        free(inv_fact)
    return out
