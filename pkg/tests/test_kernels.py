from __future__ import annotations

import math
import os
import subprocess
import sys

import pytest

from lacuna import _kernels, _pykernels
from lacuna.stirling import stirling1, stirling2

ckernels = pytest.importorskip("lacuna._ckernels")

PRIMES = [2, 3, 5, 13, 101, 7919]


@pytest.mark.parametrize("kind", [1, 2])
@pytest.mark.parametrize("p", PRIMES)
def test_row_recurrence_backends_agree(kind, p):
    for n in (0, 1, 2, 50, 333):
        assert list(ckernels.stirling_row_mod(kind, n, p)) == list(
            _pykernels.stirling_row_mod(kind, n, p)
        )


@pytest.mark.parametrize("p", PRIMES)
def test_closed_form_backends_agree(p):
    for n in {0, 1, min(p - 1, 600), min(p, 601), min(3 * p + 2, 700), 500}:
        assert list(ckernels.stirling1_row_closed_mod(n, p)) == list(
            _pykernels.stirling1_row_closed_mod(n, p)
        )


@pytest.mark.parametrize("p", PRIMES)
def test_binomial_backends_agree(p):
    for n in (0, 7, 1234, 10**12 + 39, 2**61):
        for k in (0, 1, 5, n // 3, n):
            assert ckernels.binom_mod_p(n, k, p) == _pykernels.binom_mod_p(n, k, p)


def test_compiled_rows_match_exact_values():
    assert list(ckernels.stirling_row_mod(1, 40, 7)) == [stirling1(40, k) % 7 for k in range(41)]
    assert list(ckernels.stirling_row_mod(2, 40, 7)) == [stirling2(40, k) % 7 for k in range(41)]
    assert ckernels.binom_mod_p(60, 25, 11) == math.comb(60, 25) % 11


def test_large_modulus_falls_back_to_python():
    p = (1 << 31) - 1
    assert p >= _kernels.C_PRIME_LIMIT
    assert list(_kernels.stirling_row_mod(1, 12, p)) == [stirling1(12, k) % p for k in range(13)]


def test_environment_forces_pure_python():
    env = dict(os.environ, LACUNA_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from lacuna import _kernels; print(_kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
