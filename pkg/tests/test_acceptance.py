"""Acceptance criteria, all checked exactly (zero tolerance) with runtime limits.

Each criterion prints one line, ``criterion N: PASS|FAIL ...``.  Run the file
directly (``python3 tests/test_acceptance.py``) to get just those lines.
"""
from __future__ import annotations

import sys
import time
from pathlib import Path
from typing import Callable

import pytest

from lacuna.adelberg import (
    a_num_divided_difference,
    a_poly,
    a_value,
    b_poly,
    b_value,
    b_weak_composition,
    scaled_a_integrality,
    scaled_b_integrality,
    sym_sxvi_check,
)
from lacuna.cli import emit_table
from lacuna.congruence import (
    ClassicalParams,
    CongruenceParams,
    classical_check,
    cong1_n_report,
    cong1_report,
    cong2_closed_form_check,
    cong2_report,
    cong3_boundary_check,
    cong3_closed_form_check,
    cong3_report,
    cor34_check,
    identity33_check,
    lacunary_rewrite_check,
)
from lacuna.exactnum import primes_upto
from lacuna.stirling import stirling1, stirling1_mod_p

GOLDEN = Path(__file__).parent / "golden"
MAX_SHOWN = 5

Failures = list


def table_reproduction() -> Failures:
    bad = []
    for which in (1, 2):
        if emit_table(which).encode() != (GOLDEN / f"table{which}.txt").read_bytes():
            bad.append(f"table {which} differs from golden")
    return bad


def stirling_mod_p_closed_form() -> Failures:
    bad = []
    for p in (2, 3, 5, 7, 11, 13):
        for n in range(201):
            for k in range(n + 1):
                if stirling1_mod_p(n, k, p) != stirling1(n, k) % p:
                    bad.append(f"p={p} n={n} k={k}")
    return bad


def cycle_partition_identity_and_reduction() -> Failures:
    bad = []
    for p in range(1, 13):
        for n in range(p - 1, 26):
            for k in range(n + 1):
                if not identity33_check(p, n, k):
                    bad.append(f"identity p={p} n={n} k={k}")
    for p in primes_upto(11):
        for n in range(p - 1, 41):
            for k in range(11):
                if not cor34_check(p, n, k):
                    bad.append(f"reduction mod p, p={p} n={n} k={k}")
    return bad


def first_congruence() -> Failures:
    bad = []
    for p in primes_upto(13):
        for m in range(1, 9):
            for l in range(m):
                for s in range(2 * p + 1):
                    if not cong1_report(CongruenceParams(p, m, l, s)).holds:
                        bad.append(f"p={p} m={m} l={l} s={s}")
        for n in range(1, 31):
            if n % p == 0:
                continue
            for l in range(5):
                if not cong1_n_report(p, n, l).holds:
                    bad.append(f"n-form p={p} n={n} l={l}")
    return bad


def second_congruence() -> Failures:
    bad = []
    for p in primes_upto(13):
        for m in range(9):
            for l in range(9):
                for s in range(1, p):
                    r = cong2_report(CongruenceParams(p, m, l, s))
                    if not (r.holds and r.quotient == a_value(s - 1, l, p, m) == r.predicted_quotient):
                        bad.append(f"p={p} m={m} l={l} s={s}")
    r = cong2_report(CongruenceParams(3, 2, 0, 1))
    if (r.lhs_sum, r.quotient) != (9, 1):
        bad.append(f"(3,2,0,1) gave sum {r.lhs_sum}, quotient {r.quotient}")
    return bad


def third_congruence() -> Failures:
    bad = []
    for p in primes_upto(7):
        for s in range(1, p):
            for l in range(7):
                for m in range(l, 7):
                    u = l * (p - 1) + s - 1
                    r = cong3_report(CongruenceParams(p, m, l, s))
                    exact = r.lhs_sum == p**m * a_value(u, s - 1, p, m)
                    if not (exact and r.holds and r.modulus == p ** (m - l) and r.ok):
                        bad.append(f"p={p} m={m} l={l} s={s}")
                if p**l * a_value(l * (p - 1) + s - 1, s - 1, p, l) != 1:
                    bad.append(f"boundary value p={p} l={l} s={s}")
                if not cong3_boundary_check(p, l, s):
                    bad.append(f"boundary check p={p} l={l} s={s}")
    return bad


def adelberg_structure() -> Failures:
    bad = []
    for u in range(7):
        b, a = b_poly(u), a_poly(u)
        if (b.degree("m"), b.degree("y")) != (u, u) or any(a.degree(v) != u for v in "mxy"):
            bad.append(f"degree u={u}")
        if u >= 1 and not (b.subs(y=1).is_zero() and b.subs(m=0).is_zero()):
            bad.append(f"roots u={u}")
        for m0 in range(7):
            if b_weak_composition(u, m0) != b.subs(m=m0):
                bad.append(f"composition sum u={u} m={m0}")
    for u in range(6):
        a = a_poly(u)
        for x0 in range(5):
            for y0 in range(1, 6):
                for m0 in range(6):
                    if a_num_divided_difference(u, x0, y0, m0) != a(m=m0, x=x0, y=y0):
                        bad.append(f"divided difference u={u} x={x0} y={y0} m={m0}")
    for u in range(4):
        for m0 in range(5):
            for y0 in range(1, 6):
                if not sym_sxvi_check(u, m0, y0):
                    bad.append(f"symmetry u={u} m={m0} y={y0}")
    return bad


def integrality() -> Failures:
    bad = []
    window = range(-6, 7)
    for p in primes_upto(11):
        for s in range(1, p):
            for m0 in window:
                if b_value(s - 1, p, m0).denominator != 1:
                    bad.append(f"B p={p} s={s} m={m0}")
                for x0 in range(-4, 5):
                    if a_value(s - 1, x0, p, m0).denominator != 1:
                        bad.append(f"A p={p} s={s} x={x0} m={m0}")
            for l in range(5):
                if not scaled_b_integrality(p, l, s, window):
                    bad.append(f"scaled B p={p} l={l} s={s}")
                if not scaled_a_integrality(p, l, s, window):
                    bad.append(f"scaled A p={p} l={l} s={s}")
    return bad


def example_identities() -> Failures:
    bad = []
    for n in range(1, 9):
        for l in range(7):
            for m in range(9):
                if not cong2_closed_form_check(n, l, m):
                    bad.append(f"first n={n} l={l} m={m}")
    for m in range(11):
        if not cong3_closed_form_check(m):
            bad.append(f"second m={m}")
    return bad


def classical_cross_checks() -> Failures:
    bad = []
    for p in primes_upto(7):
        for s in range(1, p):
            for h in range(p):
                for k in range(5):
                    cases = {
                        "glaisher": ClassicalParams(p, s, h, l=k),
                        "fleck": ClassicalParams(p, s, h, q=k),
                        "suntauraso": ClassicalParams(p, s, h, q=k),
                    }
                    for kind, params in cases.items():
                        r = classical_check(kind, params)
                        if not r.holds:
                            bad.append(f"{kind} {dict(r.params)} sum={r.lhs_sum}")
                    for q in range(5):
                        r = classical_check("wan", ClassicalParams(p, s, h, l=k, q=q))
                        if not r.holds:
                            bad.append(f"wan {dict(r.params)}")
    for p in primes_upto(5):
        for l in range(3):
            for r in range(2 * p + 1):
                for m in range((p - 1) * (l + 1)):
                    if not lacunary_rewrite_check(1, p, m, l, r).holds:
                        bad.append(f"rewrite1 p={p} m={m} l={l} r={r}")
            for r in range(p):
                for m in range(21):
                    if not lacunary_rewrite_check(2, p, m, l, r).holds:
                        bad.append(f"rewrite2 p={p} m={m} l={l} r={r}")
    return bad


CRITERIA: list[tuple[int, str, float, Callable[[], Failures]]] = [
    (1, "table reproduction", 1.0, table_reproduction),
    (2, "first-kind Stirling numbers mod p", 30.0, stirling_mod_p_closed_form),
    (3, "cycle/partition identity and its reduction mod p", 20.0, cycle_partition_identity_and_reduction),
    (4, "first congruence", 30.0, first_congruence),
    (5, "second congruence and quotient", 30.0, second_congruence),
    (6, "third congruence and quotient", 60.0, third_congruence),
    (7, "Adelberg polynomial structure", 60.0, adelberg_structure),
    (8, "integrality windows", 10.0, integrality),
    (9, "worked example identities", 10.0, example_identities),
    (10, "classical congruences and lacunary rewrites", 20.0, classical_cross_checks),
]


def evaluate(number: int, title: str, limit: float, check: Callable[[], Failures]):
    start = time.perf_counter()
    failures = check()
    elapsed = time.perf_counter() - start
    passed = not failures and elapsed < limit
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'} {title} ({elapsed:.2f}s, limit {limit:g}s)"
    if failures:
        shown = "; ".join(failures[:MAX_SHOWN])
        more = f" and {len(failures) - MAX_SHOWN} more" if len(failures) > MAX_SHOWN else ""
        line += f" -- {len(failures)} failing case(s): {shown}{more}"
    return passed, elapsed, failures, line


@pytest.mark.parametrize("number, title, limit, check", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number, title, limit, check, capsys):
    passed, elapsed, failures, line = evaluate(number, title, limit, check)
    with capsys.disabled():
        print(f"\n{line}")
    assert not failures, line
    assert elapsed < limit, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, _, _, line in results:
        print(line)
    sys.exit(0 if all(r[0] for r in results) else 1)
