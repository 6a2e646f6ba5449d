from __future__ import annotations

import json
from fractions import Fraction

import pytest

from lacuna.adelberg import a_poly, a_value
from lacuna.congruence import (
    ClassicalParams,
    CongruenceParams,
    CongruenceReport,
    classical_check,
    cong1_n_report,
    cong1_report,
    cong2_closed_form_check,
    cong2_identity,
    cong2_report,
    cong3_boundary_check,
    cong3_closed_form_check,
    cong3_report,
    cor34_check,
    cor34_report,
    identity33_check,
    identity33_report,
    lacunary_rewrite_check,
    quotient_degree_check,
    reports_to_tsv,
    s_seq,
    s_seq_transform_check,
)
from lacuna.exactnum import DomainError, binom_int, primes_upto
from lacuna.stirling import stirling1

P = CongruenceParams


def brute_lacunary(n_terms, term):
    return sum(term(i) for i in range(n_terms))


# Report conventions


def test_report_conventions():
    r = CongruenceReport("demo", {"p": 3}, 10, 3, target=1, predicted_quotient=Fraction(3))
    assert r.holds and r.quotient == 3 and r.ok
    exact = CongruenceReport("demo", {}, 5, 0, target=5)
    assert exact.holds and exact.quotient is None
    assert not CongruenceReport("demo", {}, 5, 0, target=4).holds
    assert CongruenceReport("demo", {}, 7, 1).holds
    wrong = CongruenceReport("demo", {}, 9, 3, predicted_quotient=Fraction(2))
    assert wrong.holds and not wrong.ok


def test_report_serialization():
    r = cong2_report(P(3, 2, 0, 1))
    row = json.loads(r.to_json())
    assert row == {
        "congruence": "cong2", "p": 3, "m": 2, "l": 0, "s": 1, "lhs_sum": "9", "modulus": "9",
        "target": "0", "holds": True, "quotient": "1", "predicted_quotient": "1",
    }
    tsv = reports_to_tsv([r]).splitlines()
    assert tsv[1].split("\t") == ["cong2", "3", "2", "0", "1", "9", "9", "0", "true", "1", "1"]


# Stirling-number identity and its reduction mod p


@pytest.mark.parametrize("p, n, k, value", [(2, 3, 1, -2), (2, 4, 2, -9)])
def test_cycle_partition_identity_examples(p, n, k, value):
    r = identity33_report(p, n, k)
    assert r.lhs_sum == r.target == value


def test_cycle_partition_identity_with_unit_p_is_trivial():
    for n in range(9):
        for k in range(n + 1):
            r = identity33_report(1, n, k)
            assert r.lhs_sum == r.target == stirling1(n, k)


def test_cycle_partition_identity_sweep_includes_composite_p():
    for p in range(1, 10):
        for n in range(p - 1, 19):
            assert all(identity33_check(p, n, k) for k in range(n + 1))
    with pytest.raises(DomainError):
        identity33_check(5, 3, 0)


@pytest.mark.parametrize("p, n, k, lhs, target", [(3, 6, 2, 260, 11), (3, 4, 1, 6, 0), (2, 2, 1, 1, 1)])
def test_lacunary_cycle_sum_mod_p_examples(p, n, k, lhs, target):
    r = cor34_report(p, n, k)
    assert (r.lhs_sum, r.target, r.holds) == (lhs, target, True)


def test_lacunary_cycle_sum_mod_p_sweep():
    for p in primes_upto(7):
        for n in range(p - 1, 30):
            assert all(cor34_check(p, n, k) for k in range(8))
    with pytest.raises(DomainError):
        cor34_check(4, 6, 1)


# First congruence


@pytest.mark.parametrize("params, lhs, target", [(P(3, 2, 0, 1), 3, 0), (P(3, 2, 0, 0), -1, -1)])
def test_cong1_examples(params, lhs, target):
    r = cong1_report(params)
    assert (r.lhs_sum, r.target, r.holds) == (lhs, target, True)


@pytest.mark.parametrize("p, n, l, lhs", [(3, 4, 0, -9), (2, 3, 0, 0)])
def test_cong1_n_examples(p, n, l, lhs):
    r = cong1_n_report(p, n, l)
    assert r.lhs_sum == lhs and r.holds


def test_cong1_n_direct_sum():
    r = cong1_n_report(5, 6, 1)
    direct = sum((-1) ** i * binom_int(5, i) * binom_int(5 + 4 * i, 9) for i in range(2, 6))
    assert r.lhs_sum == direct and r.holds


def test_cong1_sweep_small():
    for p in primes_upto(7):
        for m in range(1, 6):
            for l in range(m):
                for s in range(2 * p + 1):
                    assert cong1_report(P(p, m, l, s)).holds


def test_cong1_target_uses_shift_multiple():
    r = cong1_report(P(3, 3, 1, 6))
    assert r.target == -binom_int(2 + 2, 1 + 2)


def test_cong1_rejects_bad_parameters():
    for bad in (P(3, 2, 2, 1), P(4, 3, 0, 1), P(3, 3, 0, -1)):
        with pytest.raises(DomainError):
            cong1_report(bad)
    with pytest.raises(DomainError):
        cong1_n_report(3, 6, 0)


def test_cong1_fails_for_composite_modulus():
    # The same sum taken with a composite 'p' is not always divisible.
    from lacuna import congruence as cg

    assert cg._cong1_sum(4, 1, 0, 2) % 4 != 0
    for n in (4, 6, 8, 9):
        assert any(cg._cong1_sum(n, m, 0, s) % n for m in range(1, 4) for s in range(1, n))


# Second congruence


@pytest.mark.parametrize(
    "params, lhs, quotient",
    [(P(3, 2, 0, 1), 9, 1), (P(3, 1, 0, 2), 3, 1), (P(5, 0, 7, 3), binom_int(7, 2), binom_int(7, 2))],
)
def test_cong2_examples(params, lhs, quotient):
    r = cong2_report(params)
    assert r.lhs_sum == lhs and r.quotient == quotient == r.predicted_quotient and r.ok


def test_cong2_quotient_matches_symbolic_polynomial():
    for p in primes_upto(7):
        for s in range(1, min(p, 5)):
            poly = a_poly(s - 1)
            for m in range(5):
                for l in range(5):
                    r = cong2_report(P(p, m, l, s))
                    assert r.ok and r.quotient == poly(m=m, x=l, y=p)


def test_cong2_rejects_large_shift():
    with pytest.raises(DomainError):
        cong2_report(P(3, 2, 0, 3))


@pytest.mark.parametrize("n", [4, 6, 8, 9])
def test_composite_identity(n):
    for m in range(6):
        for l in range(5):
            for s in range(1, 5):
                assert cong2_identity(n, m, l, s)


def test_composite_quotient_need_not_be_integral():
    assert a_value(1, 0, 4, 1).denominator == 2


def test_first_closed_form_identity():
    assert all(cong2_closed_form_check(n, l, m) for n in range(1, 9) for l in range(7) for m in range(9))


# Third congruence


@pytest.mark.parametrize(
    "params, lhs, modulus, quotient",
    [(P(3, 1, 0, 1), 3, 3, 1), (P(3, 1, 1, 1), 1, 1, 1), (P(2, 2, 0, 1), 4, 4, 1)],
)
def test_cong3_examples(params, lhs, modulus, quotient):
    r = cong3_report(params)
    assert (r.lhs_sum, r.modulus, r.quotient) == (lhs, modulus, quotient) and r.ok


def test_cong3_sweep_small():
    for p in primes_upto(5):
        for s in range(1, p):
            for l in range(4):
                for m in range(l, 5):
                    assert cong3_report(P(p, m, l, s)).ok


def test_cong3_rejects_bad_parameters():
    with pytest.raises(DomainError):
        cong3_report(P(3, 1, 2, 1))
    with pytest.raises(DomainError):
        cong3_report(P(3, 2, 0, 0))


def test_cong3_boundary():
    for p in primes_upto(7):
        for s in range(1, p):
            for l in range(4):
                assert cong3_boundary_check(p, l, s)


def test_second_closed_form_identity():
    assert all(cong3_closed_form_check(m) for m in range(11))


def test_binomial_transform():
    assert s_seq(3, 1, 0, 0) == 1 and s_seq(3, 1, 0, 1) == 2
    assert s_seq_transform_check(3, 1, 0, 4)
    assert s_seq_transform_check(2, 1, 1, 4)
    for p in primes_upto(5):
        for s in range(1, p):
            for l in range(3):
                assert s_seq_transform_check(p, s, l, 5)
    with pytest.raises(DomainError):
        s_seq_transform_check(3, 0, 0, 2)


def test_quotient_degree():
    for p in primes_upto(7):
        for s in range(1, p):
            assert quotient_degree_check("cong2", p, 0, s)
            assert quotient_degree_check("cong2", p, 2, s)
    for p in (2, 3):
        for s in range(1, p):
            for l in range(3):
                assert quotient_degree_check("cong3", p, l, s)


# Classical congruences and rewrites


def test_glaisher_example():
    r = classical_check("glaisher", ClassicalParams(p=3, s=2, h=1, l=1))
    assert (r.lhs_sum, r.target, r.holds) == (8, 2, True)


def test_fleck_example():
    r = classical_check("fleck", ClassicalParams(p=2, s=1, h=1, q=2))
    assert (r.lhs_sum, r.modulus, r.holds) == (4, 4, True)


def test_wan_reduces_to_fleck():
    for p in primes_upto(7):
        for s in range(1, p):
            for h in range(p):
                for q in range(4):
                    wan = classical_check("wan", ClassicalParams(p, s, h, l=0, q=q))
                    fleck = classical_check("fleck", ClassicalParams(p, s, h, q=q))
                    assert wan.lhs_sum == fleck.lhs_sum


def test_fleck_and_wan_hold():
    for p in primes_upto(7):
        for s in range(1, p):
            for h in range(p):
                for q in range(5):
                    assert classical_check("fleck", ClassicalParams(p, s, h, q=q)).holds
                    for l in range(5):
                        assert classical_check("wan", ClassicalParams(p, s, h, l=l, q=q)).holds


def test_glaisher_and_sun_tauraso_hold_for_positive_h():
    for p in primes_upto(7):
        for s in range(1, p):
            for h in range(1, p):
                for k in range(5):
                    assert classical_check("glaisher", ClassicalParams(p, s, h, l=k)).holds
                    assert classical_check("suntauraso", ClassicalParams(p, s, h, q=k)).holds


def test_glaisher_edge_at_h_zero():
    # With h = 0 and s = p - 1 both end terms C(top, 0) and C(top, top) are picked up.
    r = classical_check("glaisher", ClassicalParams(p=3, s=2, h=0, l=0))
    assert (r.lhs_sum, r.target) == (2, 1)
    assert not r.holds


def test_classical_rejects_out_of_range():
    with pytest.raises(DomainError):
        classical_check("fleck", ClassicalParams(p=3, s=3, h=0))
    with pytest.raises(DomainError):
        classical_check("fleck", ClassicalParams(p=3, s=1, h=3))
    with pytest.raises(ValueError):
        classical_check("lucas", ClassicalParams(p=3, s=1, h=0))


def test_rewrite_examples():
    r = lacunary_rewrite_check("fleck_like", 3, 1, 1, 0)
    assert (r.lhs_sum, r.modulus, r.holds) == (0, 9, True)
    r = lacunary_rewrite_check("adelberg_like", 3, 5, 0, 1)
    assert (r.lhs_sum, r.modulus, r.holds) == (0, 9, True)
    r = lacunary_rewrite_check(2, 3, 2, 1, 0)
    assert r.modulus == 1 and r.holds


def test_rewrites_hold():
    for p in primes_upto(5):
        for l in range(3):
            for r in range(10):
                for m in range((p - 1) * (l + 1)):
                    assert lacunary_rewrite_check(1, p, m, l, r).holds
            for r in range(p):
                for m in range(21):
                    assert lacunary_rewrite_check(2, p, m, l, r).holds


def test_rewrite_preconditions():
    with pytest.raises(DomainError):
        lacunary_rewrite_check(1, 3, 4, 1, 0)
    with pytest.raises(DomainError):
        lacunary_rewrite_check(2, 3, 4, 1, 3)
