"""Lacunary binomial sums, their congruences, and the quotients that certify them.

Every checker evaluates its sum exactly over the finite range where the
binomial factors are nonzero and returns a :class:`CongruenceReport`.  A
report states ``lhs_sum == target (mod modulus)`` and, where an Adelberg
polynomial predicts it, the exact quotient.

Checkers for congruences accept prime moduli only.  Identities that remain
valid for any integer in place of the prime (``cong2_identity``,
``identity33_check``) are separate functions.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from lacuna.adelberg import AdelbergIndex, a_value
from lacuna.exactnum import (
    DomainError,
    VerificationError,
    binom_int,
    divides,
    format_int,
    format_rational,
    is_prime,
)
from lacuna.stirling import stirling1, stirling2

__all__ = [
    "ClassicalKind",
    "ClassicalParams",
    "CongruenceParams",
    "CongruenceReport",
    "RewriteForm",
    "classical_check",
    "cong1_n_report",
    "cong1_report",
    "cong1_small_shift_check",
    "cong1_zero_shift_check",
    "cong2_closed_form_check",
    "cong2_identity",
    "cong2_report",
    "cong3_boundary_check",
    "cong3_closed_form_check",
    "cong3_report",
    "cor34_check",
    "cor34_report",
    "identity33_check",
    "identity33_report",
    "lacunary_rewrite_check",
    "quotient_degree_check",
    "s_seq",
    "s_seq_transform_check",
    "reports_to_tsv",
    "tsv_cell",
]


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def _require_small_s(p: int, s: int) -> None:
    if not 0 < s < p:
        raise DomainError(f"need 0 < s < p, got s={s}, p={p}")


@dataclass(frozen=True)
class CongruenceParams:
    p: int
    m: int
    l: int
    s: int


@dataclass(frozen=True)
class CongruenceReport:
    """lhs_sum == target (mod modulus), with modulus 0 meaning exact equality."""

    congruence: str
    params: Mapping[str, int]
    lhs_sum: int
    modulus: int
    target: int = 0
    predicted_quotient: Fraction | None = None

    @property
    def holds(self) -> bool:
        return divides(self.modulus, self.lhs_sum - self.target)

    @property
    def quotient(self) -> Fraction | None:
        if self.modulus == 0:
            return None
        return Fraction(self.lhs_sum - self.target, self.modulus)

    @property
    def consistent(self) -> bool:
        """False only when a predicted quotient exists and differs."""
        return self.predicted_quotient is None or self.quotient == self.predicted_quotient

    @property
    def ok(self) -> bool:
        return self.holds and self.consistent

    def as_row(self) -> dict[str, object]:
        row: dict[str, object] = {"congruence": self.congruence}
        row.update(self.params)
        row["lhs_sum"] = format_int(self.lhs_sum)
        row["modulus"] = format_int(self.modulus)
        row["target"] = format_int(self.target)
        row["holds"] = self.holds
        q = self.quotient
        row["quotient"] = "" if q is None else format_rational(q)
        pq = self.predicted_quotient
        row["predicted_quotient"] = "" if pq is None else format_rational(pq)
        return row

    def to_json(self) -> str:
        return json.dumps(self.as_row())


def _report(name: str, params: dict[str, int], lhs: int, modulus: int, target: int = 0,
            predicted: Fraction | None = None) -> CongruenceReport:
    return CongruenceReport(name, params, lhs, modulus, target, predicted)


# First congruence and its consequences


def _cong1_sum(p: int, m: int, l: int, s: int) -> int:
    f = s // p
    top = m + s - 1
    return sum(
        _sign(m - i) * binom_int(m + f, i + f)
        * binom_int(top + i * (p - 1), top + l * (p - 1))
        for i in range(l + 1, m + 1)
    )


def cong1_zero_shift_check(p: int, m: int, l: int) -> bool:
    """s = 0 form: sum_{i>l} (-1)^i C(m,i) C(m-1+i(p-1), m-1+l(p-1)) + (-1)^l C(m-1,l) == 0 mod p."""
    total = sum(
        _sign(i) * binom_int(m, i) * binom_int(m - 1 + i * (p - 1), m - 1 + l * (p - 1))
        for i in range(l + 1, m + 1)
    )
    return (total + _sign(l) * binom_int(m - 1, l)) % p == 0


def cong1_small_shift_check(p: int, m: int, l: int, s: int) -> bool:
    """0 < s < p form: sum_{i>l} (-1)^(m-i) C(m,i) C(m+s-1+i(p-1), m+s-1+l(p-1)) == 0 mod p."""
    return _cong1_sum(p, m, l, s) % p == 0


def cong1_report(params: CongruenceParams) -> CongruenceReport:
    """First congruence, for any s >= 0, with target [p | s] (-1)^(m-1-l) C(m-1+s/p, l+s/p)."""
    p, m, l, s = params.p, params.m, params.l, params.s
    _require_prime(p)
    if not m > l >= 0:
        raise DomainError(f"need m > l >= 0, got m={m}, l={l}")
    if s < 0:
        raise DomainError("s must be nonnegative")
    lhs = _cong1_sum(p, m, l, s)
    target = 0
    if s % p == 0:
        f = s // p
        target = _sign(m - 1 - l) * binom_int(m - 1 + f, l + f)
    report = _report("cong1", {"p": p, "m": m, "l": l, "s": s}, lhs, p, target)
    if s == 0 and report.holds != cong1_zero_shift_check(p, m, l):
        raise VerificationError(f"s = 0 specialization disagrees at {params}")
    if 0 < s < p and report.holds != cong1_small_shift_check(p, m, l, s):
        raise VerificationError(f"0 < s < p specialization disagrees at {params}")
    return report


def cong1_n_report(p: int, n: int, l: int) -> CongruenceReport:
    """sum_{i>l} (-1)^i C(n-r, i) C(n-1+i(p-1), n-1+l(p-1)) == 0 mod p, r = n mod p != 0."""
    _require_prime(p)
    if n < 1 or n % p == 0:
        raise DomainError(f"need n >= 1 not divisible by p, got n={n}, p={p}")
    if l < 0:
        raise DomainError("l must be nonnegative")
    r = n % p
    lhs = sum(
        _sign(i) * binom_int(n - r, i) * binom_int(n - 1 + i * (p - 1), n - 1 + l * (p - 1))
        for i in range(l + 1, n - r + 1)
    )
    return _report("cong1", {"p": p, "n": n, "l": l}, lhs, p)


# Second congruence


def _cong2_sum(y: int, m: int, l: int, s: int) -> int:
    return sum(
        _sign(m - i) * binom_int(m, i) * binom_int(l + i * y, m + s - 1)
        for i in range(m + 1)
    )


def cong2_report(params: CongruenceParams) -> CongruenceReport:
    """sum_i (-1)^(m-i) C(m,i) C(l+ip, m+s-1) == 0 mod p^m, quotient A_{s-1}(l, p, m)."""
    p, m, l, s = params.p, params.m, params.l, params.s
    _require_prime(p)
    _require_small_s(p, s)
    if m < 0 or l < 0:
        raise DomainError("m and l must be nonnegative")
    lhs = _cong2_sum(p, m, l, s)
    predicted = a_value(s - 1, l, p, m)
    return _report("cong2", {"p": p, "m": m, "l": l, "s": s}, lhs, p**m, 0, predicted)


def cong2_identity(n: int, m: int, l: int, s: int) -> bool:
    """The second sum with any n >= 1 in place of p equals n^m A_{s-1}(l, n, m)."""
    if n < 1 or m < 0 or s < 1:
        raise DomainError("need n >= 1, m >= 0, s >= 1")
    return _cong2_sum(n, m, l, s) == n**m * a_value(s - 1, l, n, m)


def cong2_closed_form_check(n: int, l: int, m: int) -> bool:
    """The s = 3 case written out: the sum equals n^m/24 times an explicit quadratic."""
    lhs = sum(_sign(m - i) * binom_int(m, i) * binom_int(l + i * n, m + 2) for i in range(m + 1))
    poly = (5 * m + 3 * m**2 - 12 * l - 12 * m * l + 12 * l**2 - 6 * m * n - 6 * m**2 * n
            + 12 * m * l * n + m * n**2 + 3 * m**2 * n**2)
    return lhs == Fraction(n**m * poly, 24)


# Third congruence


def _cong3_sum(p: int, m: int, l: int, s: int) -> int:
    total = 0
    for j in range(l, m + 1):
        cj = binom_int(m, j)
        lower = j + s - 1 + l * (p - 1)
        for i in range(l, j + 1):
            total += _sign(j - i) * cj * binom_int(j, i) * binom_int(j + s - 1 + i * (p - 1), lower)
    return total


def cong3_report(params: CongruenceParams) -> CongruenceReport:
    """Double lacunary sum == 0 mod p^(m-l), quotient p^l A_{l(p-1)+s-1}(s-1, p, m).

    Also checks the exact equality sum == p^m A_{l(p-1)+s-1}(s-1, p, m).
    """
    p, m, l, s = params.p, params.m, params.l, params.s
    _require_prime(p)
    _require_small_s(p, s)
    if not m >= l >= 0:
        raise DomainError(f"need m >= l >= 0, got m={m}, l={l}")
    idx = AdelbergIndex.from_params(p, l, s)
    lhs = _cong3_sum(p, m, l, s)
    a = a_value(idx.u, s - 1, p, m)
    if lhs != p**m * a:
        raise VerificationError(f"sum {lhs} != p^m A = {p**m * a} at {params}")
    return _report("cong3", {"p": p, "m": m, "l": l, "s": s}, lhs, p ** (m - l), 0, p**l * a)


def cong3_boundary_check(p: int, l: int, s: int) -> bool:
    """A_{l(p-1)+s-1}(s-1, p, n) vanishes for 0 <= n < l and p^l A(s-1, p, l) == 1."""
    idx = AdelbergIndex.from_params(p, l, s)
    vanishes = all(a_value(idx.u, s - 1, p, n) == 0 for n in range(l))
    return vanishes and p**l * a_value(idx.u, s - 1, p, l) == 1


def cong3_closed_form_check(m: int) -> bool:
    """p = 7, s = 6, l = 0 written out: 7^m (m+1)(81m^4+684m^3+1401m^2+434m+40)/40."""
    lhs = _cong3_sum(7, m, 0, 6)
    poly = (m + 1) * (81 * m**4 + 684 * m**3 + 1401 * m**2 + 434 * m + 40)
    return lhs == Fraction(7**m * poly, 40)


def s_seq(p: int, s: int, l: int, m: int) -> int:
    """sum_{i>=l} (-1)^(m-i) C(m,i) C(m+s-1+i(p-1), m+s-1+l(p-1))."""
    top = m + s - 1
    return sum(
        _sign(m - i) * binom_int(m, i) * binom_int(top + i * (p - 1), top + l * (p - 1))
        for i in range(l, m + 1)
    )


def s_seq_transform_check(p: int, s: int, l: int, m_max: int) -> bool:
    """p^m A(m) is the binomial transform of s_seq, and binomial inversion recovers s_seq."""
    _require_prime(p)
    idx = AdelbergIndex.from_params(p, l, s)
    seq = [s_seq(p, s, l, m) for m in range(m_max + 1)]
    scaled = [p**j * a_value(idx.u, s - 1, p, j) for j in range(m_max + 1)]
    for m in range(m_max + 1):
        if sum(binom_int(m, j) * seq[j] for j in range(m + 1)) != scaled[m]:
            return False
        if sum(_sign(m - j) * binom_int(m, j) * scaled[j] for j in range(m + 1)) != seq[m]:
            return False
    return True


def quotient_degree_check(congruence: str, p: int, l: int, s: int, extra: int = 3) -> bool:
    """The quotient, as a function of m, is a polynomial of exactly the predicted degree.

    Samples deg + 1 + extra consecutive values of m and checks that the
    (deg+1)-th finite differences vanish while the deg-th does not.
    """
    if congruence == "cong2":
        degree, start, report = s - 1, 0, cong2_report
    elif congruence == "cong3":
        degree, start, report = s - 1 + l * (p - 1), l, cong3_report
    else:
        raise DomainError(f"unknown congruence {congruence!r}")
    samples = range(start, start + degree + 2 + extra)
    values = [report(CongruenceParams(p, m, l, s)).quotient for m in samples]
    diffs = values
    for _ in range(degree):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    top = [b - a for a, b in zip(diffs, diffs[1:])]
    return diffs[0] != 0 and all(d == 0 for d in top)


# Stirling-number identity and its reduction mod p


def _identity33_sides(p: int, n: int, k: int) -> tuple[int, int]:
    if p < 1:
        raise DomainError("p must be a positive integer")
    if n < p - 1 or k < 0:
        raise DomainError(f"need n >= p - 1 and k >= 0, got p={p}, n={n}, k={k}")
    lhs = _sign(p - 1) * binom_int(n - 1, p - 1) * stirling1(n - p + 1, k)
    rhs = sum(
        _sign(i) * binom_int(k - 1 + i, i) * stirling2(i, p - 1) * stirling1(n, i + k)
        for i in range(max(n - k, 0) + 1)
    )
    return lhs, rhs


def identity33_check(p: int, n: int, k: int) -> bool:
    """(-1)^(p-1) C(n-1,p-1) [n-p+1, k] == sum_i (-1)^i C(k-1+i,i) {i, p-1} [n, i+k]."""
    lhs, rhs = _identity33_sides(p, n, k)
    return lhs == rhs


def identity33_report(p: int, n: int, k: int) -> CongruenceReport:
    lhs, rhs = _identity33_sides(p, n, k)
    return _report("identity33", {"p": p, "n": n, "k": k}, lhs, 0, rhs)


def cor34_report(p: int, n: int, k: int) -> CongruenceReport:
    """sum over i > 0 with (p-1) | i of C(k-1+i, k-1) [n, i+k] == [p | n] [n-p+1, k] mod p."""
    _require_prime(p)
    if n < p - 1 or k < 0:
        raise DomainError(f"need n >= p - 1 and k >= 0, got p={p}, n={n}, k={k}")
    lhs = sum(
        binom_int(k - 1 + i, k - 1) * stirling1(n, i + k)
        for i in range(p - 1, n - k + 1, p - 1)
    )
    target = stirling1(n - p + 1, k) if n % p == 0 else 0
    return _report("cor34", {"p": p, "n": n, "k": k}, lhs, p, target)


def cor34_check(p: int, n: int, k: int) -> bool:
    return cor34_report(p, n, k).holds


# Classical congruences


class ClassicalKind(str, Enum):
    GLAISHER = "glaisher"
    FLECK = "fleck"
    WAN = "wan"
    SUNTAURASO = "suntauraso"


@dataclass(frozen=True)
class ClassicalParams:
    p: int
    s: int
    h: int
    l: int = 0
    q: int = 0


def classical_check(kind: ClassicalKind | str, params: ClassicalParams) -> CongruenceReport:
    """Evaluate one of the four classical lacunary congruences over its finite support.

    glaisher:   sum_i C(s+l(p-1), h+i(p-1))                   == C(s, h)  mod p
    fleck:      sum_i (-1)^(ip) C(s+q(p-1), h+ip)              == 0        mod p^q
    wan:        sum_i (-1)^(ip) C(i, l) C(lp+s+q(p-1), h+ip)   == 0        mod p^q
    suntauraso: sum_{i,j} (-1)^(j+i(p-1)) C(q, j) C(h+j(p-1), s+i(p-1)) == 0 mod p^q
    """
    kind = ClassicalKind(kind)
    p, s, h, l, q = params.p, params.s, params.h, params.l, params.q
    _require_prime(p)
    _require_small_s(p, s)
    if not 0 <= h < p:
        raise DomainError(f"need 0 <= h < p, got h={h}")
    if l < 0 or q < 0:
        raise DomainError("l and q must be nonnegative")
    if kind is ClassicalKind.GLAISHER:
        top = s + l * (p - 1)
        lhs = sum(binom_int(top, h + i * (p - 1)) for i in range((top - h) // (p - 1) + 1))
        return _report(kind.value, {"p": p, "s": s, "h": h, "l": l}, lhs, p, binom_int(s, h))
    if kind is ClassicalKind.FLECK:
        top = s + q * (p - 1)
        lhs = sum(_sign(i * p) * binom_int(top, h + i * p) for i in range((top - h) // p + 1))
        return _report(kind.value, {"p": p, "s": s, "h": h, "q": q}, lhs, p**q)
    if kind is ClassicalKind.WAN:
        top = l * p + s + q * (p - 1)
        lhs = sum(
            _sign(i * p) * binom_int(i, l) * binom_int(top, h + i * p)
            for i in range(l, (top - h) // p + 1)
        )
        return _report(kind.value, {"p": p, "s": s, "h": h, "l": l, "q": q}, lhs, p**q)
    lhs = 0
    for j in range(q + 1):
        top = h + j * (p - 1)
        if top < s:
            continue
        for i in range((top - s) // (p - 1) + 1):
            lhs += _sign(j + i * (p - 1)) * binom_int(q, j) * binom_int(top, s + i * (p - 1))
    return _report(kind.value, {"p": p, "s": s, "h": h, "q": q}, lhs, p**q)


# Lacunary rewrites


class RewriteForm(str, Enum):
    FLECK_LIKE = "fleck_like"
    ADELBERG_LIKE = "adelberg_like"


def lacunary_rewrite_check(form: RewriteForm | str | int, p: int, m: int, l: int,
                           r: int) -> CongruenceReport:
    """Sums over k == r (mod p) contrasting a lacunary lower index with a lacunary upper index.

    fleck_like (m < (p-1)(l+1)):
        sum (-1)^((k-r)/p) C(l(p-1), (k-r)/p) C(k, m) == 0 mod p^(l(p-1))
    adelberg_like (0 <= r < p):
        sum (-1)^(k-r) C((k-r)/p, l) C(m, k) == 0 mod p^floor((m-pl-1)/(p-1)),
        the modulus being 1 when that exponent is not positive.
    """
    if isinstance(form, int):
        form = (RewriteForm.FLECK_LIKE, RewriteForm.ADELBERG_LIKE)[form - 1]
    form = RewriteForm(form)
    _require_prime(p)
    if min(m, l, r) < 0:
        raise DomainError("m, l, r must be nonnegative")
    params = {"p": p, "m": m, "l": l, "r": r}
    if form is RewriteForm.FLECK_LIKE:
        if not m < (p - 1) * (l + 1):
            raise DomainError(f"need m < (p-1)(l+1), got m={m}")
        width = l * (p - 1)
        lhs = sum(_sign(t) * binom_int(width, t) * binom_int(r + t * p, m) for t in range(width + 1))
        return _report("rewrite1", params, lhs, p**width)
    if not r < p:
        raise DomainError(f"need r < p, got r={r}")
    lhs = sum(
        _sign(k - r) * binom_int((k - r) // p, l) * binom_int(m, k)
        for k in range(r, m + 1, p)
    )
    exponent = (m - p * l - 1) // (p - 1)
    return _report("rewrite2", params, lhs, p**exponent if exponent > 0 else 1)


def reports_to_tsv(reports: Iterable[CongruenceReport]) -> str:
    """Header plus one tab-separated line per report; all reports share a column set."""
    lines = []
    header = None
    for rep in reports:
        row = rep.as_row()
        if header is None:
            header = list(row)
            lines.append("\t".join(header))
        lines.append("\t".join(tsv_cell(row[c]) for c in header))
    return "\n".join(lines) + ("\n" if lines else "")


def tsv_cell(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
