"""Parameter sweeps over the congruence checkers.

A sweep walks the cartesian product of inclusive integer ranges in
lexicographic order of the target's parameter list.  Rows may be evaluated in
worker processes; results are always emitted in that canonical order.
"""
from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from lacuna import congruence as cg
from lacuna.exactnum import DomainError, VerificationError, is_prime

__all__ = ["SweepSpec", "SweepRow", "TARGETS", "format_rows", "run_sweep"]


@dataclass(frozen=True)
class Target:
    key: str
    congruence: str
    params: tuple[str, ...]
    defaults: dict[str, tuple[int, int]]
    evaluate: Callable[..., cg.CongruenceReport]
    admissible: Callable[..., bool]
    prime_params: tuple[str, ...] = ("p",)


def _cong1(p, m, l, s):
    return cg.cong1_report(cg.CongruenceParams(p, m, l, s))


def _cong2(p, m, l, s):
    return cg.cong2_report(cg.CongruenceParams(p, m, l, s))


def _cong3(p, m, l, s):
    return cg.cong3_report(cg.CongruenceParams(p, m, l, s))


def _classical(kind: str):
    def evaluate(p, s, h, l=0, q=0):
        return cg.classical_check(kind, cg.ClassicalParams(p, s, h, l=l, q=q))

    return evaluate


def _classical_admissible(p, s, h, l=0, q=0):
    return 0 < s < p and 0 <= h < p


def _rewrite(form: int):
    def evaluate(p, m, l, r):
        return cg.lacunary_rewrite_check(form, p, m, l, r)

    return evaluate


_CLASSICAL_PARAMS = {
    "glaisher": ("p", "s", "h", "l"),
    "fleck": ("p", "s", "h", "q"),
    "wan": ("p", "s", "h", "l", "q"),
    "suntauraso": ("p", "s", "h", "q"),
}
_CLASSICAL_DEFAULTS = {"p": (2, 7), "s": (1, 6), "h": (0, 6), "l": (0, 4), "q": (0, 4)}

TARGETS: dict[str, Target] = {
    "cong1": Target(
        "cong1", "cong1", ("p", "m", "l", "s"),
        {"p": (2, 13), "m": (1, 8), "l": (0, 7), "s": (0, 26)},
        _cong1, lambda p, m, l, s: m > l >= 0 and s >= 0,
    ),
    "cong1n": Target(
        "cong1n", "cong1", ("p", "n", "l"),
        {"p": (2, 13), "n": (1, 30), "l": (0, 4)},
        cg.cong1_n_report, lambda p, n, l: n >= 1 and n % p != 0 and l >= 0,
    ),
    "cong2": Target(
        "cong2", "cong2", ("p", "m", "l", "s"),
        {"p": (2, 13), "m": (0, 8), "l": (0, 8), "s": (1, 12)},
        _cong2, lambda p, m, l, s: 0 < s < p and m >= 0 and l >= 0,
    ),
    "cong3": Target(
        "cong3", "cong3", ("p", "m", "l", "s"),
        {"p": (2, 7), "m": (0, 6), "l": (0, 6), "s": (1, 6)},
        _cong3, lambda p, m, l, s: 0 < s < p and m >= l >= 0,
    ),
    "identity33": Target(
        "identity33", "identity33", ("p", "n", "k"),
        {"p": (1, 12), "n": (0, 25), "k": (0, 25)},
        cg.identity33_report, lambda p, n, k: p >= 1 and n >= p - 1 and 0 <= k <= n,
        prime_params=(),
    ),
    "cor34": Target(
        "cor34", "cor34", ("p", "n", "k"),
        {"p": (2, 11), "n": (0, 40), "k": (0, 10)},
        cg.cor34_report, lambda p, n, k: n >= p - 1 and k >= 0,
    ),
    "rewrite1": Target(
        "rewrite1", "rewrite1", ("p", "m", "l", "r"),
        {"p": (2, 5), "m": (0, 14), "l": (0, 2), "r": (0, 9)},
        _rewrite(1), lambda p, m, l, r: 0 <= m < (p - 1) * (l + 1) and l >= 0 and r >= 0,
    ),
    "rewrite2": Target(
        "rewrite2", "rewrite2", ("p", "m", "l", "r"),
        {"p": (2, 5), "m": (0, 20), "l": (0, 2), "r": (0, 4)},
        _rewrite(2), lambda p, m, l, r: m >= 0 and l >= 0 and 0 <= r < p,
    ),
}
for _kind, _names in _CLASSICAL_PARAMS.items():
    TARGETS[f"classical:{_kind}"] = Target(
        f"classical:{_kind}", _kind, _names,
        {n: _CLASSICAL_DEFAULTS[n] for n in _names},
        _classical(_kind), _classical_admissible,
    )


@dataclass(frozen=True)
class SweepSpec:
    """Which checker to run and over which inclusive parameter ranges."""

    target: str
    ranges: dict[str, range] = field(default_factory=dict)
    output_format: str = "tsv"
    strict: bool = False

    def resolved_ranges(self) -> dict[str, range]:
        tgt = TARGETS[self.target]
        out = {}
        for name in tgt.params:
            rng = self.ranges.get(name)
            if rng is None:
                lo, hi = tgt.defaults[name]
                rng = range(lo, hi + 1)
            if len(rng) == 0:
                raise DomainError(f"empty range for --{name}")
            out[name] = rng
        return out

    def points(self) -> list[tuple[int, ...]]:
        """Parameter tuples in canonical order, after prime and domain filtering.

        Without ``strict``, composite values of prime parameters and tuples
        outside the checker's domain are skipped.  With ``strict`` a composite
        raises and out-of-domain tuples are kept so they surface as errors.
        """
        tgt = TARGETS[self.target]
        ranges = self.resolved_ranges()
        axes = []
        for name in tgt.params:
            values = list(ranges[name])
            if name in tgt.prime_params:
                composite = [v for v in values if not is_prime(v)]
                if composite and self.strict:
                    raise DomainError(f"--{name} contains non-prime values {composite}")
                values = [v for v in values if is_prime(v)]
            axes.append(values)
        pts = list(itertools.product(*axes))
        if not self.strict:
            pts = [pt for pt in pts if tgt.admissible(*pt)]
        return pts


@dataclass(frozen=True)
class SweepRow:
    params: dict[str, int]
    report: cg.CongruenceReport | None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.report is not None and self.report.ok


def _evaluate(key: str, values: tuple[int, ...]) -> SweepRow:
    tgt = TARGETS[key]
    params = dict(zip(tgt.params, values))
    try:
        return SweepRow(params, tgt.evaluate(*values))
    except (DomainError, VerificationError) as exc:
        return SweepRow(params, None, f"{type(exc).__name__}: {exc}")


def _evaluate_packed(args: tuple[str, tuple[int, ...]]) -> SweepRow:
    return _evaluate(*args)


def run_sweep(spec: SweepSpec, jobs: int = 1) -> list[SweepRow]:
    pts = spec.points()
    work = [(spec.target, pt) for pt in pts]
    if jobs <= 1 or len(work) < 2:
        return [_evaluate_packed(w) for w in work]
    chunk = max(1, len(work) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_evaluate_packed, work, chunksize=chunk))


_REPORT_COLUMNS = ("lhs_sum", "modulus", "target", "holds", "quotient", "predicted_quotient")


def _row_dict(target: Target, row: SweepRow) -> dict[str, object]:
    if row.report is not None:
        return row.report.as_row()
    out: dict[str, object] = {"congruence": target.congruence}
    out.update(row.params)
    out.update({c: "" for c in _REPORT_COLUMNS})
    out["holds"] = False
    return out


def format_rows(spec: SweepSpec, rows: list[SweepRow]) -> str:
    tgt = TARGETS[spec.target]
    dicts = [_row_dict(tgt, r) for r in rows]
    if spec.output_format == "json":
        return "".join(json.dumps(d) + "\n" for d in dicts)
    header = ["congruence", *tgt.params, *_REPORT_COLUMNS]
    lines = ["\t".join(header)]
    for d in dicts:
        lines.append("\t".join(cg.tsv_cell(d[c]) for c in header))
    return "\n".join(lines) + "\n"

