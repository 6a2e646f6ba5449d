"""Integer partitions as multiplicity vectors, and weak compositions."""
from __future__ import annotations

from typing import Iterator

from lacuna.exactnum import DomainError

__all__ = ["iter_partitions", "partitions_of", "weak_compositions"]


def iter_partitions(u: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield multiplicity vectors (t_1, ..., t_u) with sum i*t_i == u.

    Partitions come in decreasing-part order: the one with the most copies of
    the largest allowed part first.  ``max_part`` restricts the parts used
    (entries above it stay zero).  u == 0 yields the single empty tuple.
    """
    if u < 0:
        raise DomainError(f"cannot partition {u}")
    top = u if max_part is None else min(max_part, u)
    t = [0] * u

    def fill(remaining: int, part: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(t)
            return
        if part == 0:
            return
        for count in range(remaining // part, -1, -1):
            t[part - 1] = count
            yield from fill(remaining - count * part, part - 1)
        t[part - 1] = 0

    yield from fill(u, top)


def partitions_of(u: int) -> list[tuple[int, ...]]:
    return list(iter_partitions(u))


def weak_compositions(u: int, m: int) -> list[tuple[int, ...]]:
    """All length-m tuples of nonnegative integers summing to u, in lex order."""
    if u < 0 or m < 0:
        raise DomainError("u and m must be nonnegative")
    if m == 0:
        return [()] if u == 0 else []
    out = []
    prefix = [0] * m

    def fill(pos: int, remaining: int) -> None:
        if pos == m - 1:
            prefix[pos] = remaining
            out.append(tuple(prefix))
            return
        for v in range(remaining + 1):
            prefix[pos] = v
            fill(pos + 1, remaining - v)

    fill(0, u)
    return out
