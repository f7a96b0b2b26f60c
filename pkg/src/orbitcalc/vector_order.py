"""Exact half-integer vectors and the partial-sum orders on them.

All arithmetic is over fractions.Fraction; no floats anywhere.  A vector
``a`` precedes ``b`` weakly (a <= b here written preceq) when every
partial sum of ``a`` is at most the matching partial sum of ``b``; the
strict variant requires strict inequality at every index.  The closure
(dominance) order on equal-size partitions compares transposes the other
way around: d1 below d2 exactly when the transpose of d1 dominates the
transpose of d2.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Sequence

from .diagram_core import Partition

HalfIntVector = tuple[Fraction, ...]


def vec(*entries) -> HalfIntVector:
    return tuple(Fraction(e) for e in entries)


def half(n: int) -> Fraction:
    return Fraction(n, 2)


class OrderResult(enum.Enum):
    EQUAL = "equal"
    LESS_STRICT = "less-strict"
    LESS_EQ = "less-eq"
    GREATER_EQ = "greater-eq"
    GREATER_STRICT = "greater-strict"
    INCOMPARABLE = "incomparable"


def _pad_pair(
    a: Sequence[Fraction], b: Sequence[Fraction], pad: bool
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    if len(a) == len(b):
        return tuple(a), tuple(b)
    if not pad:
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)} (pass pad=True to zero-pad)")
    n = max(len(a), len(b))
    zero = Fraction(0)
    return (
        tuple(a) + (zero,) * (n - len(a)),
        tuple(b) + (zero,) * (n - len(b)),
    )


def seq_preceq(a: Sequence[Fraction], b: Sequence[Fraction], pad: bool = False) -> bool:
    """Every partial sum of a is <= the matching partial sum of b."""
    a, b = _pad_pair(a, b, pad)
    sa = Fraction(0)
    sb = Fraction(0)
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def seq_prec(a: Sequence[Fraction], b: Sequence[Fraction], pad: bool = False) -> bool:
    """Strict at every partial sum (vacuously true for empty vectors)."""
    a, b = _pad_pair(a, b, pad)
    sa = Fraction(0)
    sb = Fraction(0)
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa >= sb:
            return False
    return True


def seq_compare(a: Sequence[Fraction], b: Sequence[Fraction], pad: bool = False) -> OrderResult:
    a, b = _pad_pair(a, b, pad)
    if a == b:
        return OrderResult.EQUAL
    if seq_prec(a, b):
        return OrderResult.LESS_STRICT
    if seq_preceq(a, b):
        return OrderResult.LESS_EQ
    if seq_prec(b, a):
        return OrderResult.GREATER_STRICT
    if seq_preceq(b, a):
        return OrderResult.GREATER_EQ
    return OrderResult.INCOMPARABLE


def bar_sort(a: Iterable[Fraction]) -> HalfIntVector:
    """Reorder weakly decreasing (the bar operation); multiset preserved."""
    return tuple(sorted(a, reverse=True))


def dominance_leq(d1: Partition, d2: Partition) -> OrderResult:
    """Closure order on same-size partitions via transposes."""
    if d1.size != d2.size:
        raise ValueError("incomparable sizes")
    t1 = tuple(Fraction(r) for r in d1.transpose().rows)
    t2 = tuple(Fraction(r) for r in d2.transpose().rows)
    if d1.rows == d2.rows:
        return OrderResult.EQUAL
    # d1 below d2 in the closure order iff t1 dominates t2.
    if seq_preceq(t2, t1, pad=True):
        return OrderResult.LESS_EQ
    if seq_preceq(t1, t2, pad=True):
        return OrderResult.GREATER_EQ
    return OrderResult.INCOMPARABLE


def dominated(d1: Partition, d2: Partition) -> bool:
    """d1 lies in the closure of d2 (weakly)."""
    return dominance_leq(d1, d2) in (OrderResult.EQUAL, OrderResult.LESS_EQ)


def scale(c: Fraction, a: Sequence[Fraction]) -> HalfIntVector:
    return tuple(c * x for x in a)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {s!r}: {exc}") from None


def vector_to_json(a: Sequence[Fraction]) -> list[str]:
    return [format_rational(x) for x in a]


def vector_from_json(data: Sequence[str]) -> HalfIntVector:
    return tuple(parse_rational(s) for s in data)
