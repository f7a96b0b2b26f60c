"""Streaming enumeration of partitions and signed diagrams.

Diagrams come out once per equivalence class, in a fixed deterministic
order, by choosing how many rows of each free length class lead with plus;
the class count for a shape is the product of (multiplicity + 1) over its
free length classes.  A brute-force counter that enumerates raw sign
vectors and dedupes canonical forms serves as an independent oracle.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .diagram_core import (
    Kind,
    Partition,
    Sign,
    SignedDiagram,
    Signature,
    canonicalize,
    from_row_spec,
    is_valid,
    signature,
    validate_partition_kind,
)


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n, largest part first, in descending lex order."""
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def shapes(kind: Kind, size: int) -> Iterator[Partition]:
    """Valid shapes of the given size for the kind."""
    for rows in partitions(size):
        d = Partition(rows)
        if validate_partition_kind(d, kind):
            yield d


def free_classes(shape: Partition, kind: Kind) -> list[tuple[int, int]]:
    """(length, multiplicity) of the sign-free length classes."""
    out = []
    for length in sorted(set(shape.rows), reverse=True):
        if not kind.constrained(length):
            out.append((length, shape.multiplicity(length)))
    return out


def class_count(shape: Partition, kind: Kind) -> int:
    """Number of equivalence classes on the shape: prod of (mult + 1)."""
    count = 1
    for _, mult in free_classes(shape, kind):
        count *= mult + 1
    return count


def diagrams_for_shape(shape: Partition, kind: Kind) -> Iterator[SignedDiagram]:
    if not validate_partition_kind(shape, kind):
        raise ValueError(f"{shape} is not a valid {kind.value} shape")
    free = free_classes(shape, kind)
    constrained = [
        (length, shape.multiplicity(length))
        for length in sorted(set(shape.rows), reverse=True)
        if kind.constrained(length)
    ]
    choice_ranges = [range(mult + 1) for _, mult in free]
    for plus_counts in product(*choice_ranges):
        spec: list[tuple[int, Sign | None]] = []
        for (length, mult), k in zip(free, plus_counts):
            spec += [(length, Sign.PLUS)] * k + [(length, Sign.MINUS)] * (mult - k)
        for length, mult in constrained:
            spec += [(length, None)] * mult
        yield from_row_spec(kind, spec)


def signed_diagrams(
    kind: Kind,
    size: int | None = None,
    sig: Signature | None = None,
) -> Iterator[SignedDiagram]:
    """Every valid canonical diagram exactly once; filter by size or by
    signature (the signature fixes the size)."""
    if sig is not None:
        sig = Signature(*sig)
        if size is not None and size != sig.plus + sig.minus:
            raise ValueError("size and signature disagree")
        size = sig.plus + sig.minus
        if kind is Kind.SYMPLECTIC and sig.plus != sig.minus:
            return
    if size is None:
        raise ValueError("need a size or a signature")
    if kind is Kind.SYMPLECTIC and size % 2 != 0:
        return
    for shape in shapes(kind, size):
        for d in diagrams_for_shape(shape, kind):
            if sig is None or signature(d) == sig:
                yield d


def brute_count(kind: Kind, size: int, sig: Signature | None = None) -> int:
    """Independent class counter: raw per-row sign vectors, validity filter,
    canonical dedupe.  Exponential; for oracle use at small sizes only."""
    seen = set()
    for rows in partitions(size):
        shape = Partition(rows)
        if not validate_partition_kind(shape, kind):
            continue
        for leads in product((Sign.PLUS, Sign.MINUS), repeat=len(rows)):
            d = SignedDiagram(kind, tuple(zip(rows, leads)))
            if not is_valid(d):
                continue
            if sig is not None and signature(d) != Signature(*sig):
                continue
            seen.add((kind, canonicalize(d).rows))
    return len(seen)
