"""Induced orbits: complex merging, the real induction recipe for a GL
block on a symplectic orbit, its tau variant, and the rank-one tower of
shapes [2^n] with the wave-front decompositions built from them.

Real induction from a symplectic diagram S with n - m at least the row
count r produces n - m - r + 1 orbit labels D^(j): the shape gains two
columns (every row grows by 2 and n - m - r new rows of length 2 appear),
even rows of S keep their boxes so their leading sign flips, odd rows
stay convention-bound, and the new length-2 rows split into j copies of
-+ and n - m - r - j copies of +-.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram_core import (
    Kind,
    Partition,
    Sign,
    SignedDiagram,
    SignedRow,
    from_row_spec,
    require_valid,
    tau,
)


def merge(s: Partition, t: Partition) -> Partition:
    """Row-wise sum with zero padding (induction for GL blocks)."""
    n = max(s.height, t.height)
    rows = tuple(
        (s.rows[j] if j < s.height else 0) + (t.rows[j] if j < t.height else 0)
        for j in range(n)
    )
    return Partition(tuple(r for r in rows if r > 0))


def add_two_columns(s: Partition, k: int) -> Partition:
    """Merge two columns of length k from the left: rows grow by 2 and k - r
    rows of length 2 appear.  Requires the row count of s to be at most k."""
    if s.height > k:
        raise ValueError("row count exceeds column length")
    return Partition(tuple(r + 2 for r in s.rows) + (2,) * (k - s.height))


@dataclass(frozen=True)
class InducedOrbitSet:
    """All orbit labels of one real induction, indexed by the count j of
    minus-leading length-2 rows; diagrams are canonical and share a shape."""

    diagrams: tuple[SignedDiagram, ...]
    new_columns: int  # n - m
    source_rows: int  # r
    count: int

    def __post_init__(self) -> None:
        assert self.count == len(self.diagrams)


def induce_real(s: SignedDiagram, n: int) -> InducedOrbitSet:
    """Real orbits induced from the zero GL(n-m) orbit times the orbit of s."""
    if s.kind is not Kind.SYMPLECTIC:
        raise ValueError("real induction starts from a symplectic diagram")
    require_valid(s)
    if s.size % 2 != 0:
        raise ValueError("symplectic diagrams have even size")
    m = s.size // 2
    r = len(s.rows)
    k = n - m
    if k < r:
        raise ValueError(f"row count {r} exceeds new column length {k}")

    extended_free = [
        (length + 2, lead.flipped) for length, lead in s.rows if length % 2 == 0
    ]
    extended_constrained = [length + 2 for length, lead in s.rows if length % 2 == 1]

    diagrams = []
    for j in range(k - r + 1):
        spec: list[tuple[int, Sign | None]] = [(l, sgn) for l, sgn in extended_free]
        spec += [(l, None) for l in extended_constrained]
        spec += [(2, Sign.MINUS)] * j
        spec += [(2, Sign.PLUS)] * (k - r - j)
        diagrams.append(from_row_spec(Kind.SYMPLECTIC, spec))
    result = InducedOrbitSet(tuple(diagrams), k, r, k - r + 1)
    expected_shape = add_two_columns(s.shape(), k)
    assert all(d.shape() == expected_shape for d in result.diagrams)
    return result


def induce_real_tau(s: SignedDiagram, n: int) -> InducedOrbitSet:
    """Variant induced from tau of the orbit: two columns merge from the left
    and even rows keep the leading signs of s; equals induce_real(tau(s), n).
    Odd-row signs are re-derived last, as always."""
    return induce_real(tau(s), n)


def two_n_signed(n: int, i: int) -> SignedDiagram | None:
    """[2^n] with i rows leading +; None is the empty-set sentinel at the
    out-of-range indices i = -1 and i = n + 1."""
    if i < -1 or i > n + 1:
        raise ValueError(f"index {i} outside [-1, {n + 1}]")
    if i == -1 or i == n + 1:
        return None
    rows = tuple(
        [SignedRow(2, Sign.PLUS)] * i + [SignedRow(2, Sign.MINUS)] * (n - i)
    )
    return SignedDiagram(Kind.SYMPLECTIC, rows)


def plus_rows(d: SignedDiagram) -> int:
    """Index i of a [2^n] diagram: its count of plus-leading rows."""
    return sum(1 for r in d.rows if r.leading is Sign.PLUS)


def wf_theta_trivial(p: int, q: int) -> tuple[SignedDiagram, ...]:
    """Wave-front components of the lift of the trivial character through the
    pair (O(p,q), Sp(2n)) with p + q = n + 1: the labels [2^n]^(p) and
    [2^n]^(p-1), dropping out-of-range sentinels."""
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need p, q >= 0 with p + q >= 1")
    n = p + q - 1
    out = [two_n_signed(n, i) for i in (p, p - 1)]
    kept = tuple(d for d in out if d is not None)
    return tuple(sorted(kept, key=plus_rows, reverse=True))


def wf_ialpha(n: int, alpha: int) -> tuple[SignedDiagram, ...]:
    """Union of wf_theta_trivial(p, q) over p + q = n + 1 with p - q = alpha
    mod 4.  Admissible alpha has the parity of n + 1."""
    if (alpha - (n + 1)) % 2 != 0:
        raise ValueError(f"alpha = {alpha} must have the parity of n + 1 = {n + 1}")
    seen: dict[int, SignedDiagram] = {}
    for p in range(n + 2):
        q = n + 1 - p
        if (p - q - alpha) % 4 != 0:
            continue
        for d in wf_theta_trivial(p, q):
            seen[plus_rows(d)] = d
    return tuple(seen[i] for i in sorted(seen, reverse=True))


def wf_ialpha_parts(n: int, alpha: int) -> dict[tuple[int, int], tuple[SignedDiagram, ...]]:
    """Per-(p, q) components entering wf_ialpha, for coverage checks."""
    if (alpha - (n + 1)) % 2 != 0:
        raise ValueError(f"alpha = {alpha} must have the parity of n + 1 = {n + 1}")
    parts = {}
    for p in range(n + 2):
        q = n + 1 - p
        if (p - q - alpha) % 4 == 0:
            parts[(p, q)] = wf_theta_trivial(p, q)
    return parts
