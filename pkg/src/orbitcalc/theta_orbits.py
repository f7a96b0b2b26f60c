"""Orbit-level theta correspondence along the column-prepend regime.

Between consecutive members of a dual pair the correspondence acts on the
orbit labels of interest by deleting or prepending one column, so a
diagram determines a full alternating chain of orbits and groups down to
a single column.  Real lifts are pinned by a target signature and must be
unique; ambiguity is an error, never a guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram_core import (
    GroupLabel,
    Kind,
    Partition,
    Sign,
    SignedDiagram,
    SignedRow,
    Signature,
    canonicalize,
    delete_column_signed,
    equivalent,
    group_of,
    is_valid,
    require_valid,
    signature,
)


def theta_lift_complex(d: Partition, kind: Kind, target_size: int) -> Partition:
    """The unique partition of target_size whose first-column deletion gives
    d: every row grows by 1 and the new first column is filled with 1-rows.
    The classification kind flips."""
    new_col = target_size - d.size
    if new_col < d.height:
        raise ValueError("no column-prepend lift of this size")
    return Partition(tuple(r + 1 for r in d.rows) + (1,) * (new_col - d.height))


def theta_lift_real(d: SignedDiagram, target: Signature) -> SignedDiagram:
    """The unique valid signed lift with the given signature.

    Rows of length >= 2 in the lift are forced: each row of d gains a box on
    the left, flipping its leading sign.  Only the new 1-rows have any
    freedom (for an orthogonal lift), and the target signature fixes their
    split; no solution or several is an error.
    """
    require_valid(d)
    target = Signature(*target)
    target_size = target.plus + target.minus
    new_col = target_size - d.size
    if new_col < len(d.rows):
        raise ValueError("no column-prepend lift of this size")
    kind = d.kind.opposite
    forced = [SignedRow(length + 1, lead.flipped) for length, lead in d.rows]
    ones = new_col - len(d.rows)

    candidates: list[SignedDiagram] = []
    if kind is Kind.SYMPLECTIC:
        # 1-rows are convention-bound pairs; a single split is possible.
        if ones % 2 == 0:
            rows = forced + [SignedRow(1, s) for s in _alternating(ones)]
            candidates.append(SignedDiagram(kind, tuple(rows)))
    else:
        base = signature(SignedDiagram(kind, tuple(forced)))
        a = target.plus - base.plus  # number of (1, +) rows
        if 0 <= a <= ones:
            rows = forced + [SignedRow(1, Sign.PLUS)] * a + [SignedRow(1, Sign.MINUS)] * (
                ones - a
            )
            candidates.append(SignedDiagram(kind, tuple(rows)))

    good = []
    for c in candidates:
        if is_valid(c) and signature(c) == target and equivalent(delete_column_signed(c), d):
            good.append(canonicalize(c))
    if not good:
        raise ValueError(f"no valid lift of signature {tuple(target)}")
    if len(good) > 1:
        raise ValueError(
            "ambiguous lift: " + ", ".join(str(c.shape()) for c in good)
        )
    return good[0]


def _alternating(count: int) -> list[Sign]:
    return [Sign.MINUS if i % 2 == 0 else Sign.PLUS for i in range(count)]


def deletion_inertia(d: SignedDiagram) -> Signature:
    """Inertia (r, s) of the symmetric pairing Omega(X., .) attached to any
    X in the orbit of a symplectic diagram.

    Any element of sp(2n) factors as X = W S with S = -W X symmetric, and
    Omega(Xu, v) has Gram matrix S; on a Jordan block the nonzero part of
    that pairing is an alternating antidiagonal, so an even row of length
    2w leading with sigma contributes (w-1, w-1) plus one middle sign
    sigma (-1)^(w-1), while a row of an odd pair of length 2l+1 contributes
    (l, l).  This is the signature written on the one-column deletion when
    it is read as the orbit label of the orthogonal side of the moment
    maps; it differs from naive box counting of the deletion by the middle
    flip on even rows of odd half-length.
    """
    if d.kind is not Kind.SYMPLECTIC:
        raise ValueError("the pairing inertia applies to symplectic diagrams")
    require_valid(d)
    r = s = 0
    for length, lead in d.rows:
        if length % 2 == 0:
            w = length // 2
            r += w - 1
            s += w - 1
            middle = (1 if lead is Sign.PLUS else -1) * (-1) ** (w - 1)
            if middle > 0:
                r += 1
            else:
                s += 1
        else:
            r += (length - 1) // 2
            s += (length - 1) // 2
    return Signature(r, s)


def in_moment_image(d: SignedDiagram, p: int, q: int) -> bool:
    """Does the orbit of a symplectic diagram for Sp(2n) meet the image of
    the symplectic-side moment map of the pair (O(p,q), Sp(2n))?

    X = m2(x) = W x^t I_{p,q} x exactly when the symmetric matrix -W X
    equals x^t I_{p,q} x, which by Sylvester is possible precisely when its
    inertia fits under (p, q) componentwise.  Requires p + q <= 2n.
    """
    if p + q > d.size:
        raise ValueError(f"need p + q <= {d.size}")
    r, s = deletion_inertia(d)
    return r <= p and s <= q


@dataclass(frozen=True)
class ThetaChain:
    """Alternating chain from the full diagram down to its last column."""

    entries: tuple[tuple[SignedDiagram, GroupLabel], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def groups(self) -> list[GroupLabel]:
        return [g for _, g in self.entries]

    def signatures(self) -> list[Signature]:
        return [signature(d) for d, _ in self.entries]


def chain(d: SignedDiagram) -> ThetaChain:
    """The sequence d, d-1, ..., d-(width-1) with group labels."""
    require_valid(d)
    entries = []
    current = canonicalize(d)
    for _ in range(d.width):
        entries.append((current, group_of(current)))
        current = delete_column_signed(current)
    return ThetaChain(tuple(entries))
