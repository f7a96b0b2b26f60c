"""Partitions and signed Young diagrams.

A partition (weakly decreasing positive row lengths) labels a complex
nilpotent orbit of Sp(2n, C) or O(n, C).  A signed Young diagram adds a
+/- label to every box, alternating across each row, and labels a real
nilpotent orbit of Mp(2n, R) or O(p, q).  Because signs alternate, a row
is stored as (length, leading sign) and the full box grid is derived on
demand.

Sign conventions for the rows whose lengths are forced by the group type
(odd lengths for symplectic diagrams, even lengths for orthogonal ones)
are fixed: within each such length class the leading signs read
-,+,-,+,... (symplectic) resp. +,-,+,-,... (orthogonal) from the highest
row down.  Rows of the opposite parity are free, and two diagrams are
equivalent when they differ only by reordering rows of equal length.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class Kind(enum.Enum):
    """Which bilinear form the diagram's group preserves."""

    SYMPLECTIC = "symplectic"
    ORTHOGONAL = "orthogonal"

    @property
    def opposite(self) -> "Kind":
        return Kind.ORTHOGONAL if self is Kind.SYMPLECTIC else Kind.SYMPLECTIC

    def constrained(self, length: int) -> bool:
        """Is a row of this length sign-constrained for this kind?"""
        if self is Kind.SYMPLECTIC:
            return length % 2 == 1
        return length % 2 == 0


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def flipped(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    @property
    def char(self) -> str:
        return self.value

    def __repr__(self) -> str:  # keeps test output compact
        return f"Sign({self.value!r})"


class Signature(NamedTuple):
    plus: int
    minus: int


class SignedRow(NamedTuple):
    length: int
    leading: Sign


@dataclass(frozen=True)
class Partition:
    """Young diagram: weakly decreasing positive row lengths."""

    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(r <= 0 for r in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def width(self) -> int:
        """Length of the first row (number of columns)."""
        return self.rows[0] if self.rows else 0

    @property
    def height(self) -> int:
        return len(self.rows)

    def transpose(self) -> "Partition":
        """Column heights; entry k counts the rows of length >= k."""
        return Partition(
            tuple(sum(1 for r in self.rows if r >= k) for k in range(1, self.width + 1))
        )

    def delete_columns(self, i: int) -> "Partition":
        """Remove the leftmost i columns (rows shrink by i, empties drop)."""
        if i < 0:
            raise ValueError("column count must be nonnegative")
        return Partition(tuple(r - i for r in self.rows if r > i))

    def multiplicity(self, length: int) -> int:
        return sum(1 for r in self.rows if r == length)

    @property
    def very_even(self) -> bool:
        return all(r % 2 == 0 for r in self.rows)

    @property
    def very_odd(self) -> bool:
        return all(r % 2 == 1 for r in self.rows)

    @property
    def multiplicity_free(self) -> bool:
        return len(set(self.rows)) == len(self.rows)

    def to_json(self) -> list[int]:
        return list(self.rows)

    def __str__(self) -> str:
        return "(" + ",".join(str(r) for r in self.rows) + ")"


def validate_partition_kind(d: Partition, kind: Kind) -> bool:
    """Multiplicity parity rule: symplectic diagrams need odd rows in even
    multiplicity, orthogonal diagrams need even rows in even multiplicity."""
    bad_parity = 1 if kind is Kind.SYMPLECTIC else 0
    counts: dict[int, int] = {}
    for r in d.rows:
        counts[r] = counts.get(r, 0) + 1
    return all(m % 2 == 0 for length, m in counts.items() if length % 2 == bad_parity)


def convention_signs(kind: Kind, count: int) -> list[Sign]:
    """Leading signs of a constrained length class, top row first."""
    if kind is Kind.SYMPLECTIC:
        pattern = (Sign.MINUS, Sign.PLUS)
    else:
        pattern = (Sign.PLUS, Sign.MINUS)
    return [pattern[i % 2] for i in range(count)]


@dataclass(frozen=True)
class SignedDiagram:
    """Signed Young diagram; structural shape is validated on construction,
    the sign conventions are checked separately by :func:`validate_signed`."""

    kind: Kind
    rows: tuple[SignedRow, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(SignedRow(int(l), s) for l, s in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(r.length <= 0 for r in rows):
            raise ValueError("row lengths must be positive")
        if any(rows[i].length < rows[i + 1].length for i in range(len(rows) - 1)):
            raise ValueError("row lengths must be weakly decreasing")

    @property
    def size(self) -> int:
        return sum(r.length for r in self.rows)

    @property
    def width(self) -> int:
        return self.rows[0].length if self.rows else 0

    def shape(self) -> Partition:
        return Partition(tuple(r.length for r in self.rows))

    def box_sign(self, row: int, col: int) -> Sign:
        """Sign of box (row, col), both 1-based; signs alternate across rows."""
        lead = self.rows[row - 1].leading
        return lead if col % 2 == 1 else lead.flipped

    def length_classes(self) -> list[tuple[int, list[Sign]]]:
        """(length, leading signs top-down) per length class, longest first."""
        classes: list[tuple[int, list[Sign]]] = []
        for row in self.rows:
            if classes and classes[-1][0] == row.length:
                classes[-1][1].append(row.leading)
            else:
                classes.append((row.length, [row.leading]))
        return classes


def signature(d: SignedDiagram) -> Signature:
    """Counts of + and - boxes under across-row alternation."""
    plus = minus = 0
    for length, lead in d.rows:
        lead_count = (length + 1) // 2
        other = length // 2
        if lead is Sign.PLUS:
            plus += lead_count
            minus += other
        else:
            minus += lead_count
            plus += other
    return Signature(plus, minus)


def validate_signed(d: SignedDiagram) -> tuple[bool, list[str]]:
    """Check the sign conventions; violations are reported, never raised."""
    violations: list[str] = []
    for length, leads in d.length_classes():
        if not d.kind.constrained(length):
            continue
        if len(leads) % 2 != 0:
            violations.append(
                f"rows of length {length} occur {len(leads)} times; "
                f"even multiplicity required for {d.kind.value} diagrams"
            )
        expected = convention_signs(d.kind, len(leads))
        for i, (got, want) in enumerate(zip(leads, expected)):
            if got is not want:
                violations.append(
                    f"row {i + 1} of the length-{length} class leads with "
                    f"'{got.char}', convention requires '{want.char}'"
                )
    if d.kind is Kind.SYMPLECTIC and not violations:
        sig = signature(d)
        if sig.plus != sig.minus:
            violations.append(f"symplectic signature must be balanced, got {sig}")
    return (not violations, violations)


def is_valid(d: SignedDiagram) -> bool:
    return validate_signed(d)[0]


def require_valid(d: SignedDiagram) -> None:
    ok, violations = validate_signed(d)
    if not ok:
        raise ValueError("invalid signed diagram: " + "; ".join(violations))


def canonicalize(d: SignedDiagram) -> SignedDiagram:
    """Canonical representative of the equivalence class: constrained classes
    carry the convention pattern, free classes list Plus-leading rows first."""
    require_valid(d)
    rows: list[SignedRow] = []
    for length, leads in d.length_classes():
        if d.kind.constrained(length):
            ordered = convention_signs(d.kind, len(leads))
        else:
            ordered = sorted(leads, key=lambda s: 0 if s is Sign.PLUS else 1)
        rows.extend(SignedRow(length, s) for s in ordered)
    return SignedDiagram(d.kind, tuple(rows))


def equivalent(d1: SignedDiagram, d2: SignedDiagram) -> bool:
    if d1.kind is not d2.kind:
        return False
    if d1.shape() != d2.shape():
        return False
    return canonicalize(d1).rows == canonicalize(d2).rows


def from_row_spec(kind: Kind, spec: Iterable[tuple[int, Sign | None]]) -> SignedDiagram:
    """Assemble a canonical diagram from (length, sign) pairs.  Constrained
    rows take sign None and receive the convention pattern of their class."""
    by_length: dict[int, list[Sign | None]] = {}
    for length, sign in spec:
        by_length.setdefault(length, []).append(sign)
    rows: list[SignedRow] = []
    for length in sorted(by_length, reverse=True):
        signs = by_length[length]
        if kind.constrained(length):
            if any(s is not None for s in signs):
                raise ValueError(f"length-{length} rows are sign-constrained for {kind.value}")
            ordered = convention_signs(kind, len(signs))
        else:
            if any(s is None for s in signs):
                raise ValueError(f"length-{length} rows need explicit signs for {kind.value}")
            ordered = sorted(
                (s for s in signs if s is not None),
                key=lambda s: 0 if s is Sign.PLUS else 1,
            )
        rows.extend(SignedRow(length, s) for s in ordered)
    result = SignedDiagram(kind, tuple(rows))
    require_valid(result)
    return result


def delete_column_signed(d: SignedDiagram) -> SignedDiagram:
    """Delete the leftmost column.  Every surviving row keeps its boxes, so
    its leading sign flips; the result lives in the opposite classification."""
    require_valid(d)
    rows = tuple(
        SignedRow(length - 1, lead.flipped) for length, lead in d.rows if length > 1
    )
    result = canonicalize(SignedDiagram(d.kind.opposite, rows))
    return result


def tau(d: SignedDiagram) -> SignedDiagram:
    """Sign flip on even-length rows, induced by conjugation by diag(I, -I)."""
    if d.kind is not Kind.SYMPLECTIC:
        raise ValueError("tau defined only on symplectic diagrams")
    require_valid(d)
    rows = tuple(
        SignedRow(length, lead.flipped if length % 2 == 0 else lead)
        for length, lead in d.rows
    )
    return canonicalize(SignedDiagram(d.kind, rows))


def negate(d: SignedDiagram) -> SignedDiagram:
    """Label of the orbit of -x.  A row of length l transforms its sign by
    (-1)**(l-1): even rows flip, odd rows are untouched.  For symplectic
    diagrams this is tau; for orthogonal ones it fixes every class (the
    flipped constrained classes stay balanced and fold back to convention
    order)."""
    require_valid(d)
    spec: list[tuple[int, Sign | None]] = []
    for length, lead in d.rows:
        if d.kind.constrained(length):
            spec.append((length, None))
        else:
            spec.append((length, lead.flipped if length % 2 == 0 else lead))
    return from_row_spec(d.kind, spec)


@dataclass(frozen=True)
class GroupLabel:
    """Real group attached to a diagram: Mp(2n) or O(p, q)."""

    family: str  # "Mp" or "O"
    p: int
    q: int = 0

    def __str__(self) -> str:
        if self.family == "Mp":
            return f"Mp({self.p})"
        return f"O({self.p},{self.q})"

    @property
    def rank_params(self) -> tuple[int, int]:
        return (self.p, self.q)


def group_of(d: SignedDiagram) -> GroupLabel:
    require_valid(d)
    sig = signature(d)
    if d.kind is Kind.SYMPLECTIC:
        return GroupLabel("Mp", sig.plus + sig.minus)
    return GroupLabel("O", sig.plus, sig.minus)


# ---------------------------------------------------------------------------
# serialization


def render_ascii(d: SignedDiagram) -> str:
    """One row per line, '+'/'-' per box, mirroring printed box pictures."""
    lines = []
    for i, row in enumerate(d.rows, start=1):
        lines.append("".join(d.box_sign(i, j).char for j in range(1, row.length + 1)))
    return "\n".join(lines)


def parse_ascii(text: str, kind: Kind) -> SignedDiagram:
    """Inverse of render_ascii.  Rejects malformed rows with positions."""
    rows: list[SignedRow] = []
    lines = text.splitlines()
    for i, line in enumerate(lines, start=1):
        if not line:
            raise ValueError(f"row {i}: empty line")
        lead: Sign | None = None
        for j, ch in enumerate(line, start=1):
            if ch not in "+-":
                raise ValueError(f"row {i}, column {j}: expected '+' or '-', got {ch!r}")
            sign = Sign.PLUS if ch == "+" else Sign.MINUS
            if j == 1:
                lead = sign
            else:
                expected = lead if j % 2 == 1 else lead.flipped  # type: ignore[union-attr]
                if sign is not expected:
                    raise ValueError(
                        f"row {i}, column {j}: signs must alternate across the row"
                    )
        assert lead is not None
        rows.append(SignedRow(len(line), lead))
    try:
        d = SignedDiagram(kind, tuple(rows))
    except ValueError as exc:
        raise ValueError(f"bad shape: {exc}") from None
    require_valid(d)
    return d


def to_json_dict(d: SignedDiagram) -> dict:
    return {
        "kind": d.kind.value,
        "rows": [{"len": r.length, "sign": r.leading.char} for r in d.rows],
    }


def from_json_dict(data: dict, validated: bool = True) -> SignedDiagram:
    """Parse the JSON schema; with validated=True (the default) sign
    convention violations are rejected rather than silently fixed."""
    if not isinstance(data, dict) or "kind" not in data or "rows" not in data:
        raise ValueError("diagram JSON needs 'kind' and 'rows' fields")
    try:
        kind = Kind(data["kind"])
    except ValueError:
        raise ValueError(f"unknown kind {data['kind']!r}") from None
    rows: list[SignedRow] = []
    for i, entry in enumerate(data["rows"], start=1):
        if not isinstance(entry, dict) or "len" not in entry or "sign" not in entry:
            raise ValueError(f"row {i}: needs 'len' and 'sign' fields")
        if entry["sign"] not in ("+", "-"):
            raise ValueError(f"row {i}: sign must be '+' or '-'")
        rows.append(SignedRow(int(entry["len"]), Sign(entry["sign"])))
    try:
        d = SignedDiagram(kind, tuple(rows))
    except ValueError as exc:
        raise ValueError(f"bad shape: {exc}") from None
    if validated:
        require_valid(d)
    return d


def dumps(d: SignedDiagram) -> str:
    return json.dumps(to_json_dict(d), indent=2, sort_keys=True)


def loads(text: str) -> SignedDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    return from_json_dict(data)
