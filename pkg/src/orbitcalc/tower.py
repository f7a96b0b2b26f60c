"""Admissible diagrams and the arithmetic ledger of their induction towers.

A signed diagram is admissible (class U here) when its transpose is very
even or very odd, satisfies the interlacing conditions of its kind, and
avoids the excluded tail: last two columns of equal length whose rows all
carry the same two-box pattern.  For admissible diagrams the whole
alternating tower of column deletions satisfies a battery of signature
inequalities (the five-clause column lemma), the range conditions each
lift step needs, and a uniqueness property of the orbit that certifies
the nonvanishing step; a certificate aggregates all of them together with
the infinitesimal character and the associated variety.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram_core import (
    GroupLabel,
    Kind,
    Partition,
    SignedDiagram,
    Signature,
    group_of,
    require_valid,
    signature,
    to_json_dict,
    validate_partition_kind,
)
from .enumeration import diagrams_for_shape
from .infchar import infchar_segments
from .orbit_induction import induce_real_tau
from .theta_orbits import chain, in_moment_image
from .vector_order import HalfIntVector, vector_to_json


def pre_rigid(d: Partition) -> bool:
    """Transpose multiplicity-free: every column height occurs once."""
    return d.transpose().multiplicity_free


def special(d: Partition, kind: Kind) -> bool:
    """Type C/D speciality: odd column heights occur with even multiplicity."""
    if not validate_partition_kind(d, kind):
        raise ValueError(f"{d} is not a valid {kind.value} shape")
    t = d.transpose()
    return all(
        t.multiplicity(h) % 2 == 0 for h in set(t.rows) if h % 2 == 1
    )


@dataclass(frozen=True)
class ClassUReport:
    member: bool
    very_even_or_odd: bool
    interlacing_ok: bool
    excluded_pattern: bool
    reasons: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "member": self.member,
            "very_even_or_odd": self.very_even_or_odd,
            "interlacing_ok": self.interlacing_ok,
            "excluded_pattern": self.excluded_pattern,
            "reasons": list(self.reasons),
        }


def _interlacing_ok(heights: tuple[int, ...], kind: Kind) -> tuple[bool, list[str]]:
    """Chained inequalities on the column heights m_1 >= m_2 >= ...: strict
    descent at every even position for symplectic diagrams, at every odd
    position (including the first) for orthogonal ones.  Together with one
    height parity this is exactly what makes every deletion step of a tower
    gain at least two boxes over the previous gain when it needs to.
    Comparisons whose left index runs past the diagram are vacuous; heights
    past the end count as zero."""

    def m(i: int) -> int:
        return heights[i - 1] if i <= len(heights) else 0

    width = len(heights)
    strict_parity = 0 if kind is Kind.SYMPLECTIC else 1  # of the left index
    reasons = []
    for pos in range(1, width + 1):
        if pos % 2 == strict_parity:
            if not m(pos) > m(pos + 1):
                reasons.append(f"need m{pos} > m{pos + 1}: {m(pos)} vs {m(pos + 1)}")
        elif not m(pos) >= m(pos + 1):
            reasons.append(f"need m{pos} >= m{pos + 1}: {m(pos)} vs {m(pos + 1)}")
    return (not reasons, reasons)


def _excluded_pattern(d: SignedDiagram) -> bool:
    """Last two columns of equal length whose rows all show the same two-box
    pattern (-+ throughout or +- throughout).

    The uniform strip is excluded at every height including one: a tower
    step consisting of evenly paired, uniformly signed columns is exactly
    what makes a lift's target group parameter collide with the middle rank,
    and the single-row strip produces the same collision two steps up.
    Excluding it keeps admissibility hereditary under column deletion and
    makes the collision provably impossible.
    """
    shape = d.shape()
    width = shape.width
    if width < 2:
        return False
    heights = shape.transpose().rows
    if heights[width - 1] != heights[width - 2]:
        return False
    tail_leads = {lead for length, lead in d.rows if length == width}
    return len(tail_leads) == 1


def class_u(d: SignedDiagram) -> ClassUReport:
    require_valid(d)
    t = d.shape().transpose()
    parity_ok = t.very_even or t.very_odd
    interlace_ok, reasons = _interlacing_ok(t.rows, d.kind)
    excluded = _excluded_pattern(d)
    if not parity_ok:
        reasons = reasons + ["column heights must be all even or all odd"]
    if excluded:
        reasons = reasons + ["uniform sign pattern on the equal last two columns"]
    return ClassUReport(
        member=parity_ok and interlace_ok and not excluded,
        very_even_or_odd=parity_ok,
        interlacing_ok=interlace_ok,
        excluded_pattern=excluded,
        reasons=tuple(reasons),
    )


# ---------------------------------------------------------------------------
# tower checks; step k carries the diagram with k columns


def _tower(d: SignedDiagram) -> list[SignedDiagram]:
    """[D(1), ..., D(d1)]: D(k) keeps the last k columns of d."""
    th = chain(d)
    return [entry for entry, _ in reversed(th.entries)]


def check_lemma_pm(d: SignedDiagram) -> list[dict]:
    """Five signature clauses at every interior step of the tower."""
    report = class_u(d)
    if not report.member:
        raise ValueError("column lemma applies to admissible diagrams only")
    steps = _tower(d)
    d1 = len(steps)
    sig = [Signature(0, 0)] + [signature(s) for s in steps]
    size = [0] + [s.size for s in steps]
    out = []
    for k in range(1, d1):
        clauses = {
            "plus_gain": sig[k + 1].plus - sig[k].plus >= sig[k].minus - sig[k - 1].minus,
            "minus_gain": sig[k + 1].minus - sig[k].minus >= sig[k].plus - sig[k - 1].plus,
            "plus_covers": sig[k + 1].plus >= sig[k].minus,
            "minus_covers": sig[k + 1].minus >= sig[k].plus,
        }
        if steps[k - 1].kind is Kind.SYMPLECTIC:
            clauses["convexity"] = size[k + 1] + size[k - 1] >= 2 * size[k] + 2
        else:
            clauses["convexity"] = size[k + 1] + size[k - 1] >= 2 * size[k]
        if k + 2 <= d1:
            clauses["size_parity"] = (size[k + 2] - size[k]) % 2 == 0
        out.append({"k": k, "clauses": clauses, "ok": all(clauses.values())})
    return out


def check_range(d: SignedDiagram) -> list[dict]:
    """Per-step range conditions of the two lift theorems, plus the base-step
    inequalities at k = 1."""
    report = class_u(d)
    if not report.member:
        raise ValueError("range check applies to admissible diagrams only")
    steps = _tower(d)
    d1 = len(steps)
    sig = [Signature(0, 0)] + [signature(s) for s in steps]
    size = [0] + [s.size for s in steps]
    out = []
    if d1 >= 2:
        if steps[0].kind is Kind.SYMPLECTIC:
            checks = {
                "balanced": sig[1].plus == sig[1].minus,
                "plus_doubles": sig[2].plus >= 2 * sig[1].minus,
                "minus_doubles": sig[2].minus >= 2 * sig[1].plus,
                "size_margin": size[2] >= 4 * sig[1].minus + 2,
            }
        else:
            checks = {
                "balanced": sig[2].plus == sig[2].minus,
                "size_covers": sig[2].plus >= sig[1].plus + sig[1].minus,
            }
        out.append({"k": 1, "step": "base", "checks": checks, "ok": all(checks.values())})
    for k in range(2, d1):
        if steps[k - 1].kind is Kind.SYMPLECTIC:
            p, q = sig[k - 1]
            two_n = size[k]
            pp, qq = sig[k + 1]
            n = two_n // 2
            checks = {
                "gap": pp + qq - two_n >= two_n - (p + q) + 2,
                "gap_positive": two_n - (p + q) + 2 >= 1,
                "min_ge_n": min(pp, qq) >= n,
                "min_ne_n": min(pp, qq) != n,
                "parity": (p + q - pp - qq) % 2 == 0,
            }
            step = "mp_middle"
        else:
            two_n = size[k - 1]
            p, q = sig[k]
            two_n2 = size[k + 1]
            n = two_n // 2
            checks = {
                "gap": two_n2 - (p + q) >= (p + q) - two_n - 2,
                "min_ge_n": min(p, q) >= n,
                "min_ne_n": min(p, q) != n,
            }
            step = "o_middle"
        out.append({"k": k, "step": step, "checks": checks, "ok": all(checks.values())})
    return out


def check_non3(d: SignedDiagram, k: int) -> dict:
    """Uniqueness record for the orthogonal-metaplectic-orthogonal triple at
    steps (k-1, k, k+1) of the tower of d.

    Writes (p0, q0) for the step-(k-1) signature, 2n1 for the step-k size,
    (p, q) for the step-(k+1) signature and (m1, m2) for the leading column
    heights of steps k+1 and k.  Candidate orbits come from inducing the
    even-row flip of a step-k companion whose pairing inertia is exactly
    (q0, p0) -- the flip is available because the wave-front bookkeeping is
    closed under duals, which swap the inertia.  Candidate j (the count of
    minus-leading new length-2 rows) then has pairing inertia
    (p0 + m1 - 1 - j, q0 + m2 + j); these sum to p + q - 1, so only
    j* = p0 + m1 - 1 - p with inertia exactly (p, q-1) and its neighbor
    j* + 1 with (p-1, q) can meet the moment image for (p, q), and each is
    the unique hit in its parity class (its other moment slot differs from
    (p, q) in the parity of the first entry).  The record certifies that
    the window is nonempty in range, that the moment-image hits are exactly
    its in-range part, and the per-class uniqueness.
    """
    report = class_u(d)
    if not report.member:
        raise ValueError("uniqueness check applies to admissible diagrams only")
    steps = _tower(d)
    d1 = len(steps)
    if not 2 <= k <= d1 - 1:
        raise ValueError(f"step {k} has no neighbors on both sides")
    if steps[k - 1].kind is not Kind.SYMPLECTIC:
        raise ValueError(f"step {k} is not metaplectic")
    p0, q0 = signature(steps[k - 2])
    n1 = steps[k - 1].size // 2
    p, q = signature(steps[k])
    m1 = steps[k].shape().transpose().rows[0]
    m2 = len(steps[k - 1].rows)
    n2 = p + q - n1 - 1

    # companion search: valid sign assignments on the step-k shape whose
    # pairing inertia is exactly (q0, p0); the search is the constructive
    # substitute for the wave-front existence argument.
    from .theta_orbits import deletion_inertia

    companions = [
        cand
        for cand in diagrams_for_shape(steps[k - 1].shape(), Kind.SYMPLECTIC)
        if deletion_inertia(cand) == Signature(q0, p0)
    ]
    if not companions:
        raise ValueError("no companion with the required pairing inertia")
    d0 = companions[0]

    record: dict = {
        "k": k,
        "p0q0": (p0, q0),
        "n1": n1,
        "pq": (p, q),
        "m1": m1,
        "m2": m2,
        "n2": n2,
        "companions": len(companions),
    }
    checks: dict[str, bool] = {}
    checks["width_margin"] = n2 - n1 == m1 - 1 and m1 - 1 >= m2
    candidate_count = m1 - m2
    if not checks["width_margin"]:
        record["checks"] = checks
        record["ok"] = False
        return record

    induced = induce_real_tau(d0, n2)
    assert induced.count == candidate_count
    sigs = [deletion_inertia(s) for s in induced.diagrams]
    checks["signature_formula"] = all(
        sigs[j] == Signature(p0 + m1 - 1 - j, q0 + m2 + j) for j in range(candidate_count)
    )
    checks["signature_sum"] = all(r + s == p + q - 1 for r, s in sigs)
    hits = [
        j
        for j in range(candidate_count)
        if in_moment_image(induced.diagrams[j], p, q)
    ]
    j_star = p0 + m1 - 1 - p  # the (p, q-1) slot; j* + 1 carries (p-1, q)
    window = [j for j in (j_star, j_star + 1) if 0 <= j <= candidate_count - 1]
    checks["window"] = hits == window
    checks["exists"] = bool(hits)
    checks["unique_in_class"] = all(
        sum(1 for j2 in hits if (j2 - j) % 2 == 0) == 1 for j in hits
    )
    record["j_star"] = j_star
    if 0 <= j_star <= candidate_count - 1:
        record["j_star_signature"] = tuple(sigs[j_star])
        checks["j_star_signature"] = sigs[j_star] == Signature(p, q - 1)
        checks["j_star_in_image"] = j_star in hits
    record["checks"] = checks
    record["ok"] = all(checks.values())
    return record


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class TowerStep:
    k: int
    diagram: SignedDiagram
    group: GroupLabel
    sig: Signature
    lemma_pm: dict | None
    range_checks: dict | None
    non3: dict | None

    @property
    def ok(self) -> bool:
        parts = [self.lemma_pm, self.range_checks, self.non3]
        return all(p is None or p["ok"] for p in parts)


@dataclass(frozen=True)
class TowerCertificate:
    diagram: SignedDiagram
    steps: tuple[TowerStep, ...]
    infchar: HalfIntVector
    associated_variety: Partition
    class_report: ClassUReport
    valid: bool
    annotations: tuple[str, ...] = (
        "character twists, the even-row sign flip, and duals act on the "
        "wave-front bookkeeping only; no further structure is certified",
    )

    def groups(self) -> list[GroupLabel]:
        return [s.group for s in self.steps]

    def signatures(self) -> list[Signature]:
        return [s.sig for s in self.steps]

    def to_json_dict(self) -> dict:
        return {
            "valid": self.valid,
            "diagram": to_json_dict(self.diagram),
            "group": str(group_of(self.diagram)),
            "class_u": self.class_report.to_json_dict(),
            "groups": [str(g) for g in self.groups()],
            "signatures": [list(s) for s in self.signatures()],
            "steps": [
                {
                    "k": s.k,
                    "group": str(s.group),
                    "signature": list(s.sig),
                    "lemma_pm": s.lemma_pm,
                    "range": s.range_checks,
                    "non3": s.non3,
                }
                for s in self.steps
            ],
            "infchar": vector_to_json(self.infchar),
            "associated_variety": self.associated_variety.to_json(),
            "annotations": list(self.annotations),
        }


def certificate(d: SignedDiagram) -> TowerCertificate:
    """Aggregate the tower, every feasibility check, the infinitesimal
    character, and the associated variety; raises for non-admissible input."""
    report = class_u(d)
    if not report.member:
        raise ValueError(
            "not an admissible diagram: " + "; ".join(report.reasons)
        )
    steps = _tower(d)
    d1 = len(steps)
    pm = {rec["k"]: rec for rec in check_lemma_pm(d)}
    rng = {rec["k"]: rec for rec in check_range(d)}
    tower_steps = []
    for k in range(1, d1 + 1):
        diag = steps[k - 1]
        non3 = None
        if 2 <= k <= d1 - 1 and diag.kind is Kind.SYMPLECTIC:
            non3 = check_non3(d, k)
        tower_steps.append(
            TowerStep(
                k=k,
                diagram=diag,
                group=group_of(diag),
                sig=signature(diag),
                lemma_pm=pm.get(k),
                range_checks=rng.get(k),
                non3=non3,
            )
        )
    valid = all(s.ok for s in tower_steps)
    return TowerCertificate(
        diagram=d,
        steps=tuple(tower_steps),
        infchar=infchar_segments(d.shape(), d.kind),
        associated_variety=d.shape(),
        class_report=report,
        valid=valid,
    )
