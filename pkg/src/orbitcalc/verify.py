"""Exhaustive verification suites, runnable from the command line.

Each suite sweeps an enumeration space up to a size bound and checks one
family of identities; it reports the number of cases checked and every
counterexample verbatim.  Suites are deterministic given (name, bound);
the one randomized suite draws from a fixed seed.  ORBITCALC_THREADS
caps the worker count used to shard the heavier sweeps.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import moment_oracle as mo
from .diagram_core import (
    Kind,
    Partition,
    Sign,
    SignedDiagram,
    delete_column_signed,
    equivalent,
    is_valid,
    negate,
    signature,
    validate_partition_kind,
)
from .enumeration import partitions, signed_diagrams
from .infchar import check_bound, infchar_domino, infchar_segments, segment, SegmentKind
from .orbit_induction import induce_real, plus_rows, wf_ialpha_parts
from .tower import check_lemma_pm, check_non3, check_range, class_u
from .vector_order import bar_sort, scale, seq_preceq


@dataclass
class SuiteReport:
    name: str
    bound: int
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "suite": self.name,
            "bound": self.bound,
            "checked": self.checked,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }


def _thread_cap() -> int:
    raw = os.environ.get("ORBITCALC_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _all_signed(max_size: int):
    for size in range(0, max_size + 1):
        for kind in (Kind.SYMPLECTIC, Kind.ORTHOGONAL):
            yield from signed_diagrams(kind, size=size)


def _admissible(max_size: int):
    for d in _all_signed(max_size):
        if d.rows and class_u(d).member:
            yield d


# ---------------------------------------------------------------------------


def suite_reasonss(bound: int) -> SuiteReport:
    """One-column deletion lands in the opposite classification with the
    stated signature bounds, exhaustively up to the size bound."""
    rep = SuiteReport("reasonss", bound)
    for d in _all_signed(bound):
        if not d.rows:
            continue
        rep.checked += 1
        e = delete_column_signed(d)
        if not is_valid(e) or e.kind is not d.kind.opposite:
            rep.counterexamples.append(f"{d} deletes to an invalid diagram")
            continue
        ds, es = signature(d), signature(e)
        if d.kind is Kind.ORTHOGONAL:
            ok = es.plus == es.minus and es.plus <= min(ds.plus, ds.minus)
        else:
            ok = max(es.plus, es.minus) <= ds.plus
        if not ok:
            rep.counterexamples.append(
                f"deletion signature {tuple(es)} breaks the bound for {tuple(ds)}"
            )
    return rep


def suite_lemma_pm(bound: int) -> SuiteReport:
    rep = SuiteReport("lemma-pm", bound)
    for d in _admissible(bound):
        rep.checked += 1
        for rec in check_lemma_pm(d):
            if not rec["ok"]:
                rep.counterexamples.append(f"{d}: step {rec['k']}: {rec['clauses']}")
    return rep


def suite_reversal(bound: int) -> SuiteReport:
    """Order reversal between closure order and sorted characters, over all
    same-size valid pairs with transposes of one parity."""
    from .vector_order import OrderResult, dominance_leq

    rep = SuiteReport("reversal", bound)
    for size in range(1, bound + 1):
        for kind in (Kind.SYMPLECTIC, Kind.ORTHOGONAL):
            shapes = [
                Partition(rows)
                for rows in partitions(size)
                if validate_partition_kind(Partition(rows), kind)
            ]
            groups = {
                "even": [s for s in shapes if s.transpose().very_even],
                "odd": [s for s in shapes if s.transpose().very_odd],
            }
            for family in groups.values():
                chars = {
                    s: bar_sort(infchar_segments(s, kind)) for s in family
                }
                for d1 in family:
                    for d2 in family:
                        rel = dominance_leq(d1, d2)
                        if rel not in (OrderResult.EQUAL, OrderResult.LESS_EQ):
                            continue
                        rep.checked += 1
                        if not seq_preceq(chars[d2], chars[d1]):
                            rep.counterexamples.append(
                                f"{kind.value}: {d1} below {d2} but characters do not reverse"
                            )
    return rep


def suite_bounds(bound: int) -> SuiteReport:
    """Weak and strict character bounds over all admissible diagrams; the
    orthogonal size-2 case has a vanishing denominator and is skipped."""
    rep = SuiteReport("bounds", bound)
    seen: set[tuple[Kind, tuple[int, ...]]] = set()
    for d in _admissible(bound):
        key = (d.kind, d.shape().rows)
        if key in seen:  # the bound only sees the shape
            continue
        seen.add(key)
        if d.kind is Kind.ORTHOGONAL and d.size == 2:
            rep.notes.append(f"skipped {d.shape()} orthogonal: bound denominator is zero")
            continue
        rep.checked += 1
        res = check_bound(d.shape(), d.kind)
        if not res.holds_weak:
            rep.counterexamples.append(f"{d.kind.value} {d.shape()}: weak bound fails")
        if not res.holds_strict:
            rep.counterexamples.append(f"{d.kind.value} {d.shape()}: strict bound fails")
    return rep


def suite_domino_oracle(bound: int) -> SuiteReport:
    """The domino labels agree with the segment concatenation as multisets
    for every partition with very even or very odd transpose, both kinds."""
    rep = SuiteReport("domino-oracle", bound)
    for size in range(1, bound + 1):
        for rows in partitions(size):
            d = Partition(rows)
            t = d.transpose()
            if not (t.very_even or t.very_odd):
                continue
            for kind in (Kind.SYMPLECTIC, Kind.ORTHOGONAL):
                if kind is Kind.SYMPLECTIC and size % 2 != 0:
                    continue  # symplectic labels exist for even sizes only
                rep.checked += 1
                got = infchar_domino(d, kind)
                want = bar_sort(infchar_segments(d, kind))
                if got != want:
                    rep.counterexamples.append(
                        f"{kind.value} {d}: domino {got} vs segments {want}"
                    )
    return rep


def suite_twocom(bound: int) -> SuiteReport:
    """Wave-front coverage: for every n <= bound and admissible parity class,
    the union over the class covers all n + 1 labels and the per-pair sets
    within one class are pairwise disjoint."""
    rep = SuiteReport("twocom", bound)
    for n in range(0, bound + 1):
        for alpha in ((0, 2) if n % 2 == 1 else (1, 3)):
            rep.checked += 1
            parts = wf_ialpha_parts(n, alpha)
            union: set[int] = set()
            overlap = False
            for members in parts.values():
                ids = {plus_rows(m) for m in members}
                overlap = overlap or bool(union & ids)
                union |= ids
            if union != set(range(n + 1)):
                rep.counterexamples.append(
                    f"n={n} alpha={alpha}: union covers {sorted(union)}"
                )
            if overlap:
                rep.counterexamples.append(f"n={n} alpha={alpha}: classes overlap")
    return rep


def _induce_oracle_case(args: tuple[int, int, tuple]) -> list[str]:
    """One (S, n) cell of the witness sweep; returns counterexample texts."""
    m2, n, rows = args
    s = SignedDiagram(Kind.SYMPLECTIC, rows)
    bad = []
    induced = induce_real(s, n)
    for j, expected in enumerate(induced.diagrams):
        x = mo.build_witness(s, n, j)
        got = mo.classify_signed(x, mo.FormSpec.symplectic(2 * n))
        if not equivalent(got, expected):
            bad.append(f"witness (S={s.rows}, n={n}, j={j}) classifies to {got.rows}")
        neg = mo.classify_signed(-x, mo.FormSpec.symplectic(2 * n))
        if not equivalent(neg, negate(got)):
            bad.append(f"negation rule fails on (S={s.rows}, n={n}, j={j})")
        block = mo.witness_block_part(x, s.size // 2)
        if s.rows and not equivalent(
            mo.classify_signed(block, mo.FormSpec.symplectic(s.size)), s
        ):
            bad.append(f"witness block part leaves the source orbit (S={s.rows}, n={n})")
    return bad


def suite_induce_oracle(bound: int) -> SuiteReport:
    """Witness matrices classify to the induced labels, their negatives to
    the negated labels, and the sl2 anchors hold; grid capped by 2n <= bound."""
    rep = SuiteReport("induce-oracle", bound)
    nmax = bound // 2

    # sl2 anchor: the raising element is a plus row, its negative a minus row
    x = mo.RationalMatrix.from_rows([[0, 1], [0, 0]])
    form = mo.FormSpec.symplectic(2)
    plus = mo.classify_signed(x, form)
    minus = mo.classify_signed(-x, form)
    rep.checked += 2
    if plus.rows != ((2, Sign.PLUS),):
        rep.counterexamples.append("sl2 anchor: raising element is not a plus row")
    if minus.rows != ((2, Sign.MINUS),):
        rep.counterexamples.append("sl2 anchor: lowered element is not a minus row")

    cases = []
    for two_m in range(0, 2 * nmax + 1, 2):
        for s in signed_diagrams(Kind.SYMPLECTIC, size=two_m):
            for n in range(two_m // 2, nmax + 1):
                if n - two_m // 2 >= len(s.rows):
                    cases.append((two_m, n, s.rows))
    workers = _thread_cap()
    if workers > 1 and len(cases) > 16:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_induce_oracle_case, cases, chunksize=8))
    else:
        results = [_induce_oracle_case(c) for c in cases]
    for bad in results:
        rep.checked += 1
        rep.counterexamples.extend(bad)
    return rep


def _conjugation_pool() -> list[tuple[mo.RationalMatrix, mo.FormSpec]]:
    pool: list[tuple[mo.RationalMatrix, mo.FormSpec]] = []
    for s in signed_diagrams(Kind.SYMPLECTIC, size=4):
        for n in (3, 4):
            if n - 2 >= len(s.rows):
                for j in range(n - 2 - len(s.rows) + 1):
                    pool.append(
                        (mo.build_witness(s, n, j), mo.FormSpec.symplectic(2 * n))
                    )
    # a single regular block of o(2, 1), its negative, and the zero orbit
    block = mo.RationalMatrix.from_rows([[0, 1, 0], [-1, 0, -1], [0, -1, 0]])
    pool.append((block, mo.FormSpec.orthogonal(2, 1)))
    pool.append((-block, mo.FormSpec.orthogonal(2, 1)))
    pool.append((mo.RationalMatrix.zeros(4, 4), mo.FormSpec.orthogonal(2, 2)))
    return pool


def suite_conjugation(samples: int) -> SuiteReport:
    """Classification is invariant under form-preserving conjugation; the
    sample count plays the bound role, drawn from a fixed seed."""
    rep = SuiteReport("conjugation", samples)
    rng = random.Random(20240311)
    pool = _conjugation_pool()
    for i in range(samples):
        x, form = pool[i % len(pool)]
        g = mo.random_form_preserving(form, rng)
        rep.checked += 1
        before = mo.classify_signed(x, form)
        after = mo.classify_signed(mo.conjugate(g, x), form)
        if not equivalent(before, after):
            rep.counterexamples.append(f"conjugation moved the label of case {i}")
    return rep


def suite_non3(bound: int) -> SuiteReport:
    """Full tower ledger over admissible diagrams: range conditions and the
    uniqueness record at every interior metaplectic step."""
    from .theta_orbits import chain

    rep = SuiteReport("non3", bound)
    for d in _admissible(bound):
        rep.checked += 1
        for rec in check_range(d):
            if not rec["ok"]:
                rep.counterexamples.append(f"{d}: range at step {rec['k']}: {rec['checks']}")
        tower = [e for e, _ in reversed(chain(d).entries)]
        for k in range(2, len(tower)):
            if tower[k - 1].kind is not Kind.SYMPLECTIC:
                continue
            rec = check_non3(d, k)
            if not rec["ok"]:
                rep.counterexamples.append(f"{d}: uniqueness at step {k}: {rec['checks']}")
    return rep


def suite_appendix(bound: int) -> SuiteReport:
    """Exact segment-sum identities and the two appendix inequalities on
    scaled segments, over their stated parameter grids."""
    rep = SuiteReport("appendix", bound)
    for m in range(1, 100, 2):
        rep.checked += 1
        if sum(segment(SegmentKind.SYMPLECTIC_MINUS, m)) != Fraction((m + 1) ** 2, 8):
            rep.counterexamples.append(f"minus-segment sum fails at m={m}")
        if sum(segment(SegmentKind.ORTHOGONAL_PLUS, m)) != Fraction((m - 1) ** 2, 8):
            rep.counterexamples.append(f"plus-segment sum fails at m={m}")
    # merged pair of segments against the scaled full segment
    for m in range(0, bound + 1):
        for r in range(0, m + 1):
            if (m - r) % 2 != 0 or m + r == 0:
                continue
            rep.checked += 1
            lhs = bar_sort(
                segment(SegmentKind.SYMPLECTIC_MINUS, m)
                + segment(SegmentKind.ORTHOGONAL_PLUS, r)
            )
            rhs = scale(Fraction(m, m + r), segment(SegmentKind.SYMPLECTIC_MINUS, m + r))
            if not seq_preceq(lhs, rhs):
                rep.counterexamples.append(f"segment-pair bound fails at (m={m}, r={r})")
    # staircase family against the scaled full segment
    two_n_cap = (3 * bound) // 2
    for m in range(2, two_n_cap + 3):
        for j in range(0, m // 2 + 1):
            for m0 in range(0, m - 2 * j - 1):
                if (m - m0) % 2 != 0:
                    continue
                for r in range(m0 % 2, m0 + 1, 2):
                    two_n = m0 + r + (2 * m - 2 * j + 2) * j
                    if two_n > two_n_cap or two_n == 0:
                        continue
                    heights = tuple(
                        h for t in range(j) for h in (m - 2 * t, m - 2 * t)
                    )
                    heights += tuple(h for h in (m0, r) if h > 0)
                    if not heights:
                        continue
                    rep.checked += 1
                    shape = Partition(heights).transpose()
                    lhs = bar_sort(infchar_segments(shape, Kind.SYMPLECTIC))
                    rhs = scale(
                        Fraction(m, two_n),
                        segment(SegmentKind.SYMPLECTIC_MINUS, two_n),
                    )
                    if not seq_preceq(lhs, rhs):
                        rep.counterexamples.append(
                            f"staircase bound fails at (m={m}, j={j}, m0={m0}, r={r})"
                        )
    return rep


SUITES = {
    "reasonss": suite_reasonss,
    "lemma-pm": suite_lemma_pm,
    "reversal": suite_reversal,
    "bounds": suite_bounds,
    "domino-oracle": suite_domino_oracle,
    "twocom": suite_twocom,
    "induce-oracle": suite_induce_oracle,
    "conjugation": suite_conjugation,
    "non3": suite_non3,
    "appendix": suite_appendix,
}


def run_suite(name: str, bound: int) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](bound)
