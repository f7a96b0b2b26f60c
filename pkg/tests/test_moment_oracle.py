import random
from fractions import Fraction

import pytest

from orbitcalc.diagram_core import (
    Kind,
    Partition,
    Sign,
    SignedDiagram,
    SignedRow,
    equivalent,
    negate,
    signature,
)
from orbitcalc.enumeration import signed_diagrams
from orbitcalc.moment_oracle import (
    FormSpec,
    RationalMatrix,
    build_witness,
    classify_signed,
    conjugate,
    is_nilpotent,
    jordan_partition,
    moment_m1,
    moment_m2,
    random_form_preserving,
    representative,
    symmetric_signature,
    witness_block_part,
)
from orbitcalc.orbit_induction import induce_real

M = Sign.MINUS
P = Sign.PLUS


class TestMatrix:
    def test_rank_and_kernel(self):
        m = RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        assert m.rank() == 2
        for v in m.kernel_basis():
            assert all(x == 0 for x in m.apply(v))
        assert len(m.kernel_basis()) == 1

    def test_inverse(self):
        m = RationalMatrix.from_rows([[2, 1], [1, 1]])
        assert (m @ m.inverse()).entries == RationalMatrix.identity(2).entries
        with pytest.raises(ValueError, match="singular"):
            RationalMatrix.from_rows([[1, 2], [2, 4]]).inverse()

    def test_json_roundtrip(self):
        m = RationalMatrix.from_rows([[Fraction(1, 2), 0], [-3, Fraction(5, 7)]])
        assert RationalMatrix.from_json(m.to_json()).entries == m.entries

    def test_symmetric_signature(self):
        assert symmetric_signature([[1, 0], [0, -1]]) == (1, 1)
        assert symmetric_signature([[0, 1], [1, 0]]) == (1, 1)
        assert symmetric_signature([[0, 0], [0, 0]]) == (0, 0)
        g = [
            [Fraction(0), Fraction(2), Fraction(0)],
            [Fraction(2), Fraction(0), Fraction(0)],
            [Fraction(0), Fraction(0), Fraction(3)],
        ]
        assert symmetric_signature(g) == (2, 1)


class TestMomentMaps:
    def test_zero(self):
        x = RationalMatrix.zeros(2, 2)
        assert moment_m1(x, 1, 1).is_zero()
        assert moment_m2(x, 1, 1).is_zero()

    def test_identity_two_by_two(self):
        x = RationalMatrix.identity(2)
        m1 = moment_m1(x, 1, 1)
        m2 = moment_m2(x, 1, 1)
        assert m1.entries == RationalMatrix.from_rows([[0, 1], [1, 0]]).entries
        assert m2.entries == RationalMatrix.from_rows([[0, -1], [-1, 0]]).entries
        assert not is_nilpotent(m1)
        assert not is_nilpotent(m2)

    def test_power_identity(self):
        # m1(x)^l = I_{p,q} x m2(x)^(l-1) W_n x^t
        rng = random.Random(7)
        for _ in range(10):
            x = RationalMatrix.from_rows(
                [[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)]
            )
            p, q = 2, 2
            m1 = moment_m1(x, p, q)
            m2 = moment_m2(x, p, q)
            ipq = FormSpec.orthogonal(p, q).matrix()
            wn = FormSpec.symplectic(4).matrix()
            for l in range(1, 5):
                lhs = m1.power(l)
                rhs = ipq @ x @ m2.power(l - 1) @ wn @ x.transpose()
                assert lhs.entries == rhs.entries

    def test_nilpotency_transfer(self):
        # m1 nilpotent iff m2 nilpotent, on a deterministic random sweep
        rng = random.Random(11)
        seen = 0
        for _ in range(300):
            p = rng.randint(1, 2)
            q = rng.randint(0, 2)
            two_n = rng.choice((2, 4))
            x = RationalMatrix.from_rows(
                [[rng.randint(-1, 1) for _ in range(two_n)] for _ in range(p + q)]
            )
            n1 = is_nilpotent(moment_m1(x, p, q))
            n2 = is_nilpotent(moment_m2(x, p, q))
            assert n1 == n2
            seen += n1
        assert seen > 10

    def test_rank_exchange_on_full_rank(self):
        # full-rank x with nilpotent maps: the two Jordan types differ by one
        # column deletion
        rng = random.Random(13)
        found = 0
        for _ in range(1200):
            p = rng.randint(1, 2)
            q = rng.randint(0, 4 - p)
            two_n = rng.choice((2, 4))
            x = RationalMatrix.from_rows(
                [[rng.randint(-1, 1) for _ in range(two_n)] for _ in range(p + q)]
            )
            if x.rank() != min(p + q, two_n):
                continue
            m2 = moment_m2(x, p, q)
            if not is_nilpotent(m2):
                continue
            j1 = jordan_partition(moment_m1(x, p, q))
            j2 = jordan_partition(m2)
            if j1.size == 0 and j2.size == 0:
                continue
            found += 1
            assert j1.delete_columns(1) == j2 or j2.delete_columns(1) == j1, (
                x.entries,
                j1,
                j2,
            )
        assert found > 20


class TestMomentImageNecessity:
    def test_every_image_label_passes_criterion(self):
        # anything the moment map actually produces must satisfy the
        # membership test, for every signature at 2n = 4
        from orbitcalc.theta_orbits import in_moment_image

        rng = random.Random(29)
        hits = 0
        for _ in range(1500):
            p = rng.randint(0, 3)
            q = rng.randint(0, 3 - p) if p < 3 else 0
            if p + q == 0:
                continue
            x = RationalMatrix.from_rows(
                [[rng.randint(-2, 2) for _ in range(4)] for _ in range(p + q)]
            )
            m2 = moment_m2(x, p, q)
            if not is_nilpotent(m2):
                continue
            label = classify_signed(m2, FormSpec.symplectic(4))
            if label.size != 4:
                continue
            hits += 1
            assert in_moment_image(label, p, q), (label.rows, p, q)
        assert hits > 100


class TestJordan:
    def test_single_block(self):
        x = RationalMatrix.from_rows(
            [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]]
        )
        assert jordan_partition(x) == Partition((4,))

    def test_zero_matrix(self):
        assert jordan_partition(RationalMatrix.zeros(5, 5)) == Partition((1,) * 5)

    def test_non_nilpotent_rejected(self):
        with pytest.raises(ValueError, match="nilpotent"):
            jordan_partition(RationalMatrix.identity(2))


class TestClassify:
    def test_sl2_anchor(self):
        x = RationalMatrix.from_rows([[0, 1], [0, 0]])
        form = FormSpec.symplectic(2)
        assert classify_signed(x, form).rows == (SignedRow(2, P),)
        assert classify_signed(-x, form).rows == (SignedRow(2, M),)

    def test_zero_in_sp(self):
        got = classify_signed(RationalMatrix.zeros(6, 6), FormSpec.symplectic(6))
        assert got.rows == (
            SignedRow(1, M),
            SignedRow(1, P),
        ) * 3

    def test_zero_in_orthogonal(self):
        got = classify_signed(RationalMatrix.zeros(3, 3), FormSpec.orthogonal(2, 1))
        assert signature(got) == (2, 1)
        assert got.shape() == Partition((1, 1, 1))

    def test_not_in_algebra(self):
        with pytest.raises(ValueError, match="Lie algebra"):
            classify_signed(RationalMatrix.identity(2), FormSpec.symplectic(2))

    def test_representatives_classify_back(self):
        for size in range(0, 9, 2):
            for d in signed_diagrams(Kind.SYMPLECTIC, size=size):
                x = representative(d)
                assert equivalent(classify_signed(x, FormSpec.symplectic(size)), d)


class TestWitness:
    def test_rank_one_cases(self):
        empty = SignedDiagram(Kind.SYMPLECTIC, ())
        form = FormSpec.symplectic(2)
        plus = build_witness(empty, 1, 0)  # no minus factors
        minus = build_witness(empty, 1, 1)
        assert classify_signed(plus, form).rows == (SignedRow(2, P),)
        assert classify_signed(minus, form).rows == (SignedRow(2, M),)

    def test_empty_source_n2(self):
        empty = SignedDiagram(Kind.SYMPLECTIC, ())
        want = induce_real(empty, 2).diagrams
        for j in range(3):
            got = classify_signed(
                build_witness(empty, 2, j), FormSpec.symplectic(4)
            )
            assert equivalent(got, want[j])

    def test_grid_matches_induction(self):
        for two_m in range(0, 9, 2):
            for s in signed_diagrams(Kind.SYMPLECTIC, size=two_m):
                m = two_m // 2
                for n in range(m, 5):
                    if n - m < len(s.rows):
                        continue
                    want = induce_real(s, n).diagrams
                    for j, expected in enumerate(want):
                        x = build_witness(s, n, j)
                        got = classify_signed(x, FormSpec.symplectic(2 * n))
                        assert equivalent(got, expected)

    def test_negation_rule(self):
        for two_m in (0, 2, 4):
            for s in signed_diagrams(Kind.SYMPLECTIC, size=two_m):
                n = two_m // 2 + len(s.rows) + 1
                if 2 * n > 10:
                    continue
                x = build_witness(s, n, 0)
                form = FormSpec.symplectic(2 * n)
                assert equivalent(
                    classify_signed(-x, form), negate(classify_signed(x, form))
                )

    def test_block_part_is_source(self, induction_source):
        x = build_witness(induction_source, 16, 1)
        block = witness_block_part(x, induction_source.size // 2)
        got = classify_signed(block, FormSpec.symplectic(induction_source.size))
        assert equivalent(got, induction_source)

    def test_bad_index(self):
        empty = SignedDiagram(Kind.SYMPLECTIC, ())
        with pytest.raises(ValueError, match="orbit index"):
            build_witness(empty, 2, 3)


class TestConjugation:
    def test_invariance(self):
        rng = random.Random(5)
        s = SignedDiagram(Kind.SYMPLECTIC, (SignedRow(2, M),))
        x = build_witness(s, 3, 1)
        form = FormSpec.symplectic(6)
        label = classify_signed(x, form)
        for _ in range(5):
            g = random_form_preserving(form, rng)
            assert equivalent(classify_signed(conjugate(g, x), form), label)

    def test_orthogonal_invariance(self):
        rng = random.Random(6)
        x = RationalMatrix.from_rows([[0, 1, 0], [-1, 0, -1], [0, -1, 0]])
        form = FormSpec.orthogonal(2, 1)
        label = classify_signed(x, form)
        assert label.shape() == Partition((3,))
        for _ in range(5):
            g = random_form_preserving(form, rng)
            assert equivalent(classify_signed(conjugate(g, x), form), label)
