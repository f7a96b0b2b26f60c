import pytest

from orbitcalc.diagram_core import (
    Kind,
    Partition,
    Sign,
    SignedDiagram,
    SignedRow,
    Signature,
    equivalent,
    is_valid,
    signature,
    tau,
)
from orbitcalc.enumeration import signed_diagrams
from orbitcalc.orbit_induction import (
    add_two_columns,
    induce_real,
    induce_real_tau,
    merge,
    plus_rows,
    two_n_signed,
    wf_ialpha,
    wf_ialpha_parts,
    wf_theta_trivial,
)

M = Sign.MINUS
P = Sign.PLUS


class TestMerge:
    def test_examples(self):
        assert merge(Partition((2, 1)), Partition((1, 1))) == Partition((3, 2))
        assert merge(Partition((2, 1)), Partition()) == Partition((2, 1))
        two_cols = merge(Partition((1,) * 7), Partition((1,) * 7))
        assert merge(Partition((5, 5, 4, 2, 2)), two_cols) == Partition(
            (7, 7, 6, 4, 4, 2, 2)
        )


class TestAddTwoColumns:
    def test_examples(self):
        assert add_two_columns(Partition((3, 1)), 3) == Partition((5, 3, 2))
        assert add_two_columns(Partition(), 4) == Partition((2, 2, 2, 2))
        assert add_two_columns(Partition((5, 5, 4, 2, 2)), 7) == Partition(
            (7, 7, 6, 4, 4, 2, 2)
        )

    def test_too_many_rows(self):
        with pytest.raises(ValueError, match="row count"):
            add_two_columns(Partition((1, 1, 1)), 2)

    def test_matches_merge(self):
        s = Partition((3, 1))
        cols = merge(Partition((1,) * 5), Partition((1,) * 5))
        assert add_two_columns(s, 5) == merge(s, cols)


class TestInduceReal:
    def test_printed_example(self, induction_source, induction_expected):
        result = induce_real(induction_source, 16)
        assert result.count == 3
        for got, want in zip(result.diagrams, induction_expected):
            assert equivalent(got, want)

    def test_empty_source(self):
        for n in (0, 1, 3):
            result = induce_real(SignedDiagram(Kind.SYMPLECTIC, ()), n)
            assert result.count == n + 1
            assert all(d.shape() == Partition((2,) * n) for d in result.diagrams)

    def test_no_free_rows(self):
        s = SignedDiagram(Kind.SYMPLECTIC, (SignedRow(2, M),))
        result = induce_real(s, 2)  # n - m = 1 = row count
        assert result.count == 1
        assert result.diagrams[0].shape() == Partition((4,))

    def test_precondition(self):
        s = SignedDiagram(Kind.SYMPLECTIC, (SignedRow(1, M), SignedRow(1, P)))
        with pytest.raises(ValueError, match="row count"):
            induce_real(s, 2)  # n - m = 1 < 2 rows

    def test_count_shape_validity_exhaustive(self):
        for two_m in range(0, 11, 2):
            for s in signed_diagrams(Kind.SYMPLECTIC, size=two_m):
                m = two_m // 2
                for n in range(m, m + 7):
                    if n - m < len(s.rows):
                        continue
                    result = induce_real(s, n)
                    assert result.count == n - m - len(s.rows) + 1
                    want_shape = add_two_columns(s.shape(), n - m)
                    for j, d in enumerate(result.diagrams):
                        assert is_valid(d)
                        assert d.shape() == want_shape
                        assert signature(d) == Signature(n, n)
                        minus_twos = sum(
                            1 for r in d.rows if r.length == 2 and r.leading is M
                        )
                        assert minus_twos == j


class TestInduceRealTau:
    def test_equals_induction_of_flip(self, induction_source):
        n = 16
        assert (
            induce_real_tau(induction_source, n).diagrams
            == induce_real(tau(induction_source), n).diagrams
        )

    def test_double_flip_consistency(self, induction_source):
        n = 16
        assert (
            induce_real_tau(tau(induction_source), n).diagrams
            == induce_real(induction_source, n).diagrams
        )

    def test_empty_source(self):
        a = induce_real_tau(SignedDiagram(Kind.SYMPLECTIC, ()), 3)
        b = induce_real(SignedDiagram(Kind.SYMPLECTIC, ()), 3)
        assert a.diagrams == b.diagrams

    def test_even_row_keeps_sign(self):
        s = SignedDiagram(Kind.SYMPLECTIC, (SignedRow(2, P),))
        result = induce_real_tau(s, 3)
        assert result.count == 2
        for d in result.diagrams:
            four_rows = [r for r in d.rows if r.length == 4]
            assert four_rows == [SignedRow(4, P)]


class TestTwoNSigned:
    def test_definition(self):
        d = two_n_signed(3, 2)
        assert d.rows == (SignedRow(2, P), SignedRow(2, P), SignedRow(2, M))

    def test_sentinels(self):
        assert two_n_signed(3, -1) is None
        assert two_n_signed(3, 4) is None
        with pytest.raises(ValueError):
            two_n_signed(3, 5)
        with pytest.raises(ValueError):
            two_n_signed(3, -2)

    def test_signature_balanced(self):
        for n in range(6):
            for i in range(n + 1):
                assert signature(two_n_signed(n, i)) == Signature(n, n)


class TestWaveFront:
    def test_middle_pair(self):
        got = wf_theta_trivial(2, 2)
        assert [plus_rows(d) for d in got] == [2, 1]

    def test_edges(self):
        assert [plus_rows(d) for d in wf_theta_trivial(0, 4)] == [0]
        assert [plus_rows(d) for d in wf_theta_trivial(4, 0)] == [3]

    def test_ialpha_covers(self):
        got = wf_ialpha(3, 0)
        assert [plus_rows(d) for d in got] == [3, 2, 1, 0]
        got = wf_ialpha(1, 0)
        assert [plus_rows(d) for d in got] == [1, 0]

    def test_parity_mismatch(self):
        with pytest.raises(ValueError, match="parity"):
            wf_ialpha(3, 1)

    def test_coverage_and_disjointness(self):
        for n in range(0, 9):
            for alpha in (0, 2) if n % 2 == 1 else (1, 3):
                union = set()
                for members in wf_ialpha_parts(n, alpha).values():
                    ids = {plus_rows(d) for d in members}
                    assert not union & ids
                    union |= ids
                assert union == set(range(n + 1))
