import pytest
from hypothesis import given, strategies as st

from orbitcalc.diagram_core import (
    Kind,
    Partition,
    Sign,
    SignedDiagram,
    SignedRow,
    Signature,
    canonicalize,
    delete_column_signed,
    dumps,
    equivalent,
    from_json_dict,
    from_row_spec,
    group_of,
    is_valid,
    loads,
    negate,
    parse_ascii,
    render_ascii,
    signature,
    tau,
    to_json_dict,
    validate_partition_kind,
    validate_signed,
)
from orbitcalc.enumeration import signed_diagrams

M = Sign.MINUS
P = Sign.PLUS


def all_diagrams(max_size):
    for size in range(max_size + 1):
        for kind in (Kind.SYMPLECTIC, Kind.ORTHOGONAL):
            yield from signed_diagrams(kind, size=size)


def diagram_strategy(max_size=8):
    pool = list(all_diagrams(max_size))
    return st.sampled_from(pool)


class TestPartition:
    def test_transpose_seven_row(self):
        assert Partition((7, 3, 1, 1)).transpose() == Partition((4, 2, 2, 1, 1, 1, 1))

    def test_transpose_empty(self):
        assert Partition().transpose() == Partition()

    def test_transpose_by_hand(self):
        assert Partition((3, 3, 2, 1, 1)).transpose() == Partition((5, 3, 2))

    @given(st.lists(st.integers(1, 9), min_size=0, max_size=9))
    def test_transpose_involutive(self, parts):
        d = Partition(tuple(sorted(parts, reverse=True)))
        assert d.transpose().transpose() == d

    def test_delete_columns(self):
        d = Partition((3, 3, 2, 1, 1))
        assert d.delete_columns(1) == Partition((2, 2, 1))
        assert d.delete_columns(2) == Partition((1, 1))
        assert d.delete_columns(0) == d
        assert d.delete_columns(3) == Partition()
        assert d.delete_columns(17) == Partition()

    def test_invalid_rows_rejected(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))

    def test_kind_validity(self):
        assert validate_partition_kind(Partition((3, 3, 2, 1, 1)), Kind.SYMPLECTIC)
        assert validate_partition_kind(Partition((2, 2, 1)), Kind.ORTHOGONAL)
        assert not validate_partition_kind(Partition((3,)), Kind.SYMPLECTIC)
        assert not validate_partition_kind(Partition((2,)), Kind.ORTHOGONAL)

    def test_deletion_swaps_kind_validity(self):
        # one column off a valid shape gives a valid shape of the other kind
        from orbitcalc.enumeration import partitions

        for n in range(1, 31):
            for rows in partitions(n):
                d = Partition(rows)
                e = d.delete_columns(1)
                if validate_partition_kind(d, Kind.SYMPLECTIC):
                    assert validate_partition_kind(e, Kind.ORTHOGONAL), d
                if validate_partition_kind(d, Kind.ORTHOGONAL):
                    assert validate_partition_kind(e, Kind.SYMPLECTIC), d


class TestValidation:
    def test_intro_is_valid(self, intro_diagram):
        ok, violations = validate_signed(intro_diagram)
        assert ok and violations == []

    def test_orthogonal_pair_examples(self, yd79_pair):
        for d in yd79_pair:
            assert is_valid(d)
            assert signature(d) == Signature(7, 9)

    def test_bad_odd_pair(self):
        d = SignedDiagram(Kind.SYMPLECTIC, (SignedRow(1, M), SignedRow(1, M)))
        ok, violations = validate_signed(d)
        assert not ok
        assert any("convention" in v for v in violations)

    def test_odd_multiplicity(self):
        d = SignedDiagram(Kind.SYMPLECTIC, (SignedRow(3, M),))
        ok, violations = validate_signed(d)
        assert not ok

    def test_empty_valid_both_kinds(self):
        for kind in Kind:
            assert is_valid(SignedDiagram(kind, ()))


class TestSignature:
    def test_intro_signature(self, intro_diagram):
        assert signature(intro_diagram) == Signature(15, 15)

    def test_empty(self):
        assert signature(SignedDiagram(Kind.SYMPLECTIC, ())) == Signature(0, 0)

    def test_after_one_deletion(self, intro_diagram):
        assert signature(delete_column_signed(intro_diagram)) == Signature(10, 11)

    @given(diagram_strategy())
    def test_signature_counts_boxes(self, d):
        sig = signature(d)
        assert sig.plus + sig.minus == d.size
        if d.kind is Kind.SYMPLECTIC:
            assert sig.plus == sig.minus


class TestDeleteColumn:
    def test_intro_iteration(self, intro_diagram):
        expected = [(10, 11), (7, 7), (5, 4), (2, 2), (1, 0)]
        current = intro_diagram
        for want in expected:
            current = delete_column_signed(current)
            assert signature(current) == Signature(*want)
        assert delete_column_signed(current).rows == ()

    def test_single_box(self):
        d = SignedDiagram(Kind.ORTHOGONAL, (SignedRow(1, P),))
        assert delete_column_signed(d).rows == ()

    @given(diagram_strategy())
    def test_lands_in_opposite_kind(self, d):
        e = delete_column_signed(d)
        assert e.kind is d.kind.opposite
        assert is_valid(e)
        assert e.shape() == d.shape().delete_columns(1)


class TestTau:
    def test_printed_example(self, tau_example):
        before, after = tau_example
        assert equivalent(tau(before), after)

    def test_odd_rows_fixed(self):
        d = from_row_spec(Kind.SYMPLECTIC, [(3, None), (3, None), (1, None), (1, None)])
        assert tau(d) == canonicalize(d)

    def test_orthogonal_rejected(self):
        with pytest.raises(ValueError, match="symplectic"):
            tau(SignedDiagram(Kind.ORTHOGONAL, (SignedRow(1, P),)))

    @given(diagram_strategy())
    def test_involution(self, d):
        if d.kind is Kind.SYMPLECTIC:
            assert tau(tau(d)) == canonicalize(d)

    def test_involution_exhaustive(self):
        for size in range(0, 11, 2):
            for d in signed_diagrams(Kind.SYMPLECTIC, size=size):
                assert tau(tau(d)) == d  # enumerated diagrams are canonical


class TestNegate:
    @given(diagram_strategy())
    def test_row_rule(self, d):
        n = negate(d)
        if d.kind is Kind.SYMPLECTIC:
            assert n == tau(d)
        else:
            assert equivalent(n, d)

    def test_empty(self):
        d = SignedDiagram(Kind.SYMPLECTIC, ())
        assert negate(d) == d


class TestEquivalence:
    def test_free_rows_interchange(self):
        d1 = SignedDiagram(Kind.SYMPLECTIC, (SignedRow(4, P), SignedRow(4, M)))
        d2 = SignedDiagram(Kind.SYMPLECTIC, (SignedRow(4, M), SignedRow(4, P)))
        assert equivalent(d1, d2)
        assert canonicalize(d1) == canonicalize(d2)
        assert canonicalize(d2).rows[0].leading is P

    def test_intro_not_plus_first(self, intro_diagram):
        # the printed layout has the (4,-) row above (4,+); canonical swaps
        assert canonicalize(intro_diagram) != intro_diagram
        assert equivalent(canonicalize(intro_diagram), intro_diagram)

    def test_different_shapes(self):
        d1 = from_row_spec(Kind.SYMPLECTIC, [(2, P)])
        d2 = from_row_spec(Kind.SYMPLECTIC, [(1, None), (1, None)])
        assert not equivalent(d1, d2)

    @given(diagram_strategy())
    def test_canonicalize_idempotent(self, d):
        assert canonicalize(canonicalize(d)) == canonicalize(d)


class TestGroupLabel:
    def test_intro_group(self, intro_diagram):
        assert str(group_of(intro_diagram)) == "Mp(30)"

    def test_orthogonal_group(self, intro_diagram):
        assert str(group_of(delete_column_signed(intro_diagram))) == "O(10,11)"

    def test_empty_groups(self):
        assert str(group_of(SignedDiagram(Kind.SYMPLECTIC, ()))) == "Mp(0)"
        assert str(group_of(SignedDiagram(Kind.ORTHOGONAL, ()))) == "O(0,0)"


class TestSerialization:
    def test_render_intro(self, intro_diagram):
        text = render_ascii(intro_diagram)
        assert text.splitlines()[0] == "-+-+-+"
        assert text.splitlines()[-1] == "+"

    def test_parse_rejects_bad_alternation(self):
        with pytest.raises(ValueError, match="row 1, column 2"):
            parse_ascii("++", Kind.SYMPLECTIC)

    def test_parse_rejects_bad_char(self):
        with pytest.raises(ValueError, match="column 2"):
            parse_ascii("+x", Kind.SYMPLECTIC)

    def test_parse_rejects_convention_violation(self):
        with pytest.raises(ValueError, match="convention"):
            parse_ascii("-\n-", Kind.SYMPLECTIC)

    def test_roundtrip_all_small(self):
        for d in all_diagrams(8):
            assert parse_ascii(render_ascii(d), d.kind) == d
            assert loads(dumps(d)) == d
            assert from_json_dict(to_json_dict(d)) == d

    def test_json_schema(self, intro_diagram):
        data = to_json_dict(intro_diagram)
        assert data["kind"] == "symplectic"
        assert data["rows"][0] == {"len": 6, "sign": "-"}

    def test_json_rejects_garbage(self):
        with pytest.raises(ValueError):
            loads("not json")
        with pytest.raises(ValueError, match="kind"):
            from_json_dict({"rows": []})
        with pytest.raises(ValueError, match="sign"):
            from_json_dict({"kind": "symplectic", "rows": [{"len": 2, "sign": "x"}]})
