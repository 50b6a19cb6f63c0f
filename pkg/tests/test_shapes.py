"""Shape normalization, symmetries, profiles, and text syntax."""

import pytest
from hypothesis import given, strategies as st

from skewpoly.errors import InvalidArg, InvalidShape, ParseError
from skewpoly.shapes import (
    EMPTY_SHAPE,
    SkewShape,
    as_partition,
    bottleneck_profile,
    conjugate,
    contains,
    is_ribbon,
    normalize,
    parse_partition,
    parse_ribbon_text,
    parse_shape,
    ribbon_rows,
    ribbon_shape,
    rotate180,
    shape_syntax,
    transpose,
)


def partitions(max_len: int = 5, max_part: int = 8):
    return st.lists(
        st.integers(min_value=0, max_value=max_part), max_size=max_len
    ).map(lambda xs: tuple(sorted(xs, reverse=True)))


@st.composite
def skew_shapes(draw):
    outer = draw(partitions())
    inner = tuple(draw(st.integers(min_value=0, max_value=p)) for p in outer)
    return normalize(outer, as_partition(sorted(inner, reverse=True)))


class TestPartitionBasics:
    def test_as_partition_strips_zeros(self):
        assert as_partition([3, 2, 0, 0]) == (3, 2)
        assert as_partition([]) == ()

    def test_as_partition_rejects_increasing(self):
        with pytest.raises(InvalidShape):
            as_partition([2, 3])

    def test_conjugate_involution(self):
        assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
        assert conjugate(conjugate((4, 2, 1))) == (4, 2, 1)

    def test_contains(self):
        assert contains((3, 2), (2, 2))
        assert not contains((3, 2), (2, 3))
        assert contains((3,), (0, 0))


class TestNormalization:
    def test_constructor_rejects_unnormalized(self):
        with pytest.raises(InvalidShape):
            SkewShape((2, 2), (2,))  # empty first row
        with pytest.raises(InvalidShape):
            SkewShape((3, 1), (2,))  # column 2 empty
        with pytest.raises(InvalidShape):
            SkewShape((2, 1), (1, 1))  # empty last row

    def test_deletes_empty_rows_and_columns(self):
        assert normalize((3, 3, 1), (3, 1)) == SkewShape((3, 1), (1,))
        assert normalize((5, 2), (4,)) == SkewShape((3, 2), (2,))
        assert normalize((2, 2), (2, 2)) == EMPTY_SHAPE

    def test_rejects_non_containment(self):
        with pytest.raises(InvalidShape):
            normalize((2,), (3,))

    def test_basic_measures(self):
        sh = normalize((5, 5, 4, 2, 2, 2), (4, 2, 1, 1, 1))
        assert (sh.rows, sh.cols, sh.cells) == (6, 5, 11)
        assert sh.inner_padded == (4, 2, 1, 1, 1, 0)

    def test_column_intervals(self):
        sh = normalize((3, 2), (1,))
        assert sh.column_intervals == ((2, 2), (1, 2), (1, 1))
        assert sh.column_heights == (1, 2, 1)

    def test_connected(self):
        assert normalize((2, 1)).connected
        assert not normalize((2, 1), (1,)).connected
        assert EMPTY_SHAPE.connected

    @given(skew_shapes())
    def test_normalize_idempotent(self, sh):
        assert normalize(sh.outer, sh.inner) == sh


class TestSymmetries:
    def test_rotation_of_hook(self):
        assert rotate180(normalize((2, 1))) == normalize((2, 2), (1,))

    def test_transpose_of_hook(self):
        assert transpose(normalize((2, 1))) == normalize((2, 1))
        assert transpose(normalize((3, 1))) == normalize((2, 1, 1))

    @given(skew_shapes())
    def test_rotation_involution(self, sh):
        assert rotate180(rotate180(sh)) == sh

    @given(skew_shapes())
    def test_transpose_involution(self, sh):
        assert transpose(transpose(sh)) == sh

    @given(skew_shapes())
    def test_symmetries_preserve_cells(self, sh):
        assert rotate180(sh).cells == sh.cells
        assert transpose(sh).cells == sh.cells
        assert (transpose(sh).rows, transpose(sh).cols) == (sh.cols, sh.rows)

    @given(skew_shapes())
    def test_rotation_reverses_bottlenecks(self, sh):
        b = bottleneck_profile(sh, max_width=1).b
        rb = bottleneck_profile(rotate180(sh), max_width=1).b
        assert rb == tuple(reversed(b))


class TestBottlenecks:
    def test_profiled_example(self):
        sh = normalize((5, 5, 4, 2, 2, 2), (4, 2, 1, 1, 1))
        prof = bottleneck_profile(sh, max_width=5)
        assert prof.b == (0, 3, 0, 0, 1)
        assert prof.wide[2] == (0, 0, 1, 0)
        assert prof.wide[3] == (0, 0, 0)
        assert prof.wide[4] == (0, 0)
        assert prof.wide[5] == (0,)
        assert prof.pair_sums == (1, 3, 0)
        assert prof.sum_b == 4
        assert prof.sum_b_squares == 10

    def test_overlap_compositions(self):
        sh = normalize((5, 5, 4, 2, 2, 2), (4, 2, 1, 1, 1))
        assert sh.row_overlaps(2) == (1, 2, 1, 1, 1)
        assert sh.row_overlaps(3) == (0, 0, 1, 1)
        assert sh.row_overlaps(6) == (0,)

    def test_bad_width_rejected(self):
        sh = normalize((2, 1))
        with pytest.raises(InvalidArg):
            bottleneck_profile(sh, max_width=3)
        with pytest.raises(InvalidArg):
            sh.row_overlaps(1)

    def test_single_column_profile(self):
        sh = normalize((1, 1, 1))
        assert bottleneck_profile(sh, max_width=1).b == (2,)

    def test_empty_profile(self):
        prof = bottleneck_profile(EMPTY_SHAPE)
        assert prof.b == () and prof.pair_sums == ()

    @given(skew_shapes())
    def test_pair_sums_rotation_invariant(self, sh):
        a = bottleneck_profile(sh, max_width=1)
        b = bottleneck_profile(rotate180(sh), max_width=1)
        assert a.pair_sums == b.pair_sums
        assert a.sum_b_squares == b.sum_b_squares


class TestRibbonShapes:
    def test_ribbon_shape_rows(self):
        sh = ribbon_shape((2, 3, 1))
        assert (sh.outer, sh.inner) == ((4, 4, 2), (3, 1))
        assert ribbon_rows(sh) == (2, 3, 1)
        assert is_ribbon(sh)

    def test_non_ribbons(self):
        assert not is_ribbon(normalize((2, 2)))  # 2x2 block
        assert not is_ribbon(normalize((2, 1), (1,)))  # disconnected
        assert ribbon_rows(normalize((2, 2))) is None

    def test_single_square(self):
        assert ribbon_shape((1,)) == normalize((1,))
        assert is_ribbon(normalize((1,)))


class TestSyntax:
    def test_parse_shape_forms(self):
        assert parse_shape("6,3,1/3,1") == SkewShape((6, 3, 1), (3, 1))
        assert parse_shape(" 2,1 ") == SkewShape((2, 1), ())
        assert parse_shape("2,2/2,2") == EMPTY_SHAPE
        assert parse_shape("(2,3,1)") == ribbon_shape((2, 3, 1))

    def test_column_reading(self):
        assert parse_ribbon_text("[2,3,1]") == (1, 2, 1, 2)
        assert parse_ribbon_text("[1,1,2]") == (3, 1)
        assert parse_ribbon_text("(6,5,3)") == (6, 5, 3)

    def test_round_trip(self):
        for text in ("2,1", "6,3,1/3,1", "5,5,4,2,2,2/4,2,1,1,1"):
            assert shape_syntax(parse_shape(text)) == text

    @given(skew_shapes())
    def test_syntax_round_trip(self, sh):
        assert parse_shape(shape_syntax(sh)) == sh

    def test_parse_errors_name_token(self):
        with pytest.raises(ParseError) as exc:
            parse_shape("5,x")
        assert exc.value.token == "x"
        with pytest.raises(ParseError):
            parse_shape("3/2/1")
        with pytest.raises(ParseError):
            parse_ribbon_text("(2,0)")
        with pytest.raises(ParseError):
            parse_shape("1,2")
