"""The recurrence table: golden rows, accessors, symmetry, self-consistency."""

import pytest

from pascal_rhombus import RhombusTable, build_table, column_gf

GOLDEN_ROWS = [
    [1],
    [1, 1, 1],
    [1, 2, 4, 2, 1],
    [1, 3, 8, 9, 8, 3, 1],
    [1, 4, 13, 22, 29, 22, 13, 4, 1],
    [1, 5, 19, 42, 72, 82, 72, 42, 19, 5, 1],
]


def test_golden_rows():
    table = build_table(5)
    for i, expected in enumerate(GOLDEN_ROWS):
        assert table.row(i) == expected


def test_depth_zero():
    table = build_table(0)
    assert table.depth == 0
    assert table.row(0) == [1]


def test_negative_depth_rejected():
    with pytest.raises(ValueError):
        build_table(-1)


def test_entry_examples():
    table = build_table(5)
    assert table.entry(4, 0) == 29
    assert table.entry(3, -1) == 8
    assert table.entry(2, 5) == 0
    assert table.entry(0, 0) == 1


def test_entry_row_out_of_range():
    table = build_table(3)
    with pytest.raises(IndexError):
        table.entry(4, 0)
    with pytest.raises(IndexError):
        table.entry(-1, 0)


def test_column_examples():
    table = build_table(5)
    assert table.column(0) == [1, 1, 4, 9, 29, 82]
    assert table.column(2) == [1, 3, 13, 42]
    assert table.column(-2) == table.column(2)


def test_column_out_of_range():
    with pytest.raises(IndexError):
        build_table(3).column(4)


def test_row_returns_a_copy():
    table = build_table(2)
    table.row(2).append(99)
    assert table.row(2) == [1, 2, 4, 2, 1]


def test_constructor_validates_shape():
    with pytest.raises(ValueError):
        RhombusTable([[1], [1, 1]])
    with pytest.raises(ValueError):
        RhombusTable([])


def test_symmetry_to_depth_50():
    table = build_table(50)
    for i in range(51):
        for j in range(1, i + 1):
            assert table.entry(i, j) == table.entry(i, -j)


def test_every_entry_satisfies_the_recurrence():
    # recompute each interior entry from the two rows above; catches
    # indexing bugs that a symmetric implementation could hide
    table = build_table(50)
    for i in range(2, 51):
        for j in range(-i, i + 1):
            expected = (
                table.entry(i - 1, j - 1)
                + table.entry(i - 1, j)
                + table.entry(i - 1, j + 1)
                + table.entry(i - 2, j)
            )
            assert table.entry(i, j) == expected


def test_columns_match_generating_functions():
    table = build_table(29)
    for j in range(7):
        coeffs = column_gf(j, 30).integer_coefficients()
        assert table.column(j) == coeffs[j:]
        assert table.column(-j) == coeffs[j:]
