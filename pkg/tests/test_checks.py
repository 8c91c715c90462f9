"""The consistency-check suites, including proof that they catch faults."""

from pascal_rhombus import RhombusTable, build_table, run_all
from pascal_rhombus.checks import (
    check_catalan_binomial,
    check_column_functional_equation,
    check_column_routes,
    check_convolved_fibonacci,
    check_method_agreement,
    check_motzkin2_routes,
    check_oracle_agreement,
    check_symmetry,
)


def corrupted_table(depth=12, i=7, j=3, delta=1):
    rows = [build_table(depth).row(k) for k in range(depth + 1)]
    rows[i][j + i] += delta
    return RhombusTable(rows)


def test_run_all_passes_at_reduced_bounds():
    results = run_all(max_i=15, max_oracle_n=6, series_order=16)
    assert all(r.passed for r in results)
    assert not any(r.skipped for r in results)


def test_status_strings():
    results = run_all(max_i=6, max_oracle_n=0, series_order=8)
    by_name = {r.name: r for r in results}
    oracle = next(r for name, r in by_name.items() if name.startswith("oracle"))
    assert oracle.skipped and oracle.status == "SKIPPED"
    assert all(r.status == "PASS" for r in results if not r.skipped)


def test_method_agreement_catches_corruption():
    result = check_method_agreement(max_i=12, series_order=13, table=corrupted_table())
    assert not result.passed
    assert "(i=7, j=3)" in result.detail
    assert "recurrence=" in result.detail


def test_symmetry_catches_corruption():
    result = check_symmetry(max_i=12, table=corrupted_table())
    assert not result.passed
    assert "i=7" in result.detail


def test_oracle_catches_corruption():
    result = check_oracle_agreement(max_n=8, table=corrupted_table(depth=8, i=6, j=-2))
    assert not result.passed
    assert "n=6" in result.detail


def test_oracle_skipped_at_zero():
    result = check_oracle_agreement(0)
    assert result.skipped and result.passed


def test_individual_suites_pass():
    assert check_motzkin2_routes(30).passed
    assert check_column_functional_equation(5, 30).passed
    assert check_column_routes(6, 30).passed
    assert check_convolved_fibonacci().passed
    assert check_catalan_binomial(6, 30).passed
