"""Cross-method consistency checks.

Every quantity in this library is computable along several independent
routes; each function here runs one family of comparisons over explicit
bounds and reports the first disagreement it finds.  The functions accept
a prebuilt :class:`~pascal_rhombus.rhombus.RhombusTable` so a corrupted
table can be injected to prove the checks actually bite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomials import binomial
from .closedforms import (
    convolved_fib_gould,
    convolved_fib_product,
    convolved_fib_series,
    entry_convolved,
    entry_triple_sum,
)
from .paths import DEFAULT_CAP, count_by_height, count_motzkin2
from .rhombus import RhombusTable, build_table
from .series import TruncatedSeries, catalan_gf, column_gf, motzkin2_gf

__all__ = [
    "CheckResult",
    "check_method_agreement",
    "check_oracle_agreement",
    "check_motzkin2_routes",
    "check_column_functional_equation",
    "check_column_routes",
    "check_convolved_fibonacci",
    "check_catalan_binomial",
    "check_symmetry",
    "run_all",
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    skipped: bool = False

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIPPED"
        return "PASS" if self.passed else "FAIL"


def _table_or_build(table: RhombusTable | None, depth: int) -> RhombusTable:
    if table is None:
        return build_table(depth)
    if table.depth < depth:
        raise ValueError(f"supplied table depth {table.depth} < required {depth}")
    return table


def check_method_agreement(
    max_i: int = 40,
    series_order: int = 30,
    series_j_cap: int = 6,
    table: RhombusTable | None = None,
) -> CheckResult:
    """recurrence = triple sum = convolved form for all entries to max_i,
    and = series coefficients where the column generating functions reach."""
    name = f"method-agreement (i <= {max_i})"
    table = _table_or_build(table, max_i)
    columns = {
        j: column_gf(j, series_order).integer_coefficients()
        for j in range(min(series_j_cap, max_i) + 1)
    }
    for i in range(max_i + 1):
        for j in range(-i, i + 1):
            values = {
                "recurrence": table.entry(i, j),
                "triple_sum": entry_triple_sum(i, j),
                "convolved": entry_convolved(i, j),
            }
            if abs(j) <= series_j_cap and i < series_order:
                values["series"] = columns[abs(j)][i]
            if len(set(values.values())) != 1:
                detail = f"first disagreement at (i={i}, j={j}): " + ", ".join(
                    f"{k}={v}" for k, v in values.items()
                )
                return CheckResult(name, False, detail)
    return CheckResult(name, True)


def check_oracle_agreement(
    max_n: int = 12,
    oracle_cap: int = DEFAULT_CAP,
    table: RhombusTable | None = None,
) -> CheckResult:
    """Exhaustive path counts equal table entries (all heights, n <= max_n)
    and the closed-path counts equal the motzkin2 series coefficients."""
    name = f"oracle-agreement (n <= {max_n})"
    if max_n <= 0:
        return CheckResult(name, True, "max_n is 0", skipped=True)
    table = _table_or_build(table, max_n)
    b = motzkin2_gf(max_n + 1).integer_coefficients()
    for n in range(max_n + 1):
        counts = count_by_height(n, cap=oracle_cap)
        for j in range(-n, n + 1):
            got = counts.get(j, 0)
            want = table.entry(n, j)
            if got != want:
                return CheckResult(
                    name, False,
                    f"first disagreement at (n={n}, j={j}): oracle={got}, table={want}",
                )
        closed = count_motzkin2(n, cap=oracle_cap)
        if closed != b[n]:
            return CheckResult(
                name, False,
                f"closed-path count at n={n}: oracle={closed}, series={b[n]}",
            )
    return CheckResult(name, True)


def check_motzkin2_routes(order: int = 30) -> CheckResult:
    """All three constructions of the motzkin2 series agree coefficient-wise."""
    name = f"motzkin2-route-agreement (order {order})"
    closed = motzkin2_gf(order, "closed_form")
    comp = motzkin2_gf(order, "compositional")
    rec = motzkin2_gf(order, "functional_equation")
    for k in range(order):
        trio = {closed.coeffs[k], comp.coeffs[k], rec.coeffs[k]}
        if len(trio) != 1:
            return CheckResult(
                name, False,
                f"first disagreement at x^{k}: closed_form={closed.coeffs[k]}, "
                f"compositional={comp.coeffs[k]}, functional_equation={rec.coeffs[k]}",
            )
    return CheckResult(name, True)


def check_column_functional_equation(max_j: int = 5, order: int = 30) -> CheckResult:
    """Each column series M satisfies M = x^j B^j + (x + x^2) M + 2 x^2 B M."""
    name = f"column-functional-equation (j <= {max_j})"
    b = motzkin2_gf(order)
    x_plus_x2 = TruncatedSeries.from_coeffs([0, 1, 1], order)
    two_x2_b = TruncatedSeries.monomial(2, order) * b * 2
    for j in range(max_j + 1):
        for method in ("closed_form", "functional_equation"):
            m = column_gf(j, order, method)
            rhs = TruncatedSeries.monomial(j, order) * b ** j + x_plus_x2 * m + two_x2_b * m
            if m != rhs:
                k = next(k for k in range(order) if m.coeffs[k] != rhs.coeffs[k])
                return CheckResult(
                    name, False,
                    f"column {j} ({method}) violates the equation at x^{k}",
                )
    return CheckResult(name, True)


def check_column_routes(max_j: int = 6, order: int = 30) -> CheckResult:
    """Both column constructions agree and give non-negative integers."""
    name = f"column-route-agreement (j <= {max_j})"
    for j in range(max_j + 1):
        closed = column_gf(j, order, "closed_form")
        rec = column_gf(j, order, "functional_equation")
        if closed != rec:
            k = next(k for k in range(order) if closed.coeffs[k] != rec.coeffs[k])
            return CheckResult(
                name, False,
                f"column {j} routes disagree at x^{k}: "
                f"closed_form={closed.coeffs[k]}, functional_equation={rec.coeffs[k]}",
            )
        if not closed.is_integral():
            k = next(k for k in range(order) if closed.coeffs[k].denominator != 1)
            return CheckResult(name, False, f"column {j} has non-integer coefficient at x^{k}")
        if any(c < 0 for c in closed.coeffs):
            return CheckResult(name, False, f"column {j} has a negative coefficient")
    return CheckResult(name, True)


def check_convolved_fibonacci(
    series_j: int = 20,
    series_r: int = 6,
    product_j: int = 12,
    product_r: int = 4,
) -> CheckResult:
    """Binomial form = series form everywhere tested; composition-product
    form agrees on the smaller range it can afford."""
    name = f"convolved-fibonacci (j <= {series_j}, r <= {series_r})"
    for r in range(1, series_r + 1):
        series = convolved_fib_series(r, series_j + 1)
        for j in range(series_j + 1):
            g = convolved_fib_gould(j, r)
            if g != series[j]:
                return CheckResult(
                    name, False,
                    f"first disagreement at (j={j}, r={r}): binomial={g}, series={series[j]}",
                )
            if j <= product_j and r <= product_r:
                p = convolved_fib_product(j, r)
                if p != series[j]:
                    return CheckResult(
                        name, False,
                        f"first disagreement at (j={j}, r={r}): product={p}, series={series[j]}",
                    )
    return CheckResult(name, True)


def check_catalan_binomial(max_j: int = 6, order: int = 30) -> CheckResult:
    """C(x)^j / (1 - 2x C(x)) = sum_m binomial(2m+j, m) x^m, coefficient-wise.

    This is the corrected form.  A variant seen in the literature,
    (1 - 4x)^(-1/2) * ((1 - sqrt(1-4x))/x)^k = sum_m binomial(2m+k, m) x^m,
    is off by a factor 2^k (its k = 1 instance already gives constant term
    2 against 1) and is deliberately not asserted anywhere.
    """
    name = f"catalan-binomial-identity (j <= {max_j})"
    c = catalan_gf(order)
    denom = TruncatedSeries.one(order) - TruncatedSeries.monomial(1, order) * c * 2
    inv = denom.reciprocal()
    for j in range(max_j + 1):
        lhs = c ** j * inv
        rhs = TruncatedSeries.from_coeffs([binomial(2 * m + j, m) for m in range(order)])
        if lhs != rhs:
            k = next(k for k in range(order) if lhs.coeffs[k] != rhs.coeffs[k])
            return CheckResult(
                name, False,
                f"j={j} disagrees at x^{k}: series={lhs.coeffs[k]}, binomial={rhs.coeffs[k]}",
            )
    return CheckResult(name, True)


def check_symmetry(max_i: int = 50, table: RhombusTable | None = None) -> CheckResult:
    """entry(i, j) = entry(i, -j), both halves computed independently."""
    name = f"symmetry (i <= {max_i})"
    table = _table_or_build(table, max_i)
    for i in range(max_i + 1):
        for j in range(1, i + 1):
            if table.entry(i, j) != table.entry(i, -j):
                return CheckResult(
                    name, False,
                    f"first asymmetry at i={i}, j={j}: "
                    f"{table.entry(i, j)} vs {table.entry(i, -j)}",
                )
    return CheckResult(name, True)


def run_all(
    max_i: int = 40,
    max_oracle_n: int = 12,
    series_order: int = 30,
    oracle_cap: int = DEFAULT_CAP,
    table: RhombusTable | None = None,
) -> list[CheckResult]:
    """Run every suite; the CLI's one-shot consistency check."""
    table = _table_or_build(table, max(max_i, max_oracle_n))
    return [
        check_method_agreement(max_i, series_order, table=table),
        check_oracle_agreement(max_oracle_n, oracle_cap, table=table),
        check_motzkin2_routes(series_order),
        check_column_functional_equation(5, series_order),
        check_column_routes(6, series_order),
        check_convolved_fibonacci(),
        check_catalan_binomial(6, series_order),
        check_symmetry(max_i, table=table),
    ]
