"""Pascal rhombus entries by five independent exact methods.

The rhombus is the integer array (OEIS A059317) generated by

    r[i][j] = r[i-1][j-1] + r[i-1][j] + r[i-1][j+1] + r[i-2][j]

from r[0][0] = 1 and row 1 = (1, 1, 1).  Its entries equal counts of
lattice paths over the steps U = (1,1), D = (1,-1), H = (1,0), H2 = (2,0)
classified by final height, and admit binomial and convolved-Fibonacci
closed forms as well as explicit column generating functions.  This
package computes entries along every one of those routes, in exact
arithmetic throughout, and ships the consistency checks that compare the
routes coefficient by coefficient.
"""

from .binomials import binomial
from .checks import CheckResult, run_all
from .closedforms import (
    convolved_fib_gould,
    convolved_fib_product,
    convolved_fib_series,
    entry_convolved,
    entry_triple_sum,
    entry_triple_sum_reference,
)
from .paths import (
    DEFAULT_CAP,
    LatticePath,
    count_by_height,
    count_grand_motzkin,
    count_motzkin,
    count_motzkin2,
    enumerate_grand,
    recurrence_check,
)
from .rhombus import RhombusTable, build_table
from .series import (
    TruncatedSeries,
    catalan_gf,
    column_gf,
    fibonacci_gf,
    motzkin2_gf,
)

__version__ = "0.1.0"

__all__ = [
    "binomial",
    "TruncatedSeries",
    "fibonacci_gf",
    "catalan_gf",
    "motzkin2_gf",
    "column_gf",
    "RhombusTable",
    "build_table",
    "entry_triple_sum",
    "entry_triple_sum_reference",
    "entry_convolved",
    "convolved_fib_series",
    "convolved_fib_gould",
    "convolved_fib_product",
    "LatticePath",
    "DEFAULT_CAP",
    "enumerate_grand",
    "count_by_height",
    "count_motzkin2",
    "count_motzkin",
    "count_grand_motzkin",
    "recurrence_check",
    "CheckResult",
    "run_all",
    "__version__",
]
