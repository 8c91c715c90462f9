"""Truncated formal power series over exact rationals.

A :class:`TruncatedSeries` keeps a fixed number of leading coefficients,
its *order*: a series of order N represents a power series modulo x^N, with
coefficients stored as `fractions.Fraction` so that every identity check is
an exact comparison.  Two disciplines are enforced throughout:

* binary operations demand operands of equal order, so a comparison can
  never silently involve coefficients one side does not actually know;
* exact division by x^k (:meth:`TruncatedSeries.shift_div`) shortens the
  result by k instead of padding it, because the top k coefficients of the
  quotient are unknowable from a truncation.

On top of the ring operations (add, multiply, reciprocal, square root,
composition) this module builds the named series the rest of the library
consumes: the Fibonacci and Catalan generating functions, the generating
function of level-step-2 Motzkin counts (``motzkin2_gf``), and the column
generating functions of the rhombus (``column_gf``), each constructible by
independent routes that the test suite compares coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "TruncatedSeries",
    "fibonacci_gf",
    "catalan_gf",
    "motzkin2_gf",
    "column_gf",
    "MOTZKIN2_METHODS",
    "COLUMN_METHODS",
]

Scalar = Union[int, Fraction]

MOTZKIN2_METHODS = ("closed_form", "compositional", "functional_equation")
COLUMN_METHODS = ("closed_form", "functional_equation")


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0 .. c_{N-1} of a power series, N = ``order``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series needs at least one coefficient")
        if not all(isinstance(c, Fraction) for c in self.coeffs):
            raise TypeError("coefficients must be Fraction instances")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_coeffs(cls, values: Iterable[Scalar], order: int | None = None) -> "TruncatedSeries":
        """Series with the given leading coefficients, zero-padded to ``order``.

        ``values`` is exact polynomial data, so discarding entries beyond
        ``order`` is reduction mod x^order, not a truncation mismatch.
        """
        coeffs = [Fraction(v) for v in values]
        if order is None:
            order = len(coeffs)
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        del coeffs[order:]
        coeffs.extend([Fraction(0)] * (order - len(coeffs)))
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([1], order)

    @classmethod
    def monomial(cls, k: int, order: int, coefficient: Scalar = 1) -> "TruncatedSeries":
        """coefficient * x^k, reduced mod x^order."""
        if k < 0:
            raise ValueError(f"monomial exponent must be >= 0, got {k}")
        return cls.from_coeffs([0] * k + [coefficient], order)

    # -- inspection --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient {k} not retained at order {self.order}")
        return self.coeffs[k]

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; ``order`` if all are zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coefficients(self) -> list[int]:
        """Coefficients as ints; raises if any denominator is not 1."""
        for k, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient of x^{k} is {c}, not an integer")
        return [c.numerator for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                xk = "x" if k == 1 else f"x^{k}"
                terms.append(xk if c == 1 else f"{c}*{xk}")
            if len(terms) == 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(x^{self.order})"

    def _require_same_order(self, other: "TruncatedSeries", op: str) -> None:
        if self.order != other.order:
            raise ValueError(
                f"order mismatch in {op}: {self.order} vs {other.order}; "
                "truncate() one operand explicitly"
            )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_order(other, "add")
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_order(other, "sub")
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __mul__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return TruncatedSeries(tuple(a * f for a in self.coeffs))
        self._require_same_order(other, "mul")
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "TruncatedSeries":
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("negative powers: use reciprocal() explicitly")
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def reciprocal(self) -> "TruncatedSeries":
        """Series b with self * b = 1 mod x^order; needs c_0 != 0."""
        a = self.coeffs
        if not a[0]:
            raise ValueError("reciprocal needs a nonzero constant term")
        inv0 = Fraction(1) / a[0]
        out = [inv0]
        for n in range(1, self.order):
            acc = Fraction(0)
            for i in range(1, n + 1):
                if a[i]:
                    acc += a[i] * out[n - i]
            out.append(-acc * inv0)
        return TruncatedSeries(tuple(out))

    def sqrt(self) -> "TruncatedSeries":
        """The square root with constant term +1; needs c_0 = 1 exactly.

        Coefficients come from matching s*s = self term by term:
        s_n = (a_n - sum_{0<i<n} s_i s_{n-i}) / 2.  Callers in this library
        only ever take square roots of unit-constant series, so the general
        square-constant case is deliberately rejected.
        """
        a = self.coeffs
        if a[0] != 1:
            raise ValueError(f"sqrt needs constant term exactly 1, got {a[0]}")
        out = [Fraction(1)]
        for n in range(1, self.order):
            acc = a[n]
            for i in range(1, n):
                acc -= out[i] * out[n - i]
            out.append(acc / 2)
        return TruncatedSeries(tuple(out))

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(x)) mod x^order, by Horner evaluation in the series ring.

        Requires valuation(inner) >= 1; substituting a series with a
        constant term would need infinitely many coefficients of self.
        """
        self._require_same_order(inner, "compose")
        if inner.coeffs[0]:
            raise ValueError("compose needs inner constant term 0")
        acc = TruncatedSeries.from_coeffs([self.coeffs[-1]], self.order)
        for k in range(self.order - 2, -1, -1):
            acc = acc * inner + TruncatedSeries.from_coeffs([self.coeffs[k]], self.order)
        return acc

    def shift_div(self, k: int) -> "TruncatedSeries":
        """Exact division by x^k; the result has order reduced by k.

        Requires valuation >= k.  The order drops because the last k
        coefficients of the quotient would depend on coefficients beyond
        the truncation.
        """
        if k < 0:
            raise ValueError(f"shift_div needs k >= 0, got {k}")
        if k == 0:
            return self
        if k >= self.order:
            raise ValueError(f"shift_div by x^{k} leaves no coefficients at order {self.order}")
        if any(self.coeffs[:k]):
            raise ValueError(
                f"not divisible by x^{k}: valuation is {self.valuation()}"
            )
        return TruncatedSeries(self.coeffs[k:])

    def truncate(self, order: int) -> "TruncatedSeries":
        """Deliberately drop trailing coefficients down to ``order``."""
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order])


def _fib_denominator(order: int) -> TruncatedSeries:
    # 1 - x - x^2
    return TruncatedSeries.from_coeffs([1, -1, -1], order)


def fibonacci_gf(order: int) -> TruncatedSeries:
    """x / (1 - x - x^2): coefficients 0, 1, 1, 2, 3, 5, 8, ..."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    return TruncatedSeries.monomial(1, order) * _fib_denominator(order).reciprocal()


def catalan_gf(order: int) -> TruncatedSeries:
    """(1 - sqrt(1 - 4x)) / (2x): coefficients 1, 1, 2, 5, 14, 42, ..."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    root = TruncatedSeries.from_coeffs([1, -4], order + 1).sqrt()
    return (TruncatedSeries.one(order + 1) - root).shift_div(1) / 2


def motzkin2_gf(order: int, method: str = "closed_form") -> TruncatedSeries:
    """Generating function B of Motzkin paths extended with the long level
    step (2,0): coefficients 1, 1, 3, 6, 16, 40, 109, ...

    Three independent routes are implemented and must agree:

    * ``closed_form``: (1 - x - x^2 - sqrt(1 - 2x - 5x^2 + 2x^3 + x^4)) / (2x^2),
    * ``compositional``: (F/x) * C(F^2) with F, C the Fibonacci and Catalan
      generating functions,
    * ``functional_equation``: the coefficient recurrence extracted from
      B = 1 + (x + x^2) B + x^2 B^2 (first-return decomposition of a path).
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if method == "closed_form":
        radicand = TruncatedSeries.from_coeffs([1, -2, -5, 2, 1], order + 2)
        numer = TruncatedSeries.from_coeffs([1, -1, -1], order + 2) - radicand.sqrt()
        return numer.shift_div(2) / 2
    if method == "compositional":
        f = fibonacci_gf(order + 1)
        c_of_f2 = catalan_gf(order + 1).compose(f * f)
        return f.shift_div(1) * c_of_f2.truncate(order)
    if method == "functional_equation":
        b = [1]
        for n in range(1, order):
            value = b[n - 1]
            if n >= 2:
                value += b[n - 2]
                value += sum(b[p] * b[n - 2 - p] for p in range(n - 1))
            b.append(value)
        return TruncatedSeries.from_coeffs(b, order)
    raise ValueError(f"unknown method {method!r}; choose from {MOTZKIN2_METHODS}")


def column_gf(j: int, order: int, method: str = "closed_form") -> TruncatedSeries:
    """Generating function L_j of column j >= 0 of the rhombus.

    Both routes must agree, and despite the rational sqrt/reciprocal
    intermediates every coefficient is a non-negative integer:

    * ``closed_form``: F^(j+1) C(F^2)^j / (x (1 - 2 F^2 C(F^2))),
    * ``functional_equation``: x^j B^j / (1 - x - x^2 - 2 x^2 B), the
      linear equation satisfied by the column generating function.
    """
    if j < 0:
        raise ValueError(f"column index must be >= 0, got {j}")
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if method == "closed_form":
        f = fibonacci_gf(order + 1)
        c_of_f2 = catalan_gf(order + 1).compose(f * f)
        numer = f ** (j + 1) * c_of_f2 ** j
        denom = TruncatedSeries.one(order + 1) - f * f * c_of_f2 * 2
        return (numer * denom.reciprocal()).shift_div(1)
    if method == "functional_equation":
        b = motzkin2_gf(order, "functional_equation")
        denom = _fib_denominator(order) - TruncatedSeries.monomial(2, order) * b * 2
        return TruncatedSeries.monomial(j, order) * b ** j * denom.reciprocal()
    raise ValueError(f"unknown method {method!r}; choose from {COLUMN_METHODS}")
