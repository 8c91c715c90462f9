"""Exact arithmetic kernel.

All counts in this library are Python ints (arbitrary precision) and all
rational intermediates are `fractions.Fraction`, which is kept normalized
(positive denominator, coprime numerator) so structural equality is
mathematical equality.  What this module adds is the one combinatorial
primitive everything else leans on: binomial coefficients with the
out-of-range-zero convention.
"""

__all__ = ["binomial"]


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 whenever k < 0 or k > n.

    The zero convention is load-bearing: the closed-form sums in this
    library run their indices past the support of their terms and rely on
    the out-of-range factors vanishing.  Negative n is a domain error,
    not a convention.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    # multiplicative row formula; division is exact at every step because
    # the running value is C(n - k + i, i)
    value = 1
    for i in range(1, k + 1):
        value = value * (n - k + i) // i
    return value
