"""Partial and complete Bell polynomials over exact rationals.

The arguments a_1, a_2, ... are the EGF coefficients of f = sum a_k x^k / k!,
and B_{n,k}(a_1, ..., a_{n-k+1}) = n! [x^n] f(x)^k / k!.

The implementation is the convolution recurrence

    B_{n,k} = (1/k) * sum_j C(n, j) a_j B_{n-j,k-1},

O(n^2 k) exact operations instead of enumerating partitions.  It only uses
addition, multiplication and division by integers, so the arguments may be
rationals or any commuting ring elements (e.g. indicator series of
shift-invariant operators); the partition-sum definition is kept in the test
suite as an oracle.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .fps import Series, exp_series, series
from .rational import rat


def _argument(a: Sequence, j: int):
    """a is 1-indexed: a[0] holds a_1."""
    if j - 1 >= len(a):
        raise IndexError(f"need argument a_{j}, got only {len(a)} arguments")
    return a[j - 1]


def partial_bell(n: int, k: int, a: Sequence) -> Fraction:
    """B_{n,k}(a_1, ..., a_{n-k+1}); raises IndexError when k > n or k < 0."""
    if k < 0 or k > n:
        raise IndexError(f"partial Bell needs 0 <= k <= n, got n={n}, k={k}")
    # rows of B_{m,j} for j = 0..k built bottom-up; row j is only needed up
    # to m = n-(k-j), which also keeps argument access within a_1..a_{n-k+1}
    prev = [Fraction(1) if m == 0 else Fraction(0) for m in range(n + 1)]
    for j in range(1, k + 1):
        cur = [Fraction(0)] * (n + 1)
        for m in range(j, n - (k - j) + 1):
            acc = None
            for i in range(1, m - j + 2):
                term = comb(m, i) * (_argument(a, i) * prev[m - i])
                acc = term if acc is None else acc + term
            if acc is not None:
                cur[m] = acc / j
        prev = cur
    return prev[n]


def complete_bell(n: int, a: Sequence) -> Fraction:
    """B_n(a_1, ..., a_n) = sum_k B_{n,k}."""
    if n == 0:
        return Fraction(1)
    total = None
    for k in range(1, n + 1):
        term = partial_bell(n, k, a)
        total = term if total is None else total + term
    return total


def egf_from_arguments(a: Sequence, trunc: int) -> Series:
    """The series f = sum a_k x^k / k! built from 1-indexed arguments."""
    fact = Fraction(1)
    coeffs = [Fraction(0)]
    for k in range(1, trunc + 1):
        fact *= k
        coeffs.append(rat(_argument(a, k)) / fact if k - 1 < len(a) else Fraction(0))
    return series(coeffs, trunc)


def complete_bell_via_exp(n: int, a: Sequence) -> Fraction:
    """Independent route: n! [x^n] e^{f(x)}."""
    f = egf_from_arguments(a, n)
    g = exp_series(f)
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return g[n] * fact
