"""Iteration theory for unitary order-1 power series.

Integer iterates, the iterative logarithm (infinitesimal generator of the
composition flow), exact fractional iterates, fractional powers of umbral
operators, and the Jabotinsky rescaling.  Everything stays in Q; non-unitary
input is rejected rather than normalized.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import NotUnitary, OrderError, TruncationError
from .fps import Series, comp_inv, compose, series, x_series
from .operators import DeltaOp, ShiftOp, apply_op, validate_delta
from .rational import RatLike, binom, rat
from .umbral import (
    Triangle,
    UmbralOp,
    basic_from_inverse_series,
    tri_compose,
    tri_identity,
)


def iterate_int(f: Series, m: int) -> Series:
    """m-fold compositional iterate; the inverse is used for m < 0."""
    if f.order() != 1:
        raise OrderError("iteration requires order exactly 1")
    step = f if m >= 0 else comp_inv(f)
    out = x_series(f.trunc)
    for _ in range(abs(m)):
        out = compose(step, out)
    return out


def _require_unitary(f: Series):
    if not f.is_unitary():
        raise NotUnitary("series must be unitary (f = x + higher order)")


def _shifted_triangle(tri: Triangle) -> Triangle:
    """Triangle of (phi - 1): the diagonal zeroed out."""
    rows = []
    for n, row in enumerate(tri.rows):
        r = list(row)
        r[n] = Fraction(0)
        rows.append(tuple(r))
    return Triangle(tuple(rows))


def shifted_powers(tri: Triangle, pmax: int) -> list[Triangle]:
    """[(phi-1)^p for p = 0..pmax] by repeated composition (nilpotent)."""
    shifted = _shifted_triangle(tri)
    out = [tri_identity(tri.n)]
    for _ in range(pmax):
        out.append(tri_compose(out[-1], shifted))
    return out


def minus_one_power_coeff(tri: Triangle, p: int, n: int, k: int) -> Fraction:
    """coeff(n,k) of (phi-1)^p for a unitary triangle; 0 whenever p > n-k."""
    if not tri.is_unitary():
        raise NotUnitary("triangle must have unit diagonal")
    if p > n - k:
        return Fraction(0)
    return shifted_powers(tri, p)[p].entry(n, k)


def chain_power_coeff(tri: Triangle, p: int, n: int, k: int, strict: bool = True) -> Fraction:
    """Oracle route: sum over chains k = j_0 < ... < j_p = n (or <= for phi^p)."""
    def rec(prev: int, depth: int) -> Fraction:
        if depth == p:
            return Fraction(1) if prev == n else Fraction(0)
        total = Fraction(0)
        start = prev + 1 if strict else prev
        for j in range(start, n + 1):
            c = tri.entry(j, prev)
            if c:
                total += c * rec(j, depth + 1)
        return total

    if p == 0:
        return Fraction(1 if n == k else 0)
    total = Fraction(0)
    start = k + 1 if strict else k
    for j in range(start, n + 1):
        c = tri.entry(j, k)
        if c:
            total += c * rec(j, 1)
    return total


def integer_power_chain_coeff(tri: Triangle, s: int, n: int, k: int) -> Fraction:
    """coeff(n,k) of phi^s as the weakly-increasing chain sum."""
    if s < 1:
        raise ValueError("s must be >= 1")
    return chain_power_coeff(tri, s, n, k, strict=False)


def _flow_triangle(f: Series, n: int) -> UmbralOp:
    """Basic triangle with column-1 EGF equal to f (the paper's phi for f)."""
    return basic_from_inverse_series(f.truncate(n) if f.trunc > n else f, n)


def itlog(f: Series) -> Series:
    """Iterative logarithm f_* = d/ds f^s at s = 0; order >= 2 for unitary f.

    Two independent routes are computed and must agree exactly:
    (i)  the flow-operator route, expanding (C_f - 1)^p over integer iterates;
    (ii) the coefficient route through powers of the shifted triangle.
    """
    _require_unitary(f)
    n = f.trunc
    # route (i): sum_p (-1)^{p-1}/p sum_l C(p,l)(-1)^{p-l} f^l(x)
    iterates = [x_series(n)]
    for _ in range(max(n - 1, 0)):
        iterates.append(compose(f, iterates[-1]))
    route1 = series([0], n)
    for p in range(1, n):
        acc = series([0], n)
        for ell in range(p + 1):
            c = Fraction(comb(p, ell) * (-1) ** (p - ell))
            acc = acc + iterates[ell].scale(c)
        route1 = route1 + acc.scale(Fraction((-1) ** (p - 1), p))
    # route (ii): coefficients through (phi - 1)^p
    phi = _flow_triangle(f, n)
    powers = shifted_powers(phi.tri, max(n - 1, 0))
    coeffs = [Fraction(0)] * (n + 1)
    for m in range(2, n + 1):
        s = Fraction(0)
        for p in range(1, m):
            c = powers[p].entry(m, 1)
            if c:
                s += Fraction((-1) ** (p - 1), p) * c
        coeffs[m] = s / factorial(m)
    route2 = series(coeffs, n)
    if route1 != route2:
        raise AssertionError("itlog routes disagree")
    return route2


def koszul_numbers(n_max: int) -> list[Fraction]:
    """K_n = n! [x^n] itlog(e^x - 1) for n = 0..n_max."""
    from .fps import expm1

    f_star = itlog(expm1(n_max))
    return [f_star[n] * factorial(n) for n in range(n_max + 1)]


def frac_iterate(f: Series, s: RatLike, k: int = 1, n_max: int | None = None) -> Series:
    """f^s(x)^k / k! to order n_max, exact for rational s.

    Primary formula: sum_n x^n/n! sum_{p<=n-k} C(s,p) coeff(n,k)_{(phi-1)^p};
    the second displayed form (through integer triangle powers) is computed
    as a cross-check and must agree.
    """
    _require_unitary(f)
    if k < 1:
        raise OrderError("power index k must be >= 1")
    s = rat(s)
    n = f.trunc if n_max is None else n_max
    if f.trunc < n:
        raise TruncationError(f"need trunc >= {n}, have {f.trunc}")
    phi = _flow_triangle(f, n)
    powers = shifted_powers(phi.tri, max(n - k, 0))
    int_powers = [tri_identity(n)]
    for _ in range(max(n - k, 0)):
        int_powers.append(tri_compose(int_powers[-1], phi.tri))
    out = [Fraction(0)] * (n + 1)
    for m in range(k, n + 1):
        acc = Fraction(0)
        acc2 = Fraction(0)
        for p in range(m - k + 1):
            c = powers[p].entry(m, k)
            if c:
                acc += binom(s, p) * c
            c2 = int_powers[p].entry(m, k)
            if c2:
                acc2 += binom(s, p) * binom(m - k - s, m - k - p) * c2
        if acc != acc2:
            raise AssertionError("fractional iterate routes disagree")
        out[m] = acc / factorial(m)
    return series(out, n)


def group_law_check(f: Series, r: RatLike, s: RatLike, n_max: int) -> bool:
    """f^r o f^s = f^{r+s} and (f^r)^s = f^{rs}, to order n_max."""
    r, s = rat(r), rat(s)
    fr = frac_iterate(f, r, 1, n_max)
    fs = frac_iterate(f, s, 1, n_max)
    if compose(fr, fs) != frac_iterate(f, r + s, 1, n_max):
        return False
    if frac_iterate(fr, s, 1, n_max) != frac_iterate(f, r * s, 1, n_max):
        return False
    return True


def phi_pow(Q: DeltaOp, s: RatLike, n: int) -> Triangle:
    """Triangle of phi^s for the basic operator of a unitary delta Q.

    Route A applies the flow exponential e^{-s X Q_*} to monomials (each
    X Q_* factor drops the degree, so rows terminate); route B uses the
    coefficient formula through (phi-1)^p.  Both must agree; for integer s
    the result also equals the repeated triangle composition.
    """
    if not Q.is_unitary():
        raise NotUnitary("fractional operator powers need a unitary delta")
    s = rat(s)
    if Q.indicator.trunc < n:
        raise TruncationError(f"need indicator trunc >= {n}")
    q = Q.indicator.truncate(n) if Q.indicator.trunc > n else Q.indicator
    gen = ShiftOp(itlog(q))  # Q_*, indicator order >= 2
    rows = []
    for m in range(n + 1):
        from .fps import poly as _poly

        acc = _poly([])
        u = _poly([0] * m + [1])
        j = 0
        fact = Fraction(1)
        coef = Fraction(1)
        while not u.is_zero():
            acc = acc + (coef / fact) * u
            u = apply_op(gen, u).times_x()
            j += 1
            fact *= j
            coef *= -s
        rows.append(tuple(acc[k] for k in range(m + 1)))
    route_a = Triangle(tuple(rows))
    # route B: coefficient formula
    f = comp_inv(q)
    phi = _flow_triangle(f, n)
    powers = shifted_powers(phi.tri, n)
    rows_b = []
    for m in range(n + 1):
        row = []
        for k in range(m + 1):
            acc = Fraction(0)
            for p in range(m - k + 1):
                c = powers[p].entry(m, k)
                if c:
                    acc += binom(s, p) * c
            row.append(acc)
        rows_b.append(tuple(row))
    route_b = Triangle(tuple(rows_b))
    if route_a != route_b:
        raise AssertionError("phi_pow routes disagree")
    return route_a


def jabotinsky(tri: Triangle) -> tuple[tuple[Fraction, ...], ...]:
    """Dense square matrix with entries k!/n! coeff[n][k] (zeros above diagonal)."""
    n = tri.n
    return tuple(
        tuple(
            tri.entry(i, j) * Fraction(factorial(j), factorial(i)) if j <= i else Fraction(0)
            for j in range(n + 1)
        )
        for i in range(n + 1)
    )


def matmul(a, b) -> tuple[tuple[Fraction, ...], ...]:
    """Exact dense matrix product (row-times-column)."""
    n = len(a)
    return tuple(
        tuple(sum((a[i][j] * b[j][k] for j in range(n)), Fraction(0)) for k in range(n))
        for i in range(n)
    )


def delta_power(Q: DeltaOp, s: RatLike, n: int) -> DeltaOp:
    """Q^[s]: the delta operator of phi^s, via the fractional iterate of Q~."""
    if not Q.is_unitary():
        raise NotUnitary("fractional bracket powers need a unitary delta")
    q = Q.indicator.truncate(n) if Q.indicator.trunc > n else Q.indicator
    return validate_delta(ShiftOp(frac_iterate(q, rat(s), 1, n)))
