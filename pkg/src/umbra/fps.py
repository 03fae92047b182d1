"""Truncated formal power series and exact polynomials over the rationals.

A :class:`Series` carries an explicit truncation degree ``trunc`` and exactly
``trunc + 1`` coefficients; every binary operation returns the minimum of the
operand truncations, so no coefficient is ever fabricated.  A :class:`Poly`
is an exact finite polynomial — the space the operator modules act on.

The order of the zero series is the explicit sentinel ``INF`` (and the degree
of the zero polynomial is ``-INF``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, inf
from typing import Iterable, Sequence

from .errors import ConstantTermError, NotInvertible, OrderError, TruncationError
from .rational import RatLike, binom, rat

INF = inf


def _coerce(values: Iterable[RatLike]) -> tuple[Fraction, ...]:
    return tuple(rat(v) for v in values)


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Series:
    """Formal power series truncated at exponent ``trunc`` (inclusive)."""

    trunc: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.trunc < 0:
            raise ValueError("trunc must be >= 0")
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("coeffs must have exactly trunc+1 entries")

    # -- basic queries ------------------------------------------------------

    def order(self) -> int | float:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return INF

    def __getitem__(self, n: int) -> Fraction:
        if 0 <= n <= self.trunc:
            return self.coeffs[n]
        return Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_unitary(self) -> bool:
        """Order 1 with coefficient of x equal to 1."""
        return self.order() == 1 and self.coeffs[1] == 1

    # -- reshaping ----------------------------------------------------------

    def truncate(self, n: int) -> "Series":
        """Restrict (or zero-extend is forbidden: n must be <= trunc)."""
        if n > self.trunc:
            raise TruncationError(f"cannot extend trunc {self.trunc} to {n}")
        return Series(n, self.coeffs[: n + 1])

    def shift_up(self, k: int = 1) -> "Series":
        """Multiply by x^k; trunc grows by k (all new coefficients exact)."""
        return Series(self.trunc + k, (Fraction(0),) * k + self.coeffs)

    def shift_down(self, k: int = 1) -> "Series":
        """Divide by x^k; requires order >= k.  Trunc shrinks by k."""
        if any(self.coeffs[i] for i in range(min(k, self.trunc + 1))):
            raise OrderError(f"series has order < {k}, cannot shift down")
        if self.trunc < k:
            raise TruncationError("trunc too small to shift down")
        return Series(self.trunc - k, self.coeffs[k:])

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "Series | RatLike") -> "Series":
        if not isinstance(other, Series):
            other = const(rat(other), self.trunc)
        n = min(self.trunc, other.trunc)
        return Series(n, tuple(self[i] + other[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(self.trunc, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Series | RatLike") -> "Series":
        return self + (-other if isinstance(other, Series) else -rat(other))

    def __rsub__(self, other: RatLike) -> "Series":
        return (-self) + rat(other)

    def scale(self, c: RatLike) -> "Series":
        c = rat(c)
        return Series(self.trunc, tuple(c * a for a in self.coeffs))

    def __truediv__(self, other: RatLike) -> "Series":
        """Division by a nonzero rational scalar only."""
        return self.scale(1 / rat(other))

    def __mul__(self, other: "Series | RatLike") -> "Series":
        if not isinstance(other, Series):
            return self.scale(other)
        n = min(self.trunc, other.trunc)
        out = [Fraction(0)] * (n + 1)
        for i in range(min(self.trunc, n) + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(min(other.trunc, n - i) + 1):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return mul_inv(self) ** (-k)
        result = const(1, self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self) -> str:
        return format_series(self)


def series(values: Sequence[RatLike], trunc: int | None = None) -> Series:
    """Build a Series from a coefficient list, zero-padded to ``trunc``."""
    cs = list(_coerce(values))
    if trunc is None:
        trunc = len(cs) - 1 if cs else 0
    if len(cs) < trunc + 1:
        cs += [Fraction(0)] * (trunc + 1 - len(cs))
    return Series(trunc, tuple(cs[: trunc + 1]))


def const(c: RatLike, trunc: int) -> Series:
    return series([rat(c)], trunc)


def x_series(trunc: int) -> Series:
    """The identity series x."""
    return series([0, 1], trunc)


def geometric(trunc: int) -> Series:
    """1/(1-x) = 1 + x + x^2 + ..."""
    return series([1] * (trunc + 1), trunc)


# ---------------------------------------------------------------------------
# calculus and composition
# ---------------------------------------------------------------------------


def derive(f: Series) -> Series:
    """Coefficient-wise derivative; trunc drops by one."""
    if f.trunc == 0:
        return series([0], 0)
    return Series(f.trunc - 1, tuple((k + 1) * f.coeffs[k + 1] for k in range(f.trunc)))


def integrate(f: Series, c0: RatLike = 0) -> Series:
    """Antiderivative with constant term c0.

    The result reuses the input trunc, so the topmost input coefficient is
    dropped rather than inventing a deeper one.
    """
    out = [rat(c0)] + [f.coeffs[k - 1] / k for k in range(1, f.trunc + 1)]
    return Series(f.trunc, tuple(out))


def compose(f: Series, g: Series) -> Series:
    """f(g(x)) for ord(g) >= 1, exact to min(trunc f, trunc g)."""
    if g[0] != 0:
        raise OrderError("composition requires the inner series to have order >= 1")
    n = min(f.trunc, g.trunc)
    g = g.truncate(n) if g.trunc > n else g
    result = const(0, n)
    for k in range(min(f.trunc, n), -1, -1):
        result = result * g + f.coeffs[k]
    return result


def mul_inv(f: Series) -> Series:
    """Multiplicative inverse; requires nonzero constant term."""
    a0 = f.coeffs[0]
    if a0 == 0:
        raise NotInvertible("constant term is zero")
    n = f.trunc
    out = [Fraction(0)] * (n + 1)
    out[0] = 1 / a0
    for m in range(1, n + 1):
        s = Fraction(0)
        for k in range(1, m + 1):
            if f.coeffs[k]:
                s += f.coeffs[k] * out[m - k]
        out[m] = -s / a0
    return Series(n, tuple(out))


def comp_inv(f: Series) -> Series:
    """Compositional inverse of an order-1 series (triangular solve).

    Solves sum_k b_k f(t)^k = t coefficient by coefficient; the power table
    f^k is built incrementally, O(N^3) exact rational operations.
    """
    if f.order() != 1:
        raise OrderError("compositional inverse requires order exactly 1")
    n = f.trunc
    powers = [const(1, n), f]
    for k in range(2, n + 1):
        powers.append(powers[-1] * f)
    b = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        s = Fraction(1) if m == 1 else Fraction(0)
        for k in range(1, m):
            if b[k]:
                s -= b[k] * powers[k][m]
        b[m] = s / powers[m][m]
    return Series(n, tuple(b))


def pow_rat(f: Series, r: RatLike) -> Series:
    """f^r for rational r via the binomial series; requires f(0) = 1."""
    if f.coeffs[0] != 1:
        raise ConstantTermError("rational power requires constant term exactly 1")
    r = rat(r)
    u = f - 1
    result = const(0, f.trunc)
    term = const(1, f.trunc)
    for k in range(f.trunc + 1):
        result = result + term.scale(binom(r, k))
        term = term * u
    return result


def exp_series(f: Series) -> Series:
    """exp(f) for f with zero constant term."""
    if f.coeffs[0] != 0:
        raise ConstantTermError("exp requires zero constant term")
    n = f.trunc
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(1)
    for m in range(1, n + 1):
        s = Fraction(0)
        for k in range(1, m + 1):
            if f.coeffs[k]:
                s += k * f.coeffs[k] * out[m - k]
        out[m] = s / m
    return Series(n, tuple(out))


def log_series(f: Series) -> Series:
    """log(f) for f with constant term 1."""
    if f.coeffs[0] != 1:
        raise ConstantTermError("log requires constant term exactly 1")
    n = f.trunc
    out = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        s = m * f.coeffs[m]
        for k in range(1, m):
            if out[k]:
                s -= k * out[k] * f.coeffs[m - k]
        out[m] = s / m
    return Series(n, tuple(out))


def lagrange_power(f: Series, k: int, n_max: int) -> Series:
    """Coefficients of the k-th power of the compositional inverse of f.

    Lagrange-Buermann: [t^n] f^{-1}(t)^k = (k/n) [x^{n-k}] (x/f(x))^n for
    n >= k >= 1.  Independent of comp_inv by construction.
    """
    if f.order() != 1:
        raise OrderError("Lagrange inversion requires order exactly 1")
    if k < 1:
        raise OrderError("power index k must be >= 1")
    if f.trunc < n_max:
        raise TruncationError(f"need trunc >= {n_max}, have {f.trunc}")
    ratio = mul_inv(f.shift_down(1))  # x/f(x), order 0
    out = [Fraction(0)] * (n_max + 1)
    power = const(1, ratio.trunc)
    for n in range(1, n_max + 1):
        power = power * ratio
        if n >= k:
            out[n] = Fraction(k, n) * power[n - k]
    return Series(n_max, tuple(out))


def exp_x(trunc: int) -> Series:
    """e^x - handy building block: sum x^n/n!."""
    return Series(trunc, tuple(Fraction(1, factorial(n)) for n in range(trunc + 1)))


def expm1(trunc: int) -> Series:
    """e^x - 1."""
    return exp_x(trunc) - 1


def log1p(trunc: int) -> Series:
    """log(1+x)."""
    return Series(
        trunc,
        tuple(Fraction(0) if n == 0 else Fraction((-1) ** (n - 1), n) for n in range(trunc + 1)),
    )


def format_series(f: Series, var: str = "x") -> str:
    """Human-readable rendering, ending with the O() marker."""
    parts = []
    for n, c in enumerate(f.coeffs):
        if c == 0:
            continue
        if n == 0:
            term = str(c)
        else:
            mon = var if n == 1 else f"{var}^{n}"
            if c == 1:
                term = mon
            elif c == -1:
                term = f"-{mon}"
            else:
                term = f"{c}*{mon}"
        parts.append(term)
    body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
    return f"{body} + O({var}^{f.trunc + 1})"


# ---------------------------------------------------------------------------
# Poly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    """Exact polynomial; coefficients are stored trimmed (no trailing zeros)."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("Poly coefficients must be trimmed")

    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else -INF

    def __getitem__(self, n: int) -> Fraction:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, a: RatLike) -> Fraction:
        a = rat(a)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def __add__(self, other: "Poly | RatLike") -> "Poly":
        if not isinstance(other, Poly):
            other = poly([rat(other)])
        n = max(len(self.coeffs), len(other.coeffs))
        return poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly | RatLike") -> "Poly":
        return self + (-other if isinstance(other, Poly) else -rat(other))

    def __rsub__(self, other: RatLike) -> "Poly":
        return (-self) + rat(other)

    def __mul__(self, other: "Poly | RatLike") -> "Poly":
        if not isinstance(other, Poly):
            c = rat(other)
            return poly([c * a for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return poly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: RatLike) -> "Poly":
        return self * (1 / rat(other))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative polynomial powers are undefined")
        result = poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self) -> "Poly":
        return poly([k * self.coeffs[k] for k in range(1, len(self.coeffs))])

    def antiderivative(self, c0: RatLike = 0) -> "Poly":
        return poly([rat(c0)] + [self.coeffs[k] / (k + 1) for k in range(len(self.coeffs))])

    def shifted(self, a: RatLike) -> "Poly":
        """p(x + a), exact Taylor shift (Horner in x + a)."""
        a = rat(a)
        acc = poly([])
        for c in reversed(self.coeffs):
            acc = acc.times_x() + a * acc + c
        return acc

    def reflected(self) -> "Poly":
        """p(-x)."""
        return poly([(-1) ** k * c for k, c in enumerate(self.coeffs)])

    def times_x(self, k: int = 1) -> "Poly":
        if self.is_zero():
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def compose_linear(self, scale_: RatLike, offset: RatLike = 0) -> "Poly":
        """p(scale*x + offset)."""
        s, o = rat(scale_), rat(offset)
        acc = poly([])
        for c in reversed(self.coeffs):
            acc = poly([o]) * acc + acc.times_x() * s + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return format_series(Series(len(self.coeffs) - 1, self.coeffs)).rsplit(" + O", 1)[0]


def poly(values: Sequence[RatLike]) -> Poly:
    cs = list(_coerce(values))
    while cs and cs[-1] == 0:
        cs.pop()
    return Poly(tuple(cs))


def monomial(n: int, c: RatLike = 1) -> Poly:
    return poly([0] * n + [rat(c)])


def poly_to_series(p: Poly, trunc: int) -> Series:
    if not p.is_zero() and p.degree() > trunc:
        raise TruncationError("polynomial degree exceeds requested trunc")
    return series(list(p.coeffs), trunc)


def series_to_poly(f: Series) -> Poly:
    return poly(list(f.coeffs))
