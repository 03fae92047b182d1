"""Coefficient triangles and umbral/Sheffer operators.

A degree-preserving linear operator U is stored as its lower-triangular
coefficient matrix: U x^n = sum_k coeff[n][k] x^k.  Basic sets are built from
delta operators by five independent routes (transfer, Steffensen, recurrence,
generating function, Kurbanov-Maksimov closed form); all five must agree
triangle-exactly, which is the flagship cross-validation of the package.

Every route requires the delta indicator resolved to trunc >= N+1 (the
transfer route loses one order through its internal shift); a shallower
indicator raises TruncationError rather than producing an incomplete row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from . import bell
from .errors import NotAppell, NotDelta, NotUnitary, OrderError, SingularTriangle, TruncationError
from .fps import (
    Poly,
    Series,
    comp_inv,
    compose,
    derive,
    exp_series,
    mul_inv,
    poly,
    pow_rat,
    series,
    x_series,
)
from .operators import DeltaOp, ShiftOp, apply_op, is_appell, validate_delta
from .rational import RatLike, rat


# ---------------------------------------------------------------------------
# Triangle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Triangle:
    """Ragged lower-triangular matrix of exact rationals; row n has n+1 entries."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries")

    @property
    def n(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> Fraction:
        if 0 <= k <= n <= self.n:
            return self.rows[n][k]
        return Fraction(0)

    def row_poly(self, n: int) -> Poly:
        return poly(list(self.rows[n]))

    def apply_poly(self, p: Poly) -> Poly:
        """U p for the represented operator; needs depth >= deg p."""
        if p.is_zero():
            return p
        d = int(p.degree())
        if d > self.n:
            raise TruncationError(f"triangle depth {self.n} < deg p = {d}")
        out = poly([])
        for m in range(d + 1):
            c = p[m]
            if c:
                out = out + c * self.row_poly(m)
        return out

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.rows[n][n] for n in range(self.n + 1))

    def is_unitary(self) -> bool:
        return all(d == 1 for d in self.diagonal())

    def truncated(self, n: int) -> "Triangle":
        if n > self.n:
            raise TruncationError(f"cannot extend triangle depth {self.n} to {n}")
        return Triangle(self.rows[: n + 1])


def triangle(rows: Sequence[Sequence[RatLike]]) -> Triangle:
    return Triangle(tuple(tuple(rat(v) for v in row) for row in rows))


def tri_identity(n: int) -> Triangle:
    return Triangle(
        tuple(tuple(Fraction(1 if k == m else 0) for k in range(m + 1)) for m in range(n + 1))
    )


def tri_from_polys(polys: Sequence[Poly]) -> Triangle:
    rows = []
    for n, p in enumerate(polys):
        if not p.is_zero() and p.degree() > n:
            raise ValueError(f"row {n} polynomial has degree {p.degree()} > {n}")
        rows.append(tuple(p[k] for k in range(n + 1)))
    return Triangle(tuple(rows))


def tri_compose(phi: Triangle, psi: Triangle) -> Triangle:
    """Triangle of the operator product phi o psi (psi applied first)."""
    n = min(phi.n, psi.n)
    rows = []
    for m in range(n + 1):
        row = []
        for k in range(m + 1):
            s = Fraction(0)
            for j in range(k, m + 1):
                a = phi.entry(j, k)
                b = psi.entry(m, j)
                if a and b:
                    s += a * b
            row.append(s)
        rows.append(tuple(row))
    return Triangle(tuple(rows))


def tri_invert(phi: Triangle) -> Triangle:
    """Inverse triangle by forward substitution; needs a nonzero diagonal."""
    for n, d in enumerate(phi.diagonal()):
        if d == 0:
            raise SingularTriangle(f"zero diagonal entry at row {n}")
    inv = [[Fraction(0)] * (m + 1) for m in range(phi.n + 1)]
    for n in range(phi.n + 1):
        inv[n][n] = 1 / phi.rows[n][n]
        for k in range(n - 1, -1, -1):
            s = Fraction(0)
            for j in range(k, n):
                if inv[j][k] and phi.rows[n][j]:
                    s += inv[j][k] * phi.rows[n][j]
            inv[n][k] = -s / phi.rows[n][n]
    return Triangle(tuple(tuple(row) for row in inv))


def tri_power(phi: Triangle, s: int) -> Triangle:
    """Integer operator power via repeated composition (inverse for s < 0)."""
    base = phi if s >= 0 else tri_invert(phi)
    out = tri_identity(phi.n)
    for _ in range(abs(s)):
        out = tri_compose(out, base)
    return out


def transform_seq(
    phi: Triangle, a: Sequence[RatLike], mode: str = "row", start: int = 0
) -> list[Fraction]:
    """The two dual sequence transforms attached to a triangle.

    row mode:    b_n = sum_{k=start}^n  coeff[n][k] a_k   (a indexed from start)
    column mode: b_k = sum_{n=k}^jmax   coeff[n][k] a_n
    Applying the same mode with the inverse triangle recovers the input.
    """
    vals = [rat(v) for v in a]
    m = len(vals)
    out = []
    if mode == "row":
        for i in range(m):
            n = start + i
            s = Fraction(0)
            for j in range(i + 1):
                c = phi.entry(n, start + j)
                if c:
                    s += c * vals[j]
            out.append(s)
    elif mode == "column":
        jmax = start + m - 1
        for i in range(m):
            k = start + i
            s = Fraction(0)
            for j in range(i, m):
                c = phi.entry(start + j, k)
                if c:
                    s += c * vals[j]
            out.append(s)
    else:
        raise ValueError("mode must be 'row' or 'column'")
    return out


# ---------------------------------------------------------------------------
# umbral / Sheffer operators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UmbralOp:
    """Basic-set operator: triangle plus (optionally cached) delta operator."""

    tri: Triangle
    delta: DeltaOp | None = None

    def __post_init__(self):
        t = self.tri
        if t.entry(0, 0) != 1:
            raise ValueError("umbral triangle must have coeff[0][0] = 1")
        for n in range(1, t.n + 1):
            if t.entry(n, 0) != 0:
                raise ValueError("umbral triangle must have coeff[n][0] = 0 for n >= 1")
            if t.entry(n, n) == 0:
                raise ValueError("umbral triangle must have nonzero diagonal")
        if self.delta is not None:
            c = self.delta.unit
            for n in range(t.n + 1):
                if t.entry(n, n) != c ** (-n):
                    raise ValueError("diagonal must equal unit^(-n)")

    @property
    def n(self) -> int:
        return self.tri.n

    def basic_poly(self, n: int) -> Poly:
        return self.tri.row_poly(n)

    def is_unitary(self) -> bool:
        return self.tri.is_unitary()


@dataclass(frozen=True)
class ShefferOp:
    """Sheffer operator s = A o phi for an Appell A and umbral phi."""

    tri: Triangle
    delta: DeltaOp
    appell: ShiftOp

    @property
    def n(self) -> int:
        return self.tri.n

    def sheffer_poly(self, n: int) -> Poly:
        return self.tri.row_poly(n)


def _require_depth(Q: DeltaOp, n: int):
    if Q.indicator.trunc < n + 1:
        raise TruncationError(
            f"delta indicator trunc {Q.indicator.trunc} < {n + 1}; rebuild the operator deeper"
        )


def _dq_ratio(Q: DeltaOp) -> Series:
    """Indicator of D/Q (order-0 series, constant term 1/unit)."""
    return mul_inv(Q.indicator.shift_down(1))


def basic_transfer(Q: DeltaOp, n: int) -> UmbralOp:
    """Rows p_m = Q'(D/Q)^{m+1} x^m."""
    _require_depth(Q, n)
    qprime = derive(Q.indicator)
    ratio = _dq_ratio(Q)
    rows: list[Poly] = []
    power = ratio
    for m in range(n + 1):
        op = ShiftOp(qprime * power)
        rows.append(apply_op(op, _monomial(m)))
        power = power * ratio
    return UmbralOp(tri_from_polys(rows), Q)


def basic_steffensen(Q: DeltaOp, n: int) -> UmbralOp:
    """Rows p_m = x (D/Q)^m x^{m-1} (row 0 is [1])."""
    _require_depth(Q, n)
    ratio = _dq_ratio(Q)
    rows: list[Poly] = [poly([1])]
    power = ratio
    for m in range(1, n + 1):
        rows.append(apply_op(ShiftOp(power), _monomial(m - 1)).times_x())
        power = power * ratio
    return UmbralOp(tri_from_polys(rows), Q)


def basic_recurrence(Q: DeltaOp, n: int) -> UmbralOp:
    """Rows p_{m+1} = x (Q')^{-1} p_m; inherently sequential."""
    _require_depth(Q, n)
    qprime_inv = ShiftOp(mul_inv(derive(Q.indicator)))
    rows: list[Poly] = [poly([1])]
    for _ in range(n):
        rows.append(apply_op(qprime_inv, rows[-1]).times_x())
    return UmbralOp(tri_from_polys(rows), Q)


def basic_genfunc(Q: DeltaOp, n: int) -> UmbralOp:
    """Columns from the generating function: coeff[m][k] = m! [t^m] invQ(t)^k / k!."""
    _require_depth(Q, n)
    nn = max(n, 1)
    g = comp_inv(Q.indicator.truncate(nn) if Q.indicator.trunc > nn else Q.indicator)
    rows = [[Fraction(0)] * (m + 1) for m in range(n + 1)]
    power = series([1], g.trunc)
    fact_k = 1
    for k in range(n + 1):
        if k:
            power = power * g
            fact_k *= k
        for m in range(k, n + 1):
            rows[m][k] = power[m] * Fraction(factorial(m), fact_k)
    return UmbralOp(Triangle(tuple(tuple(r) for r in rows)), Q)


def basic_km(Q: DeltaOp, n: int) -> UmbralOp:
    """Closed-form rows: p_m = sum_j x^j/j! W^j x^m, W = invQ(D) - D."""
    _require_depth(Q, n)
    nn = max(n, 1)
    g = comp_inv(Q.indicator.truncate(nn) if Q.indicator.trunc > nn else Q.indicator)
    w = ShiftOp(g - x_series(g.trunc))
    rows: list[Poly] = []
    for m in range(n + 1):
        acc = poly([])
        u = _monomial(m)
        j = 0
        fact = 1
        while not u.is_zero():
            acc = acc + u.times_x(j) / fact
            u = apply_op(w, u)
            j += 1
            fact *= j
        rows.append(acc)
    return UmbralOp(tri_from_polys(rows), Q)


BASIC_ROUTES: dict[str, Callable[[DeltaOp, int], UmbralOp]] = {
    "transfer": basic_transfer,
    "steffensen": basic_steffensen,
    "recurrence": basic_recurrence,
    "genfunc": basic_genfunc,
    "km": basic_km,
}


def basic_from_inverse_series(f: Series, n: int, delta: DeltaOp | None = None) -> UmbralOp:
    """Basic triangle whose column-1 EGF is f (= indicator of Q^[-1]).

    coeff[m][k] = B_{m,k}(a_1, ..., a_{m-k+1}) with a_j = j! [x^j] f; this is
    the Bell-polynomial route, independent of the five operator routes.
    """
    if f.order() != 1:
        raise NotUnitary("inverse indicator must have order 1")
    if f.trunc < n:
        raise TruncationError(f"need trunc >= {n}, have {f.trunc}")
    a = [factorial(j) * f[j] for j in range(1, n + 1)]
    rows = [[Fraction(0)] * (m + 1) for m in range(n + 1)]
    rows[0][0] = Fraction(1)
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            rows[m][k] = bell.partial_bell(m, k, a)
    return UmbralOp(Triangle(tuple(tuple(r) for r in rows)), delta)


def delta_of(phi: UmbralOp | Triangle, trunc: int | None = None) -> DeltaOp:
    """Recover Q from the triangle: column 1 is the EGF of Q^[-1]'s indicator."""
    tri = phi.tri if isinstance(phi, UmbralOp) else phi
    n = tri.n if trunc is None else min(trunc, tri.n)
    if n < 1:
        raise NotDelta("triangle too shallow to determine a delta operator")
    inv_ind = series(
        [Fraction(0)] + [tri.entry(m, 1) / factorial(m) for m in range(1, n + 1)], n
    )
    try:
        return validate_delta(ShiftOp(comp_inv(inv_ind)))
    except OrderError as exc:
        raise NotDelta(f"column 1 does not start with a nonzero entry: {exc}") from exc


def is_binomial_type(tri: Triangle) -> bool:
    """Detect binomial type == basicness.

    Checks the coefficient identity
        C(i+j, i) coeff[n][i+j] = sum_k C(n,k) coeff[k][i] coeff[n-k][j]
    for all n <= N, i + j <= n, and additionally verifies
        p_n(x+y) = sum_k C(n,k) p_k(x) p_{n-k}(y)
    on an (n+2)^2 rational grid per degree.
    """
    if tri.entry(0, 0) != 1:
        return False
    for m in range(1, tri.n + 1):
        if tri.entry(m, m) == 0:
            return False
    for n in range(tri.n + 1):
        for i in range(n + 1):
            for j in range(n - i + 1):
                lhs = comb(i + j, i) * tri.entry(n, i + j)
                rhs = Fraction(0)
                for k in range(n + 1):
                    a = tri.entry(k, i)
                    b = tri.entry(n - k, j)
                    if a and b:
                        rhs += comb(n, k) * a * b
                if lhs != rhs:
                    return False
    # grid check of the bivariate identity
    for n in range(tri.n + 1):
        pn = tri.row_poly(n)
        pk = [tri.row_poly(k) for k in range(n + 1)]
        pts = [Fraction(i, 2) for i in range(n + 2)]
        for x in pts:
            for y in pts:
                lhs = pn(x + y)
                rhs = sum(comb(n, k) * pk[k](x) * pk[n - k](y) for k in range(n + 1))
                if lhs != rhs:
                    return False
    return True


def sheffer(A: ShiftOp, phi: UmbralOp) -> ShefferOp:
    """Sheffer operator A o phi; rows are A applied to the basic polynomials."""
    if not is_appell(A):
        raise NotAppell("Sheffer construction requires an invertible (Appell) operator")
    rows = [apply_op(A, phi.basic_poly(m)) for m in range(phi.n + 1)]
    delta = phi.delta if phi.delta is not None else delta_of(phi)
    return ShefferOp(tri_from_polys(rows), delta, A)


def cross(C: ShiftOp, u: RatLike, phi: UmbralOp) -> ShefferOp:
    """Cross operator C^u o phi for rational u; requires C~(0) = 1 exactly."""
    appell = ShiftOp(pow_rat(C.indicator, rat(u)))
    return sheffer(appell, phi)


def connection_constants(phi: UmbralOp, psi: UmbralOp) -> Triangle:
    """Triangle c with phi_n = sum_k c[n][k] psi_k."""
    return tri_compose(tri_invert(psi.tri), phi.tri)


def niederhausen(phi: UmbralOp) -> UmbralOp:
    """Coefficient transform coeff[n][k] = C(n,k) phi_{n-k}(k).

    The result is again basic; its delta R satisfies R^[-1] indicator
    = t e^{invQ(t)}, which is asserted here together with basicness.
    """
    if phi.delta is None:
        raise ValueError("niederhausen needs the source delta cached")
    n = phi.n
    rows = [[Fraction(0)] * (m + 1) for m in range(n + 1)]
    for m in range(n + 1):
        for k in range(m + 1):
            rows[m][k] = comb(m, k) * phi.basic_poly(m - k)(k)
    tri = Triangle(tuple(tuple(r) for r in rows))
    if n < 1:
        return UmbralOp(tri, None)
    # check the generating identity: column-1 EGF equals t * e^{invQ(t)}
    ind = phi.delta.indicator
    g = comp_inv(ind.truncate(n) if ind.trunc > n else ind)
    expected = exp_series(g) * series([0, 1], g.trunc)
    for m in range(n + 1):
        if tri.entry(m, 1) / factorial(m) != expected[m]:
            raise AssertionError("niederhausen generating-function check failed")
    return UmbralOp(tri, validate_delta(ShiftOp(comp_inv(expected))))


def power_coeffs(Q: DeltaOp, n: int) -> list[Fraction]:
    """EGF coefficients a^{(n)}_{n-k} of (D/Q)^n for k = 1..n.

    Returned as [a_{n-1}, a_{n-2}, ..., a_0] indexed by k-1; each equals
    coeff[n][k]_phi / C(n-1, k-1).
    """
    phi = basic_transfer(Q, n)
    return [phi.tri.entry(n, k) / comb(n - 1, k - 1) for k in range(1, n + 1)]


def power_coeffs_direct(Q: DeltaOp, n: int) -> list[Fraction]:
    """Oracle route: expand (D/Q)^n directly and read EGF coefficients."""
    ratio = _dq_ratio(Q)
    p = series([1], ratio.trunc)
    for _ in range(n):
        p = p * ratio
    return [p[n - k] * factorial(n - k) for k in range(1, n + 1)]


def coeff_via_ratio(Q: DeltaOp, n: int) -> Triangle:
    """coeff[m][k] extracted as the k-th coefficient of (Q^[-1]/D)^k x^m."""
    _require_depth(Q, n)
    g = comp_inv(Q.indicator.truncate(n + 1) if Q.indicator.trunc > n + 1 else Q.indicator)
    ratio = g.shift_down(1)  # invQ(t)/t, order 0
    rows = [[Fraction(0)] * (m + 1) for m in range(n + 1)]
    rows[0][0] = Fraction(1)
    power = series([1], ratio.trunc)
    for k in range(1, n + 1):
        power = power * ratio
        for m in range(k, n + 1):
            rows[m][k] = power[m - k] * Fraction(factorial(m), factorial(k))
    return Triangle(tuple(tuple(r) for r in rows))


def special_class_check(phi: UmbralOp, U: ShiftOp, V: ShiftOp, n: int) -> bool:
    """Verify phi X^n = sum_k coeff[n][k] X^k U^k V^n phi as operators.

    Both sides are applied to x^m for all m <= N - n.
    """
    N = phi.n
    if n > N:
        raise TruncationError("n exceeds triangle depth")
    vn = V**n
    uk = [U**k for k in range(n + 1)]
    for m in range(N - n + 1):
        lhs = phi.basic_poly(n + m)
        rhs = poly([])
        pm = phi.basic_poly(m)
        for k in range(n + 1):
            c = phi.tri.entry(n, k)
            if not c:
                continue
            term = apply_op(uk[k] * vn, pm)
            rhs = rhs + c * term.times_x(k)
        if lhs != rhs:
            return False
    return True


def commutation_expansion_check(phi: UmbralOp, n: int) -> bool:
    """Verify phi X^n = sum_k X^k B_{n,k}(g'(Q), g''(Q), ...) phi with g = invQ.

    The Bell arguments are shift-invariant operators (indicator series), so
    partial_bell runs directly on them.
    """
    if phi.delta is None:
        raise ValueError("needs the delta cached")
    N = phi.n
    q = phi.delta.indicator
    g = comp_inv(q)
    # j-th derivative of invQ, composed with Q: indicator of (invQ)^(j)(Q)
    args = []
    dj = g
    for _ in range(n):
        dj = derive(dj)
        args.append(compose(dj, q.truncate(dj.trunc) if q.trunc > dj.trunc else q))
    for m in range(N - n + 1):
        lhs = phi.basic_poly(n + m)
        pm = phi.basic_poly(m)
        rhs = poly([])
        for k in range(0 if n == 0 else 1, n + 1):  # B_{n,0} = 0 for n > 0
            b = bell.partial_bell(n, k, args)
            term = apply_op(ShiftOp(b), pm) if isinstance(b, Series) else rat(b) * pm
            rhs = rhs + term.times_x(k)
        if lhs != rhs:
            return False
    return True


def _monomial(m: int) -> Poly:
    return poly([0] * m + [1])
