"""Sigma operators: anchored pseudoinverses of delta operators on polynomials.

Q^{-1}_{(a)} is the unique right inverse of Q with value 0 at the anchor a:
QQ^{-1}_{(a)} = 1 and Q^{-1}_{(a)}Q = 1 - Ev_a.   For Q = D this is anchored
integration, for Q = Delta anchored summation; the same machinery yields
Faulhaber's formula, the operational Euler-Maclaurin identity and fractional
sums.  Sigma operators are deliberately exposed only as actions on
polynomials: they are not shift-invariant and must never be expanded as a
series in D (the divergent-geometric-series trap).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import TruncationError
from .fps import Poly, expm1, mul_inv, poly
from .operators import DeltaOp, apply_op, derivative_op, shift_by, validate_delta, divide
from .rational import RatLike, rat
from .umbral import basic_transfer, tri_invert

# Bernoulli numbers B_k (B_1 = -1/2), extended on demand; write-once per size.
_bernoulli_cache: list[Fraction] = []


def bernoulli_numbers(n: int) -> list[Fraction]:
    """B_0..B_n as exact rationals, from the EGF t/(e^t - 1)."""
    global _bernoulli_cache
    if len(_bernoulli_cache) < n + 1:
        egf = mul_inv(expm1(n + 1).shift_down(1))
        _bernoulli_cache = [egf[k] * factorial(k) for k in range(n + 1)]
    return _bernoulli_cache[: n + 1]


def bernoulli_polynomial(n: int) -> Poly:
    """B_n(x) = sum_k C(n,k) B_k x^{n-k}."""
    bs = bernoulli_numbers(n)
    out = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        out[n - k] = comb(n, k) * bs[k]
    return poly(out)


class SigmaOp:
    """Anchored pseudoinverse of a delta operator.

    Precomputes the basic triangle of Q to ``depth`` rows; the defining
    relations are asserted on monomials at construction.
    """

    def __init__(self, Q: DeltaOp, anchor: RatLike = 0, depth: int = 16, validate: bool = True):
        self.Q = Q
        self.anchor = rat(anchor)
        if Q.indicator.trunc < depth + 2:
            raise TruncationError(
                f"sigma at depth {depth} needs indicator trunc >= {depth + 2}"
            )
        self.depth = depth
        self._phi = basic_transfer(Q, depth + 1)
        self._phi_inv = tri_invert(self._phi.tri)
        if validate:
            for m in range(depth + 1):
                p = poly([0] * m + [1])
                assert apply_op(Q, self.apply(p)) == p
                assert self.apply(apply_op(Q, p)) == p - p(self.anchor)

    # -- the two constructions ------------------------------------------------

    def apply(self, p: Poly) -> Poly:
        """Corollary-series route: -(sum_n phi_n(a - x)/n! Q^{n-1} p)."""
        if p.is_zero():
            return p
        d = int(p.degree())
        if d + 1 > self.depth + 1:
            raise TruncationError(f"sigma depth {self.depth} < deg p = {d}")
        out = poly([])
        qpow = p  # Q^{n-1} p starting at n = 1
        for n in range(1, d + 2):
            fn = self._phi.basic_poly(n).compose_linear(-1, self.anchor)  # phi_n(a - x)
            out = out + fn * qpow / factorial(n)
            qpow = apply_op(self.Q, qpow)
        return -out

    def apply_basic_route(self, p: Poly) -> Poly:
        """Basic-set route: expand in {phi_n}, shift indices, re-anchor."""
        if p.is_zero():
            return p
        d = int(p.degree())
        coords = [rat(v) for v in (p[m] for m in range(d + 1))]
        # monomial coefficients -> basic coordinates: p = phi(sum c_n x^n), so
        # c_n = sum_{m>=n} inv[m][n] a_m (the column transform)
        basic_coords = [
            sum((self._phi_inv.entry(m, n) * coords[m] for m in range(n, d + 1)), Fraction(0))
            for n in range(d + 1)
        ]
        out = poly([])
        for n, c in enumerate(basic_coords):
            if c:
                out = out + c * self._phi.basic_poly(n + 1) / (n + 1)
        return out - out(self.anchor)

    def __call__(self, p: Poly) -> Poly:
        return self.apply(p)


def sigma_apply(Q: DeltaOp, a: RatLike, p: Poly, depth: int | None = None) -> Poly:
    """One-shot anchored sigma application (both routes asserted equal)."""
    d = 0 if p.is_zero() else int(p.degree())
    depth = d + 1 if depth is None else depth
    s = SigmaOp(Q, a, depth=depth, validate=False)
    out = s.apply(p)
    if out != s.apply_basic_route(p):
        raise AssertionError("sigma routes disagree")
    return out


def _delta_op(trunc: int) -> DeltaOp:
    return validate_delta(shift_by(1, trunc) - 1)


def faulhaber(n: int) -> Poly:
    """Power-sum polynomial: F_n(x) = sum_{k=0}^{x-1} k^n for integer x.

    Three routes are computed and must coincide exactly: the Bernoulli-number
    closed form, the anchored sigma of Delta, and the integral of the
    Bernoulli polynomial.
    """
    bs = bernoulli_numbers(n)
    closed = [Fraction(0)] * (n + 2)
    for k in range(n + 1):
        closed[n + 1 - k] = Fraction(comb(n + 1, k), n + 1) * bs[k]
    route1 = poly(closed)
    route2 = sigma_apply(_delta_op(n + 4), 0, poly([0] * n + [1]))
    route3 = bernoulli_polynomial(n).antiderivative(0)
    if not (route1 == route2 == route3):
        raise AssertionError("faulhaber routes disagree")
    return route1


def euler_maclaurin_residual(p: Poly, a: RatLike = 0) -> Poly:
    """Sum_a p - Int_a p, computed two ways (must match exactly).

    Route A subtracts the two anchored sigmas; route B is the operational
    Euler-Maclaurin sum over Bernoulli numbers, finite at degree + 1 terms.
    """
    a = rat(a)
    if p.is_zero():
        return p
    d = int(p.degree())
    trunc = d + 4
    route_a = sigma_apply(_delta_op(trunc), a, p) - sigma_apply(derivative_op(trunc), a, p)
    bs = bernoulli_numbers(d + 1)
    route_b = poly([])
    deriv = p
    for k in range(1, d + 2):
        if bs[k]:
            route_b = route_b + Fraction(bs[k], factorial(k)) * (deriv - deriv(a))
        deriv = deriv.derivative()
    if route_a != route_b:
        raise AssertionError("Euler-Maclaurin routes disagree")
    return route_a


def sigma_identities_check(Q: DeltaOp, R: DeltaOp, a: RatLike, depth: int) -> bool:
    """The four sigma identities, verified on monomials up to ``depth``.

    (a) Ev_a Q^{-1}_{(a)} = 0
    (b) (AQ)^{-1}_{(a)} = Q^{-1}_{(a)} A^{-1}  with A = R/Q (an Appell operator)
    (c) Q^{-1}_{(a)} = R^{-1}_{(a)} (R/Q)
    (d) Q/R applied directly = Q R^{-1}_{(a)} = Q R^{-1}_{(0)}
    """
    a = rat(a)
    sq = SigmaOp(Q, a, depth, validate=False)
    sr = SigmaOp(R, a, depth, validate=False)
    sr0 = SigmaOp(R, 0, depth, validate=False)
    r_over_q = divide(R, Q)
    q_over_r = divide(Q, R)
    aq = validate_delta(r_over_q * Q)  # equals R as an operator; built independently
    s_aq = SigmaOp(aq, a, depth, validate=False)
    a_inv = q_over_r  # (R/Q)^{-1} = Q/R
    for m in range(depth + 1):
        p = poly([0] * m + [1])
        if sq.apply(p)(a) != 0:
            return False
        if s_aq.apply(p) != sq.apply(apply_op(a_inv, p)):
            return False
        if sq.apply(p) != sr.apply(apply_op(r_over_q, p)):
            return False
        lhs = apply_op(q_over_r, p)
        if lhs != apply_op(Q, sr.apply(p)) or lhs != apply_op(Q, sr0.apply(p)):
            return False
    return True


def frac_sum_eval(p: Poly, a: RatLike, x: RatLike) -> Fraction:
    """The fractional sum: anchored Delta-sigma of p evaluated at x.

    For integers a <= x this reproduces sum_{k=a}^{x-1} p(k); the bounds may
    be arbitrary rationals.
    """
    if p.is_zero():
        return Fraction(0)
    d = int(p.degree())
    return sigma_apply(_delta_op(d + 4), a, p)(x)


def bernoulli2_poly(n: int) -> Poly:
    """Bernoulli polynomial of the second kind: B^{-1} applied to (x)_n.

    Checked against the anchored-integral oracle int_x^{x+1} (t)_n dt, and
    the commutation n phi_{n-1} = (psi_n)' of the two Sheffer families.
    """
    trunc = n + 3
    delta = _delta_op(trunc)
    b_inv = divide(delta, derivative_op(trunc))  # indicator (e^t - 1)/t
    falling = basic_transfer(delta, n + 1)
    route1 = apply_op(b_inv, falling.basic_poly(n))
    anti = falling.basic_poly(n).antiderivative(0)
    route2 = anti.shifted(1) - anti
    if route1 != route2:
        raise AssertionError("second-kind Bernoulli routes disagree")
    if n >= 1 and route1.derivative() != n * falling.basic_poly(n - 1):
        raise AssertionError("second-kind Bernoulli commutation check failed")
    return route1
