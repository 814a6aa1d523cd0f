"""Exact partial sums, identity verification, and certified p-adic summation.

The central identity is

    sum_{n=0}^{N-1} n! [n^k x^k + U_k(x)] x^n = V_k(x) + N! x^N A_{k-1}(N; x)

which holds as an exact polynomial statement for any rational x.  For
integer x the tail vanishes p-adically, so the truncated sum converges to
V_k(x) in every Q_p at the same value; certificates record the achieved
p-adic distance exponent together with the provable lower bound
v_p(N!) + N*v_p(x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .padic import (
    Prime,
    ValExponent,
    factorial_norm_exponent,
    in_convergence_domain,
    padic_distance_exponent,
    vp,
)
from .poly import BivarPoly, Poly
from .recurrences import TripleFamily, shared_family


@dataclass(frozen=True)
class SeriesSpec:
    """A Theorem-2 style linear combination: coefficients C_1..C_k and point x."""

    k: int
    C: tuple[int, ...]
    x: Fraction

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if len(self.C) != self.k:
            raise ValueError("need exactly k coefficients C_1..C_k")


@dataclass(frozen=True)
class SumCertificate:
    """Exact witness for one truncated p-adic summation.

    tail is the finite-identity remainder N! x^N A_{k-1}(N; x), so
    partial - target = tail holds exactly, and the p-adic distance from the
    partial sum to the target is at most p^(-bound_exponent).
    """

    k: int
    N: int
    x: Fraction
    p: Prime
    partial: Fraction
    target: Fraction
    tail: Fraction
    distance_exponent: ValExponent
    bound_exponent: int

    def __post_init__(self):
        assert self.partial - self.target == self.tail, "certificate algebra broken"
        assert self.distance_exponent >= self.bound_exponent, (
            f"achieved exponent {self.distance_exponent} below bound {self.bound_exponent}"
        )

    @property
    def ok(self) -> bool:
        return True  # construction already enforces soundness


@dataclass(frozen=True)
class IdentityCheck:
    """Both sides of the finite identity at (k, N, x); lhs == rhs always."""

    k: int
    N: int
    x: Fraction
    lhs: Fraction
    rhs: Fraction
    tail: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def partial_sum_Sk(k: int, N: int, x: Fraction | int) -> Fraction:
    """Exact S_k(N; x) = sum_{n=0}^{N-1} n! n^k x^n, with 0^0 = 1."""
    if N < 1:
        raise ValueError("N must be >= 1")
    x = Fraction(x)
    total = Fraction(1) if k == 0 else Fraction(0)  # n = 0 term, 0^0 = 1
    fact = 1
    xpow = x
    for n in range(1, N):
        total += fact * n**k * xpow
        fact *= n + 1
        xpow *= x
    return total


def _partial_bracket_sum(k: int, N: int, x: Fraction, U: Poly) -> Fraction:
    """sum_{n=0}^{N-1} n! [n^k x^k + U_k(x)] x^n with running factorial."""
    Ux = U(x)
    xk = x**k
    total = Fraction(0)
    fact = 1
    xpow = Fraction(1)
    for n in range(N):
        total += fact * (n**k * xk + Ux) * xpow
        fact *= n + 1
        xpow *= x
    return total


def verify_identity(
    k: int, N: int, x: Fraction | int, family: TripleFamily | None = None
) -> IdentityCheck:
    """Evaluate both sides of the finite identity exactly and compare.

    Inequality can only arise from an implementation bug; the identity
    itself holds for every rational x.
    """
    if k < 1 or N < 1:
        raise ValueError("k and N must be >= 1")
    fam = family or shared_family()
    x = Fraction(x)
    trip = fam.triple(k)
    lhs = _partial_bracket_sum(k, N, x, trip.U)
    tail = Fraction(math.factorial(N)) * x**N * trip.A.eval(N, x)
    rhs = trip.V(x) + tail
    return IdentityCheck(k, N, x, lhs, rhs, tail)


def invariant_sum(k: int, x: int, family: TripleFamily | None = None) -> Fraction:
    """The common p-adic value V_k(x) of the infinite series, for integer x."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not isinstance(x, int):
        raise TypeError("p-adic invariance holds for integer x only")
    fam = family or shared_family()
    return Fraction(fam.V(k)(x))


def truncated_padic_sum(
    k: int, x: int, p: Prime, N: int, family: TripleFamily | None = None
) -> SumCertificate:
    """Certificate that the N-term partial sum is p-adically close to V_k(x)."""
    if not isinstance(x, int) or x == 0:
        raise ValueError("x must be a nonzero integer")
    if not in_convergence_domain(x, p):
        raise ValueError(f"x = {x} lies outside Z_{int(p)}")
    check = verify_identity(k, N, x, family)
    target = check.lhs - check.tail  # == V_k(x) exactly
    bound = factorial_norm_exponent(N, p) + N * vp(x, p).value
    dist = padic_distance_exponent(check.lhs, target, p)
    return SumCertificate(k, N, Fraction(x), p, check.lhs, target, check.tail, dist, bound)


def build_P_Q(
    spec: SeriesSpec, family: TripleFamily | None = None
) -> tuple[BivarPoly, Poly]:
    """P(n; x) = sum_j C_j [n^j x^j + U_j(x)] and Q(x) = sum_j C_j V_j(x).

    The sum of the series at integer x is Q(x); linearity over the per-j
    identities forces Q to combine the V_j (not the U_j).
    """
    fam = family or shared_family()
    P = BivarPoly.make([])
    Q = Poly.make([], "x")
    for j in range(1, spec.k + 1):
        c = spec.C[j - 1]
        if c == 0:
            continue
        nj_xj = BivarPoly.make([Poly.make([], "n")] * j + [Poly.monomial(j, 1, "n")])
        Uj_layers = BivarPoly.make([Poly.const(u, "n") for u in fam.U(j).coeffs])
        P = P + (nj_xj + Uj_layers).scale(c)
        Q = Q + fam.V(j).scale(c)
    return P, Q


def truncated_combo_sum(
    spec: SeriesSpec, p: Prime, N: int, family: TripleFamily | None = None
) -> SumCertificate:
    """Certificate for the Theorem-2 combination sum_n n! P(n; x) x^n -> Q(x)."""
    x = spec.x
    if x.denominator != 1:
        raise ValueError("p-adic invariance requires integer x")
    xi = int(x)
    fam = family or shared_family()
    P, Q = build_P_Q(spec, fam)
    target = Fraction(Q(xi))
    total = Fraction(0)
    fact = 1
    xpow = Fraction(1)
    for n in range(N):
        total += fact * P.eval(n, xi) * xpow
        fact *= n + 1
        xpow *= xi
    tail = total - target  # == N! x^N sum_j C_j A_{j-1}(N; x)
    dist = padic_distance_exponent(total, target, p)
    if xi == 0:
        bound = 0
    else:
        bound = factorial_norm_exponent(N, p) + N * vp(xi, p).value
    return SumCertificate(spec.k, N, x, p, total, target, tail, dist, bound)
