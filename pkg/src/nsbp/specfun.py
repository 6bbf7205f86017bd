"""Special functions: modified Bessel I, Laguerre polynomials, confluent
hypergeometric 1F1 and its parameter derivatives, Gamma, digamma.

Series-based functions stop when a geometric tail bound falls below
``2**-(prec + 8)`` relative to the accumulated sum, so every caller gets
full working precision.  Finite sums (Laguerre, terminating 1F1,
generalized binomials) are evaluated exactly when all inputs are exact
rationals, which the polynomial-identity tests rely on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import mpmath
from mpmath import mp, mpf

from .errors import DomainError, PoleError, PrecisionError
from .precision import Scalar, is_exact, to_mpf, working_prec

_MAX_SERIES_TERMS = 100_000


def _tail_threshold() -> mpf:
    """Relative size below which a series tail is negligible at mp.prec."""
    return mpf(2) ** (-(mp.prec + 8))


# ---------------------------------------------------------------------------
# elementary exact helpers
# ---------------------------------------------------------------------------

def binom_general(a: Scalar, m: int) -> Scalar:
    """Generalized binomial coefficient C(a, m) = a(a-1)...(a-m+1)/m!.

    Exact for int/Fraction ``a``; mpf otherwise.  ``m`` must be a
    non-negative integer (C(a, m) = 0 for m < 0 by convention).
    """
    if m < 0:
        return Fraction(0) if is_exact(a) else mpf(0)
    num = Fraction(1) if is_exact(a) else mpf(1)
    for i in range(m):
        num *= a - i
    return num / _factorial_int(m)


def _factorial_int(m: int) -> int:
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def pochhammer(a: Scalar, m: int) -> Scalar:
    """Rising factorial (a)_m = a(a+1)...(a+m-1); exact for exact input."""
    out = Fraction(1) if is_exact(a) else mpf(1)
    for i in range(m):
        out *= a + i
    return out


# ---------------------------------------------------------------------------
# modified Bessel function of the first kind
# ---------------------------------------------------------------------------

def bessel_i_scaled(nu: Scalar, u: Scalar, prec: int | None = None) -> mpf:
    """Entire part of the Bessel series: I_nu(2 sqrt(u)) / u^(nu/2).

    Equals sum_{i>=0} u^i / (Gamma(i+1) Gamma(nu+i+1)) and is well defined
    for every u >= 0, which sidesteps the 0*inf ambiguity of the weight
    functions at the hard edge.
    """
    with working_prec(prec):
        u_f = to_mpf(u)
        nu_f = to_mpf(nu)
        if u_f < 0:
            raise DomainError(f"bessel_i_scaled needs u >= 0, got {u_f}")
        thresh = _tail_threshold()
        term = mpmath.rgamma(nu_f + 1)
        total = term
        i = 0
        while True:
            i += 1
            term = term * u_f / (i * (nu_f + i))
            total += term
            # positive terms: once term/total is tiny and the ratio is < 1/2
            # the geometric tail is bounded by twice the current term
            if term < total * thresh and 2 * u_f < (i + 1) * (nu_f + i + 1):
                return +total
            if i > _MAX_SERIES_TERMS:
                raise PrecisionError("Bessel series did not meet its tail bound")


def bessel_i(nu: Scalar, z: Scalar, prec: int | None = None) -> mpf:
    """Modified Bessel function I_nu(z) for nu > -1, z >= 0, by power series."""
    with working_prec(prec):
        nu_f = to_mpf(nu)
        z_f = to_mpf(z)
        if nu_f <= -1:
            raise DomainError(f"bessel_i needs nu > -1, got {nu_f}")
        if z_f < 0:
            raise DomainError(f"bessel_i needs z >= 0, got {z_f}")
        if z_f == 0:
            if nu_f == 0:
                return mpf(1)
            if nu_f > 0:
                return mpf(0)
            raise DomainError(f"I_nu diverges at z=0 for nu={nu_f} < 0")
        u = (z_f / 2) ** 2
        return (z_f / 2) ** nu_f * bessel_i_scaled(nu_f, u)


# ---------------------------------------------------------------------------
# Laguerre polynomials
# ---------------------------------------------------------------------------

def laguerre(k: int, alpha: Scalar, x: Scalar):
    """Generalized Laguerre polynomial L_k^(alpha)(x) by its explicit sum.

    sum_{j=0}^{k} (-1)^j C(k+alpha, k-j) x^j / j!

    Exact Fraction result when alpha and x are exact; mpf otherwise.
    """
    if k < 0:
        raise DomainError(f"laguerre needs k >= 0, got {k}")
    exact = is_exact(alpha) and is_exact(x)
    if not exact:
        alpha = to_mpf(alpha)
        x = to_mpf(x)
    total = Fraction(0) if exact else mpf(0)
    xpow = Fraction(1) if exact else mpf(1)
    for j in range(k + 1):
        total += (-1) ** j * binom_general(alpha + k, k - j) * xpow / _factorial_int(j)
        xpow = xpow * x
    return total


def laguerre_poly_coeffs(k: int, alpha: Scalar) -> list:
    """Coefficient list [c_0, ..., c_k] of L_k^(alpha)(x) in powers of x."""
    if k < 0:
        raise DomainError(f"laguerre needs k >= 0, got {k}")
    return [
        (-1) ** j * binom_general(alpha + k, k - j) * (
            Fraction(1, _factorial_int(j)) if is_exact(alpha) else mpf(1) / _factorial_int(j)
        )
        for j in range(k + 1)
    ]


# ---------------------------------------------------------------------------
# confluent hypergeometric function and parameter derivatives
# ---------------------------------------------------------------------------

def _is_nonpositive_int(v: Scalar) -> bool:
    if isinstance(v, int):
        return v <= 0
    if isinstance(v, Fraction):
        return v.denominator == 1 and v <= 0
    v_f = to_mpf(v)
    return v_f <= 0 and v_f == mpmath.floor(v_f)


def hyp1f1(a: Scalar, b: Scalar, z: Scalar, prec: int | None = None) -> mpf:
    """Kummer's 1F1(a; b; z) = sum (a)_j / (b)_j z^j / j!.

    Terminates exactly when ``a`` is a non-positive integer; otherwise the
    Pochhammer series is summed to the package tail bound.  Raises
    PoleError when (b)_j vanishes before the series terminates.
    """
    with working_prec(prec):
        a_f, b_f, z_f = to_mpf(a), to_mpf(b), to_mpf(z)
        terminates_at = None
        if _is_nonpositive_int(a):
            terminates_at = int(mpmath.nint(-a_f))
        thresh = _tail_threshold()
        term = mpf(1)
        total = mpf(1)
        maxmag = mpf(1)
        j = 0
        while True:
            if terminates_at is not None and j >= terminates_at:
                break
            bj = b_f + j
            if bj == 0:
                raise PoleError(f"1F1 pole: b + {j} = 0 before termination (b={b_f})")
            term = term * (a_f + j) * z_f / (bj * (j + 1))
            total += term
            maxmag = max(maxmag, abs(term))
            j += 1
            if terminates_at is None:
                # factorial decay dominates once j is past |z| and |a - b| scales
                if abs(term) < (abs(total) + maxmag) * thresh and j > 2 * abs(z_f) + 2:
                    break
            if j > _MAX_SERIES_TERMS:
                raise PrecisionError("1F1 series did not meet its tail bound")
        if abs(total) < maxmag * thresh * 2 ** 16 and maxmag > 1:
            # heavy cancellation: result may have lost most of its digits
            if abs(total) < maxmag * mpf(2) ** (-mp.prec + 16):
                raise PrecisionError(
                    "1F1 cancellation exhausted the working precision; raise prec"
                )
        return +total


def hyp1f1_dparam(a: Scalar, b: Scalar, z: Scalar, which: str, prec: int | None = None) -> mpf:
    """Derivative of 1F1(a; b; z) with respect to one parameter.

    which='first' differentiates in ``a``, which='second' in ``b``.  The
    series is differentiated term by term using joint recurrences for
    ((a)_j, d(a)_j/da) and (1/(b)_j, d(1/(b)_j)/db), which stay finite
    through zeros of (a)_j, so terminating base series pose no problem.
    """
    if which not in ("first", "second"):
        raise DomainError(f"which must be 'first' or 'second', got {which!r}")
    with working_prec(prec):
        a_f, b_f, z_f = to_mpf(a), to_mpf(b), to_mpf(z)
        thresh = _tail_threshold()
        p, dp = mpf(1), mpf(0)       # (a)_j and its a-derivative
        r, dr = mpf(1), mpf(0)       # 1/(b)_j and its b-derivative
        zj = mpf(1)                   # z^j / j!
        total = mpf(0)
        maxmag = mpf(0)
        j = 0
        while True:
            if which == "first":
                t = dp * r * zj
            else:
                t = p * dr * zj
            total += t
            maxmag = max(maxmag, abs(t))
            bj = b_f + j
            if bj == 0:
                raise PoleError(f"1F1 parameter derivative: pole at b + {j} = 0")
            p, dp = p * (a_f + j), dp * (a_f + j) + p
            r, dr = r / bj, dr / bj - r / bj ** 2
            zj = zj * z_f / (j + 1)
            j += 1
            ref = max(abs(total), maxmag * mpf(2) ** (-mp.prec // 2), mpf(2) ** (-mp.prec))
            if j > 2 * abs(z_f) + 4 and abs(dp * r * zj) + abs(p * dr * zj) + abs(p * r * zj) * j < ref * thresh:
                return +total
            if j > _MAX_SERIES_TERMS:
                raise PrecisionError("1F1 parameter-derivative series did not converge")


# ---------------------------------------------------------------------------
# Gamma, digamma and removable-singularity helpers
# ---------------------------------------------------------------------------

def gamma_fn(z: Scalar, prec: int | None = None) -> mpf:
    """Gamma function; PoleError at non-positive integers."""
    with working_prec(prec):
        if _is_nonpositive_int(z):
            raise PoleError(f"Gamma pole at z={z}")
        return mpmath.gamma(to_mpf(z))


def rgamma(z: Scalar, prec: int | None = None) -> mpf:
    """Reciprocal Gamma function (entire; zero at non-positive integers)."""
    with working_prec(prec):
        if _is_nonpositive_int(z):
            return mpf(0)
        return mpmath.rgamma(to_mpf(z))


def digamma(z: Scalar, prec: int | None = None) -> mpf:
    """Digamma psi_0(z); PoleError at non-positive integers."""
    with working_prec(prec):
        if _is_nonpositive_int(z):
            raise PoleError(f"digamma pole at z={z}")
        return mpmath.digamma(to_mpf(z))


def psi_over_gamma(z: Scalar, prec: int | None = None) -> mpf:
    """psi_0(z) / Gamma(z) with its removable singularities filled in.

    At z = -m (m >= 0 integer) both factors blow up but the ratio tends to
    (-1)^(m+1) * m!.
    """
    with working_prec(prec):
        if _is_nonpositive_int(z):
            m = int(round(-float(to_mpf(z))))
            return mpf((-1) ** (m + 1) * _factorial_int(m))
        return mpmath.digamma(to_mpf(z)) * mpmath.rgamma(to_mpf(z))


def euler_gamma(prec: int | None = None) -> mpf:
    """Euler-Mascheroni constant at working precision."""
    with working_prec(prec):
        return +mp.euler


def log_mpf(x: Scalar, prec: int | None = None) -> mpf:
    """Natural logarithm of a positive scalar at working precision."""
    with working_prec(prec):
        x_f = to_mpf(x)
        if x_f <= 0:
            raise DomainError(f"log needs a positive argument, got {x_f}")
        return mpmath.log(x_f)
