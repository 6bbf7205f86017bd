"""Multiple orthogonal polynomials of type I and II for modified Bessel
weights, in both the canonical two-parameter normalization (the "tilde"
families, exact polynomial data) and the ensemble rescaling used by the
correlation kernel.

Conventions
-----------
The canonical weights are

    w_nu(u) = u^(nu/2) * exp(-c u) * I_nu(2 sqrt(u)),   nu = alpha, alpha+1, ...

Bessel contiguity gives the closure  w_{nu+2} = u * w_nu - (nu+1) * w_{nu+1},
so every type I function lives in the two-dimensional module over
polynomials spanned by (w_alpha, w_{alpha+1}).  Type I functions are the
n-th Rodrigues derivatives of w_{alpha+n}; their explicit expansion

    qt_n(u) = sum_k (-c)^k C(n,k) w_{alpha+k}(u)

is reduced to the basis pair by contiguity, which keeps every relation in
this module exact over the rationals.  Type II polynomials pt_n are monic
with coefficients  (n!/k!) c^(k-n) L_{n-k}^{(-n-alpha-1)}(1/c).

The ensemble families are

    Q_n(x) = (beta/c)^(n+1) qt_n(beta x / c) / H_n,
    P_n(x) = (beta/c)^(-n)  pt_n(beta x / c),

with H_n = (-1)^n n! e^(1/c) c^(-alpha-n-1) the n-th moment of qt_n, so
that  integral x^i Q_j = delta_ij  for i <= j and the pair (Q_j, P_i) is
biorthonormal.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Dict, List, Tuple

import mpmath
from mpmath import mp, mpf

from .errors import DomainError
from .params import EnsembleParams
from .poly import Poly
from .precision import Scalar, is_exact, to_mpf, working_prec
from .specfun import (
    bessel_i_scaled,
    gamma_fn,
    hyp1f1,
    hyp1f1_dparam,
    laguerre,
    psi_over_gamma,
    rgamma,
    digamma,
)

_factorial_cache: Dict[int, int] = {0: 1}


def _factorial(n: int) -> int:
    if n not in _factorial_cache:
        _factorial_cache[n] = n * _factorial(n - 1)
    return _factorial_cache[n]


def _binom_int(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return _factorial(n) // (_factorial(k) * _factorial(n - k))


# ---------------------------------------------------------------------------
# canonical (tilde) families over a fixed (alpha, c)
# ---------------------------------------------------------------------------

class MOPFamily:
    """Memoized tilde families for one (alpha, c) pair.

    Construction extends internal tables under a lock; the polynomial
    objects handed out are immutable.
    """

    def __init__(self, alpha: Scalar, c: Scalar):
        self.alpha = alpha
        self.c = c
        self._lock = threading.RLock()
        self._typeII: Dict[int, Poly] = {}
        self._typeI: Dict[int, Tuple[Poly, Poly]] = {}
        # w_{alpha+m} = _wred[m][0] * w_alpha + _wred[m][1] * w_{alpha+1}
        self._wred: List[Tuple[Poly, Poly]] = [
            (Poly.const(1), Poly.zero()),
            (Poly.zero(), Poly.const(1)),
        ]

    # -- weight-basis bookkeeping -------------------------------------------
    def weight_reduction(self, m: int) -> Tuple[Poly, Poly]:
        """Coefficients of w_{alpha+m} over the basis (w_alpha, w_{alpha+1})."""
        if m < 0:
            raise DomainError(f"weight index shift must be >= 0, got {m}")
        with self._lock:
            x = Poly.x()
            while len(self._wred) <= m:
                j = len(self._wred) - 2
                p_j, q_j = self._wred[j]
                p_j1, q_j1 = self._wred[j + 1]
                fac = self.alpha + j + 1
                self._wred.append((x * p_j - fac * p_j1, x * q_j - fac * q_j1))
            return self._wred[m]

    # -- explicit families ----------------------------------------------------
    def typeII(self, n: int) -> Poly:
        """Monic type II polynomial pt_n."""
        if n < 0:
            raise DomainError(f"typeII degree must be >= 0, got {n}")
        with self._lock:
            if n not in self._typeII:
                one_over_c = (
                    Fraction(1) / self.c if is_exact(self.c) else 1 / to_mpf(self.c)
                )
                coeffs = []
                for k in range(n + 1):
                    lag = laguerre(n - k, -n - self.alpha - 1, one_over_c)
                    fac = Fraction(_factorial(n), _factorial(k)) if is_exact(lag) else mpf(
                        _factorial(n)
                    ) / _factorial(k)
                    coeffs.append(fac * self.c ** (k - n) * lag)
                self._typeII[n] = Poly(coeffs)
            return self._typeII[n]

    def typeI_pair(self, n: int) -> Tuple[Poly, Poly]:
        """Coefficient pair (A_1, A_2) of qt_n over (w_alpha, w_{alpha+1})."""
        if n < 0:
            raise DomainError(f"typeI degree must be >= 0, got {n}")
        with self._lock:
            if n not in self._typeI:
                a1, a2 = Poly.zero(), Poly.zero()
                for k in range(n + 1):
                    coef = (-self.c) ** k * _binom_int(n, k)
                    p_k, q_k = self.weight_reduction(k)
                    a1 = a1 + p_k.scale(coef)
                    a2 = a2 + q_k.scale(coef)
                self._typeI[n] = (a1, a2)
            return self._typeI[n]

    # -- exact structural helpers ---------------------------------------------
    def x_deriv_pair(self, pair: Tuple[Poly, Poly]) -> Tuple[Poly, Poly]:
        """x * d/dx of F = p w_alpha + q w_{alpha+1}, in the same basis.

        Uses  x w_nu' = (nu - c x) w_nu + w_{nu+1}  plus contiguity.
        """
        p, q = pair
        x = Poly.x()
        a, c = self.alpha, self.c
        new_p = x * p.deriv() + (Poly.const(a) - c * x) * p + x * q
        new_q = p + x * q.deriv() - (c * x) * q
        return new_p, new_q

    def lower_pair(self, pair: Tuple[Poly, Poly]) -> Tuple[Poly, Poly]:
        """Rewrite F = p w_{alpha+1} + q w_{alpha+2} over (w_alpha, w_{alpha+1})."""
        p, q = pair
        x = Poly.x()
        return (x * q, p - (self.alpha + 1) * q)


_family_cache: Dict[Tuple, MOPFamily] = {}
_family_lock = threading.Lock()


def family(alpha: Scalar, c: Scalar) -> MOPFamily:
    """Shared memoized family for (alpha, c)."""
    key = (alpha, c)
    with _family_lock:
        fam = _family_cache.get(key)
        if fam is None:
            fam = _family_cache[key] = MOPFamily(alpha, c)
        return fam


# ---------------------------------------------------------------------------
# spec-level operations on the tilde families
# ---------------------------------------------------------------------------

def typeII_poly_tilde(n: int, alpha: Scalar, c: Scalar) -> Poly:
    return family(alpha, c).typeII(n)


def typeI_tilde_coeffs(n: int, alpha: Scalar, c: Scalar) -> Tuple[Poly, Poly]:
    return family(alpha, c).typeI_pair(n)


def normalization_H(n: int, alpha: Scalar, c: Scalar, prec: int | None = None) -> mpf:
    """H_n = (-1)^n n! e^(1/c) c^(-alpha-n-1), the n-th moment of qt_n."""
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    with working_prec(prec):
        c_f = to_mpf(c)
        return (
            (-1) ** n
            * mpf(_factorial(n))
            * mpmath.exp(1 / c_f)
            * c_f ** (-to_mpf(alpha) - n - 1)
        )


def weight_tilde(nu: Scalar, c: Scalar, u: Scalar, prec: int | None = None) -> mpf:
    """Canonical weight w_nu(u) = u^(nu/2) e^(-cu) I_nu(2 sqrt(u)).

    Evaluated through the entire series u^nu * S_nu(u), which is stable at
    the hard edge for every nu > -1.
    """
    with working_prec(prec):
        u_f = to_mpf(u)
        if u_f < 0:
            raise DomainError(f"weight needs u >= 0, got {u_f}")
        nu_f = to_mpf(nu)
        if u_f == 0:
            if nu_f == 0:
                return mpf(1)
            if nu_f > 0:
                return mpf(0)
            raise DomainError(f"weight diverges at u=0 for nu={nu_f} < 0")
        return u_f ** nu_f * mpmath.exp(-to_mpf(c) * u_f) * bessel_i_scaled(nu_f, u_f)


def typeI_tilde_eval(n: int, alpha: Scalar, c: Scalar, u: Scalar, prec: int | None = None) -> mpf:
    """qt_n(u) via the reduced two-weight representation."""
    with working_prec(prec):
        a1, a2 = typeI_tilde_coeffs(n, alpha, c)
        w0 = weight_tilde(alpha, c, u)
        w1 = weight_tilde(alpha + (Fraction(1) if is_exact(alpha) else 1), c, u)
        return a1.eval_mpf(u) * w0 + a2.eval_mpf(u) * w1


# ---------------------------------------------------------------------------
# ensemble-rescaled families
# ---------------------------------------------------------------------------

class EnsembleFamilies:
    """Evaluation cache for the rescaled pair (Q_j, P_j), j <= max_degree.

    Immutable after construction; evaluations are pure.  All Q_j at one
    point share a single evaluation of the two basis weights.
    """

    def __init__(self, params: EnsembleParams, max_degree: int, prec: int | None = None):
        self.params = params
        self.max_degree = max_degree
        self.fam = family(params.alpha, params.c)
        self.ratio = params.beta / params.c          # beta/c, exact when params are
        with working_prec(prec) as wp:
            self.prec = wp
            ratio_f = to_mpf(self.ratio)
            c_f = params.c_mpf()
            alpha_f = params.alpha_mpf()
            beta_f = params.beta_mpf()
            self._ratio_f, self._c_f, self._alpha_f, self._beta_f = ratio_f, c_f, alpha_f, beta_f
            e_minus = mpmath.exp(-1 / c_f)
            # physical P_j coefficients: pt_j[k] * ratio^(k-j)
            self._p_phys: List[Tuple[mpf, ...]] = []
            self._a1: List[Tuple[mpf, ...]] = []
            self._a2: List[Tuple[mpf, ...]] = []
            self._qscale: List[mpf] = []
            for j in range(max_degree + 1):
                pt = self.fam.typeII(j)
                self._p_phys.append(
                    tuple(to_mpf(pt[k]) * ratio_f ** (k - j) for k in range(j + 1))
                )
                a1, a2 = self.fam.typeI_pair(j)
                self._a1.append(tuple(to_mpf(v) for v in a1.coeffs))
                self._a2.append(tuple(to_mpf(v) for v in a2.coeffs))
                sj = (
                    ratio_f ** (j + 1)
                    * (-1) ** j
                    * e_minus
                    * c_f ** (alpha_f + j + 1)
                    / _factorial(j)
                )
                self._qscale.append(sj)

    # -- pointwise evaluation -------------------------------------------------
    def wpair(self, x: Scalar) -> Tuple[mpf, mpf]:
        """(w_alpha(u), w_{alpha+1}(u)) at u = (beta/c) x."""
        x_f = to_mpf(x)
        if x_f <= 0:
            raise DomainError(f"weights need x > 0, got {x_f}")
        u = self._ratio_f * x_f
        alpha_f = self._alpha_f
        c_f = self._c_f
        damp = mpmath.exp(-c_f * u)
        upow = u ** alpha_f
        w0 = upow * damp * bessel_i_scaled(alpha_f, u)
        w1 = upow * u * damp * bessel_i_scaled(alpha_f + 1, u)
        return w0, w1

    def _horner(self, coeffs: Tuple[mpf, ...], x: mpf) -> mpf:
        acc = mpf(0)
        for cc in reversed(coeffs):
            acc = acc * x + cc
        return acc

    def p_values(self, x: Scalar, jmax: int | None = None) -> List[mpf]:
        """[P_0(x), ..., P_jmax(x)]."""
        jmax = self.max_degree if jmax is None else jmax
        x_f = to_mpf(x)
        return [self._horner(self._p_phys[j], x_f) for j in range(jmax + 1)]

    def q_values(self, x: Scalar, jmax: int | None = None) -> List[mpf]:
        """[Q_0(x), ..., Q_jmax(x)]; one shared weight evaluation."""
        jmax = self.max_degree if jmax is None else jmax
        x_f = to_mpf(x)
        w0, w1 = self.wpair(x_f)
        u = self._ratio_f * x_f
        out = []
        for j in range(jmax + 1):
            val = self._horner(self._a1[j], u) * w0 + self._horner(self._a2[j], u) * w1
            out.append(self._qscale[j] * val)
        return out

    def P(self, j: int, x: Scalar) -> mpf:
        return self._horner(self._p_phys[j], to_mpf(x))

    def Q(self, j: int, x: Scalar) -> mpf:
        return self.q_values(x, jmax=j)[j]

    # -- derivative evaluations through the structure relations ---------------
    def xdp_values(self, x: Scalar, jmax: int | None = None) -> List[mpf]:
        """[x P_j'(x)] from the type II structure relation."""
        jmax = self.max_degree if jmax is None else jmax
        pv = self.p_values(x, jmax)
        beta_f, c_f, alpha_f = self._beta_f, self._c_f, self._alpha_f
        out = [mpf(0)]
        for j in range(1, jmax + 1):
            val = j * pv[j] + j * (c_f * (alpha_f + j) + 1) / (beta_f * c_f) * pv[j - 1]
            if j >= 2:
                val += j * (j - 1) / (beta_f ** 2 * c_f) * pv[j - 2]
            out.append(val)
        return out

    def xdq_values(self, x: Scalar, jmax: int | None = None) -> List[mpf]:
        """[x Q_j'(x)] from the type I structure relation (needs j+2 cached)."""
        jmax = (self.max_degree - 2) if jmax is None else jmax
        if jmax + 2 > self.max_degree:
            raise DomainError(
                f"structure relation for j <= {jmax} needs families to degree {jmax + 2}"
            )
        qv = self.q_values(x, jmax + 2)
        beta_f, c_f, alpha_f = self._beta_f, self._c_f, self._alpha_f
        out = []
        for j in range(jmax + 1):
            val = (j + 1) * (
                -(j + 2) / (beta_f ** 2 * c_f) * qv[j + 2]
                - (c_f * (alpha_f + j + 1) + 1) / (beta_f * c_f) * qv[j + 1]
                - qv[j]
            )
            out.append(val)
        return out


_ensemble_cache: Dict[Tuple, EnsembleFamilies] = {}
_ensemble_lock = threading.Lock()


def ensemble_families(params: EnsembleParams, max_degree: int, prec: int | None = None) -> EnsembleFamilies:
    """Shared cache of rescaled families, grown on demand."""
    with working_prec(prec) as wp:
        key = (params.n, params.alpha, params.a, params.t, params.T)
        with _ensemble_lock:
            cached = _ensemble_cache.get(key)
            if cached is None or cached.max_degree < max_degree or cached.prec < wp:
                cached = EnsembleFamilies(
                    params, max(max_degree, cached.max_degree if cached else 0), prec=wp
                )
                _ensemble_cache[key] = cached
            return cached


# ---------------------------------------------------------------------------
# spec-level operations on the rescaled families
# ---------------------------------------------------------------------------

def weight_w(kind: int, params: EnsembleParams, x: Scalar, prec: int | None = None) -> mpf:
    """Ensemble weights w_1, w_2 (kind = 1 or 2) at x > 0.

    w_1 = x^(alpha/2) e^(-beta x) I_alpha(sqrt(a x)/t) and w_2 likewise
    with alpha+1; both evaluated through the entire Bessel series.
    """
    if kind not in (1, 2):
        raise DomainError(f"weight kind must be 1 or 2, got {kind}")
    with working_prec(prec):
        x_f = to_mpf(x)
        if x_f <= 0:
            raise DomainError(f"weights need x > 0, got {x_f}")
        nu = params.alpha_mpf() + (kind - 1)
        u = to_mpf(params.beta / params.c) * x_f
        return x_f ** (nu / 2) * mpmath.exp(-params.beta_mpf() * x_f) * u ** (
            nu / 2
        ) * bessel_i_scaled(nu, u)


def typeII_eval(n: int, params: EnsembleParams, x: Scalar, prec: int | None = None) -> mpf:
    """Monic type II polynomial P_n(x) of the ensemble."""
    with working_prec(prec):
        fam = ensemble_families(params, max(n, params.n + 1))
        return fam.P(n, x)


def typeI_eval(n: int, params: EnsembleParams, x: Scalar, prec: int | None = None) -> mpf:
    """Normalized type I function Q_n(x) of the ensemble; x > 0."""
    with working_prec(prec):
        x_f = to_mpf(x)
        if x_f <= 0:
            raise DomainError(f"typeI_eval needs x > 0, got {x_f}")
        fam = ensemble_families(params, max(n, params.n + 1))
        return fam.Q(n, x_f)


def moment_integral_xq(s: Scalar, n: int, alpha: Scalar, c: Scalar, prec: int | None = None) -> mpf:
    """integral_0^inf x^(s-1) qt_n(x) dx in closed form.

    Requires s > 0 and s + alpha > 0.  The factor 1/Gamma(s - n) is treated
    as an entire function, so integer 0 < s <= n returns exactly 0 and
    s = n + 1 returns H_n.
    """
    with working_prec(prec):
        s_f, alpha_f, c_f = to_mpf(s), to_mpf(alpha), to_mpf(c)
        if s_f <= 0 or s_f + alpha_f <= 0:
            raise DomainError(f"need s > 0 and s + alpha > 0, got s={s_f}, alpha={alpha_f}")
        pref = (
            (-1) ** n
            * mpmath.exp(1 / c_f)
            * gamma_fn(s_f)
            * gamma_fn(s_f + alpha_f)
            / (c_f ** (s_f + alpha_f) * gamma_fn(n + alpha_f + 1))
        )
        return pref * rgamma(s_f - n) * hyp1f1(n - s_f + 1, alpha_f + n + 1, -1 / c_f)


def _phi_block(k: Scalar, n: int, alpha_f: mpf, c_f: mpf) -> Tuple[mpf, mpf]:
    """(Phi, dPhi/dv2) at v1 = v2 = alpha for the log-moment closed form.

    Phi = (-1)^n c^(-k-alpha-1) Gamma(k+1) Gamma(k+alpha+1) / Gamma(n+alpha+1)
          * 1F1(k+alpha+1; n+alpha+1; 1/c).
    """
    k_f = to_mpf(k)
    pref = (
        (-1) ** n
        * c_f ** (-k_f - alpha_f - 1)
        * gamma_fn(k_f + 1)
        * gamma_fn(k_f + alpha_f + 1)
        / gamma_fn(n + alpha_f + 1)
    )
    f = hyp1f1(k_f + alpha_f + 1, n + alpha_f + 1, 1 / c_f)
    phi = pref * f
    dphi = phi * (digamma(k_f + alpha_f + 1) - mpmath.log(c_f)) + pref * hyp1f1_dparam(
        k_f + alpha_f + 1, n + alpha_f + 1, 1 / c_f, "first"
    )
    return phi, dphi


def log_moment_integral_q(k: Scalar, n: int, params: EnsembleParams, prec: int | None = None) -> mpf:
    """integral_0^inf x^k ln(x) Q_n(x) dx in closed form.

    Obtained by differentiating the power-moment identity in the exponent;
    the digamma/Gamma ratio at non-positive integers is evaluated as its
    finite limit, so every k >= 0 is supported.
    """
    with working_prec(prec):
        k_f = to_mpf(k)
        if k_f < 0:
            raise DomainError(f"need k >= 0, got {k}")
        alpha_f = params.alpha_mpf()
        c_f = params.c_mpf()
        ratio = to_mpf(params.beta / params.c)
        phi, dphi = _phi_block(k_f, n, alpha_f, c_f)
        z = k_f + 1 - n
        rg = rgamma(z)
        bracket = (
            (digamma(k_f + 1) + mpmath.log(1 / ratio)) * rg * phi
            - psi_over_gamma(z) * phi
            + rg * dphi
        )
        h_n = normalization_H(n, params.alpha, params.c)
        return ratio ** (n - k_f) / h_n * bracket
