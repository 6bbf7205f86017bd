"""Correlation kernel of the determinantal path ensemble.

K(x, y) = sum_{j=0}^{n-1} Q_j(x) P_j(y) together with its four-term
Christoffel-Darboux compression, the confluent diagonal, and the
first-order derivative identity for the operator B = 1 + x d/dx + y d/dy.
All kernel derivatives are taken analytically through the structure
relations of the two families; nothing here differentiates numerically.
"""

from __future__ import annotations

from typing import List, Tuple

from mpmath import mp, mpf

from .errors import DomainError
from .mop import EnsembleFamilies, ensemble_families
from .params import EnsembleParams
from .precision import Scalar, to_mpf, working_prec


class KernelContext:
    """Immutable evaluation context: parameters plus cached families to n+1."""

    def __init__(self, params: EnsembleParams, prec: int | None = None):
        with working_prec(prec) as wp:
            self.params = params
            self.prec = wp
            self.fam: EnsembleFamilies = ensemble_families(params, params.n + 1, prec=wp)
            self.eps_switch = mpf(2) ** (-(wp // 4))

    def _check_positive(self, *vals: mpf) -> None:
        for v in vals:
            if v <= 0:
                raise DomainError(f"kernel arguments must be positive, got {v}")


def kernel_sum(ctx: KernelContext, x: Scalar, y: Scalar) -> mpf:
    """Direct n-term kernel sum."""
    with mp.workprec(ctx.prec):
        x_f, y_f = to_mpf(x), to_mpf(y)
        ctx._check_positive(x_f, y_f)
        n = ctx.params.n
        qv = ctx.fam.q_values(x_f, n - 1)
        pv = ctx.fam.p_values(y_f, n - 1)
        return sum((q * p for q, p in zip(qv, pv)), mpf(0))


def _cd_numerator(ctx: KernelContext, x_f: mpf, y_f: mpf) -> mpf:
    """(x - y) K(x, y) in compressed four-term form."""
    n = ctx.params.n
    beta = ctx.fam._beta_f
    c = ctx.fam._c_f
    alpha = ctx.fam._alpha_f
    qv = ctx.fam.q_values(x_f, n + 1)
    pv = ctx.fam.p_values(y_f, n)
    total = -qv[n - 1] * pv[n]
    total += n * (n + 1) / (beta ** 3 * c) * qv[n + 1] * pv[n - 1]
    if n >= 2:
        total += n * (n - 1) / (beta ** 3 * c) * qv[n] * pv[n - 2]
    total += n * (c * (alpha + n) + 2) / (beta ** 2 * c) * qv[n] * pv[n - 1]
    return total


def kernel_cd(ctx: KernelContext, x: Scalar, y: Scalar) -> mpf:
    """Christoffel-Darboux form of the kernel; x != y.

    Within ``eps_switch`` of the diagonal the quotient loses accuracy, so
    the value is delegated to a first-order expansion around the midpoint
    built from the confluent diagonal and the analytic gradient.
    """
    with mp.workprec(ctx.prec):
        x_f, y_f = to_mpf(x), to_mpf(y)
        ctx._check_positive(x_f, y_f)
        if x_f == y_f:
            return kernel_diag(ctx, x_f)
        if abs(x_f - y_f) < ctx.eps_switch * max(1, abs(x_f), abs(y_f)):
            m = (x_f + y_f) / 2
            kx, ky = kernel_grad(ctx, m, m)
            return kernel_diag(ctx, m) + (x_f - m) * kx + (y_f - m) * ky
        return _cd_numerator(ctx, x_f, y_f) / (x_f - y_f)


def kernel_diag(ctx: KernelContext, x: Scalar) -> mpf:
    """Confluent diagonal K(x, x): seven-term closed form divided by x."""
    with mp.workprec(ctx.prec):
        x_f = to_mpf(x)
        ctx._check_positive(x_f)
        n = ctx.params.n
        beta = ctx.fam._beta_f
        c = ctx.fam._c_f
        alpha = ctx.fam._alpha_f
        qv = ctx.fam.q_values(x_f, n + 1)
        pv = ctx.fam.p_values(x_f, n)
        total = n * (n + 1) / (beta ** 2 * c) * qv[n + 1] * pv[n]
        total += n * (c * (alpha + n) + 1) / (beta * c) * qv[n] * pv[n]
        total -= n * (c * (alpha + n - beta * x_f) + 1) / (beta ** 2 * c ** 2) * qv[n] * pv[n - 1]
        total += (c * n * (alpha + n) + n) / (beta * c) * qv[n - 1] * pv[n - 1]
        total += (alpha + 1 / c + 2 * n - beta * x_f) * qv[n - 1] * pv[n]
        if n >= 2:
            total += n * (n ** 2 - 1) / (beta ** 4 * c ** 2) * qv[n + 1] * pv[n - 2]
            total += (n - 1) * n / (beta ** 2 * c) * qv[n - 1] * pv[n - 2]
        return total / x_f


def kernel_grad(ctx: KernelContext, x: Scalar, y: Scalar) -> Tuple[mpf, mpf]:
    """(dK/dx, dK/dy) from the structure relations of Q and P."""
    with mp.workprec(ctx.prec):
        x_f, y_f = to_mpf(x), to_mpf(y)
        ctx._check_positive(x_f, y_f)
        n = ctx.params.n
        xdq = ctx.fam.xdq_values(x_f, n - 1)
        pv = ctx.fam.p_values(y_f, n - 1)
        qv = ctx.fam.q_values(x_f, n - 1)
        ydp = ctx.fam.xdp_values(y_f, n - 1)
        kx = sum((dq * p for dq, p in zip(xdq, pv)), mpf(0)) / x_f
        ky = sum((q * dp for q, dp in zip(qv, ydp)), mpf(0)) / y_f
        return kx, ky


def b_operator_residual(ctx: KernelContext, x: Scalar, y: Scalar) -> mpf:
    """Residual of the derivative identity for B = 1 + x d/dx + y d/dy.

    B K(x,y) should equal
        -beta (x - y) K(x,y) + n/(beta c) Q_n(x) P_{n-1}(y)
        - beta Q_{n-1}(x) P_n(y);
    the returned value is the difference of the two sides.
    """
    with mp.workprec(ctx.prec):
        x_f, y_f = to_mpf(x), to_mpf(y)
        ctx._check_positive(x_f, y_f)
        n = ctx.params.n
        beta = ctx.fam._beta_f
        c = ctx.fam._c_f
        qv = ctx.fam.q_values(x_f, n + 1)
        pv = ctx.fam.p_values(y_f, n)
        xdq = ctx.fam.xdq_values(x_f, n - 1)
        ydp = ctx.fam.xdp_values(y_f, n - 1)
        k = sum((qv[j] * pv[j] for j in range(n)), mpf(0))
        xkx = sum((xdq[j] * pv[j] for j in range(n)), mpf(0))
        yky = sum((qv[j] * ydp[j] for j in range(n)), mpf(0))
        lhs = k + xkx + yky
        rhs = -beta * (x_f - y_f) * k + n / (beta * c) * qv[n] * pv[n - 1] - beta * qv[
            n - 1
        ] * pv[n]
        return lhs - rhs


def b_operator_diag_residual(ctx: KernelContext, x: Scalar) -> mpf:
    """Residual of the confluent derivative identity

    x dK(x,x)/dx + K(x,x) = n/(beta c) Q_n(x) P_{n-1}(x) - beta Q_{n-1}(x) P_n(x),

    where dK(x,x)/dx is the full derivative along the diagonal.
    """
    with mp.workprec(ctx.prec):
        x_f = to_mpf(x)
        ctx._check_positive(x_f)
        n = ctx.params.n
        beta = ctx.fam._beta_f
        c = ctx.fam._c_f
        qv = ctx.fam.q_values(x_f, n + 1)
        pv = ctx.fam.p_values(x_f, n)
        xdq = ctx.fam.xdq_values(x_f, n - 1)
        xdp = ctx.fam.xdp_values(x_f, n - 1)
        k = sum((qv[j] * pv[j] for j in range(n)), mpf(0))
        xdk = sum((xdq[j] * pv[j] + qv[j] * xdp[j] for j in range(n)), mpf(0))
        lhs = xdk + k
        rhs = n / (beta * c) * qv[n] * pv[n - 1] - beta * qv[n - 1] * pv[n]
        return lhs - rhs
