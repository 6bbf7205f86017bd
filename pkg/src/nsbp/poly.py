"""Dense univariate polynomials over a pluggable scalar field.

Coefficients may be ints, Fractions, or mpf; arithmetic stays inside
whatever field the inputs live in.  Index i of ``coeffs`` is the
coefficient of x**i.  The zero polynomial is represented by an empty
coefficient tuple.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .precision import to_mpf


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):  # trailing zeros are trimmed
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def const(v) -> "Poly":
        return Poly((v,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    # -- structure ---------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    # -- ring operations ----------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        m = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(m)])

    def __sub__(self, other: "Poly") -> "Poly":
        m = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] - other[i] for i in range(m)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly.zero()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, ci in enumerate(self.coeffs):
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
            return Poly(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, s) -> "Poly":
        if s == 0:
            return Poly.zero()
        return Poly([c * s for c in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return Poly((0,) * k + self.coeffs)

    def deriv(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def scale_arg(self, lam) -> "Poly":
        """p(lam * x): coefficient i picks up lam**i."""
        out, p = [], 1
        for c in self.coeffs:
            out.append(c * p)
            p = p * lam
        return Poly(out)

    # -- evaluation ----------------------------------------------------------
    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mpf(self, x):
        """Horner evaluation after converting coefficients to mpf."""
        acc = to_mpf(0)
        x_f = to_mpf(x)
        for c in reversed(self.coeffs):
            acc = acc * x_f + (to_mpf(c) if isinstance(c, (int, Fraction)) else c)
        return acc

    def map_coeffs(self, fn: Callable) -> "Poly":
        return Poly([fn(c) for c in self.coeffs])
