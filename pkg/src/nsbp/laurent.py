"""Truncated Laurent series in a formal perturbation eps, over Fractions.

The moment recurrence divides by a leading coefficient that vanishes on a
measure-zero set of parameters (always at alpha = 0 for the first step).
The moments themselves are analytic there, so the exact-arithmetic path
evaluates the whole recursion over Q((eps)) with alpha -> alpha + eps and
reads off the eps^0 coefficient at the end.  Truncation order is fixed per
series; division shifts the valuation and reduces the number of known
terms, which is tracked so that an exhausted expansion raises instead of
returning garbage.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .errors import PrecisionError

_Rat = Union[int, Fraction]

DEFAULT_ORDER = 12


class LaurentEps:
    """value = eps**valuation * sum_{i<order} coeffs[i] * eps**i.

    ``coeffs[0]`` is nonzero unless the value is identically zero (within
    the known order).  ``order`` counts the number of *known* coefficients.
    """

    __slots__ = ("valuation", "coeffs", "order")

    def __init__(self, coeffs: Sequence[_Rat], valuation: int = 0, order: int = DEFAULT_ORDER):
        cs = [Fraction(c) for c in coeffs[:order]]
        # normalize: strip leading zeros into the valuation
        shift = 0
        while cs and cs[0] == 0:
            cs.pop(0)
            shift += 1
        if not cs:
            self.valuation = 0
            self.coeffs = []
            self.order = order
            return
        self.valuation = valuation + shift
        self.coeffs = cs + [Fraction(0)] * (order - shift - len(cs))
        self.coeffs = self.coeffs[: order - shift]
        self.order = order - shift

    # -- constructors --------------------------------------------------------
    @staticmethod
    def const(v: _Rat, order: int = DEFAULT_ORDER) -> "LaurentEps":
        return LaurentEps([Fraction(v)], 0, order)

    @staticmethod
    def eps(order: int = DEFAULT_ORDER) -> "LaurentEps":
        return LaurentEps([Fraction(1)], 1, order)

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- helpers ---------------------------------------------------------------
    def _as_pair(self, other) -> "LaurentEps":
        if isinstance(other, LaurentEps):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentEps.const(other, self.order if self.coeffs else DEFAULT_ORDER)
        return NotImplemented  # type: ignore[return-value]

    # -- ring operations --------------------------------------------------------
    def __add__(self, other):
        o = self._as_pair(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        v = min(self.valuation, o.valuation)
        # known absolute order: valuation + order, take the weaker of the two
        abs_order = min(self.valuation + self.order, o.valuation + o.order)
        n = abs_order - v
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            j = self.valuation - v + i
            if j < n:
                out[j] += c
        for i, c in enumerate(o.coeffs):
            j = o.valuation - v + i
            if j < n:
                out[j] += c
        return LaurentEps(out, v, n)

    __radd__ = __add__

    def __neg__(self):
        out = LaurentEps.__new__(LaurentEps)
        out.valuation = self.valuation
        out.coeffs = [-c for c in self.coeffs]
        out.order = self.order
        return out

    def __sub__(self, other):
        o = self._as_pair(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._as_pair(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._as_pair(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return LaurentEps([], 0, min(self.order, o.order) if self.coeffs or o.coeffs else DEFAULT_ORDER)
        n = min(self.order, o.order)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs[: n - i]):
                out[i + j] += a * b
        return LaurentEps(out, self.valuation + o.valuation, n)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        out = LaurentEps.const(1, self.order if self.coeffs else DEFAULT_ORDER)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "LaurentEps":
        if self.is_zero():
            raise ZeroDivisionError("inverse of (truncated) zero Laurent series")
        n = self.order
        if n < 1:
            raise PrecisionError("Laurent expansion order exhausted during division")
        a0 = self.coeffs[0]
        inv = [Fraction(0)] * n
        inv[0] = Fraction(1) / a0
        for m in range(1, n):
            s = Fraction(0)
            for i in range(1, m + 1):
                s += self.coeffs[i] * inv[m - i]
            inv[m] = -s / a0
        return LaurentEps(inv, -self.valuation, n)

    def __truediv__(self, other):
        o = self._as_pair(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._as_pair(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    # -- inspection ----------------------------------------------------------
    def coefficient(self, power: int) -> Fraction:
        """Coefficient of eps**power; raises if the expansion cannot see it."""
        if self.is_zero():
            return Fraction(0)
        idx = power - self.valuation
        if idx < 0:
            return Fraction(0)
        if idx >= self.order:
            raise PrecisionError(
                f"eps^{power} is beyond the known order of this expansion"
            )
        return self.coeffs[idx]

    def regular_value(self) -> Fraction:
        """The eps -> 0 limit; raises if the series has a genuine pole."""
        if not self.is_zero() and self.valuation < 0:
            raise PrecisionError(
                f"expression has a pole of order {-self.valuation} in the perturbation"
            )
        return self.coefficient(0)

    def __repr__(self) -> str:
        if self.is_zero():
            return "LaurentEps(0)"
        return f"LaurentEps(val={self.valuation}, coeffs={self.coeffs[:4]}..., order={self.order})"
