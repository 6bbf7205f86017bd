"""Working-precision management.

All transcendental evaluation in this package goes through mpmath.  The
package default is a 256-bit mantissa; callers may pass an explicit
``prec`` to any public operation, or raise ``mpmath.mp.prec`` themselves.
``resolve_prec`` never *lowers* an ambient precision that is already above
the default, so high-precision callers can rely on inner calls inheriting
their setting.
"""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Union

from mpmath import mp, mpf

DEFAULT_PRECISION_BITS = 256

#: extra bits carried internally so results are good to the nominal precision
GUARD_BITS = 8

Scalar = Union[int, Fraction, mpf, float]


def resolve_prec(prec: int | None = None) -> int:
    """Precision (bits) to use: explicit request, else max(ambient, default)."""
    if prec is not None:
        if prec < 8:
            raise ValueError(f"precision must be at least 8 bits, got {prec}")
        return int(prec)
    return max(mp.prec, DEFAULT_PRECISION_BITS)


@contextmanager
def working_prec(prec: int | None = None) -> Iterator[int]:
    """Context manager entering the resolved working precision."""
    p = resolve_prec(prec)
    with mp.workprec(p):
        yield p


def to_mpf(x: Scalar) -> mpf:
    """Convert ints, Fractions, floats and decimal strings to mpf at mp.prec."""
    if isinstance(x, mpf):
        return x
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def is_exact(x: object) -> bool:
    """True when ``x`` supports exact rational arithmetic."""
    return isinstance(x, (int, Fraction))
