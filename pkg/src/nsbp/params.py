"""Ensemble parameters and derived constants.

``EnsembleParams`` is the single source of truth used by every other
module: ``n`` non-intersecting squared Bessel paths started at the common
point ``a > 0``, pinned to 0 at the horizon ``T``, observed at time
``t in (0, T)``, with Bessel index ``alpha > -1``.  The derived constants

    beta = T / (2 t (T - t)),        c = 2 t T / (a (T - t))

appear in all closed forms.  They satisfy ``c * a == 4 * beta * t**2``
identically.

Inputs given as int / Fraction / rational strings are kept exact; floats
are converted to mpf at the default precision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath import mpf

from .errors import DomainError
from .precision import is_exact, to_mpf

Number = Union[int, Fraction, float, mpf, str]


def _coerce(value: Number, name: str) -> Union[Fraction, mpf]:
    """Parse a parameter value, preferring exact rationals."""
    if isinstance(value, bool):
        raise DomainError(f"{name} must be a number, got bool")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse {name}={value!r} as a rational") from exc
    if isinstance(value, float):
        # floats are exact binary rationals; keep them exact
        return Fraction(value)
    if isinstance(value, mpf):
        return value
    raise DomainError(f"unsupported type for {name}: {type(value).__name__}")


@dataclass(frozen=True)
class EnsembleParams:
    """Validated parameter set with derived constants.

    Immutable; safe to share across threads.
    """

    n: int
    alpha: Union[Fraction, mpf]
    a: Union[Fraction, mpf]
    t: Union[Fraction, mpf]
    T: Union[Fraction, mpf]
    beta: Union[Fraction, mpf]
    c: Union[Fraction, mpf]

    @property
    def exact(self) -> bool:
        """True when all parameters are rational (exact arithmetic applies)."""
        return all(is_exact(v) for v in (self.alpha, self.a, self.t, self.T))

    def alpha_mpf(self) -> mpf:
        return to_mpf(self.alpha)

    def beta_mpf(self) -> mpf:
        return to_mpf(self.beta)

    def c_mpf(self) -> mpf:
        return to_mpf(self.c)

    def with_n(self, n: int) -> "EnsembleParams":
        """Same geometry with a different number of paths."""
        return derive_params(n, self.alpha, self.a, self.t, self.T)

    def to_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return str(v)
            return repr(v) if isinstance(v, mpf) else v

        return {
            "n": self.n,
            "alpha": enc(self.alpha),
            "a": enc(self.a),
            "t": enc(self.t),
            "T": enc(self.T),
            "beta": enc(self.beta),
            "c": enc(self.c),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_dict(data: dict) -> "EnsembleParams":
        return derive_params(
            int(data["n"]), data["alpha"], data["a"], data["t"], data["T"]
        )

    @staticmethod
    def from_json(text: str) -> "EnsembleParams":
        return EnsembleParams.from_dict(json.loads(text))


def derive_params(n: int, alpha: Number, a: Number, t: Number, T: Number) -> EnsembleParams:
    """Validate raw inputs and compute ``beta`` and ``c``.

    Raises DomainError naming the violated constraint.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"n must be an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    alpha_v = _coerce(alpha, "alpha")
    a_v = _coerce(a, "a")
    t_v = _coerce(t, "t")
    T_v = _coerce(T, "T")
    if not alpha_v > -1:
        raise DomainError(f"alpha must exceed -1, got alpha={alpha_v}")
    if not a_v > 0:
        raise DomainError(f"a must be positive, got a={a_v}")
    if not t_v > 0:
        raise DomainError(f"t must be positive, got t={t_v}")
    if not T_v > t_v:
        raise DomainError(f"need t < T, got t={t_v}, T={T_v}")

    if all(is_exact(v) for v in (a_v, t_v, T_v)):
        beta = T_v / (2 * t_v * (T_v - t_v))
        c = (2 * t_v * T_v) / (a_v * (T_v - t_v))
    else:
        a_f, t_f, T_f = to_mpf(a_v), to_mpf(t_v), to_mpf(T_v)
        beta = T_f / (2 * t_f * (T_f - t_f))
        c = (2 * t_f * T_f) / (a_f * (T_f - t_f))
    return EnsembleParams(n=n, alpha=alpha_v, a=a_v, t=t_v, T=T_v, beta=beta, c=c)
