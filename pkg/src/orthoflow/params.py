"""Validated parameter records for the three polynomial families.

Complex parameters are plain Python ``complex``; non-real values must come
in conjugate pairs so that every downstream quantity (coefficients,
potentials, Hessians) is real.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum

from .errors import ParameterError

_CONJ_RTOL = 1e-12


class Family(Enum):
    """Polynomial family tags used by the oracle and the CLI."""

    CH = "ch"
    WILSON = "wilson"
    JACOBI = "jacobi"


def _is_conjugate_pair(u: complex, v: complex) -> bool:
    return cmath.isclose(u, v.conjugate(), rel_tol=_CONJ_RTOL, abs_tol=1e-300)


@dataclass(frozen=True)
class ContinuousHahnParams:
    """Parameters (a, b) of the symmetric continuous Hahn family.

    Both real parts must be positive, and a, b are either both real or a
    complex-conjugate pair (the "symmetric" regime, even weight function).
    """

    a: complex
    b: complex

    def __post_init__(self):
        a, b = complex(self.a), complex(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not (a.real > 0 and b.real > 0):
            raise ParameterError(f"Re(a) and Re(b) must be positive, got a={a}, b={b}")
        if (a.imag != 0 or b.imag != 0) and not _is_conjugate_pair(a, b):
            raise ParameterError(
                f"non-real a, b must form a conjugate pair, got a={a}, b={b}"
            )


@dataclass(frozen=True)
class WilsonParams:
    """Parameters (a, b, c, d) of the Wilson family.

    All real parts must be positive (>= 0 with ``allow_boundary``, which
    admits the d = 0 specialization used by the parity-reduced even flow)
    and the parameter multiset must be closed under complex conjugation.
    """

    a: complex
    b: complex
    c: complex
    d: complex
    allow_boundary: bool = False

    def __post_init__(self):
        vals = [complex(v) for v in (self.a, self.b, self.c, self.d)]
        for name, v in zip("abcd", vals):
            object.__setattr__(self, name, v)
        low = 0.0 if self.allow_boundary else None
        for v in vals:
            if low is None:
                if not v.real > 0:
                    raise ParameterError(f"Re of every parameter must be > 0, got {v}")
            elif v.real < 0 or (v.real == 0 and v.imag != 0):
                raise ParameterError(f"boundary parameters must be real >= 0, got {v}")
        # non-real entries must pair up under conjugation
        pending = [v for v in vals if v.imag != 0]
        while pending:
            v = pending.pop()
            for i, w in enumerate(pending):
                if _is_conjugate_pair(v, w):
                    pending.pop(i)
                    break
            else:
                raise ParameterError(
                    f"non-real parameters must occur in conjugate pairs, got {vals}"
                )

    @property
    def values(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class JacobiParams:
    """Jacobi parameters with alpha, beta > -1."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1 and self.beta > -1):
            raise ParameterError(
                f"alpha and beta must exceed -1, got ({self.alpha}, {self.beta})"
            )
