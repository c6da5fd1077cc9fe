"""Euclidean phasor addition for same-frequency sinusoids."""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Union

from .errors import DomainError, FrequencyMismatch, UndefinedArgument, ZeroSignal

__all__ = [
    "CircularPhasor",
    "CanonicalCircular",
    "principal_arg",
    "reduce_phase",
    "phasor_add",
    "combine_cos_sin",
    "eval_circular",
]

# Resultants this many ulps of the input scale or smaller count as exact cancellation.
_CANCEL_ULPS = 4.0


@dataclass(frozen=True)
class CircularPhasor:
    """The signal ``amplitude * cos(omega*t + phase)``."""

    amplitude: float
    phase: float = 0.0
    omega: float = 1.0

    def __post_init__(self) -> None:
        if not all(map(math.isfinite, (self.amplitude, self.phase, self.omega))):
            raise DomainError("phasor fields must be finite")


@dataclass(frozen=True)
class CanonicalCircular:
    """``magnitude * cos(omega*t + phase)`` with ``magnitude >= 0`` and
    ``phase`` in ``[-pi, pi)``.

    ``func == "sin"`` marks the equivalent sine form produced by
    :func:`combine_cos_sin`.
    """

    magnitude: float
    phase: float
    omega: float
    func: str = "cos"


def principal_arg(x: float, y: float) -> float:
    """Angle of ``(x, y)`` in the half-open range ``[-pi, pi)``.

    Unlike ``math.atan2`` the negative real axis maps to ``-pi``.
    """
    if x == 0.0 and y == 0.0:
        raise UndefinedArgument("the argument of (0, 0) is undefined")
    alpha = math.atan2(y, x)
    if alpha >= math.pi:
        alpha = -math.pi
    return alpha


def reduce_phase(phi: float) -> float:
    """Representative of ``phi`` modulo ``2*pi`` in ``[-pi, pi)``.

    Values already in range are returned unchanged.
    """
    if -math.pi <= phi < math.pi:
        return phi
    r = math.remainder(phi, 2.0 * math.pi)
    return -math.pi if r >= math.pi else r


def _canonical(x: float, y: float, scale: float, omega: float) -> CanonicalCircular:
    c = math.hypot(x, y)
    if c <= _CANCEL_ULPS * sys.float_info.epsilon * scale:
        return CanonicalCircular(0.0, 0.0, omega)
    return CanonicalCircular(c, principal_arg(x, y), omega)


def phasor_add(p: CircularPhasor, q: CircularPhasor) -> CanonicalCircular:
    """Sum of two same-frequency cosines as a single cosine.

    The magnitude is the length of the resultant phasor, equal to the law of
    cosines value ``sqrt(a**2 + b**2 + 2ab cos(phi - psi))`` but without the
    cancellation that formula suffers when the phasors nearly oppose.
    """
    if p.omega != q.omega:
        raise FrequencyMismatch(f"cannot add phasors at omega={p.omega} and omega={q.omega}")
    a, b = p.amplitude, q.amplitude
    x = a * math.cos(p.phase) + b * math.cos(q.phase)
    y = a * math.sin(p.phase) + b * math.sin(q.phase)
    return _canonical(x, y, abs(a) + abs(b), p.omega)


def combine_cos_sin(a: float, b: float, omega: float) -> tuple[CanonicalCircular, CanonicalCircular]:
    """Rewrite ``a*cos(omega*t) + b*sin(omega*t)``.

    Returns ``(cosine_form, sine_form)``: the same magnitude
    ``sqrt(a**2 + b**2)`` with phases ``arg(a - ib)`` and ``arg(b + ia)``.
    """
    if a == 0.0 and b == 0.0:
        raise ZeroSignal("0*cos + 0*sin has no phase")
    c = math.hypot(a, b)
    return (
        CanonicalCircular(c, principal_arg(a, -b), omega, "cos"),
        CanonicalCircular(c, principal_arg(b, a), omega, "sin"),
    )


def eval_circular(term: Union[CircularPhasor, CanonicalCircular], t: float) -> float:
    if isinstance(term, CircularPhasor):
        return term.amplitude * math.cos(term.omega * t + term.phase)
    f = math.sin if term.func == "sin" else math.cos
    return term.magnitude * f(term.omega * t + term.phase)
