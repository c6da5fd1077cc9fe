"""Closed-form motion in the quadratic potential ``V(x) = k x**2 / 2``.

``m x'' + k x = 0`` has circular solutions for ``k > 0``, hyperbolic ones
for ``k < 0`` and straight-line motion at the critical point ``k = 0``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Union

from .errors import DomainError, InvalidMass, Overflow
from .euclid import CanonicalCircular, combine_cos_sin, eval_circular
from .hyper import CanonicalHyperbolic, HyperbolicSignal, eval_hyperbolic, hyper_canonicalize

__all__ = [
    "Branch",
    "OscillatorProblem",
    "MotionSolution",
    "solve_oscillator",
    "eval_solution",
    "residual_check",
    "velocity",
]


class Branch(enum.Enum):
    CIRCULAR = "Circular"
    HYPERBOLIC = "Hyperbolic"
    LINEAR = "Linear"


@dataclass(frozen=True)
class OscillatorProblem:
    mass: float
    stiffness: float
    x0: float
    v0: float

    def __post_init__(self) -> None:
        if not all(map(math.isfinite, (self.mass, self.stiffness, self.x0, self.v0))):
            raise DomainError("oscillator parameters must be finite")
        if not self.mass > 0:
            raise InvalidMass(f"mass must be positive, got {self.mass}")

    @property
    def k_over_m(self) -> float:
        return self.stiffness / self.mass


@dataclass(frozen=True)
class MotionSolution:
    """Trajectory ``x(t)``.

    ``form`` holds the canonical single-term signal on the circular and
    hyperbolic branches and is ``None`` on the linear branch, where
    ``x(t) = x0 + v0*t``.
    """

    branch: Branch
    omega: float
    form: Optional[Union[CanonicalCircular, CanonicalHyperbolic]]
    x0: float
    v0: float


def solve_oscillator(p: OscillatorProblem) -> MotionSolution:
    k = p.stiffness
    if k == 0.0:
        return MotionSolution(Branch.LINEAR, 0.0, None, p.x0, p.v0)
    omega = math.sqrt(abs(k) / p.mass)
    # The canonical amplitude grows like |v0| / omega near the critical point.
    if omega == 0.0 or not math.isfinite(p.v0 / omega):
        raise Overflow(f"k/m = {p.k_over_m!r} is too close to zero for a canonical amplitude")
    a, b = p.x0, p.v0 / omega
    if k > 0:
        if a == 0.0 and b == 0.0:
            form = CanonicalCircular(0.0, 0.0, omega)
        else:
            form, _ = combine_cos_sin(a, b, omega)
        return MotionSolution(Branch.CIRCULAR, omega, form, p.x0, p.v0)
    form = hyper_canonicalize(HyperbolicSignal(a, b, omega))
    return MotionSolution(Branch.HYPERBOLIC, omega, form, p.x0, p.v0)


def eval_solution(s: MotionSolution, t: float) -> float:
    if s.branch is Branch.LINEAR:
        return s.x0 + s.v0 * t
    if s.branch is Branch.CIRCULAR:
        return eval_circular(s.form, t)
    return eval_hyperbolic(s.form, t)


def velocity(s: MotionSolution, t: float, h: float = 1e-6) -> float:
    """Symmetric first difference of the trajectory at ``t``."""
    if not h > 0:
        raise DomainError(f"step must be positive, got {h}")
    return (eval_solution(s, t + h) - eval_solution(s, t - h)) / (2.0 * h)


def residual_check(s: MotionSolution, k_over_m: float, t: float, h: float = 1e-4) -> float:
    """``|D2 x(t) + (k/m) x(t)|`` with the symmetric second difference ``D2``."""
    if not h > 0:
        raise DomainError(f"step must be positive, got {h}")
    x = eval_solution(s, t)
    d2 = (eval_solution(s, t + h) - 2.0 * x + eval_solution(s, t - h)) / (h * h)
    return abs(d2 + k_over_m * x)
