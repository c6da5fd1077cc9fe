"""Hyperbolic phasor addition.

``a*cosh(w t) + b*sinh(w t)`` is rewritten as one of six single-term forms,
selected by the Minkowski sign class of ``(a, b)``:

=============  ===================  =====================================
condition      kind                 signal
=============  ===================  =====================================
``a > |b|``    ``POS_COSH``         ``m*cosh(d + w t)``
``-a > |b|``   ``NEG_COSH``         ``-m*cosh(d + w t)``
``b > |a|``    ``POS_SINH``         ``m*sinh(d + w t)``
``-b > |a|``   ``NEG_SINH``         ``-m*sinh(d + w t)``
``a == b``     ``EXP_PLUS``         ``a*exp(w t)``
``a == -b``    ``EXP_MINUS``        ``a*exp(-w t)``
=============  ===================  =====================================

with ``m = sqrt(|a**2 - b**2|)`` and ``d = 1/2 ln|(a + b)/(a - b)|``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

from .algebra import CausalClass, SplitComplex, sc_minkowski_modulus
from .errors import DomainError, OutsideDerivationDomain, Overflow

__all__ = [
    "HyperKind",
    "HyperbolicSignal",
    "CanonicalHyperbolic",
    "hyper_canonicalize",
    "hyper_reduce_shifted",
    "split_complex_canonicalize",
    "parallelogram_area",
    "eval_hyperbolic",
    "atanh_ratio",
]


class HyperKind(enum.Enum):
    POS_COSH = "PosCosh"
    NEG_COSH = "NegCosh"
    POS_SINH = "PosSinh"
    NEG_SINH = "NegSinh"
    EXP_PLUS = "ExpPlus"
    EXP_MINUS = "ExpMinus"

    @property
    def causal_class(self) -> CausalClass:
        return _CLASS_OF_KIND[self]

    def __str__(self) -> str:
        return self.value


_CLASS_OF_KIND = {
    HyperKind.POS_COSH: CausalClass.SPACELIKE,
    HyperKind.NEG_COSH: CausalClass.SPACELIKE,
    HyperKind.POS_SINH: CausalClass.TIMELIKE,
    HyperKind.NEG_SINH: CausalClass.TIMELIKE,
    HyperKind.EXP_PLUS: CausalClass.LIGHTLIKE,
    HyperKind.EXP_MINUS: CausalClass.LIGHTLIKE,
}


@dataclass(frozen=True)
class HyperbolicSignal:
    """The signal ``a*cosh(omega*t) + b*sinh(omega*t)``."""

    a: float
    b: float
    omega: float = 1.0

    def __post_init__(self) -> None:
        if not all(map(math.isfinite, (self.a, self.b, self.omega))):
            raise DomainError("signal coefficients must be finite")


@dataclass(frozen=True)
class CanonicalHyperbolic:
    """Single-term form of a hyperbolic signal.

    For the cosh and sinh kinds ``magnitude`` is ``m > 0`` and ``shift`` is
    the argument offset. For the exponential kinds ``magnitude`` holds the
    signed coefficient and ``shift`` is 0.
    """

    kind: HyperKind
    magnitude: float
    shift: float
    omega: float

    @property
    def causal_class(self) -> CausalClass:
        return self.kind.causal_class


def atanh_ratio(num: float, den: float) -> float:
    """``arctanh(num/den)`` for ``|num| < |den|``, as ``1/2 log1p(2 num/(den - num))``.

    Forming ``num/den`` first loses the digits of ``1 - num/den`` when the
    ratio is close to 1; ``den - num`` is exact there.
    """
    return 0.5 * math.log1p(2.0 * (num / (den - num)))


def hyper_canonicalize(s: HyperbolicSignal) -> CanonicalHyperbolic:
    a, b, omega = s.a, s.b, s.omega
    if a == b:
        return CanonicalHyperbolic(HyperKind.EXP_PLUS, a, 0.0, omega)
    if a == -b:
        return CanonicalHyperbolic(HyperKind.EXP_MINUS, a, 0.0, omega)

    # Power-of-two rescaling keeps the products exact and overflow free.
    _, exponent = math.frexp(max(abs(a), abs(b)))
    ua, ub = math.ldexp(a, -exponent), math.ldexp(b, -exponent)
    m = math.ldexp(math.sqrt(abs(ua - ub) * abs(ua + ub)), exponent)

    if a > abs(b):
        return CanonicalHyperbolic(HyperKind.POS_COSH, m, atanh_ratio(ub, ua), omega)
    if -a > abs(b):
        return CanonicalHyperbolic(HyperKind.NEG_COSH, m, atanh_ratio(ub, ua), omega)
    if b > abs(a):
        return CanonicalHyperbolic(HyperKind.POS_SINH, m, atanh_ratio(ua, ub), omega)
    return CanonicalHyperbolic(HyperKind.NEG_SINH, m, atanh_ratio(ua, ub), omega)


def _shifted_parts(coef: float, phase: float, kind: str) -> tuple[float, float]:
    # coef*cosh(x + phase) = coef*cosh(phase)*cosh(x) + coef*sinh(phase)*sinh(x)
    # coef*sinh(x + phase) = coef*sinh(phase)*cosh(x) + coef*cosh(phase)*sinh(x)
    try:
        ch, sh = math.cosh(phase), math.sinh(phase)
    except OverflowError as exc:
        raise Overflow(f"cosh({phase}) exceeds the double precision range") from exc
    if kind == "cosh":
        return coef * ch, coef * sh
    if kind == "sinh":
        return coef * sh, coef * ch
    raise DomainError(f"kind must be 'cosh' or 'sinh', got {kind!r}")


def hyper_reduce_shifted(
    a: float, phi: float, fkind: str, b: float, psi: float, gkind: str, omega: float
) -> HyperbolicSignal:
    """Reduce ``a*f(omega t + phi) + b*g(omega t + psi)`` to
    ``alpha*cosh(omega t) + beta*sinh(omega t)``, where ``f`` and ``g`` are
    each ``"cosh"`` or ``"sinh"``."""
    fa, fb = _shifted_parts(a, phi, fkind)
    ga, gb = _shifted_parts(b, psi, gkind)
    alpha, beta = fa + ga, fb + gb
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise Overflow("reduced coefficients exceed the double precision range")
    return HyperbolicSignal(alpha, beta, omega)


def split_complex_canonicalize(a: float, b: float, gamma: SplitComplex) -> tuple[float, float]:
    """Polar form ``r*exp(j theta)`` of ``(a + jb)*exp(j gamma)``.

    Returns ``(r, theta)`` with ``r = |a + jb| exp(gamma.im)`` and
    ``theta = arctanh(b/a) + gamma.re``, so that
    ``exp(gamma.im)*(a cosh(gamma.re) + b sinh(gamma.re)) == r cosh(theta)``.
    Only ``a > |b|`` is supported.
    """
    if not a > abs(b):
        raise OutsideDerivationDomain(f"need a > |b|, got a={a}, b={b}")
    try:
        growth = math.exp(gamma.im)
    except OverflowError as exc:
        raise Overflow(f"exp({gamma.im}) exceeds the double precision range") from exc
    _, exponent = math.frexp(a)
    ua, ub = math.ldexp(a, -exponent), math.ldexp(b, -exponent)
    modulus = math.ldexp(sc_minkowski_modulus(SplitComplex(ua, ub)), exponent)
    r = modulus * growth
    if not math.isfinite(r):
        raise Overflow("polar radius exceeds the double precision range")
    return r, atanh_ratio(ub, ua) + gamma.re


def parallelogram_area(a: float, b: float, u: float) -> float:
    """Area spanned by ``(cosh u, sinh u)`` and ``(-b, a)``, which equals
    ``a cosh u + b sinh u`` for positive ``a``, ``b``, ``u``."""
    if not (a > 0 and b > 0 and u > 0):
        raise DomainError(f"a, b and u must be positive, got a={a}, b={b}, u={u}")
    try:
        hx, hy = math.cosh(u), math.sinh(u)
    except OverflowError as exc:
        raise Overflow(f"cosh({u}) exceeds the double precision range") from exc
    # z component of (hx, hy, 0) x (-b, a, 0); the x and y components vanish.
    area = abs(hx * a - hy * -b)
    if not math.isfinite(area):
        raise Overflow("area exceeds the double precision range")
    return area


def _exp_term(coef: float, x: float) -> float:
    if coef == 0.0:
        return 0.0
    try:
        value = coef * math.exp(x)
    except OverflowError as exc:
        raise Overflow(f"exp({x}) exceeds the double precision range") from exc
    if math.isinf(value):
        raise Overflow(f"{coef}*exp({x}) exceeds the double precision range")
    return value


def eval_hyperbolic(s: Union[HyperbolicSignal, CanonicalHyperbolic], t: float) -> float:
    """Evaluate a signal or canonical form at ``t``.

    Signals are evaluated as ``(a+b)/2 exp(wt) + (a-b)/2 exp(-wt)``, which
    avoids the cancellation between ``a cosh`` and ``b sinh`` near the light
    cone.
    """
    x = s.omega * t
    if isinstance(s, HyperbolicSignal):
        return _exp_term(0.5 * s.a + 0.5 * s.b, x) + _exp_term(0.5 * s.a - 0.5 * s.b, -x)
    kind = s.kind
    if kind is HyperKind.EXP_PLUS:
        return _exp_term(s.magnitude, x)
    if kind is HyperKind.EXP_MINUS:
        return _exp_term(s.magnitude, -x)
    arg = s.shift + x
    try:
        if kind in (HyperKind.POS_COSH, HyperKind.NEG_COSH):
            value = s.magnitude * math.cosh(arg)
        else:
            value = s.magnitude * math.sinh(arg)
    except OverflowError as exc:
        raise Overflow(f"hyperbolic argument {arg} exceeds the double precision range") from exc
    if math.isinf(value):
        raise Overflow(f"value at t={t} exceeds the double precision range")
    if kind in (HyperKind.NEG_COSH, HyperKind.NEG_SINH):
        return -value
    return value
