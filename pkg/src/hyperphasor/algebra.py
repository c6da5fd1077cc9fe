"""Split-complex numbers, Minkowski classification and series-defined
exponential, cosh and sinh over small unital algebras.

A split-complex number ``x + jy`` (with ``j**2 == 1``) is kept in two
coordinate systems at once: the ordinary ``(re, im)`` pair and the
light-cone pair ``p = re + im``, ``q = re - im``.  In light-cone
coordinates multiplication is componentwise, so the Minkowski modulus
``sqrt(|p*q|)`` of a product, inverses and ``|exp(jx)| = 1`` stay accurate
to a few ulps even near the light cone, where the textbook ``re**2 - im**2``
cancels catastrophically.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import DomainError, LightlikeNotInvertible, NoConvergence, Overflow

__all__ = [
    "SplitComplex",
    "CausalClass",
    "AlgebraElement",
    "sc_mul",
    "sc_conj",
    "sc_minkowski_modulus",
    "sc_banach_norm",
    "sc_inverse",
    "sc_exp",
    "classify_vector",
    "series_exp",
    "series_cosh",
    "series_sinh",
    "MAX_SERIES_TERMS",
]

MAX_SERIES_TERMS = 200


def _require_finite(*values: float) -> None:
    for v in values:
        if math.isnan(v):
            raise DomainError("NaN is not a valid component")
        if math.isinf(v):
            raise Overflow("component outside the double precision range")


@dataclass(frozen=True)
class SplitComplex:
    """Element ``re + j*im`` of the hyperbolic numbers, ``j**2 == 1``."""

    re: float
    im: float = 0.0
    _p: float = field(init=False, repr=False, compare=False)
    _q: float = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        re, im = float(self.re), float(self.im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "_p", re + im)
        object.__setattr__(self, "_q", re - im)
        _require_finite(re, im, self._p, self._q)

    @classmethod
    def _make(cls, re: float, im: float, p: float, q: float) -> "SplitComplex":
        # Both coordinate pairs computed independently by the caller.
        _require_finite(re, im, p, q)
        w = object.__new__(cls)
        object.__setattr__(w, "re", re)
        object.__setattr__(w, "im", im)
        object.__setattr__(w, "_p", p)
        object.__setattr__(w, "_q", q)
        return w

    @classmethod
    def from_lightcone(cls, p: float, q: float) -> "SplitComplex":
        """Build ``w`` from its light-cone coordinates ``re + im`` and ``re - im``."""
        p, q = float(p), float(q)
        return cls._make(0.5 * p + 0.5 * q, 0.5 * p - 0.5 * q, p, q)

    @property
    def lightcone(self) -> tuple[float, float]:
        return self._p, self._q

    def __add__(self, other):
        if isinstance(other, SplitComplex):
            return SplitComplex._make(
                self.re + other.re, self.im + other.im,
                self._p + other._p, self._q + other._q,
            )
        if isinstance(other, (int, float)):
            s = float(other)
            return SplitComplex._make(self.re + s, self.im, self._p + s, self._q + s)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "SplitComplex":
        return SplitComplex._make(-self.re, -self.im, -self._p, -self._q)

    def __sub__(self, other):
        if isinstance(other, (SplitComplex, int, float)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, SplitComplex):
            return sc_mul(self, other)
        if isinstance(other, (int, float)):
            s = float(other)
            return SplitComplex._make(self.re * s, self.im * s, self._p * s, self._q * s)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SplitComplex):
            return sc_mul(self, sc_inverse(other))
        if isinstance(other, (int, float)):
            return self * (1.0 / float(other))
        return NotImplemented

    def __abs__(self) -> float:
        return sc_minkowski_modulus(self)

    def __str__(self) -> str:
        sign = "-" if math.copysign(1.0, self.im) < 0 else "+"
        return f"{self.re!r}{sign}{abs(self.im)!r}j"


class CausalClass(enum.Enum):
    TIMELIKE = "Timelike"
    SPACELIKE = "Spacelike"
    LIGHTLIKE = "Lightlike"

    def __str__(self) -> str:
        return self.value


AlgebraElement = Union[float, complex, SplitComplex, np.ndarray]


def sc_mul(u: SplitComplex, v: SplitComplex) -> SplitComplex:
    """``(u.re v.re + u.im v.im) + j(u.re v.im + u.im v.re)``.

    Evaluated as the componentwise light-cone product, which carries the
    same rounding bound as the expanded formula but keeps ``|uv| = |u||v|``
    and ``w * w**-1 = 1`` accurate near the light cone.
    """
    return SplitComplex.from_lightcone(u._p * v._p, u._q * v._q)


def sc_conj(w: SplitComplex) -> SplitComplex:
    return SplitComplex._make(w.re, -w.im, w._q, w._p)


def sc_minkowski_modulus(w: SplitComplex) -> float:
    """Return ``sqrt(|re**2 - im**2|)``, the Minkowski norm of ``w``."""
    return math.sqrt(abs(w._p * w._q))


def sc_banach_norm(w: SplitComplex) -> float:
    """Return ``sqrt(2*(re**2 + im**2))``; this norm is submultiplicative."""
    return math.sqrt(2.0) * math.hypot(w.re, w.im)


def sc_inverse(w: SplitComplex) -> SplitComplex:
    """Multiplicative inverse ``conj(w) / (w * conj(w))``.

    Raises LightlikeNotInvertible when ``w`` lies on the light cone.
    """
    if w._p == 0.0 or w._q == 0.0:
        raise LightlikeNotInvertible(f"{w} has zero Minkowski modulus")
    # w * conj(w) = re**2 - im**2 is signed; timelike inverses need the sign.
    det = w._p * w._q
    if det == 0.0:
        raise Overflow(f"inverse of {w} exceeds the double precision range")
    try:
        return SplitComplex._make(w.re / det, -w.im / det, 1.0 / w._p, 1.0 / w._q)
    except (Overflow, ZeroDivisionError) as exc:
        raise Overflow(f"inverse of {w} exceeds the double precision range") from exc


def sc_exp(w: SplitComplex) -> SplitComplex:
    """Closed form ``exp(re) * (cosh(im) + j*sinh(im))``."""
    try:
        p = math.exp(w._p)
        q = math.exp(w._q)
        if abs(w.im) < 1.0:
            scale = math.exp(w.re)
            re, im = scale * math.cosh(w.im), scale * math.sinh(w.im)
        else:
            # |im| >= 1 keeps p/2 - q/2 free of cancellation.
            re, im = 0.5 * p + 0.5 * q, 0.5 * p - 0.5 * q
        return SplitComplex._make(re, im, p, q)
    except OverflowError as exc:
        raise Overflow(f"exp({w}) exceeds the double precision range") from exc


def classify_vector(a: float, b: float) -> CausalClass:
    """Sign class of the Minkowski metric ``a**2 - b**2``.

    Comparing ``|a|`` with ``|b|`` gives the exact sign without rounding or
    overflow in the squares.
    """
    if abs(a) > abs(b):
        return CausalClass.SPACELIKE
    if abs(a) < abs(b):
        return CausalClass.TIMELIKE
    return CausalClass.LIGHTLIKE


# -- series over generic algebra elements ------------------------------------


def _validate(x) -> AlgebraElement:
    if isinstance(x, SplitComplex):
        return x
    if isinstance(x, np.ndarray):
        if x.ndim != 2 or x.shape[0] != x.shape[1] or not 2 <= x.shape[0] <= 4:
            raise DomainError(f"matrix elements must be square with size 2..4, got {x.shape}")
        if not np.all(np.isfinite(x)):
            raise DomainError("matrix entries must be finite")
        return x.astype(float)
    if isinstance(x, complex):
        if not (math.isfinite(x.real) and math.isfinite(x.imag)):
            raise DomainError("complex value must be finite")
        return x
    if isinstance(x, (int, float, np.floating, np.integer)) and not isinstance(x, bool):
        x = float(x)
        if not math.isfinite(x):
            raise DomainError("scalar must be finite")
        return x
    raise TypeError(f"unsupported algebra element: {type(x).__name__}")


def _identity(x: AlgebraElement) -> AlgebraElement:
    if isinstance(x, np.ndarray):
        return np.eye(x.shape[0])
    if isinstance(x, SplitComplex):
        return SplitComplex(1.0, 0.0)
    if isinstance(x, complex):
        return complex(1.0, 0.0)
    return 1.0


def _zero(x: AlgebraElement) -> AlgebraElement:
    if isinstance(x, np.ndarray):
        return np.zeros_like(x)
    if isinstance(x, SplitComplex):
        return SplitComplex(0.0, 0.0)
    if isinstance(x, complex):
        return complex(0.0, 0.0)
    return 0.0


def _mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if isinstance(x, np.ndarray):
        return x @ y
    return x * y


def algebra_norm(x: AlgebraElement) -> float:
    """Norm used by the series: Frobenius for matrices, Banach norm for
    split-complex values, absolute value otherwise."""
    if isinstance(x, np.ndarray):
        return float(np.linalg.norm(x, "fro"))
    if isinstance(x, SplitComplex):
        return sc_banach_norm(x)
    return abs(x)


def _series(x, tol: float, first, square: bool, power: int) -> AlgebraElement:
    # Sums term_k = x**(step*k + power) / (step*k + power)!, step = 2 if square.
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    factor = _mul(x, x) if square else x
    step = 2 if square else 1
    total = _zero(x)
    term = first
    n = power
    for _ in range(MAX_SERIES_TERMS):
        size = algebra_norm(term)
        if not math.isfinite(size):
            raise Overflow("series term exceeds the double precision range")
        if size < tol * max(1.0, algebra_norm(total)):
            return total
        total = total + term
        divisor = float(n + 1) if step == 1 else float((n + 1) * (n + 2))
        term = _mul(term, factor) / divisor
        n += step
    raise NoConvergence(f"series did not converge within {MAX_SERIES_TERMS} terms")


def series_exp(x: AlgebraElement, tol: float = 1e-16) -> AlgebraElement:
    """Partial sum of ``sum x**k / k!``.

    Stops once the next term's norm is below ``tol * max(1, |sum|)``.
    """
    x = _validate(x)
    return _series(x, tol, _identity(x), square=False, power=0)


def series_cosh(x: AlgebraElement, tol: float = 1e-16) -> AlgebraElement:
    """Even part of the exponential series, summed directly."""
    x = _validate(x)
    return _series(x, tol, _identity(x), square=True, power=0)


def series_sinh(x: AlgebraElement, tol: float = 1e-16) -> AlgebraElement:
    """Odd part of the exponential series, summed directly."""
    x = _validate(x)
    first = x.copy() if isinstance(x, np.ndarray) else x
    return _series(x, tol, first, square=True, power=1)
