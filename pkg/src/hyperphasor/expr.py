"""Textual sums of trigonometric terms: lexing, parsing, rendering,
canonical simplification and brute-force checking.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := [sign] [number "*"] func "(" arg ")" | [sign] number
    func   := "cos" | "sin" | "cosh" | "sinh" | "exp"
    arg    := [sign] [number "*"] "t" [("+" | "-") number]
    number := literal (("*" | "/") literal)*
    literal:= decimal ["e" [sign] digits] | "pi" | "e"

Products and quotients of literals are folded at parse time.  A bare number
``k`` is stored as the constant term ``k*cos(0*t)``.  ``exp(w*t + phi)`` is
stored as ``(coef*e**phi)*exp(w*t)`` so exponential terms never carry a
phase.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

import numpy as np

from .algebra import CausalClass
from .errors import LexError, Overflow, ParseError, RangeError
from .euclid import CanonicalCircular, CircularPhasor, phasor_add, reduce_phase
from .hyper import (
    CanonicalHyperbolic,
    HyperbolicSignal,
    HyperKind,
    hyper_canonicalize,
    hyper_reduce_shifted,
)

__all__ = [
    "Token",
    "Term",
    "ExprSum",
    "CheckReport",
    "tokenize",
    "parse",
    "parse_expr",
    "render",
    "simplify",
    "classify_groups",
    "eval_expr",
    "check",
    "sample",
    "to_csv",
]

FUNCS = ("cos", "sin", "cosh", "sinh", "exp")
CIRCULAR = "circular"
HYPERBOLIC = "hyperbolic"
_HALF_PI = 0.5 * math.pi

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_]+)
  | (?P<op>[-+*/()])
    """,
    re.VERBOSE,
)
_IDENTS = {"cos", "sin", "cosh", "sinh", "exp", "t", "pi", "e"}


class Token(NamedTuple):
    kind: str  # "num", "const", "func", "t", "op", "end"
    text: str
    pos: int
    value: float = 0.0


@dataclass(frozen=True)
class Term:
    """``coef * func(freq*t + phase)``."""

    coef: float
    func: str
    freq: float = 1.0
    phase: float = 0.0

    @property
    def family(self) -> str:
        return CIRCULAR if self.func in ("cos", "sin") else HYPERBOLIC

    @property
    def is_constant(self) -> bool:
        return self.func == "cos" and self.freq == 0.0 and self.phase == 0.0


@dataclass(frozen=True)
class ExprSum:
    terms: tuple[Term, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))


# -- lexing -------------------------------------------------------------------


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8", "surrogatepass"))


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens; positions are byte offsets into the
    UTF-8 encoding of ``text``."""
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise LexError(_byte_offset(text, i), "token", repr(text[i]))
        kind = m.lastgroup
        lexeme = m.group()
        pos = _byte_offset(text, i)
        if kind == "num":
            tokens.append(Token("num", lexeme, pos, float(lexeme)))
        elif kind == "ident":
            if lexeme not in _IDENTS:
                raise LexError(pos, "function, 't', 'pi' or 'e'", repr(lexeme))
            if lexeme == "pi":
                tokens.append(Token("const", lexeme, pos, math.pi))
            elif lexeme == "e":
                tokens.append(Token("const", lexeme, pos, math.e))
            elif lexeme == "t":
                tokens.append(Token("t", lexeme, pos))
            else:
                tokens.append(Token("func", lexeme, pos))
        elif kind == "op":
            tokens.append(Token("op", lexeme, pos))
        i = m.end()
    return tokens


# -- parsing ------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token], end: int):
        self.tokens = list(tokens) + [Token("end", "", end)]
        self.i = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, expected: str) -> ParseError:
        tok = self.peek()
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(tok.pos, expected, found)

    def is_op(self, text: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok.kind == "op" and tok.text == text

    def is_literal(self, offset: int = 0) -> bool:
        return self.peek(offset).kind in ("num", "const")

    def sign(self) -> float:
        if self.is_op("+"):
            self.advance()
        elif self.is_op("-"):
            self.advance()
            return -1.0
        return 1.0

    def number(self) -> float:
        if not self.is_literal():
            raise self.error("number")
        start = self.peek()
        value = self.advance().value
        # Fold only while the operand after * or / is another literal.
        while (self.is_op("*") or self.is_op("/")) and self.is_literal(1):
            op = self.advance().text
            rhs = self.advance()
            if op == "*":
                value *= rhs.value
            elif rhs.value == 0.0:
                raise ParseError(rhs.pos, "nonzero divisor", repr(rhs.text))
            else:
                value /= rhs.value
        if not math.isfinite(value):
            raise ParseError(start.pos, "finite number", repr(start.text))
        return value

    def expr(self) -> ExprSum:
        if self.peek().kind == "end":
            raise self.error("expression")
        terms = [self.term(1.0)]
        while self.is_op("+") or self.is_op("-"):
            outer = -1.0 if self.advance().text == "-" else 1.0
            terms.append(self.term(outer))
        if self.peek().kind != "end":
            raise self.error("'+', '-' or end of input")
        return ExprSum(terms)

    def term(self, outer: float) -> Term:
        sign = outer * self.sign()
        coef = 1.0
        if self.is_literal():
            coef = self.number()
            if not self.is_op("*"):
                return Term(sign * coef, "cos", 0.0, 0.0)
            self.advance()
            if self.peek().kind != "func":
                raise self.error("function name or number")
        if self.peek().kind != "func":
            raise self.error("expression")
        func = self.advance().text
        if not self.is_op("("):
            raise self.error("'('")
        self.advance()
        freq, phase = self.arg()
        if not self.is_op(")"):
            raise self.error("')'")
        self.advance()
        coef *= sign
        if func == "exp":
            coef *= math.exp(phase) if phase < 710.0 else math.inf
            phase = 0.0
            if not math.isfinite(coef):
                raise ParseError(self.peek(-1).pos, "exp argument within range", "overflow")
        return Term(coef, func, freq, phase)

    def arg(self) -> tuple[float, float]:
        if self.peek().kind == "end" or self.is_op(")"):
            raise self.error("argument expression")
        sign = self.sign()
        freq = 1.0
        if self.is_literal():
            freq = self.number()
            if not self.is_op("*"):
                raise self.error("'*'")
            self.advance()
        if self.peek().kind != "t":
            raise self.error("'t'")
        self.advance()
        phase = 0.0
        if self.is_op("+") or self.is_op("-"):
            phase_sign = -1.0 if self.advance().text == "-" else 1.0
            phase = phase_sign * self.number()
        return sign * freq, phase


def parse(tokens: list[Token], end: Optional[int] = None) -> ExprSum:
    """Parse a token list into an :class:`ExprSum`.

    ``end`` is the offset reported for errors at the end of input; it
    defaults to just past the last token.
    """
    if end is None:
        end = tokens[-1].pos + len(tokens[-1].text.encode("utf-8")) if tokens else 0
    return _Parser(tokens, end).expr()


def parse_expr(text: str) -> ExprSum:
    """Tokenize and parse ``text``."""
    return parse(tokenize(text), end=_byte_offset(text, len(text)))


# -- rendering ----------------------------------------------------------------


def format_number(x: float, precision: Optional[int] = 10) -> str:
    """``precision`` digits after the decimal point, trailing zeros dropped.

    Magnitudes outside ``[1e-3, 1e15)`` use scientific notation with
    ``precision`` significant digits.  ``precision=None`` gives the shortest
    string that round-trips exactly.
    """
    if x == 0.0:
        return "0"
    if precision is None:
        return repr(float(x))
    ax = abs(x)
    if 1e-3 <= ax < 1e15:
        s = f"{x:.{precision}f}"
        if "." in s:
            s = s.rstrip("0").rstrip(".")
        return s
    mantissa, _, exponent = f"{x:.{max(precision - 1, 0)}e}".partition("e")
    if "." in mantissa:
        mantissa = mantissa.rstrip("0").rstrip(".")
    return f"{mantissa}e{int(exponent)}"


def _render_term(term: Term, precision: Optional[int]) -> str:
    if term.is_constant:
        return format_number(term.coef, precision)
    if term.coef == 1.0:
        head = ""
    elif term.coef == -1.0:
        head = "-"
    else:
        head = format_number(term.coef, precision) + "*"
    if term.freq == 1.0:
        arg = "t"
    elif term.freq == -1.0:
        arg = "-t"
    else:
        arg = format_number(term.freq, precision) + "*t"
    if term.phase > 0:
        arg += "+" + format_number(term.phase, precision)
    elif term.phase < 0:
        arg += "-" + format_number(-term.phase, precision)
    return f"{head}{term.func}({arg})"


def render(e: ExprSum, precision: Optional[int] = 10) -> str:
    parts = []
    for i, term in enumerate(e.terms):
        if i == 0:
            parts.append(_render_term(term, precision))
        elif term.coef < 0:
            flipped = Term(-term.coef, term.func, term.freq, term.phase)
            parts.append(" - " + _render_term(flipped, precision))
        else:
            parts.append(" + " + _render_term(term, precision))
    return "".join(parts)


# -- canonical simplification -------------------------------------------------


def _positive_frequency(term: Term) -> Term:
    # cos and cosh are even, sin and sinh odd; exp keeps its signed frequency.
    if term.func == "exp" or not term.freq < 0:
        return term
    coef = term.coef if term.func in ("cos", "cosh") else -term.coef
    return Term(coef, term.func, -term.freq, -term.phase)


def _group_key(term: Term) -> tuple[float, int]:
    return abs(term.freq), 0 if term.family == CIRCULAR else 1


def _circular_group(terms: list[Term], omega: float, sine_form: bool) -> CanonicalCircular:
    target = "sin" if sine_form else "cos"
    if len(terms) == 1 and terms[0].func == target:
        # Already single-term: normalize sign and phase only.
        (term,) = terms
        if term.coef == 0.0:
            return CanonicalCircular(0.0, 0.0, omega, target)
        phase = term.phase + (math.pi if term.coef < 0 else 0.0)
        return CanonicalCircular(abs(term.coef), reduce_phase(phase), omega, target)

    def as_cosine(term: Term) -> CircularPhasor:
        # sin(x) = cos(x - pi/2)
        shift = -_HALF_PI if term.func == "sin" else 0.0
        return CircularPhasor(term.coef, term.phase + shift, omega)

    acc = as_cosine(terms[0])
    result = CanonicalCircular(*_normalized(acc), omega)
    for term in terms[1:]:
        result = phasor_add(acc, as_cosine(term))
        acc = CircularPhasor(result.magnitude, result.phase, omega)
    if sine_form and result.magnitude != 0.0:
        # c cos(x + theta) = c sin(x + theta + pi/2)
        return CanonicalCircular(result.magnitude, reduce_phase(result.phase + _HALF_PI), omega, "sin")
    return CanonicalCircular(result.magnitude, result.phase, omega, target)


def _normalized(p: CircularPhasor) -> tuple[float, float]:
    if p.amplitude == 0.0:
        return 0.0, 0.0
    return abs(p.amplitude), reduce_phase(p.phase + (math.pi if p.amplitude < 0 else 0.0))


def _single_hyperbolic(term: Term, omega: float) -> CanonicalHyperbolic:
    c = term.coef
    if term.func == "exp":
        kind = HyperKind.EXP_MINUS if term.freq < 0 else HyperKind.EXP_PLUS
        return CanonicalHyperbolic(kind, c, 0.0, omega)
    if c == 0.0:
        return CanonicalHyperbolic(HyperKind.EXP_PLUS, 0.0, 0.0, omega)
    if term.func == "cosh":
        kind = HyperKind.POS_COSH if c > 0 else HyperKind.NEG_COSH
    else:
        kind = HyperKind.POS_SINH if c > 0 else HyperKind.NEG_SINH
    return CanonicalHyperbolic(kind, abs(c), term.phase, omega)


def _reduce_hyperbolic(terms: list[Term], omega: float) -> HyperbolicSignal:
    alpha = beta = 0.0
    shifted = [t for t in terms if t.func != "exp"]
    for t in terms:
        if t.func == "exp":
            alpha += t.coef
            beta += -t.coef if t.freq < 0 else t.coef
    if len(shifted) % 2:
        shifted.append(Term(0.0, "sinh", omega, 0.0))
    for f, g in zip(shifted[::2], shifted[1::2]):
        pair = hyper_reduce_shifted(f.coef, f.phase, f.func, g.coef, g.phase, g.func, omega)
        alpha += pair.a
        beta += pair.b
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise Overflow("reduced coefficients exceed the double precision range")
    return HyperbolicSignal(alpha, beta, omega)


def _coefficients(form: CanonicalHyperbolic) -> tuple[float, float]:
    kind, m, d = form.kind, form.magnitude, form.shift
    if kind is HyperKind.EXP_PLUS:
        return m, m
    if kind is HyperKind.EXP_MINUS:
        return m, -m
    sign = -1.0 if kind in (HyperKind.NEG_COSH, HyperKind.NEG_SINH) else 1.0
    ch, sh = sign * m * math.cosh(d), sign * m * math.sinh(d)
    if kind in (HyperKind.POS_COSH, HyperKind.NEG_COSH):
        return ch, sh
    return sh, ch


def _snap_lightlike(form: CanonicalHyperbolic, eps: float) -> CanonicalHyperbolic:
    # Lossy: replaces a nearly lightlike form by the nearest exponential.
    if eps <= 0 or form.causal_class is CausalClass.LIGHTLIKE:
        return form
    try:
        a, b = _coefficients(form)
    except OverflowError:
        return form
    if abs(abs(a) - abs(b)) > eps * max(abs(a), abs(b)):
        return form
    if a * b > 0:
        return CanonicalHyperbolic(HyperKind.EXP_PLUS, 0.5 * (a + b), 0.0, form.omega)
    return CanonicalHyperbolic(HyperKind.EXP_MINUS, 0.5 * (a - b), 0.0, form.omega)


def _hyperbolic_group(terms: list[Term], omega: float, eps: float) -> CanonicalHyperbolic:
    if len(terms) == 1:
        form = _single_hyperbolic(terms[0], omega)
    else:
        form = hyper_canonicalize(_reduce_hyperbolic(terms, omega))
    return _snap_lightlike(form, eps)


def _circular_term(form: CanonicalCircular) -> Term:
    if form.omega == 0.0:
        f = math.sin if form.func == "sin" else math.cos
        return Term(form.magnitude * f(form.phase), "cos", 0.0, 0.0)
    return Term(form.magnitude, form.func, form.omega, form.phase)


def _hyperbolic_term(form: CanonicalHyperbolic) -> Term:
    kind, w = form.kind, form.omega
    if kind is HyperKind.EXP_PLUS:
        return Term(form.magnitude, "exp", w, 0.0)
    if kind is HyperKind.EXP_MINUS:
        return Term(form.magnitude, "exp", -w, 0.0)
    func = "cosh" if kind in (HyperKind.POS_COSH, HyperKind.NEG_COSH) else "sinh"
    sign = -1.0 if kind in (HyperKind.NEG_COSH, HyperKind.NEG_SINH) else 1.0
    return Term(sign * form.magnitude, func, w, form.shift)


def _groups(e: ExprSum) -> list[tuple[str, float, list[Term]]]:
    groups: dict[tuple[float, int], list[Term]] = {}
    for term in e.terms:
        term = _positive_frequency(term)
        groups.setdefault(_group_key(term), []).append(term)
    return [
        (CIRCULAR if fam == 0 else HYPERBOLIC, omega, groups[(omega, fam)])
        for omega, fam in sorted(groups)
    ]


def canonical_forms(e: ExprSum, sine_form: bool = False, eps: float = 0.0):
    """One canonical form per (family, frequency) group, in ascending
    frequency order with the circular group first on ties."""
    forms = []
    for family, omega, terms in _groups(e):
        if family == CIRCULAR:
            forms.append(_circular_group(terms, omega, sine_form))
        else:
            forms.append(_hyperbolic_group(terms, omega, eps))
    return forms


def simplify(e: ExprSum, sine_form: bool = False, eps: float = 0.0) -> ExprSum:
    """Collapse every same-frequency, same-family group into a single term.

    Circular groups are folded pairwise with the phasor addition formula,
    hyperbolic groups are reduced to ``alpha cosh + beta sinh`` and then
    canonicalized.  ``eps > 0`` snaps hyperbolic groups with
    ``||alpha| - |beta|| <= eps*max(|alpha|, |beta|)`` onto an exponential.
    """
    terms = []
    for form in canonical_forms(e, sine_form, eps):
        if isinstance(form, CanonicalCircular):
            terms.append(_circular_term(form))
        else:
            terms.append(_hyperbolic_term(form))
    return ExprSum(terms)


def classify_groups(e: ExprSum, eps: float = 0.0) -> list[tuple[float, CausalClass]]:
    """Causal class of each hyperbolic group, keyed by frequency."""
    return [
        (form.omega, form.causal_class)
        for form in canonical_forms(e, eps=eps)
        if isinstance(form, CanonicalHyperbolic)
    ]


# -- evaluation, checking, sampling -------------------------------------------

_FUNC_IMPL = {
    "cos": math.cos,
    "sin": math.sin,
    "cosh": math.cosh,
    "sinh": math.sinh,
    "exp": math.exp,
}


def eval_term(term: Term, t: float) -> float:
    if term.coef == 0.0:
        return 0.0
    try:
        value = term.coef * _FUNC_IMPL[term.func](term.freq * t + term.phase)
    except OverflowError as exc:
        raise Overflow(f"{term.func} overflows at t={t}") from exc
    if math.isinf(value):
        raise Overflow(f"term overflows at t={t}")
    return value


def eval_expr(e: ExprSum, t: float) -> float:
    total = math.fsum(eval_term(term, t) for term in e.terms)
    if math.isinf(total):
        raise Overflow(f"sum overflows at t={t}")
    return total


@dataclass(frozen=True)
class CheckReport:
    points: int
    max_abs: float
    max_rel: float
    overflow_points: int
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_rel <= self.tol and self.overflow_points < self.points


def _grid(t0: float, t1: float, n: int) -> np.ndarray:
    if not (math.isfinite(t0) and math.isfinite(t1)) or not t0 < t1:
        raise RangeError(f"need finite t0 < t1, got {t0}, {t1}")
    if n < 2:
        raise RangeError(f"need at least 2 points, got {n}")
    return np.linspace(t0, t1, n)


def check(
    e: ExprSum,
    t0: float = -5.0,
    t1: float = 5.0,
    n: int = 101,
    tol: float = 1e-9,
    simplified: Optional[ExprSum] = None,
    sine_form: bool = False,
    eps: float = 0.0,
) -> CheckReport:
    """Compare ``e`` with its simplified form on a uniform grid.

    The relative deviation at a point is ``|orig - simplified| / (1 + |orig|)``.
    Points where either side overflows are counted and skipped.
    """
    if simplified is None:
        simplified = simplify(e, sine_form=sine_form, eps=eps)
    max_abs = max_rel = 0.0
    overflow = 0
    grid = _grid(t0, t1, n)
    for t in grid:
        t = float(t)
        try:
            orig = eval_expr(e, t)
            simp = eval_expr(simplified, t)
        except Overflow:
            overflow += 1
            continue
        dev = abs(orig - simp)
        max_abs = max(max_abs, dev)
        max_rel = max(max_rel, dev / (1.0 + abs(orig)))
    return CheckReport(len(grid), max_abs, max_rel, overflow, tol)


def sample(e: ExprSum, t0: float, t1: float, n: int) -> list[tuple[float, float]]:
    return [(float(t), eval_expr(e, float(t))) for t in _grid(t0, t1, n)]


def to_csv(rows: Iterable[tuple[float, float]]) -> str:
    lines = ["t,value"]
    lines.extend(f"{t:.17g},{v:.17g}" for t, v in rows)
    return "\n".join(lines) + "\n"
