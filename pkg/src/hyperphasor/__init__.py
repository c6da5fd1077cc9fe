"""Single-term canonical forms for sums of circular and hyperbolic sinusoids."""

from .algebra import (
    CausalClass,
    SplitComplex,
    classify_vector,
    sc_banach_norm,
    sc_conj,
    sc_exp,
    sc_inverse,
    sc_minkowski_modulus,
    sc_mul,
    series_cosh,
    series_exp,
    series_sinh,
)
from .errors import (
    DomainError,
    FrequencyMismatch,
    HyperphasorError,
    InvalidMass,
    LexError,
    LightlikeNotInvertible,
    NoConvergence,
    OutsideDerivationDomain,
    Overflow,
    ParseError,
    RangeError,
    UndefinedArgument,
    ZeroSignal,
)
from .euclid import CanonicalCircular, CircularPhasor, combine_cos_sin, eval_circular, phasor_add, principal_arg
from .expr import ExprSum, Term, check, parse, parse_expr, render, sample, simplify, tokenize
from .hyper import (
    CanonicalHyperbolic,
    HyperbolicSignal,
    HyperKind,
    eval_hyperbolic,
    hyper_canonicalize,
    hyper_reduce_shifted,
    parallelogram_area,
    split_complex_canonicalize,
)
from .oscillator import Branch, MotionSolution, OscillatorProblem, eval_solution, residual_check, solve_oscillator

__version__ = "0.1.0"
