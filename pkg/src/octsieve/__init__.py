"""octsieve: the 16 equivalent octonion multiplication rules, the Hadamard
variance sieve over them, and their derivation algebras."""

from .algebra import (
    GENERATOR_FLIPS,
    REFERENCE_TRIPLETS,
    NotEquivalentAlgebraError,
    Octonion,
    conjugate,
    identify_algebra,
    inverse,
    mul_table,
    multiply,
    norm,
    norm_sq,
    parity_word,
    table_from_tensor,
    triplet_set,
)
from .automorphisms import (
    IDENTITY,
    T0,
    T1,
    T2,
    T3,
    Automorphism,
    chirality,
    compose,
    fano_lines,
    orbit,
)
from .derivations import (
    antiassoc_closed_form,
    cross_algebra_equal,
    derivation_span_rank,
    derive,
    expr_cross_algebra_equal,
    leibniz_check,
)
from .dsl import ExprSyntaxError, UnboundVariableError, evaluate, free_vars, parse, to_text
from .sieve import function_family, is_invariant, sieve, sign_entry, sign_matrix, unsieve
from .verification import run_checks

__version__ = "0.1.0"

__all__ = [
    "GENERATOR_FLIPS",
    "REFERENCE_TRIPLETS",
    "NotEquivalentAlgebraError",
    "Octonion",
    "conjugate",
    "identify_algebra",
    "inverse",
    "mul_table",
    "multiply",
    "norm",
    "norm_sq",
    "parity_word",
    "table_from_tensor",
    "triplet_set",
    "IDENTITY",
    "T0",
    "T1",
    "T2",
    "T3",
    "Automorphism",
    "chirality",
    "compose",
    "fano_lines",
    "orbit",
    "antiassoc_closed_form",
    "cross_algebra_equal",
    "derivation_span_rank",
    "derive",
    "expr_cross_algebra_equal",
    "leibniz_check",
    "ExprSyntaxError",
    "UnboundVariableError",
    "evaluate",
    "free_vars",
    "parse",
    "to_text",
    "function_family",
    "is_invariant",
    "sieve",
    "sign_entry",
    "sign_matrix",
    "unsieve",
    "run_checks",
    "__version__",
]
