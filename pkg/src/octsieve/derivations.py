"""Inner derivations of the 16 rules and their cross-rule behavior.

For u, v in an alternative algebra,

    D(u, v; a) = [[u, v], a] - 3*((u v) a - u (v a))

is a derivation: it obeys the Leibniz rule D(ab) = D(a)b + a D(b).  Under
every one of the 16 rules the span of the basis-pair derivations has
dimension 14 (the exceptional Lie algebra of the octonions); restricted
to one associative triplet it has dimension 3 (the rotation algebra of
the quaternions).

Changing rules leaves D(u, v; a) pointwise unchanged exactly on
quaternionic inputs: for basis triples, the outputs agree across all 16
rules iff {u, v, a} sits inside one triplet's quaternion subalgebra.  For
antiassociative basis triples the whole formula collapses to -2 (u v) a,
whose sign tracks the two triplet orientations involved and therefore
varies across rules.

Integer inputs stay integer throughout, so span dimensions are computed
by fraction-free elimination with no rank threshold.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import REFERENCE_TRIPLETS, Octonion, multiply
from .dsl import Expr, evaluate, free_vars, parse

__all__ = [
    "commutator",
    "associator",
    "derive",
    "leibniz_check",
    "AntiassocReport",
    "antiassoc_closed_form",
    "cross_algebra_equal",
    "derivation_matrix",
    "integer_rank",
    "derivation_span_rank",
    "RegimeReport",
    "CrossAlgebraVerdict",
    "expr_cross_algebra_equal",
]

_LINES = tuple(frozenset(t) for t in REFERENCE_TRIPLETS)


def commutator(a: Octonion, b: Octonion, n: int) -> Octonion:
    return multiply(a, b, n) - multiply(b, a, n)


def associator(a: Octonion, b: Octonion, c: Octonion, n: int) -> Octonion:
    return multiply(multiply(a, b, n), c, n) - multiply(a, multiply(b, c, n), n)


def derive(u: Octonion, v: Octonion, a: Octonion, n: int) -> Octonion:
    """D(u, v; a) under rule n; linear in each argument."""
    return commutator(commutator(u, v, n), a, n) - 3 * associator(u, v, a, n)


def leibniz_check(u: Octonion, v: Octonion, a: Octonion, b: Octonion, n: int) -> float:
    """Norm of D(ab) - D(a)b - a D(b); zero iff the Leibniz rule holds here."""
    residual = (
        derive(u, v, multiply(a, b, n), n)
        - multiply(derive(u, v, a, n), b, n)
        - multiply(a, derive(u, v, b, n), n)
    )
    return math.sqrt(sum(c * c for c in residual.coeffs))


@dataclass(frozen=True)
class AntiassocReport:
    lhs: Octonion  # D(i_u, i_v; i_a)
    rhs: Octonion  # -2 (i_u i_v) i_a
    equal: bool


def antiassoc_closed_form(u_idx: int, v_idx: int, a_idx: int, n: int) -> AntiassocReport:
    """Both sides of the antiassociative collapse D = -2 (uv) a.

    The indices must be pairwise distinct imaginary units that do not form
    an associative triplet (the collapse needs pairwise anticommutation
    with the product of the other two).
    """
    for idx in (u_idx, v_idx, a_idx):
        if not 1 <= idx <= 7:
            raise ValueError(f"basis indices must be in 1..7, got {idx}")
    if len({u_idx, v_idx, a_idx}) != 3:
        raise ValueError(f"indices must be pairwise distinct, got {(u_idx, v_idx, a_idx)}")
    if frozenset((u_idx, v_idx, a_idx)) in _LINES:
        raise ValueError(
            f"{(u_idx, v_idx, a_idx)} is an associative triplet; the closed form needs an antiassociative triple"
        )
    u, v, a = Octonion.unit(u_idx), Octonion.unit(v_idx), Octonion.unit(a_idx)
    lhs = derive(u, v, a, n)
    rhs = -2 * multiply(multiply(u, v, n), a, n)
    return AntiassocReport(lhs, rhs, lhs == rhs)


def cross_algebra_equal(u: Octonion, v: Octonion, a: Octonion) -> frozenset[int]:
    """Rule ids whose derivation output matches rule 0's, exactly."""
    reference = derive(u, v, a, 0)
    return frozenset(n for n in range(16) if derive(u, v, a, n) == reference)


def derivation_matrix(u_idx: int, v_idx: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Action of D(i_u, i_v; .) on the imaginary subspace, as a 7x7 matrix.

    Column a-1 holds the imaginary coefficients of D applied to i_a.
    Derivations kill the real unit and output no real component, so the
    restriction is lossless; the matrices come out antisymmetric.
    """
    u, v = Octonion.unit(u_idx), Octonion.unit(v_idx)
    cols = []
    for a_idx in range(1, 8):
        image = derive(u, v, Octonion.unit(a_idx), n)
        cols.append(tuple(int(c) for c in image.coeffs[1:]))
    return tuple(tuple(cols[a][i] for a in range(7)) for i in range(7))


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    m = [list(row) for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for i in range(row + 1, len(m)):
            if m[i][col] != 0:
                f = m[i][col]
                m[i] = [pv * x - f * y for x, y in zip(m[i], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def derivation_span_rank(
    pairs: Sequence[tuple[int, int]],
    n: int,
    restrict_to: Sequence[int] | None = None,
) -> int:
    """Dimension of the real span of the derivations D(i_u, i_v; .).

    Each pair contributes its 7x7 matrix flattened to a vector; with
    ``restrict_to`` only the rows and columns on those imaginary indices
    are kept (for probing a quaternion subalgebra).
    """
    keep = tuple(range(1, 8)) if restrict_to is None else tuple(restrict_to)
    for idx in keep:
        if not 1 <= idx <= 7:
            raise ValueError(f"restriction indices must be in 1..7, got {idx}")
    rows = []
    for u_idx, v_idx in pairs:
        if not 1 <= u_idx <= 7 or not 1 <= v_idx <= 7:
            raise ValueError(f"generator pair indices must be in 1..7, got {(u_idx, v_idx)}")
        matrix = derivation_matrix(u_idx, v_idx, n)
        rows.append([matrix[i - 1][j - 1] for i in keep for j in keep])
    return integer_rank(rows)


def _basis_index(x: Octonion, label: str) -> int:
    support = [(k, c) for k, c in enumerate(x.coeffs) if c != 0]
    if len(support) == 1 and support[0][1] == 1 and support[0][0] >= 1:
        return support[0][0]
    raise ValueError(f"{label} must be an imaginary basis element i1..i7, got {x!r}")


@dataclass(frozen=True)
class RegimeReport:
    """Outcome of one sampling regime: did all 16 rules agree every trial?"""

    equal: bool
    witness: dict | None = None


@dataclass(frozen=True)
class CrossAlgebraVerdict:
    in_span: RegimeReport
    out_of_span: RegimeReport
    trials: int


def expr_cross_algebra_equal(
    u: Octonion,
    v: Octonion,
    expr: Expr | str,
    trials: int = 16,
    seed: int = 0,
) -> CrossAlgebraVerdict:
    """Probe whether D(u, v; expr value) agrees across all 16 rules.

    Two sampling regimes per trial:

    * in-span: every variable is an integer combination of {1, u, v, uv},
      with the uv element realized per rule as multiply(u, v, n) (the
      quaternion subalgebra generated by u and v has a rule-relative third
      unit).  Here the outputs agree exactly for any expression.
    * out-of-span: every variable gets an integer octonion forced to have
      a component outside that subalgebra; generic multiplicative
      expressions then disagree somewhere.

    Each regime reports whether all rules matched rule 0 in all trials,
    with the first refuting trial as witness.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    u_idx = _basis_index(u, "u")
    v_idx = _basis_index(v, "v")
    if u_idx == v_idx:
        raise ValueError("u and v must be distinct basis elements")
    tree = parse(expr) if isinstance(expr, str) else expr
    names = free_vars(tree)
    rng = random.Random(seed)

    # imaginary indices of the quaternion span: u, v, and |uv|
    w_idx = next(k for k, c in enumerate(multiply(u, v, 0).coeffs) if c != 0)
    span_idx = {0, u_idx, v_idx, w_idx}
    outside = [k for k in range(8) if k not in span_idx]

    in_span = RegimeReport(True)
    out_of_span = RegimeReport(True)

    for _ in range(trials):
        coords = {name: tuple(rng.randint(-9, 9) for _ in range(4)) for name in names}
        outputs = []
        for n in range(16):
            w = multiply(u, v, n)
            env = {
                name: Octonion.real(c0) + c1 * u + c2 * v + c3 * w
                for name, (c0, c1, c2, c3) in coords.items()
            }
            outputs.append(derive(u, v, evaluate(tree, env, n), n))
        if in_span.equal and any(d != outputs[0] for d in outputs):
            bad = next(n for n in range(16) if outputs[n] != outputs[0])
            in_span = RegimeReport(
                False,
                {"coords": coords, "algebra": bad, "got": outputs[bad], "expected": outputs[0]},
            )

        env = {}
        for name in names:
            coeffs = [rng.randint(-9, 9) for _ in range(8)]
            k = rng.choice(outside)
            while coeffs[k] == 0:
                coeffs[k] = rng.randint(-9, 9)
            env[name] = Octonion(coeffs)
        outputs = [derive(u, v, evaluate(tree, env, n), n) for n in range(16)]
        if out_of_span.equal and any(d != outputs[0] for d in outputs):
            bad = next(n for n in range(16) if outputs[n] != outputs[0])
            out_of_span = RegimeReport(
                False,
                {"assignment": env, "algebra": bad, "got": outputs[bad], "expected": outputs[0]},
            )

    return CrossAlgebraVerdict(in_span, out_of_span, trials)
