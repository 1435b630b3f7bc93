"""Hadamard sign matrix and the variance sieve over the 16 rules.

Evaluating one polynomial expression under every multiplication rule
gives a 16-entry function family f[0..15].  The sieve combines the family
through a 16x16 Hadamard sign matrix

    b[j][k] = (-1) ** popcount(j & k)

into a distance family g[k] = (1/4) * sum_j b[j][k] f[j].  Applying the
same transform to the distances restores the functions exactly (the
scaled matrix is its own inverse).

An expression is algebraically invariant when g[k] = 0 for every k > 0,
i.e. its value does not depend on which of the 16 rules multiplies.  With
integer coefficient assignments every sum here is exact (quarters are
dyadic), so invariance is a zero test with no tolerance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import Octonion
from .dsl import Expr, evaluate, free_vars, parse

__all__ = [
    "sign_entry",
    "sign_matrix",
    "function_family",
    "sieve",
    "unsieve",
    "random_assignment",
    "InvarianceWitness",
    "SieveVerdict",
    "is_invariant",
]

FunctionFamily = tuple[Octonion, ...]
DistanceFamily = tuple[Octonion, ...]


def sign_entry(j: int, k: int) -> int:
    """Sign matrix entry: -1 to the popcount of the bitwise AND."""
    if not 0 <= j <= 15 or not 0 <= k <= 15:
        raise ValueError(f"sign matrix indices must be in 0..15, got ({j}, {k})")
    return -1 if bin(j & k).count("1") % 2 else 1


_MATRIX: tuple[tuple[int, ...], ...] = tuple(
    tuple(sign_entry(j, k) for k in range(16)) for j in range(16)
)


def sign_matrix() -> tuple[tuple[int, ...], ...]:
    """The full 16x16 sign matrix, rows indexed by j, columns by k."""
    return _MATRIX


def _check_family(values: Sequence[Octonion]) -> FunctionFamily:
    fam = tuple(values)
    if len(fam) != 16 or not all(isinstance(v, Octonion) for v in fam):
        raise ValueError("a family is a 16-tuple of octonions")
    return fam


def function_family(expr: Expr, env: Mapping[str, Octonion]) -> FunctionFamily:
    """Evaluate ``expr`` under every rule; entry j uses rule j."""
    return tuple(evaluate(expr, env, n) for n in range(16))


def _transform(values: Sequence[Octonion]) -> tuple[Octonion, ...]:
    fam = _check_family(values)
    out = []
    for k in range(16):
        acc = [0] * 8
        for j in range(16):
            s = _MATRIX[j][k]
            cs = fam[j].coeffs
            for i in range(8):
                acc[i] += s * cs[i]
        out.append(Octonion(c / 4 for c in acc))
    return tuple(out)


def sieve(fam: Sequence[Octonion]) -> DistanceFamily:
    """Distances of a function family: g[k] = (1/4) sum_j b[j][k] f[j]."""
    return _transform(fam)


def unsieve(dist: Sequence[Octonion]) -> FunctionFamily:
    """The identical transform; inverse of :func:`sieve`."""
    return _transform(dist)


def random_assignment(
    names: Sequence[str], rng: random.Random, coeff_bound: int = 9
) -> dict[str, Octonion]:
    """Integer-coefficient octonions for each name, drawn from the rng."""
    return {
        name: Octonion(rng.randint(-coeff_bound, coeff_bound) for _ in range(8))
        for name in names
    }


@dataclass(frozen=True)
class InvarianceWitness:
    """A refuting assignment: distance ``index`` came out nonzero."""

    assignment: dict[str, Octonion]
    index: int
    distance: Octonion


@dataclass(frozen=True)
class SieveVerdict:
    invariant: bool
    trials: int
    witness: InvarianceWitness | None = None


def is_invariant(expr: Expr | str, trials: int = 64, seed: int = 0) -> SieveVerdict:
    """Randomized refuter for algebraic invariance.

    Runs ``trials`` integer-coefficient random assignments; each one is
    sieved and the distances g[k], k > 0, are tested for exact zero.  The
    first nonzero distance refutes invariance and is returned as the
    witness.  A verdict of invariant means no counterexample was found in
    the given trials, not a proof over all assignments.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    tree = parse(expr) if isinstance(expr, str) else expr
    names = free_vars(tree)
    rng = random.Random(seed)
    for _ in range(trials):
        env = random_assignment(names, rng)
        distances = sieve(function_family(tree, env))
        for k in range(1, 16):
            if not distances[k].is_zero():
                return SieveVerdict(False, trials, InvarianceWitness(env, k, distances[k]))
    return SieveVerdict(True, trials, None)
