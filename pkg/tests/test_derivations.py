"""Inner derivations: Leibniz rule, closed form, ranks, cross-rule equality."""

import random

import pytest

from octsieve.algebra import REFERENCE_TRIPLETS, Octonion, multiply
from octsieve.derivations import (
    antiassoc_closed_form,
    cross_algebra_equal,
    derivation_matrix,
    derivation_span_rank,
    derive,
    expr_cross_algebra_equal,
    integer_rank,
    leibniz_check,
)


def unit(k):
    return Octonion.unit(k)


def rand_oct(rng, bound=5):
    return Octonion(rng.randint(-bound, bound) for _ in range(8))


def test_derive_on_associative_triple_vanishes():
    assert derive(unit(1), unit(2), unit(3), 0) == Octonion.zero()


def test_derive_antiassociative_example():
    d = derive(unit(1), unit(2), unit(4), 0)
    assert d == Octonion((0, 0, 0, 0, 0, 0, 0, -2))
    assert d == -2 * multiply(multiply(unit(1), unit(2), 0), unit(4), 0)


def test_derive_kills_reals():
    rng = random.Random(12)
    for n in range(16):
        u, v = rand_oct(rng), rand_oct(rng)
        assert derive(u, v, Octonion.real(7), n) == Octonion.zero()
        assert derive(u, v, Octonion.one(), n) == Octonion.zero()
        # and never produces a real component
        assert derive(u, v, rand_oct(rng), n)[0] == 0


def test_derive_antisymmetric_in_u_v():
    rng = random.Random(13)
    for n in range(16):
        u, v, a = rand_oct(rng), rand_oct(rng), rand_oct(rng)
        assert derive(u, v, a, n) == -derive(v, u, a, n)
        assert derive(u, u, a, n) == Octonion.zero()


def test_leibniz_residual_is_exactly_zero():
    rng = random.Random(14)
    for _ in range(100):
        u, v, a, b = (rand_oct(rng) for _ in range(4))
        for n in range(16):
            assert leibniz_check(u, v, a, b, n) == 0.0
    assert leibniz_check(unit(1), unit(2), Octonion.one(), rand_oct(rng), 3) == 0.0


def test_antiassoc_closed_form_report():
    report = antiassoc_closed_form(1, 2, 4, 0)
    assert report.equal
    assert report.lhs == report.rhs == Octonion((0, 0, 0, 0, 0, 0, 0, -2))


def test_antiassoc_closed_form_preconditions():
    with pytest.raises(ValueError):
        antiassoc_closed_form(1, 2, 3, 0)  # associative triplet
    with pytest.raises(ValueError):
        antiassoc_closed_form(1, 1, 4, 0)  # repeated index
    with pytest.raises(ValueError):
        antiassoc_closed_form(0, 2, 4, 0)  # real unit


def test_antiassoc_closed_form_spot_rules():
    lines = {frozenset(t) for t in REFERENCE_TRIPLETS}
    for n in (0, 7, 12):
        for u in range(1, 8):
            for v in range(1, 8):
                for a in range(1, 8):
                    if len({u, v, a}) != 3 or frozenset((u, v, a)) in lines:
                        continue
                    assert antiassoc_closed_form(u, v, a, n).equal


def test_cross_algebra_equal_quaternionic_triple():
    assert cross_algebra_equal(unit(1), unit(2), unit(3)) == frozenset(range(16))


def test_cross_algebra_equal_antiassociative_triple():
    # D = -2 (i1 i2) i4 picks up the orientations of {1,2,3} and {3,4,7};
    # their product is + exactly on even-popcount rule ids
    got = cross_algebra_equal(unit(1), unit(2), unit(4))
    assert got == frozenset({0, 3, 5, 6, 9, 10, 12, 15})
    assert got < frozenset(range(16))


def test_cross_algebra_equal_real_argument():
    assert cross_algebra_equal(unit(1), unit(2), Octonion.one()) == frozenset(range(16))


def test_derivation_matrix_is_integer_antisymmetric():
    for n in (0, 5, 11):
        for u, v in ((1, 2), (1, 4), (3, 6)):
            matrix = derivation_matrix(u, v, n)
            for i in range(7):
                for j in range(7):
                    assert isinstance(matrix[i][j], int)
                    assert matrix[i][j] == -matrix[j][i]


def test_integer_rank_basics():
    assert integer_rank([]) == 0
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert integer_rank([[2, 4], [1, 2]]) == 1
    assert integer_rank([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 2


def test_derivation_span_ranks():
    all_pairs = [(u, v) for u in range(1, 8) for v in range(u + 1, 8)]
    assert derivation_span_rank(all_pairs, 0) == 14
    assert derivation_span_rank(all_pairs, 9) == 14
    assert derivation_span_rank([(1, 2), (1, 3), (2, 3)], 0, restrict_to=(1, 2, 3)) == 3
    assert derivation_span_rank([], 0) == 0
    with pytest.raises(ValueError):
        derivation_span_rank([(0, 1)], 0)
    with pytest.raises(ValueError):
        derivation_span_rank([(1, 2)], 0, restrict_to=(0, 1))


def test_expr_cross_algebra_equal_in_span_regime():
    # values built over {1, u, v, uv} keep the derivation identical in all rules
    verdict = expr_cross_algebra_equal(unit(1), unit(2), "a*b", trials=12, seed=0)
    assert verdict.in_span.equal
    assert verdict.in_span.witness is None
    # generic full-octonion assignments break the agreement
    assert not verdict.out_of_span.equal
    assert verdict.out_of_span.witness is not None


def test_expr_cross_algebra_equal_other_line():
    # a line whose product points at -i4; the span realization still holds
    verdict = expr_cross_algebra_equal(unit(3), unit(7), "a*b - b*a", trials=10, seed=5)
    assert verdict.in_span.equal
    assert not verdict.out_of_span.equal


def test_expr_cross_algebra_equal_identity_expression():
    # reduces to the pointwise criterion: an i4 component breaks equality
    verdict = expr_cross_algebra_equal(unit(1), unit(2), "a", trials=8, seed=1)
    assert verdict.in_span.equal
    assert not verdict.out_of_span.equal


def test_expr_cross_algebra_equal_constant_expression():
    verdict = expr_cross_algebra_equal(unit(1), unit(2), "3", trials=4, seed=2)
    assert verdict.in_span.equal
    assert verdict.out_of_span.equal  # derivations annihilate reals


def test_expr_cross_algebra_equal_validates_inputs():
    with pytest.raises(ValueError):
        expr_cross_algebra_equal(unit(1), unit(1), "a")
    with pytest.raises(ValueError):
        expr_cross_algebra_equal(Octonion((1, 1, 0, 0, 0, 0, 0, 0)), unit(2), "a")
    with pytest.raises(ValueError):
        expr_cross_algebra_equal(Octonion.one(), unit(2), "a")
    with pytest.raises(ValueError):
        expr_cross_algebra_equal(unit(1), unit(2), "a", trials=0)
