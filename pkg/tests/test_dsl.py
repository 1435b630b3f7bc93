"""Parser, printer, and evaluator of the expression language."""

import random

import pytest

from octsieve.algebra import Octonion, multiply, norm
from octsieve.dsl import (
    Add,
    Conj,
    Const,
    ExprSyntaxError,
    Mul,
    Neg,
    Sub,
    UnboundVariableError,
    Var,
    evaluate,
    free_vars,
    parse,
    to_text,
)


def unit(k):
    return Octonion.unit(k)


def test_parse_sum_of_products():
    assert parse("a*b + b*a") == Add(Mul(Var("a"), Var("b")), Mul(Var("b"), Var("a")))


def test_star_is_left_associative():
    assert parse("a*b*c") == Mul(Mul(Var("a"), Var("b")), Var("c"))
    assert parse("a*b*c") != parse("a*(b*c)")
    assert parse("a*(b*c)") == Mul(Var("a"), Mul(Var("b"), Var("c")))


def test_parse_conj_and_neg():
    assert parse("conj(a)*a") == Mul(Conj(Var("a")), Var("a"))
    assert parse("-a*b") == Mul(Neg(Var("a")), Var("b"))
    assert parse("-(a*b)") == Neg(Mul(Var("a"), Var("b")))
    assert parse("a - -b") == Sub(Var("a"), Neg(Var("b")))


def test_parse_numbers():
    assert parse("3") == Const(3)
    assert parse("2.5") == Const(2.5)
    assert parse("2*a") == Mul(Const(2), Var("a"))


def test_syntax_errors_carry_offsets():
    with pytest.raises(ExprSyntaxError) as err:
        parse("")
    assert err.value.offset == 0
    with pytest.raises(ExprSyntaxError) as err:
        parse("a + ")
    assert err.value.offset == 4
    with pytest.raises(ExprSyntaxError) as err:
        parse("a $ b")
    assert err.value.offset == 2
    with pytest.raises(ExprSyntaxError):
        parse("(a*b")
    with pytest.raises(ExprSyntaxError):
        parse("a b")
    with pytest.raises(ExprSyntaxError):
        parse("conj a")


def test_free_vars_first_occurrence_order():
    assert free_vars(parse("a*b + b*a")) == ["a", "b"]
    assert free_vars(parse("3")) == []
    assert free_vars(parse("conj(x)*y + x")) == ["x", "y"]


def test_evaluate_uses_the_selected_rule():
    env = {"a": unit(1), "b": unit(2)}
    assert evaluate(parse("a*b"), env, 0) == unit(3)
    assert evaluate(parse("a*b"), env, 4) == -unit(3)


def test_evaluate_without_multiplication_is_rule_independent():
    rng = random.Random(5)
    env = {
        "a": Octonion(rng.randint(-9, 9) for _ in range(8)),
        "b": Octonion(rng.randint(-9, 9) for _ in range(8)),
    }
    values = [evaluate(parse("a+b"), env, n) for n in range(16)]
    assert all(v == values[0] for v in values)


def test_evaluate_const_scaling_and_conj():
    a = Octonion((1, -2, 3, 0, 0, 5, 0, 0))
    assert evaluate(parse("2*a"), {"a": a}, 0) == 2 * a
    assert evaluate(parse("conj(a)"), {"a": a}, 0) == Octonion((1, 2, -3, 0, 0, -5, 0, 0))
    assert evaluate(parse("3"), {}, 11) == Octonion.real(3)


def test_unbound_variable_reports_name():
    with pytest.raises(UnboundVariableError) as err:
        evaluate(parse("a*b"), {"a": unit(1)}, 0)
    assert err.value.name == "b"


def test_nonassociativity_is_observable_in_every_rule():
    env = {
        "a": Octonion((0, 3, 1, 3, 3, 0, 0, 1)),
        "b": Octonion((3, 1, -2, -2, 3, 1, 0, 2)),
        "c": Octonion((1, 3, -2, -3, 0, -1, -2, -3)),
    }
    left = parse("(a*b)*c")
    right = parse("a*(b*c)")
    for n in range(16):
        gap = evaluate(left, env, n) - evaluate(right, env, n)
        assert norm(gap) > 0


def test_to_text_round_trips_fixed_forms():
    for text in ("a*b + b*a", "a*b*c", "a*(b*c)", "conj(a)*a", "-(a + b)*c", "a - (b - c)", "2*a - 3"):
        tree = parse(text)
        assert parse(to_text(tree)) == tree


def _random_tree(rng, depth):
    if depth == 0:
        return rng.choice([Var(rng.choice("abc")), Const(rng.randint(0, 9))])
    kind = rng.randrange(6)
    if kind == 0:
        return Add(_random_tree(rng, depth - 1), _random_tree(rng, depth - 1))
    if kind == 1:
        return Sub(_random_tree(rng, depth - 1), _random_tree(rng, depth - 1))
    if kind == 2:
        return Mul(_random_tree(rng, depth - 1), _random_tree(rng, depth - 1))
    if kind == 3:
        return Neg(_random_tree(rng, depth - 1))
    if kind == 4:
        return Conj(_random_tree(rng, depth - 1))
    return rng.choice([Var(rng.choice("abc")), Const(rng.randint(0, 9))])


def test_to_text_round_trips_random_trees():
    rng = random.Random(6)
    for _ in range(300):
        tree = _random_tree(rng, rng.randint(1, 4))
        assert parse(to_text(tree)) == tree


def test_evaluation_agrees_with_direct_multiplication():
    rng = random.Random(7)
    for n in range(16):
        a = Octonion(rng.randint(-9, 9) for _ in range(8))
        b = Octonion(rng.randint(-9, 9) for _ in range(8))
        expected = multiply(a, b, n) + multiply(b, a, n)
        assert evaluate(parse("a*b + b*a"), {"a": a, "b": b}, n) == expected
