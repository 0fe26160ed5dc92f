"""Expression parsing, printing round-trip, evaluation, director checks."""

import math
import random
from fractions import Fraction

import pytest

from ruled4.errors import DomainError, ExprSyntaxError, UnknownIdentifier
from ruled4.expr import (
    Add,
    Call,
    Const,
    CurveSpec,
    Mul,
    Neg,
    Pow,
    Var,
    curve_eval,
    evaluate_dual,
    evaluate_float,
    evaluate_jet,
    jet_chain,
    parse_expr,
    to_text,
    validate_director,
)
from ruled4.lorentz import ModelSpace


@pytest.mark.parametrize("text,t,expected", [
    ("3*t+7", 2.0, 13.0),
    ("-t^2", 3.0, -9.0),          # ^ binds tighter than unary minus
    ("2^3", 0.0, 8.0),
    ("t^-2", 2.0, 0.25),
    ("t^+2", 3.0, 9.0),
    ("t^(1/2)", 9.0, 3.0),
    ("t^(-1/2)", 4.0, 0.5),
    ("t^2.5", 4.0, 32.0),
    ("2*pi", 0.0, 2.0 * math.pi),
    ("e", 0.0, math.e),
    ("sin(pi/2)", 0.0, 1.0),
    ("cosh(0)", 0.0, 1.0),
    ("sqrt(16)", 0.0, 4.0),
    ("1 - 2 - 3", 0.0, -4.0),     # left associativity
    ("12/3/2", 0.0, 2.0),
    ("2 + 3*4", 0.0, 14.0),
    ("(2 + 3)*4", 0.0, 20.0),
    ("--t", 5.0, 5.0),
    ("1.5e2", 0.0, 150.0),
    (".5*t", 4.0, 2.0),
])
def test_parse_and_evaluate(text, t, expected):
    ast = parse_expr(text)
    assert evaluate_float(ast, t) == pytest.approx(expected, abs=1e-12)
    assert evaluate_jet(ast, t).f == pytest.approx(expected, abs=1e-12)


def test_ast_shape_of_precedence():
    assert parse_expr("-t^2") == Neg(Pow(Var(), Fraction(2)))
    assert parse_expr("2*t + 1") == Add(Mul(Const(2.0), Var()), Const(1.0))
    assert parse_expr("sin(t)^2") == Pow(Call("sin", Var()), Fraction(2))


@pytest.mark.parametrize("text,offset", [
    ("t +", 3),
    ("(t", 2),
    ("t)", 1),
    ("sin", 3),
    ("t^t", 2),
    ("t^(1/0)", 5),
    ("2 ** 3", 3),
    ("t @ 2", 2),
    ("", 0),
])
def test_syntax_error_offsets(text, offset):
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr(text)
    assert info.value.offset == offset
    assert f"(offset {offset})" in str(info.value)
    assert info.value.bare_message


def test_unknown_identifier():
    with pytest.raises(UnknownIdentifier) as info:
        parse_expr("2*q + 1")
    assert info.value.offset == 2
    assert "q" in str(info.value)


def test_non_function_call_rejected():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("foo(t)")
    assert "not a function" in str(info.value)
    with pytest.raises(ExprSyntaxError):
        parse_expr("pi(t)")


def _random_ast(rng: random.Random, depth: int):
    # only non-negative constants: the grammar has no negative literals, a
    # leading minus always parses as Neg, so Const(-x) is outside its image
    if depth <= 0 or rng.random() < 0.3:
        pick = rng.randrange(3)
        if pick == 0:
            return Const(round(rng.uniform(0, 5), 3))
        if pick == 1:
            return Var()
        return Const(float(rng.randrange(1, 9)))
    pick = rng.randrange(7)
    if pick == 0:
        return Add(_random_ast(rng, depth - 1), _random_ast(rng, depth - 1))
    if pick == 1:
        from ruled4.expr import Sub
        return Sub(_random_ast(rng, depth - 1), _random_ast(rng, depth - 1))
    if pick == 2:
        return Mul(_random_ast(rng, depth - 1), _random_ast(rng, depth - 1))
    if pick == 3:
        from ruled4.expr import Div
        return Div(_random_ast(rng, depth - 1), _random_ast(rng, depth - 1))
    if pick == 4:
        return Neg(_random_ast(rng, depth - 1))
    if pick == 5:
        expo = rng.choice([Fraction(2), Fraction(3), Fraction(-1),
                           Fraction(1, 2), Fraction(-2, 3), Fraction(5, 4)])
        return Pow(_random_ast(rng, depth - 1), expo)
    fn = rng.choice(["sin", "cos", "sinh", "cosh", "exp", "sqrt"])
    return Call(fn, _random_ast(rng, depth - 1))


def test_printer_round_trip_on_random_trees():
    rng = random.Random(20260816)
    for _ in range(400):
        ast = _random_ast(rng, rng.randrange(1, 5))
        assert parse_expr(to_text(ast)) == ast


def test_negative_constant_prints_to_equivalent_tree():
    # a hand-built negative literal normalizes to Neg on re-parse; the
    # printed form is value-equivalent even though the tree differs
    reparsed = parse_expr(to_text(Const(-2.5)))
    assert reparsed == Neg(Const(2.5))
    assert evaluate_float(reparsed, 0.0) == -2.5


def test_printer_round_trip_on_corpus_texts():
    texts = [
        "t^4/4 + sqrt(2)", "2*t+1", "-3*t", "t^3/3",
        "-2/sqrt(3)", "1/sqrt(7)", "sqrt(6)/sqrt(7)",
        "-cos(t)*cos(2*t)", "cos(t)*sin(2*t)", "sin(t)*sin(2*t)",
        "sin(2*t)*(sin(2*t)/2 - cos(t)^2)",
    ]
    for text in texts:
        ast = parse_expr(text)
        assert parse_expr(to_text(ast)) == ast


def test_dual_eps_equals_jet_d1_bitwise():
    rng = random.Random(99)
    for _ in range(200):
        ast = _random_ast(rng, 3)
        t = rng.uniform(0.2, 2.0)
        try:
            jet = evaluate_jet(ast, t)
            dual = evaluate_dual(ast, t)
        except DomainError:
            continue
        assert dual.re == jet.f
        assert dual.eps == jet.d1


def test_float_evaluator_matches_jet_value():
    rng = random.Random(5)
    for _ in range(200):
        ast = _random_ast(rng, 3)
        t = rng.uniform(0.2, 2.0)
        try:
            f = evaluate_float(ast, t)
            j = evaluate_jet(ast, t)
        except DomainError:
            continue
        assert f == pytest.approx(j.f, rel=1e-12, abs=1e-12)


def test_domain_errors_surface():
    with pytest.raises(DomainError):
        evaluate_float(parse_expr("1/t"), 0.0)
    with pytest.raises(DomainError):
        evaluate_jet(parse_expr("1/t"), 0.0)
    with pytest.raises(DomainError):
        evaluate_float(parse_expr("sqrt(t)"), -1.0)
    with pytest.raises(DomainError):
        evaluate_jet(parse_expr("(0 - 1)^(1/2)"), 0.0)
    with pytest.raises(DomainError):
        evaluate_jet(parse_expr("t^(1/2)"), -4.0)


def test_jet_chain_accepts_text():
    j = jet_chain("t^3", 2.0)
    assert (j.f, j.d1, j.d2) == (8.0, 12.0, 12.0)


def test_curve_spec_basics():
    curve = CurveSpec.from_strings(["t^2", "sin(t)", "0", "t"])
    p, v, a = curve.evaluate(0.5)
    assert p.components() == pytest.approx(
        (0.25, math.sin(0.5), 0.0, 0.5), abs=1e-15)
    assert v.components() == pytest.approx(
        (1.0, math.cos(0.5), 0.0, 1.0), abs=1e-15)
    assert a.components() == pytest.approx(
        (2.0, -math.sin(0.5), 0.0, 0.0), abs=1e-15)
    assert curve_eval(curve, 0.5) == curve.evaluate(0.5)
    texts = curve.to_texts()
    assert CurveSpec.from_strings(texts).comps == curve.comps
    with pytest.raises(ValueError):
        CurveSpec.from_strings(["t", "t", "t"])


def test_validate_director_de_sitter():
    curve = CurveSpec.from_strings(
        ["sinh(t/3)", "cosh(t/3)", "0", "0"])
    grid = [k / 8.0 - 1.0 for k in range(17)]
    report = validate_director(curve, ModelSpace.DE_SITTER, grid)
    assert report.passed
    assert report.target == 1.0
    assert report.max_violation <= 1e-12
    assert report.sign_ok
    assert report.n_samples == 17


def test_validate_director_hyperbolic_sign():
    # correct quadratic form, wrong sheet: sign violation only
    curve = CurveSpec.from_strings(["-cosh(t/4)", "sinh(t/4)", "0", "0"])
    grid = [0.0, 0.5, 1.0]
    report = validate_director(curve, ModelSpace.HYPERBOLIC, grid)
    assert report.max_violation <= 1e-12
    assert not report.sign_ok
    assert not report.passed


def test_validate_director_light_cone():
    curve = CurveSpec.from_strings(["t + 2", "t + 2", "0", "0"])
    report = validate_director(curve, ModelSpace.LIGHT_CONE, [0.0, 0.5, 1.0])
    assert report.passed and report.target == 0.0
    flat = CurveSpec.from_strings(["0", "0", "0", "0"])
    report = validate_director(flat, ModelSpace.LIGHT_CONE, [0.0, 1.0])
    assert not report.sign_ok and not report.passed


def test_validate_director_reports_worst_sample():
    # violation grows with |t|; the worst grid point must be reported
    curve = CurveSpec.from_strings(["0", "1 + t^2", "0", "0"])
    report = validate_director(curve, ModelSpace.DE_SITTER,
                               [0.0, 0.5, -1.0])
    assert report.worst_t == -1.0
    assert report.max_violation == pytest.approx(3.0)
    assert not report.passed
