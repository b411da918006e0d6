# test/features/kripke/test_evaluator.py

import random
from fractions import Fraction
from itertools import product

import pytest

from features.algebra import Index, LukRational, MVn, RationalValue
from features.kripke import (
    KripkeModel,
    UnknownWorldError,
    check_local_consequence_at,
    enumerate_models,
    evaluate,
)
from features.syntax import Box, Diamond, Sequent, Var, normalize_to_diamond, parse
from schemas.enums import LocalCheck


def luk(text: str) -> RationalValue:
    return RationalValue(Fraction(text))


# --- Fixtures ---


@pytest.fixture
def fork_model() -> KripkeModel:
    """Root r with successors a (x = 1) and b (x = 0)."""
    return KripkeModel.build(
        LukRational(),
        ["r", "a", "b"],
        [("r", "a"), ("r", "b")],
        {"a": {"x": luk("1")}, "b": {"x": luk("0")}},
    )


@pytest.fixture
def reflexive_mv3() -> KripkeModel:
    return KripkeModel.build(MVn(3), ["w"], [("w", "w")], {"w": {"x": Index(2)}})


# --- Tests ---


def test_dead_end_world(fork_model: KripkeModel) -> None:
    assert evaluate(fork_model, "a", parse("[]x")) == luk("1")
    assert evaluate(fork_model, "a", parse("<>x")) == luk("0")
    assert evaluate(fork_model, "a", parse("[]0")) == luk("1")


@pytest.mark.parametrize(
    ("formula", "expected"),
    [("<>x", "1"), ("[]x", "0"), ("<>x -> []x", "0"), ("~[]x", "1"), ("D<>x", "1"), ("D[]x", "0")],
    ids=["diamond", "box", "diamond-to-box", "negated-box", "delta-top", "delta-below-top"],
)
def test_fork_values(fork_model: KripkeModel, formula: str, expected: str) -> None:
    assert evaluate(fork_model, "r", parse(formula)) == luk(expected)


def test_mv3_reflexive_world(reflexive_mv3: KripkeModel) -> None:
    assert evaluate(reflexive_mv3, "w", parse("[]x")) == Index(2)
    assert evaluate(reflexive_mv3, "w", parse("x & []x")) == Index(1)
    assert evaluate(reflexive_mv3, "w", parse("x^3")) == Index(0)


def test_unmentioned_variable_is_bottom(reflexive_mv3: KripkeModel) -> None:
    assert evaluate(reflexive_mv3, "w", parse("y")) == Index(0)


def test_unknown_world(reflexive_mv3: KripkeModel) -> None:
    with pytest.raises(UnknownWorldError):
        evaluate(reflexive_mv3, "nowhere", parse("x"))


def test_check_local_consequence_identity(reflexive_mv3: KripkeModel) -> None:
    model = KripkeModel.build(MVn(3), ["w"], valuation={"w": {"x": Index(3)}})
    result = check_local_consequence_at(model, "w", Sequent((Var("x"),), Var("x")))
    assert result.outcome == LocalCheck.CONCLUSION_HOLDS
    assert result.value is None


def test_check_local_consequence_fails_with_value() -> None:
    model = KripkeModel.build(LukRational(), ["w"], valuation={"w": {"x": luk("1/2")}})
    result = check_local_consequence_at(model, "w", Sequent((), parse("x \\/ ~x")))
    assert result.outcome == LocalCheck.CONCLUSION_FAILS
    assert result.value == luk("1/2")


def test_check_local_consequence_premise_below_top() -> None:
    model = KripkeModel.build(LukRational(), ["w"], valuation={"w": {"x": luk("3/4")}})
    result = check_local_consequence_at(model, "w", Sequent((Var("x"),), parse("x & x")))
    assert result.outcome == LocalCheck.PREMISES_NOT_SATISFIED


def test_box_and_diamond_bound_successor_values() -> None:
    alg = MVn(4)
    body = parse("x -> y & x")
    for model in enumerate_models(alg, 2, ("x", "y")):
        for v in model.worlds:
            low, high = evaluate(model, v, Box(body)), evaluate(model, v, Diamond(body))
            for w in model.successors(v):
                value = evaluate(model, w, body)
                assert alg.leq(low, value)
                assert alg.leq(value, high)


def test_evaluation_invariant_under_relabeling() -> None:
    rng = random.Random(11)
    formula = parse("<>(x & []y) -> [](y \\/ <>x)")
    for model in enumerate_models(MVn(2), 3, ("x", "y")):
        if rng.random() > 0.02:
            continue
        shuffled = list(model.worlds)
        rng.shuffle(shuffled)
        rename = {old: f"u{new}" for old, new in zip(model.worlds, shuffled, strict=True)}
        relabeled = KripkeModel.build(
            model.algebra,
            [rename[w] for w in model.worlds],
            [(rename[a], rename[b]) for a, b in model.relation],
            {rename[w]: dict(values) for w, values in model.valuation.items()},
        )
        for w in model.worlds:
            assert evaluate(model, w, formula) == evaluate(relabeled, rename[w], formula)


@pytest.mark.parametrize("alg", [MVn(2), LukRational()], ids=["mv2", "luk"])
def test_normalize_to_diamond_preserves_values(alg: MVn | LukRational) -> None:
    formulas = [parse("[]x"), parse("[](x -> []y) & <>y"), parse("~[]<>x \\/ [](x & y)")]
    for model in enumerate_models(MVn(2), 2, ("x", "y")):
        if isinstance(alg, LukRational):
            lifted = {
                w: {name: RationalValue(MVn(2).to_rational(value)) for name, value in values.items()}
                for w, values in model.valuation.items()
            }
            model = KripkeModel.build(alg, model.worlds, model.relation, lifted)  # noqa: PLW2901
        for w, f in product(model.worlds, formulas):
            assert evaluate(model, w, normalize_to_diamond(f)) == evaluate(model, w, f)
