# test/features/lukdecide/test_milp.py

from collections.abc import Callable
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from features.lukdecide import (
    Countervaluation,
    DeltaNotSupportedError,
    EngineConfig,
    ModalFormulaError,
    PropSequent,
    ResourceBudgetExceededError,
    Valid,
    VariableKind,
    complete_binaries,
    encode_milp,
    evaluate_prop,
    prop_decide,
    solve_milp,
)
from features.syntax import ONE, ZERO, Delta, Formula, Fuse, Impl, Join, Meet, Power, Sequent, Var, parse

# --- Fixtures ---


def _sequent(premises: list[str], conclusion: str) -> PropSequent:
    return PropSequent(tuple(parse(p) for p in premises), parse(conclusion))


leaves = st.one_of(st.just(ZERO), st.just(ONE), st.sampled_from(["x", "y", "z"]).map(Var))


def _extend(inner: st.SearchStrategy[Formula]) -> st.SearchStrategy[Formula]:
    return st.one_of(
        st.builds(Meet, inner, inner),
        st.builds(Join, inner, inner),
        st.builds(Fuse, inner, inner),
        st.builds(Impl, inner, inner),
        st.builds(Power, inner, st.integers(min_value=0, max_value=5)),
    )


propositional = st.recursive(leaves, _extend, max_leaves=8)
unit_values = st.builds(
    Fraction,
    st.integers(min_value=0, max_value=12),
    st.just(12),
)


# --- Tests: encoding ---


@settings(max_examples=300, deadline=None)
@given(f=propositional, x=unit_values, y=unit_values, z=unit_values)
def test_encoding_agrees_with_evaluation(f: Formula, x: Fraction, y: Fraction, z: Fraction) -> None:
    valuation = {"x": x, "y": y, "z": z}
    enc = encode_milp(PropSequent((), f))

    point: dict[int, Fraction] = {}
    for node, expr in enc.nodes.items():
        if expr.constant == 0 and len(expr.coeffs) == 1 and next(iter(expr.coeffs.values())) == 1:
            point[next(iter(expr.coeffs))] = evaluate_prop(node, valuation)

    assert complete_binaries(enc, point) is not None
    assert enc.conclusion.value(point) == evaluate_prop(f, valuation)


def test_power_encoding_at_two_thirds() -> None:
    f = parse("x^3")
    enc = encode_milp(PropSequent((), f))
    (z,) = enc.nodes[f].coeffs
    x = enc.inputs["x"]

    assert complete_binaries(enc, {x: Fraction(2, 3), z: Fraction(0)}) is not None
    assert complete_binaries(enc, {x: Fraction(2, 3), z: Fraction(1, 3)}) is None


def test_negation_and_constants_are_inlined() -> None:
    enc = encode_milp(PropSequent((), parse("~x & 1")))
    assert [v.kind for v in enc.variables] == [VariableKind.CONTINUOUS, VariableKind.CONTINUOUS, VariableKind.BINARY]
    assert enc.inputs == {"x": 0}


def test_encoding_rejects_delta() -> None:
    with pytest.raises(DeltaNotSupportedError):
        encode_milp(PropSequent((), Delta(Var("x"))))


def test_prop_sequent_rejects_modalities() -> None:
    with pytest.raises(ModalFormulaError):
        _sequent([], "<>x")


# --- Tests: decision ---


@pytest.mark.parametrize(
    ("premises", "conclusion"),
    [
        (["x"], "x"),
        ([], "(x -> y) \\/ (y -> x)"),
        (["x"], "x & x"),
        ([], "x & y -> x /\\ y"),
        (["x -> y", "y -> z"], "x -> z"),
        (["0"], "x"),
        ([], "x^2 -> x"),
    ],
    ids=[
        "identity",
        "prelinearity",
        "pinned-square",
        "fusion-below-meet",
        "chain",
        "absurd-premise",
        "power-decreasing",
    ],
)
def test_valid(premises: list[str], conclusion: str) -> None:
    assert prop_decide(_sequent(premises, conclusion)) == Valid()


def test_excluded_middle_countervaluation() -> None:
    verdict = prop_decide(_sequent([], "x \\/ ~x"))
    assert verdict == Countervaluation({"x": Fraction(1, 2)}, Fraction(1, 2))


def test_join_premise_picks_a_disjunct() -> None:
    verdict = prop_decide(_sequent(["x \\/ y"], "x"))
    assert isinstance(verdict, Countervaluation)
    assert verdict.gap == 1
    assert verdict.valuation == {"x": Fraction(0), "y": Fraction(1)}


def test_tied_optima_resolve_the_same_way_every_time() -> None:
    verdict = prop_decide(_sequent(["x \\/ y"], "x /\\ y"))
    assert prop_decide(_sequent(["x \\/ y"], "x /\\ y")) == verdict
    assert isinstance(verdict, Countervaluation)
    assert verdict.gap == 1
    assert sorted(verdict.valuation.values()) == [0, 1]


def test_square_gap() -> None:
    verdict = prop_decide(_sequent([], "x & x"))
    assert isinstance(verdict, Countervaluation)
    assert verdict.gap == 1
    assert verdict.valuation["x"] <= Fraction(1, 2)


def test_countervaluation_is_exact() -> None:
    ps = _sequent(["x -> y"], "y -> x")
    verdict = prop_decide(ps)
    assert isinstance(verdict, Countervaluation)
    assert verdict.gap == 1
    assert evaluate_prop(ps.conclusion, verdict.valuation) == 0


def finite_chain_valuations(names: tuple[str, ...]) -> set[tuple[Fraction, ...]]:
    """Every assignment of `names` into MV_n for some n <= 12; each such n divides one of 7..12."""
    points: set[tuple[Fraction, ...]] = set()
    for n in range(7, 13):
        points.update(product([Fraction(k, n) for k in range(n + 1)], repeat=len(names)))
    return points


@pytest.mark.parametrize("seed", range(200))
def test_verdict_agrees_with_finite_chains(propositional_sequent: Callable[[int], Sequent], seed: int) -> None:
    s = propositional_sequent(seed)
    ps = PropSequent(s.premises, s.conclusion)
    verdict = prop_decide(ps)

    if isinstance(verdict, Countervaluation):
        assert verdict.gap > 0
        assert all(evaluate_prop(p, verdict.valuation) == 1 for p in ps.premises)
        assert evaluate_prop(ps.conclusion, verdict.valuation) == 1 - verdict.gap
        return

    names = ps.variables
    for point in finite_chain_valuations(names):
        valuation = dict(zip(names, point, strict=True))
        if all(evaluate_prop(p, valuation) == 1 for p in ps.premises):
            assert evaluate_prop(ps.conclusion, valuation) == 1


def test_node_budget() -> None:
    enc = encode_milp(_sequent([], "(x -> y) \\/ (y -> x)"))
    with pytest.raises(ResourceBudgetExceededError):
        solve_milp(enc, EngineConfig(node_budget=1))
