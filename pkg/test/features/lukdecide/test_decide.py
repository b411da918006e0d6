# test/features/lukdecide/test_decide.py

import random
from collections.abc import Callable
from fractions import Fraction

import pytest

from features.algebra import Index, MVn, RationalValue
from features.kripke import (
    Countermodel,
    Holds,
    KripkeModel,
    NoCounterexampleFound,
    SearchBounds,
    check_local_consequence_at,
    search_countermodel,
)
from features.lukdecide import (
    ROOT,
    Countervaluation,
    DeltaNotSupportedError,
    WitnessTree,
    check_reconstruction,
    decide,
    finite_chain_countermodel,
    prop_decide,
    reconstruct_model,
    unfold,
)
from features.syntax import Sequent, modal_depth, parse, variables
from schemas.enums import LocalCheck

# --- Fixtures ---


def _sequent(premises: list[str], conclusion: str) -> Sequent:
    return Sequent(tuple(parse(p) for p in premises), parse(conclusion))


@pytest.fixture
def box_diamond() -> Sequent:
    return _sequent([], "<>x -> []x")


# --- Tests ---


@pytest.mark.parametrize(
    ("premises", "conclusion"),
    [
        (["[](x -> y) & []x"], "[]y"),
        (["<>x"], "<>(x & x)"),
        ([], "[](x -> y) -> ([]x -> []y)"),
        ([], "<>(x \\/ y) -> <>x \\/ <>y"),
        ([], "[]1"),
    ],
    ids=["k-axiom", "diamond-square", "k-implication", "diamond-join", "box-top"],
)
def test_holds(premises: list[str], conclusion: str) -> None:
    assert decide(_sequent(premises, conclusion)) == Holds()


def test_box_diamond_countermodel(box_diamond: Sequent) -> None:
    verdict = decide(box_diamond)

    assert isinstance(verdict, Countermodel)
    assert verdict.world == ROOT
    assert verdict.conclusion_value == RationalValue(Fraction(0))
    successors = verdict.model.successors(ROOT)
    assert len(successors) == 2
    assert sorted(verdict.model.algebra.to_rational(verdict.model.value(w, "x")) for w in successors) == [0, 1]


def test_reconstruction_matches_countervaluation(box_diamond: Sequent) -> None:
    tree, prop = unfold(box_diamond)
    verdict = prop_decide(prop)
    assert isinstance(verdict, Countervaluation)

    model = reconstruct_model(tree, verdict.valuation, ("x",))
    assert sorted(model.relation) == sorted(tree.edges())
    assert check_reconstruction(model, tree, verdict.valuation)

    tampered = {**verdict.valuation, f"dia1@{ROOT}": Fraction(1, 2)}
    assert not check_reconstruction(model, tree, tampered)


def test_non_classical_countermodel() -> None:
    s = _sequent([], "x \\/ ~x")
    verdict = decide(s)

    assert isinstance(verdict, Countermodel)
    assert verdict.model.worlds == (ROOT,)
    assert verdict.conclusion_value == RationalValue(Fraction(1, 2))

    finite = finite_chain_countermodel(verdict.model)
    assert finite.algebra == MVn(2)
    assert finite.value(ROOT, "x") == Index(1)
    assert check_local_consequence_at(finite, ROOT, s).outcome == LocalCheck.CONCLUSION_FAILS


def test_reflexivity_fails_without_successors() -> None:
    verdict = decide(_sequent([], "[]x -> x"))
    assert isinstance(verdict, Countermodel)
    assert verdict.model.algebra.to_rational(verdict.model.value("w1", "x")) == 1
    assert verdict.model.algebra.to_rational(verdict.model.value(ROOT, "x")) == 0


def random_model(rng: random.Random, tree: WitnessTree, names: tuple[str, ...], n: int) -> KripkeModel:
    """MV_n model on the witness tree's worlds: its edges plus random extra ones."""
    worlds = tree.worlds
    relation = set(tree.edges()) | {(u, v) for u in worlds for v in worlds if rng.random() < 0.2}
    valuation = {w: {name: Index(rng.randint(0, n)) for name in names} for w in worlds}
    return KripkeModel.build(MVn(n), worlds, relation, valuation)


@pytest.mark.parametrize("seed", range(200))
def test_agrees_with_finite_chain_models(modal_sequent: Callable[[int], Sequent], seed: int) -> None:
    s = modal_sequent(seed)
    assert modal_depth(s.formulas) <= 2
    verdict = decide(s)
    tree, _ = unfold(s)

    if isinstance(verdict, Countermodel):
        assert len(verdict.model.worlds) <= len(tree.worlds)
        finite = finite_chain_countermodel(verdict.model)
        assert check_local_consequence_at(finite, verdict.world, s).outcome == LocalCheck.CONCLUSION_FAILS
        return

    assert isinstance(verdict, Holds)
    oracle = search_countermodel(s, MVn(2), SearchBounds(max_worlds=min(len(tree.worlds), 2)))
    assert isinstance(oracle, NoCounterexampleFound)

    rng = random.Random(seed)  # noqa: S311
    names = variables(s.formulas)
    for _ in range(25):
        model = random_model(rng, tree, names, rng.randint(1, 12))
        assert check_local_consequence_at(model, ROOT, s).outcome != LocalCheck.CONCLUSION_FAILS



def test_delta_rejected() -> None:
    with pytest.raises(DeltaNotSupportedError):
        decide(_sequent([], "Dx -> x"))
