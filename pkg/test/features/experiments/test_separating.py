# test/features/experiments/test_separating.py

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from features.algebra import RationalValue
from features.experiments import (
    DomainError,
    mvn_separating_search,
    omega_chain_check,
    omega_chain_closed_form,
    omega_chain_document,
    omega_chain_model,
    separating_sequent,
)
from features.kripke import NoCounterexampleFound
from features.syntax import ZERO, Box, Diamond, Impl, Join, Var, parse

# --- Tests: the sequent ---


def test_separating_sequent_shape() -> None:
    s = separating_sequent()
    x = Var("x")

    assert len(s.premises) == 3
    assert s.premises[0] == parse("x <-> ([]x)^2")
    assert s.premises[1] == parse("[](x <-> ([]x)^2)")
    assert s.premises[2] == Impl(Diamond(Box(ZERO)), ZERO)
    assert s.conclusion == Join(Impl(x, ZERO), x)


# --- Tests: ω-chain ---


def test_omega_chain_from_one_tenth() -> None:
    report = omega_chain_check(Fraction(1, 10), 50)

    assert report.valid
    assert len(report.records) == 51
    assert report.records[0].x == Fraction(1, 10)
    assert report.records[1].x == Fraction(11, 20)
    assert report.records[0].box_x_squared == Fraction(1, 10)
    assert report.premise_values == (1, 1, 1)
    assert report.conclusion_value == Fraction(9, 10)


def test_omega_chain_from_one_half() -> None:
    report = omega_chain_check(Fraction(1, 2), 10)
    assert report.valid
    assert report.conclusion_value == Fraction(1, 2)
    assert report.records[-1].x == omega_chain_closed_form(Fraction(1, 2), 10)


def test_omega_chain_model() -> None:
    model = omega_chain_model(Fraction(1, 10), 3)

    assert model.worlds == ("0", "1", "2", "3", "4")
    assert model.value("1", "x") == RationalValue(Fraction(11, 20))
    assert ("0", "4") in model.relation
    assert ("4", "4") in model.relation
    assert ("1", "0") not in model.relation
    assert ("4", "4") not in omega_chain_model(Fraction(1, 10), 3, capped=False).relation


def test_omega_chain_evaluates_no_dead_end_per_world() -> None:
    report = omega_chain_check(Fraction(1, 10), 5)
    assert all(record.no_dead_end for record in report.records)


def test_omega_chain_dead_end_fails_the_third_premise() -> None:
    report = omega_chain_check(Fraction(1, 10), 5, capped=False)

    assert not report.valid
    assert not any(record.no_dead_end for record in report.records)
    assert all(record.fixpoint for record in report.records)
    assert report.premise_values == (1, 1, 0)
    assert report.conclusion_value == Fraction(9, 10)


@settings(max_examples=50, deadline=None)
@given(
    alpha=st.fractions(min_value=0, max_value=1, max_denominator=1000).filter(lambda a: 0 < a < 1),
    depth=st.integers(min_value=1, max_value=20),
)
def test_omega_chain_identities(alpha: Fraction, depth: int) -> None:
    report = omega_chain_check(alpha, depth)
    assert report.valid
    assert all(record.x == omega_chain_closed_form(alpha, record.world) for record in report.records)


@pytest.mark.parametrize(
    ("alpha", "depth"),
    [(Fraction(1), 5), (Fraction(0), 5), (Fraction(3, 2), 5), (Fraction(1, 2), 0)],
    ids=["one", "zero", "above-one", "no-depth"],
)
def test_omega_chain_domain(alpha: Fraction, depth: int) -> None:
    with pytest.raises(DomainError):
        omega_chain_check(alpha, depth)


def test_omega_chain_document() -> None:
    doc = omega_chain_document(omega_chain_check(Fraction(1, 10), 3))
    assert doc.alpha == "1/10"
    assert doc.records[1].x == "11/20"
    assert all(entry.no_dead_end for entry in doc.records)
    assert doc.premise_values == ["1", "1", "1"]
    assert doc.conclusion_value == "9/10"
    assert doc.valid


# --- Tests: finite chains (consistency check, not a proof) ---


@pytest.mark.parametrize(
    ("n", "worlds"),
    [(1, 1), (2, 3), (3, 3), (4, 2), (4, 3)],
    ids=["mv1-1", "mv2-3", "mv3-3", "mv4-2", "mv4-3"],
)
def test_no_finite_transitive_countermodel(n: int, worlds: int) -> None:
    verdict = mvn_separating_search(n, worlds)
    assert isinstance(verdict, NoCounterexampleFound)
    assert "transitive" in verdict.bound


def test_separation_at_desk_scale() -> None:
    assert omega_chain_check(Fraction(1, 10), 50).valid
    assert isinstance(mvn_separating_search(4, 3), NoCounterexampleFound)
