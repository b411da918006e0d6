# test/features/algebra/test_predicates.py

from fractions import Fraction

import pytest

from features.algebra import (
    ChainAlgebra,
    GenPower,
    GodelRational,
    Index,
    LukRational,
    MVn,
    NoSuchElementError,
    ProductOneGen,
    ProductRational,
    RationalValue,
    is_n_contractive,
    is_weakly_archimedean,
    pick_noncontractive_element,
    power,
)

# --- Tests ---


@pytest.mark.parametrize(
    ("alg", "n", "expected"),
    [
        (MVn(3), 3, True),
        (LukRational(), 5, False),
        (GodelRational(), 1, True),
        (ProductRational(), 100, False),
        (ProductOneGen(Fraction(1, 2)), 3, False),
    ],
    ids=["mv3", "luk", "godel", "product", "product1"],
)
def test_is_n_contractive(alg: ChainAlgebra, n: int, *, expected: bool) -> None:
    assert is_n_contractive(alg, n) is expected


@pytest.mark.parametrize("n", range(2, 9))
def test_mvn_contractivity_threshold(n: int) -> None:
    alg = MVn(n)
    assert is_n_contractive(alg, n)
    assert not is_n_contractive(alg, n - 1)
    witness = Index(n - 1)
    assert power(alg, witness, n) != power(alg, witness, n - 1)


def test_is_n_contractive_rejects_zero() -> None:
    with pytest.raises(ValueError, match="n >= 1"):
        is_n_contractive(MVn(2), 0)


@pytest.mark.parametrize(
    "alg",
    [LukRational(), MVn(4), MVn(1), ProductOneGen(Fraction(1, 2)), ProductRational(), GodelRational()],
    ids=["luk", "mv4", "mv1", "product1", "product", "godel"],
)
def test_is_weakly_archimedean(alg: ChainAlgebra) -> None:
    assert is_weakly_archimedean(alg)


@pytest.mark.parametrize(
    ("alg", "m", "expected"),
    [
        (LukRational(), 244, RationalValue(Fraction(245, 246))),
        (ProductRational(), 9, RationalValue(Fraction(1, 2))),
        (ProductOneGen(Fraction(1, 3)), 50, GenPower(1)),
        (MVn(6), 5, Index(5)),
        (MVn(6), 2, Index(5)),
    ],
    ids=["luk", "product", "product1", "mv-at-threshold", "mv-above-threshold"],
)
def test_pick_noncontractive_element(alg: ChainAlgebra, m: int, expected: RationalValue) -> None:
    alpha = pick_noncontractive_element(alg, m)
    assert alpha == expected
    assert alg.lt(power(alg, alpha, m + 1), power(alg, alpha, m))


def test_pick_noncontractive_luk_values() -> None:
    alg = LukRational()
    alpha = pick_noncontractive_element(alg, 244)
    assert power(alg, alpha, 245) == RationalValue(Fraction(1, 246))
    assert power(alg, alpha, 244) == RationalValue(Fraction(2, 246))


@pytest.mark.parametrize(
    ("alg", "m"),
    [(MVn(3), 5), (MVn(3), 3), (GodelRational(), 1)],
    ids=["mv3-far", "mv3-boundary", "godel"],
)
def test_pick_noncontractive_element_missing(alg: ChainAlgebra, m: int) -> None:
    with pytest.raises(NoSuchElementError):
        pick_noncontractive_element(alg, m)
