# test/features/lukdecide/conftest.py

import random
from collections.abc import Callable

import pytest

from features.syntax import ONE, ZERO, Box, Diamond, Formula, Fuse, Impl, Join, Meet, Power, Sequent, Var

type SequentFactory = Callable[[int], Sequent]

_BINARY = (Meet, Join, Fuse, Impl)


def random_formula(rng: random.Random, connectives: int, modal_depth: int, names: tuple[str, ...]) -> Formula:
    if connectives == 0:
        roll = rng.random()
        if roll < 0.1:
            return ZERO
        if roll < 0.2:
            return ONE
        return Var(rng.choice(names))

    roll = rng.random()
    if modal_depth > 0 and roll < 0.4:
        modality = Box if roll < 0.2 else Diamond
        return modality(random_formula(rng, connectives - 1, modal_depth - 1, names))
    if roll > 0.9:
        return Power(random_formula(rng, connectives - 1, modal_depth, names), rng.randint(2, 3))
    left = rng.randint(0, connectives - 1)
    binary = rng.choice(_BINARY)
    return binary(
        random_formula(rng, left, modal_depth, names),
        random_formula(rng, connectives - 1 - left, modal_depth, names),
    )


@pytest.fixture
def propositional_sequent() -> SequentFactory:
    """Seeded modality-free sequents over x, y, z: up to two premises, at most 8 connectives per formula."""

    def build(seed: int) -> Sequent:
        rng = random.Random(seed)  # noqa: S311
        names = ("x", "y", "z")
        premises = tuple(random_formula(rng, rng.randint(0, 4), 0, names) for _ in range(rng.randint(0, 2)))
        return Sequent(premises, random_formula(rng, rng.randint(1, 8), 0, names))

    return build


@pytest.fixture
def modal_sequent() -> SequentFactory:
    """Seeded modal sequents over x, y with modal depth at most 2."""

    def build(seed: int) -> Sequent:
        rng = random.Random(10_000 + seed)  # noqa: S311
        names = ("x", "y")
        premises = tuple(random_formula(rng, rng.randint(0, 2), 2, names) for _ in range(rng.randint(0, 1)))
        return Sequent(premises, random_formula(rng, rng.randint(1, 4), 2, names))

    return build
