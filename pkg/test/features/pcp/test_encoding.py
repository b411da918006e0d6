# test/features/pcp/test_encoding.py

import pytest

from features.pcp import PcpInstance, encode_gamma, encode_phi, reduction_sequent
from features.syntax import (
    Box,
    Fuse,
    Join,
    Meet,
    Power,
    Var,
    contains_delta,
    iff,
    modal_depth,
    parse,
    to_text,
    variables,
)

# --- Fixtures ---


@pytest.fixture
def instance() -> PcpInstance:
    return PcpInstance(10, ((12, 1), (2, 22)))


# --- Tests ---


def test_gamma_shape(instance: PcpInstance) -> None:
    same_y, follows_pairs, one_successor = encode_gamma(instance)
    y, v, w = Var("y"), Var("v"), Var("w")

    assert same_y == parse("([]y -> <>y) & (<>y -> []y)")
    assert isinstance(follows_pairs, Box)
    assert isinstance(follows_pairs.body, Join)
    first, second = follows_pairs.body.left, follows_pairs.body.right
    assert first == Meet(
        iff(v, Fuse(Power(Box(v), 100), Power(y, 12))),
        iff(w, Fuse(Power(Box(w), 10), Power(y, 1))),
    )
    assert second == Meet(
        iff(v, Fuse(Power(Box(v), 10), Power(y, 2))),
        iff(w, Fuse(Power(Box(w), 100), Power(y, 22))),
    )
    assert one_successor == parse("[]([](v & w) -> []v & []w)")


def test_phi(instance: PcpInstance) -> None:
    assert encode_phi(instance) == parse("(v -> w) & (w -> v) -> y \\/ (v & w -> v & w & y)")


def test_reduction_sequent_is_three_variable(instance: PcpInstance) -> None:
    s = reduction_sequent(instance)
    assert variables(s.formulas) == ("v", "w", "y")
    assert modal_depth(s.premises) == 2
    assert modal_depth(s.conclusion) == 1
    assert not contains_delta(s.formulas)


def test_reduction_sequent_prints_and_parses(instance: PcpInstance) -> None:
    s = reduction_sequent(instance)
    for f in s.formulas:
        assert parse(to_text(f)) == f


def test_binary_instance_uses_binary_lengths() -> None:
    _, follows_pairs, _ = encode_gamma(PcpInstance(2, ((1, 3), (3, 1))))
    assert isinstance(follows_pairs, Box)
    assert isinstance(follows_pairs.body, Join)
    first = follows_pairs.body.left
    assert first == Meet(
        iff(Var("v"), Fuse(Power(Box(Var("v")), 2), Power(Var("y"), 1))),
        iff(Var("w"), Fuse(Power(Box(Var("w")), 4), Power(Var("y"), 3))),
    )
