# test/features/syntax/test_parser.py

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from features.syntax import (
    ONE,
    ZERO,
    Box,
    Delta,
    Diamond,
    Formula,
    FormulaParseError,
    Fuse,
    Impl,
    Join,
    Meet,
    Power,
    Var,
    iff,
    neg,
    parse,
    to_text,
)

x, y, z = Var("x"), Var("y"), Var("z")

# --- Strategies ---

leaves = st.one_of(st.just(ZERO), st.just(ONE), st.sampled_from(["x", "y", "v2", "w_a"]).map(Var))


def _extend(inner: st.SearchStrategy[Formula]) -> st.SearchStrategy[Formula]:
    return st.one_of(
        st.builds(Meet, inner, inner),
        st.builds(Join, inner, inner),
        st.builds(Fuse, inner, inner),
        st.builds(Impl, inner, inner),
        st.builds(Box, inner),
        st.builds(Diamond, inner),
        st.builds(Delta, inner),
        st.builds(Power, inner, st.integers(min_value=0, max_value=10**30)),
    )


formulas = st.recursive(leaves, _extend, max_leaves=12)

# --- Tests ---


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("[]y <-> <>y", iff(Box(y), Diamond(y))),
        ("x^0", Power(x, 0)),
        ("~<>[]0", Impl(Diamond(Box(ZERO)), ZERO)),
        ("x -> y -> z", Impl(x, Impl(y, z))),
        ("x \\/ y \\/ z", Join(Join(x, y), z)),
        ("x /\\ y & z", Meet(x, Fuse(y, z))),
        ("x & y /\\ z", Meet(Fuse(x, y), z)),
        ("x \\/ y /\\ z", Join(x, Meet(y, z))),
        ("x -> y \\/ z", Impl(x, Join(y, z))),
        ("[]x^2", Box(Power(x, 2))),
        ("([]x)^2", Power(Box(x), 2)),
        ("D x -> y", Impl(Delta(x), y)),
        ("D(x -> y)", Delta(Impl(x, y))),
        ("~x & y", Fuse(neg(x), y)),
        ("x <-> y <-> z", iff(iff(x, y), z)),
        ("  ( x )  ", x),
        ("v1_Ab", Var("v1_Ab")),
        ("x^123456789012345678901234567890", Power(x, 123456789012345678901234567890)),
    ],
    ids=[
        "iff-modal",
        "zero-exponent",
        "negated-diamond",
        "impl-right-assoc",
        "join-left-assoc",
        "fuse-binds-tighter-than-meet",
        "meet-over-fuse",
        "meet-binds-tighter-than-join",
        "join-binds-tighter-than-impl",
        "power-inside-box",
        "box-inside-power",
        "delta-tightest",
        "delta-parenthesized",
        "negation-tightest",
        "iff-left-assoc",
        "whitespace",
        "identifier-charset",
        "big-exponent",
    ],
)
def test_parse(text: str, expected: Formula) -> None:
    assert parse(text) == expected


@pytest.mark.parametrize(
    ("text", "offset"),
    [
        ("x &", 3),
        ("x + y", 2),
        ("(x", 2),
        ("X", 0),
        ("x ^ y", 4),
        ("", 0),
        ("é & x", 0),
        ("x & é", 4),
    ],
    ids=[
        "dangling-operator",
        "unknown-character",
        "unclosed-paren",
        "uppercase-variable",
        "non-numeric-exponent",
        "empty",
        "non-ascii-start",
        "non-ascii-byte-offset",
    ],
)
def test_parse_error(text: str, offset: int) -> None:
    with pytest.raises(FormulaParseError) as excinfo:
        parse(text)
    assert excinfo.value.offset == offset
    assert excinfo.value.expected == tuple(sorted(excinfo.value.expected))


def test_parse_error_reports_expected_tokens() -> None:
    with pytest.raises(FormulaParseError) as excinfo:
        parse("x ^ y")
    assert excinfo.value.expected == ("NAT",)


@pytest.mark.parametrize(
    ("f", "expected"),
    [
        (Power(x, 122), "x^122"),
        (Box(y), "[]y"),
        (Fuse(Var("v"), Var("w")), "v & w"),
        (Impl(Impl(x, y), z), "(x -> y) -> z"),
        (Power(Box(x), 2), "([]x)^2"),
        (Join(x, Join(y, z)), "x \\/ (y \\/ z)"),
        (Delta(Fuse(x, y)), "D(x & y)"),
    ],
    ids=["power", "box", "fuse", "left-nested-impl", "power-of-modal", "right-nested-join", "delta"],
)
def test_to_text(f: Formula, expected: str) -> None:
    assert to_text(f) == expected


@settings(max_examples=2000, deadline=None)
@given(f=formulas)
def test_parse_inverts_to_text(f: Formula) -> None:
    assert parse(to_text(f)) == f
