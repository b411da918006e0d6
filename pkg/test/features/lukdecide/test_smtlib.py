# test/features/lukdecide/test_smtlib.py

import pytest

from features.lukdecide import PropSequent, SmtFormatError, check_smt_well_formed, emit_smt, encode_milp
from features.syntax import parse

# --- Fixtures ---


@pytest.fixture
def excluded_middle() -> str:
    return emit_smt(encode_milp(PropSequent((), parse("x \\/ ~x"))))


def _emit(premises: list[str], conclusion: str) -> str:
    return emit_smt(encode_milp(PropSequent(tuple(parse(p) for p in premises), parse(conclusion))))


# --- Tests ---


def test_script_layout(excluded_middle: str) -> None:
    lines = excluded_middle.splitlines()
    assert lines[1:3] == ["(set-option :produce-models true)", "(set-logic QF_LRA)"]
    assert lines[-3:] == ["(check-sat)", "(get-model)", "(exit)"]
    assert "(declare-fun |x| () Real)" in lines
    assert "(declare-fun |_n1| () Real)" in lines
    assert "(declare-fun |_d2| () Bool)" in lines
    assert "(assert (and (<= 0.0 |x|) (<= |x| 1.0)))" in lines
    assert "(ite |_d2| 1.0 0.0)" in excluded_middle
    assert lines[-4] == "(assert (< |_n1| 1.0))"


def test_negative_coefficients_are_printed_exactly() -> None:
    text = _emit(["x^2 -> y"], "x")
    assert "(* (- 2.0) |x|)" in text
    assert "(- 1.0)" in text
    check_smt_well_formed(text)


@pytest.mark.parametrize(
    ("premises", "conclusion"),
    [
        ([], "x \\/ ~x"),
        ([], "(x -> y) \\/ (y -> x)"),
        (["x \\/ y", "x -> z"], "z /\\ y & 1"),
        ([], "x^3 -> x"),
        ([], "1"),
    ],
    ids=["excluded-middle", "prelinearity", "premises", "power", "constant"],
)
def test_emitted_scripts_are_well_formed(premises: list[str], conclusion: str) -> None:
    check_smt_well_formed(_emit(premises, conclusion))


@pytest.mark.parametrize(
    "text",
    [
        "(set-logic QF_LRA)\n(assert (< |x| 1.0)",
        "(set-logic QF_LRA)\n(minimize |x|)",
        "(declare-fun |x| () Real)\n(set-logic QF_LRA)",
        "(set-logic QF_LRA)\n(declare-fun |x| () Int)",
        "(set-logic QF_LRA)\n(declare-fun |x|)",
        "(set-logic QF_LRA)\n(declare-fun |x| () Real)\n(assert (< |y| 1.0))",
        "(set-logic QF_LRA)\n1.0",
        "((set-logic) QF_LRA)",
    ],
    ids=[
        "unbalanced",
        "unknown-command",
        "declare-before-logic",
        "sort",
        "short-declaration",
        "undeclared",
        "top-level-atom",
        "list-head",
    ],
)
def test_malformed_scripts_are_rejected(text: str) -> None:
    with pytest.raises(SmtFormatError):
        check_smt_well_formed(text)


@pytest.mark.parametrize(
    ("premises", "conclusion", "satisfiable"),
    [
        ([], "x \\/ ~x", True),
        ([], "(x -> y) \\/ (y -> x)", False),
        (["x \\/ y"], "x", True),
        (["x -> y", "y -> z"], "x -> z", False),
    ],
    ids=["excluded-middle", "prelinearity", "join-premise", "chain"],
)
def test_z3_agrees_with_branch_and_bound(premises: list[str], conclusion: str, satisfiable: bool) -> None:
    z3 = pytest.importorskip("z3")
    script = "\n".join(
        line
        for line in _emit(premises, conclusion).splitlines()
        if not line.startswith(("(check-sat", "(get-model", "(exit"))
    )
    solver = z3.Solver()
    solver.add(z3.parse_smt2_string(script))
    assert (solver.check() == z3.sat) is satisfiable
