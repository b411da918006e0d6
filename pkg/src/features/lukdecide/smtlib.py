from __future__ import annotations

import logging
from fractions import Fraction

from lark import Lark, Token, Tree, UnexpectedInput

from .exceptions import SmtFormatError
from .milp import LinearExpr, MilpEncoding, VariableKind
from .simplex import LinearConstraint, Sense

logger = logging.getLogger("Workbench").getChild("LukDecide")

SMT_GRAMMAR = r"""
    start: _expr*
    _expr: list | SYMBOL | QUOTED | NUMBER | KEYWORD
    list: "(" _expr* ")"

    QUOTED: /\|[^|\\]*\|/
    KEYWORD: /:[a-zA-Z0-9._+\-*\/<>=!?@$%^&~]+/
    NUMBER: /[0-9]+(\.[0-9]+)?/
    SYMBOL: /[a-zA-Z~!@$%^&*_+=<>.?\/\-][a-zA-Z0-9~!@$%^&*_+=<>.?\/\-]*/
    COMMENT: /;[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

_smt_parser = Lark(SMT_GRAMMAR, parser="lalr")

_COMMANDS = frozenset(
    {"set-logic", "set-option", "declare-fun", "declare-const", "assert", "check-sat", "get-model", "exit"},
)
_SORTS = frozenset({"Real", "Bool"})


def _number(c: Fraction) -> str:
    magnitude = abs(c)
    if magnitude.denominator == 1:
        text = f"{magnitude.numerator}.0"
    else:
        text = f"(/ {magnitude.numerator}.0 {magnitude.denominator}.0)"
    return f"(- {text})" if c < 0 else text


def _symbol(name: str) -> str:
    return f"|{name}|"


class _Printer:
    def __init__(self, enc: MilpEncoding) -> None:
        self.enc = enc

    def column(self, j: int) -> str:
        variable = self.enc.variables[j]
        if variable.kind == VariableKind.BINARY:
            return f"(ite {_symbol(variable.name)} 1.0 0.0)"
        return _symbol(variable.name)

    def expr(self, e: LinearExpr) -> str:
        terms = [
            self.column(j) if a == 1 else f"(* {_number(a)} {self.column(j)})" for j, a in sorted(e.coeffs.items())
        ]
        if e.constant or not terms:
            terms.append(_number(e.constant))
        return terms[0] if len(terms) == 1 else f"(+ {' '.join(terms)})"

    def constraint(self, con: LinearConstraint) -> str:
        op = "=" if con.sense == Sense.EQ else con.sense.value
        return f"(assert ({op} {self.expr(LinearExpr(con.coeffs))} {_number(con.rhs)}))"


def emit_smt(enc: MilpEncoding) -> str:
    """QF_LRA script that is satisfiable exactly when the encoded sequent has a countervaluation."""
    printer = _Printer(enc)
    lines = ["; Lukasiewicz sequent countervaluation search", "(set-option :produce-models true)", "(set-logic QF_LRA)"]
    for variable in enc.variables:
        sort = "Bool" if variable.kind == VariableKind.BINARY else "Real"
        lines.append(f"(declare-fun {_symbol(variable.name)} () {sort})")
    for j, variable in enumerate(enc.variables):
        if variable.kind == VariableKind.CONTINUOUS:
            term = printer.column(j)
            lines.append(f"(assert (and (<= 0.0 {term}) (<= {term} 1.0)))")
    lines.extend(printer.constraint(con) for con in enc.constraints)
    lines.append(f"(assert (< {printer.expr(enc.conclusion)} 1.0))")
    lines.extend(["(check-sat)", "(get-model)", "(exit)"])
    logger.debug("Emitted %d SMT-LIB lines", len(lines))
    return "\n".join(lines) + "\n"


def _head(command: Tree[Token]) -> str:
    if not command.children or not isinstance(command.children[0], Token) or command.children[0].type != "SYMBOL":
        msg = "Command without a symbol head"
        raise SmtFormatError(msg)
    return str(command.children[0])


def _quoted_symbols(node: Tree[Token] | Token) -> list[str]:
    if isinstance(node, Token):
        return [str(node)] if node.type == "QUOTED" else []
    return [name for child in node.children for name in _quoted_symbols(child)]


def check_smt_well_formed(text: str) -> None:
    """Raise SmtFormatError unless `text` is a script of known commands over declared symbols."""
    try:
        tree = _smt_parser.parse(text)
    except UnexpectedInput as e:
        msg = f"Malformed S-expression at offset {e.pos_in_stream}"
        raise SmtFormatError(msg) from e

    declared: set[str] = set()
    logic_set = False
    for command in tree.children:
        if not isinstance(command, Tree):
            msg = f"Top-level atom {command!s}"
            raise SmtFormatError(msg)
        head = _head(command)
        if head not in _COMMANDS:
            msg = f"Unknown command {head}"
            raise SmtFormatError(msg)

        match head:
            case "set-logic":
                logic_set = True
            case "declare-fun" | "declare-const":
                if not logic_set:
                    msg = "Declaration before set-logic"
                    raise SmtFormatError(msg)
                if len(command.children) < 3:  # noqa: PLR2004
                    msg = "Declaration without a name and a sort"
                    raise SmtFormatError(msg)
                name, *_, sort = command.children[1:]
                if not isinstance(sort, Token) or str(sort) not in _SORTS:
                    msg = f"Unsupported sort in declaration of {name}"
                    raise SmtFormatError(msg)
                declared.add(str(name))
            case "assert":
                undeclared = [name for name in _quoted_symbols(command) if name not in declared]
                if undeclared:
                    msg = f"Undeclared symbols {undeclared}"
                    raise SmtFormatError(msg)
