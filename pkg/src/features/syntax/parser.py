from __future__ import annotations

from typing import Any, cast

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from .exceptions import FormulaParseError
from .formula import ONE, ZERO, Box, Delta, Diamond, Formula, Fuse, Impl, Join, Meet, Power, Var
from .formula import iff as make_iff
from .formula import neg as make_neg

# Lowest to highest precedence. "->" is right associative, the other binaries fold to the left.
FORMULA_GRAMMAR = r"""
    ?start: iff

    ?iff: impl
        | iff "<->" impl            -> iff

    ?impl: disj
         | disj "->" impl           -> impl

    ?disj: conj
         | disj _JOIN conj          -> join

    ?conj: fuse
         | conj _MEET fuse          -> meet

    ?fuse: unary
         | fuse "&" unary           -> fuse

    ?unary: "~" unary               -> neg
          | "[]" unary              -> box
          | "<>" unary              -> diamond
          | "D" unary               -> delta
          | atom "^" NAT            -> power
          | atom

    ?atom: "0"                      -> zero
         | "1"                      -> one
         | IDENT                    -> var
         | "(" iff ")"

    _JOIN: "\\/"
    _MEET: "/\\"
    IDENT: /[a-z][a-zA-Z0-9_]*/
    NAT: /[0-9]+/

    %import common.WS
    %ignore WS
"""


class _FormulaBuilder(Transformer[Token, Formula]):
    def zero(self, _: list[Formula]) -> Formula:
        return ZERO

    def one(self, _: list[Formula]) -> Formula:
        return ONE

    def var(self, items: list[Token]) -> Formula:
        return Var(str(items[0]))

    def iff(self, items: list[Formula]) -> Formula:
        return make_iff(items[0], items[1])

    def impl(self, items: list[Formula]) -> Formula:
        return Impl(items[0], items[1])

    def join(self, items: list[Formula]) -> Formula:
        return Join(items[0], items[1])

    def meet(self, items: list[Formula]) -> Formula:
        return Meet(items[0], items[1])

    def fuse(self, items: list[Formula]) -> Formula:
        return Fuse(items[0], items[1])

    def neg(self, items: list[Formula]) -> Formula:
        return make_neg(items[0])

    def box(self, items: list[Formula]) -> Formula:
        return Box(items[0])

    def diamond(self, items: list[Formula]) -> Formula:
        return Diamond(items[0])

    def delta(self, items: list[Formula]) -> Formula:
        return Delta(items[0])

    def power(self, items: list[Any]) -> Formula:
        body, exponent = items
        return Power(body, int(exponent))


_parser = Lark(FORMULA_GRAMMAR, parser="lalr", transformer=_FormulaBuilder())


def parse(text: str) -> Formula:
    """Parse a formula. `~` and `<->` are desugared into the core connectives."""
    try:
        result = _parser.parse(text)
    except UnexpectedInput as e:
        raise _parse_error(text, e) from e
    return cast("Formula", result)


def _parse_error(text: str, error: UnexpectedInput) -> FormulaParseError:
    match error:
        case UnexpectedToken():
            expected = set(error.expected)
            position = error.token.start_pos if error.token.type != "$END" else len(text)
        case UnexpectedCharacters():
            expected = set(error.allowed)
            position = error.pos_in_stream
        case UnexpectedEOF():
            expected = set(error.expected)
            position = len(text)
        case _:
            expected = set()
            position = len(text)

    position = len(text) if position is None or position < 0 else position
    offset = len(text[:position].encode("utf-8"))
    names = tuple(sorted(expected))
    msg = f"Cannot parse formula at byte {offset}; expected one of {', '.join(names) or 'nothing'}"
    return FormulaParseError(msg, offset, names)
