from __future__ import annotations

from .formula import Binary, Box, Const0, Const1, Delta, Diamond, Formula, Fuse, Impl, Join, Meet, Power, Var

# Binding strength per grammar level, loosest first.
_IMPL = 1
_DISJ = 2
_CONJ = 3
_FUSE = 4
_UNARY = 5
_ATOM = 6

_SYMBOLS: dict[type[Binary], str] = {Impl: "->", Join: "\\/", Meet: "/\\", Fuse: "&"}
_LEVELS: dict[type[Binary], int] = {Impl: _IMPL, Join: _DISJ, Meet: _CONJ, Fuse: _FUSE}
_PREFIXES: dict[type[Box | Diamond | Delta], str] = {Box: "[]", Diamond: "<>", Delta: "D"}


def to_text(f: Formula) -> str:
    """Render `f` so that parsing the result gives back the same tree."""
    text, _ = _render(f)
    return text


def _render(f: Formula) -> tuple[str, int]:
    match f:
        case Const0() | Const1() | Var():
            return str(f), _ATOM
        case Box(body=body) | Diamond(body=body) | Delta(body=body):
            return f"{_PREFIXES[type(f)]}{_wrap(body, _UNARY)}", _UNARY
        case Power(body=body, exponent=exponent):
            return f"{_wrap(body, _ATOM)}^{exponent}", _UNARY
        case Impl(left=left, right=right):
            # right associative
            return f"{_wrap(left, _DISJ)} -> {_wrap(right, _IMPL)}", _IMPL
        case Binary(left=left, right=right):
            level = _LEVELS[type(f)]
            return f"{_wrap(left, level)} {_SYMBOLS[type(f)]} {_wrap(right, level + 1)}", level

    msg = f"Unknown formula node: {f!r}"
    raise TypeError(msg)


def _wrap(f: Formula, minimum: int) -> str:
    text, level = _render(f)
    return text if level >= minimum else f"({text})"
