from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from features.syntax import Binary, Box, Const0, Const1, Delta, Diamond, Formula, Power, Sequent, Var
from schemas.enums import LocalCheck

if TYPE_CHECKING:
    from features.algebra import AlgebraElement

    from .model import KripkeModel


def evaluate(m: KripkeModel, v: str, f: Formula) -> AlgebraElement:
    """Value of `f` at world `v`. □ is the meet over successors (top if none), ◇ the join (bottom if none)."""
    m.require(v)
    return _evaluate(m, v, f)


def _evaluate(m: KripkeModel, v: str, f: Formula) -> AlgebraElement:
    alg = m.algebra
    match f:
        case Const0():
            return alg.bottom
        case Const1():
            return alg.top
        case Var(name=name):
            return m.value(v, name)
        case Binary(left=left, right=right):
            return alg.apply(f.op, _evaluate(m, v, left), _evaluate(m, v, right))
        case Box(body=body):
            result = alg.top
            for w in m.successors(v):
                result = alg.meet(result, _evaluate(m, w, body))
                if result == alg.bottom:
                    break
            return result
        case Diamond(body=body):
            result = alg.bottom
            for w in m.successors(v):
                result = alg.join(result, _evaluate(m, w, body))
                if result == alg.top:
                    break
            return result
        case Delta(body=body):
            return alg.delta(_evaluate(m, v, body))
        case Power(body=body, exponent=exponent):
            return alg.power(_evaluate(m, v, body), exponent)

    msg = f"Unknown formula node: {f!r}"
    raise TypeError(msg)


def holds_at(m: KripkeModel, v: str, f: Formula) -> bool:
    return evaluate(m, v, f) == m.algebra.top


@dataclass(frozen=True)
class LocalCheckResult:
    outcome: LocalCheck
    value: AlgebraElement | None = None


def check_local_consequence_at(m: KripkeModel, v: str, s: Sequent) -> LocalCheckResult:
    """Premises are evaluated in order and the check stops at the first one below top."""
    top = m.algebra.top
    for premise in s.premises:
        if evaluate(m, v, premise) != top:
            return LocalCheckResult(LocalCheck.PREMISES_NOT_SATISFIED)

    value = evaluate(m, v, s.conclusion)
    if value == top:
        return LocalCheckResult(LocalCheck.CONCLUSION_HOLDS)
    return LocalCheckResult(LocalCheck.CONCLUSION_FAILS, value)
