from __future__ import annotations

from functools import reduce
from typing import TYPE_CHECKING

from features.syntax import Box, Diamond, Formula, Fuse, Impl, Join, Meet, Power, Sequent, Var, iff

from .instance import digits

if TYPE_CHECKING:
    from .instance import PcpInstance

Y, V, W = Var("y"), Var("v"), Var("w")


def _step(variable: Var, word: int, base: int) -> Formula:
    """variable ↔ (□variable)^(base^‖word‖) · y^word"""
    return iff(variable, Fuse(Power(Box(variable), base ** digits(word, base)), Power(Y, word)))


def encode_gamma(p: PcpInstance) -> tuple[Formula, Formula, Formula]:
    """Premises forcing y constant below the root and v, w to follow concatenations of the pairs."""
    same_y = iff(Box(Y), Diamond(Y))
    disjuncts: list[Formula] = [Meet(_step(V, v, p.base), _step(W, w, p.base)) for v, w in p.pairs]
    follows_pairs = Box(reduce(Join, disjuncts))
    one_successor = Box(Impl(Box(Fuse(V, W)), Fuse(Box(V), Box(W))))
    return same_y, follows_pairs, one_successor


def encode_phi(p: PcpInstance) -> Formula:  # noqa: ARG001
    vw = Fuse(V, W)
    return Impl(iff(V, W), Join(Y, Impl(vw, Fuse(vw, Y))))


def reduction_sequent(p: PcpInstance) -> Sequent:
    """Γ_P ⊢ □φ_P, which fails on some transitive model exactly when P has a solution."""
    return Sequent(encode_gamma(p), Box(encode_phi(p)))
