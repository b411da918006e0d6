from __future__ import annotations

import logging
from fractions import Fraction
from itertools import product

from .chains import ChainAlgebra, GodelRational, LukRational, MVn, ProductOneGen, ProductRational
from .elements import AlgebraElement, GenPower, Index, RationalValue
from .exceptions import NoSuchElementError

logger = logging.getLogger("Workbench").getChild("Algebra")


def is_n_contractive(alg: ChainAlgebra, n: int) -> bool:
    """a^(n+1) = a^n for every element of the carrier."""
    if n < 1:
        msg = f"Contractivity needs n >= 1, got {n}"
        raise ValueError(msg)

    match alg:
        case MVn():
            return all(alg.power(a, n + 1) == alg.power(a, n) for a in alg.carrier())
        case GodelRational():
            return True
        case _:
            return False


def is_weakly_archimedean(alg: ChainAlgebra) -> bool:
    """If a <= b^k for every k then a·b = a."""
    if not isinstance(alg, MVn):
        return True

    # powers in MV_n are constant from the n-th on
    for a, b in product(alg.carrier(), repeat=2):
        if alg.leq(a, alg.power(b, alg.n)) and alg.fuse(a, b) != a:
            logger.debug("Weak archimedeanicity fails on %s at (%s, %s)", alg, a, b)
            return False
    return True


def pick_noncontractive_element(alg: ChainAlgebra, m: int) -> AlgebraElement:
    """Deterministic α with α^(m+1) < α^m.

    Raises NoSuchElementError when the chain is m-contractive.
    """
    if m < 0:
        msg = f"Negative exponent: {m}"
        raise ValueError(msg)

    alpha: AlgebraElement
    match alg:
        case LukRational():
            alpha = RationalValue(1 - Fraction(1, m + 2))
        case MVn(n=n) if n >= m + 1:
            alpha = Index(n - 1)
        case ProductRational():
            alpha = RationalValue(Fraction(1, 2))
        case ProductOneGen():
            alpha = GenPower(1)
        case _ if m == 0:
            alpha = alg.bottom
        case _:
            msg = f"{alg} is {m}-contractive"
            raise NoSuchElementError(msg)

    if not alg.lt(alg.power(alpha, m + 1), alg.power(alpha, m)):
        msg = f"{alg} has no element with strictly decreasing power at {m}"
        raise NoSuchElementError(msg)

    logger.debug("Picked %s on %s for exponent %d", alg.format_element(alpha), alg, m)
    return alpha
