from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Iterator

from .formula import ZERO, Binary, Box, Const0, Const1, Delta, Diamond, Formula, Impl, Power, Var, children


def _as_iterable(f: Formula | Iterable[Formula]) -> Iterable[Formula]:
    if isinstance(f, Const0 | Const1 | Var | Binary | Box | Diamond | Delta | Power):
        return (f,)
    return f


def psfm(f: Formula | Iterable[Formula]) -> frozenset[Formula]:
    """Propositional subformulas: modal subformulas are kept whole and not entered."""
    result: set[Formula] = set()
    stack = list(_as_iterable(f))
    while stack:
        current = stack.pop()
        if current in result:
            continue
        result.add(current)
        if not isinstance(current, Box | Diamond):
            stack.extend(children(current))
    return frozenset(result)


def iter_subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order walk over every subformula, duplicates included."""
    stack = [f]
    while stack:
        current = stack.pop()
        yield current
        stack.extend(reversed(children(current)))


def subformulas(f: Formula | Iterable[Formula]) -> frozenset[Formula]:
    return frozenset(sub for g in _as_iterable(f) for sub in iter_subformulas(g))


def variables(f: Formula | Iterable[Formula]) -> tuple[str, ...]:
    names = {sub.name for sub in subformulas(f) if isinstance(sub, Var)}
    return tuple(sorted(names))


def contains_delta(f: Formula | Iterable[Formula]) -> bool:
    return any(isinstance(sub, Delta) for g in _as_iterable(f) for sub in iter_subformulas(g))


def contains_modality(f: Formula | Iterable[Formula]) -> bool:
    return any(isinstance(sub, Box | Diamond) for g in _as_iterable(f) for sub in iter_subformulas(g))


def modal_depth(f: Formula | Iterable[Formula]) -> int:
    depth = 0
    for g in _as_iterable(f):
        stack = [(g, 0)]
        while stack:
            current, level = stack.pop()
            if isinstance(current, Box | Diamond):
                level += 1
            depth = max(depth, level)
            stack.extend((child, level) for child in children(current))
    return depth


def modal_depth_profile(f: Formula | Iterable[Formula]) -> dict[str, frozenset[int]]:
    """Modal depths at which each variable occurs."""
    profile: defaultdict[str, set[int]] = defaultdict(set)
    for g in _as_iterable(f):
        stack = [(g, 0)]
        while stack:
            current, level = stack.pop()
            if isinstance(current, Var):
                profile[current.name].add(level)
                continue
            if isinstance(current, Box | Diamond):
                level += 1
            stack.extend((child, level) for child in children(current))
    return {name: frozenset(levels) for name, levels in sorted(profile.items())}


def normalize_to_diamond(f: Formula) -> Formula:
    """Rewrite every □φ into ¬◇¬φ. Only sound on chains with involutive negation."""
    match f:
        case Box(body=body):
            return Impl(Diamond(Impl(normalize_to_diamond(body), ZERO)), ZERO)
        case Diamond(body=body):
            return Diamond(normalize_to_diamond(body))
        case Delta(body=body):
            return Delta(normalize_to_diamond(body))
        case Power(body=body, exponent=exponent):
            return Power(normalize_to_diamond(body), exponent)
        case Binary(left=left, right=right):
            return type(f)(normalize_to_diamond(left), normalize_to_diamond(right))
        case _:
            return f
