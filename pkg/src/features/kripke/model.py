from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from features.algebra import AlgebraElement, AlgebraError, ChainAlgebra

from .exceptions import InvalidModelError, UnknownWorldError


@dataclass(frozen=True, eq=False)
class KripkeModel:
    """Finite Kripke model with crisp accessibility and values in one chain.

    Variables missing from the valuation of a world evaluate to the bottom element.
    """

    algebra: ChainAlgebra
    worlds: tuple[str, ...]
    relation: frozenset[tuple[str, str]]
    valuation: Mapping[str, Mapping[str, AlgebraElement]]
    _successors: Mapping[str, tuple[str, ...]] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.worlds:
            msg = "A model needs at least one world"
            raise InvalidModelError(msg)
        if len(set(self.worlds)) != len(self.worlds):
            msg = f"Duplicate worlds in {self.worlds}"
            raise InvalidModelError(msg)

        known = set(self.worlds)
        for source, target in self.relation:
            if source not in known or target not in known:
                msg = f"Relation pair ({source}, {target}) uses an unknown world"
                raise InvalidModelError(msg)

        frozen_valuation: dict[str, Mapping[str, AlgebraElement]] = {}
        for world, values in self.valuation.items():
            if world not in known:
                msg = f"Valuation given for unknown world {world!r}"
                raise InvalidModelError(msg)
            try:
                checked = {name: self.algebra.check(value) for name, value in values.items()}
            except AlgebraError as e:
                msg = f"Valuation of {world!r} leaves the carrier of {self.algebra}"
                raise InvalidModelError(msg) from e
            frozen_valuation[world] = MappingProxyType(checked)

        successors = {
            world: tuple(target for target in self.worlds if (world, target) in self.relation) for world in self.worlds
        }
        object.__setattr__(self, "valuation", MappingProxyType(frozen_valuation))
        object.__setattr__(self, "_successors", MappingProxyType(successors))

    @classmethod
    def build(
        cls,
        algebra: ChainAlgebra,
        worlds: Iterable[str],
        relation: Iterable[tuple[str, str]] = (),
        valuation: Mapping[str, Mapping[str, AlgebraElement]] | None = None,
    ) -> KripkeModel:
        return cls(algebra, tuple(worlds), frozenset(relation), valuation or {})

    def __contains__(self, world: object) -> bool:
        return world in self._successors

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KripkeModel):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.worlds == other.worlds
            and self.relation == other.relation
            and self._explicit_valuation() == other._explicit_valuation()
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.worlds, self.relation))

    def require(self, world: str) -> None:
        if world not in self._successors:
            msg = f"Unknown world {world!r}"
            raise UnknownWorldError(msg)

    def successors(self, world: str) -> tuple[str, ...]:
        """Successors of `world` in world order."""
        self.require(world)
        return self._successors[world]

    def value(self, world: str, variable: str) -> AlgebraElement:
        values = self.valuation.get(world)
        if values is None:
            return self.algebra.bottom
        return values.get(variable, self.algebra.bottom)

    def variables(self) -> tuple[str, ...]:
        return tuple(sorted({name for values in self.valuation.values() for name in values}))

    def _explicit_valuation(self) -> dict[tuple[str, str], AlgebraElement]:
        # a stored bottom is the same as a missing entry
        return {
            (world, name): value
            for world, values in self.valuation.items()
            for name, value in values.items()
            if value != self.algebra.bottom
        }
