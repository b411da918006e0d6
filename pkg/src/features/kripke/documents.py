from __future__ import annotations

from typing import TYPE_CHECKING

from features.algebra import AlgebraError, parse_algebra
from schemas.models import CountermodelCertificate, ModelDocument

from .evaluator import evaluate
from .exceptions import InvalidModelError
from .model import KripkeModel

if TYPE_CHECKING:
    from features.syntax import Sequent

    from .verdict import Countermodel


def model_from_document(doc: ModelDocument) -> KripkeModel:
    try:
        alg = parse_algebra(doc.algebra)
        valuation = {
            world: {name: alg.parse_element(text) for name, text in values.items()}
            for world, values in doc.valuation.items()
        }
    except AlgebraError as e:
        msg = f"Invalid model document: {e}"
        raise InvalidModelError(msg) from e

    return KripkeModel.build(alg, doc.worlds, (tuple(pair) for pair in doc.relation), valuation)


def model_to_document(m: KripkeModel) -> ModelDocument:
    """Worlds and pairs in model order, variables sorted, bottom values left out."""
    alg = m.algebra
    order = {world: index for index, world in enumerate(m.worlds)}
    relation = sorted(m.relation, key=lambda pair: (order[pair[0]], order[pair[1]]))
    valuation = {
        world: {
            name: alg.format_element(value)
            for name, value in sorted(m.valuation[world].items())
            if value != alg.bottom
        }
        for world in m.worlds
        if world in m.valuation
    }
    return ModelDocument(
        algebra=alg.describe(),
        worlds=list(m.worlds),
        relation=relation,
        valuation={world: values for world, values in valuation.items() if values},
    )


def countermodel_certificate(countermodel: Countermodel, s: Sequent) -> CountermodelCertificate:
    m, world = countermodel.model, countermodel.world
    alg = m.algebra
    return CountermodelCertificate(
        model=model_to_document(m),
        world=world,
        premise_values=[alg.format_element(evaluate(m, world, premise)) for premise in s.premises],
        conclusion_value=alg.format_element(countermodel.conclusion_value),
    )
