from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from features.algebra import AlgebraElement, ChainAlgebra, NoSuchElementError, pick_noncontractive_element
from features.kripke import KripkeError, KripkeModel, evaluate, is_chain_frame, is_transitive
from features.syntax import Box, Formula

from .encoding import encode_gamma, encode_phi
from .exceptions import (
    AlgebraTooContractiveError,
    CountermodelVerificationError,
    NotASolutionError,
    PrefixSolutionError,
)
from .instance import IndexSequence, PcpInstance, is_solution, prefix_folds

if TYPE_CHECKING:
    from collections.abc import Sequence

logger = logging.getLogger("Workbench").getChild("Pcp")

ROOT = "u"


def chain_world(j: int) -> str:
    return f"u{j}"


@dataclass(frozen=True)
class ReductionCheck:
    """Values of Γ_P and □φ_P at the root, and whether the frame-wide conditions hold."""

    gamma_at_root: tuple[AlgebraElement, ...]
    box_phi_at_root: AlgebraElement
    successors_valid: bool
    verified: bool


def _body(f: Formula) -> Formula:
    if not isinstance(f, Box):
        msg = f"Expected a boxed premise, got {f!r}"
        raise CountermodelVerificationError(msg)
    return f.body


def check_reduction_model(model: KripkeModel, p: PcpInstance, root: str = ROOT) -> ReductionCheck:
    """Check the reduction conditions on a chain-frame model.

    Every γ ∈ Γ_P must be top at `root`. Below the root the bodies of the second and
    third premises must be top everywhere, and □y ↔ ◇y at every world with a successor.
    The world without successors is exempt from the first premise: there □y = 1 and ◇y = 0.
    """
    alg = model.algebra
    gamma = encode_gamma(p)
    same_y, follows_pairs, one_successor = gamma
    bodies = (_body(follows_pairs), _body(one_successor))

    gamma_at_root = tuple(evaluate(model, root, g) for g in gamma)
    box_phi = evaluate(model, root, Box(encode_phi(p)))

    successors_valid = True
    for world in model.worlds:
        if world == root:
            continue
        if any(evaluate(model, world, body) != alg.top for body in bodies):
            successors_valid = False
        if model.successors(world) and evaluate(model, world, same_y) != alg.top:
            successors_valid = False

    verified = (
        all(value == alg.top for value in gamma_at_root)
        and successors_valid
        and alg.lt(box_phi, alg.top)
        and is_transitive(model)
        and is_chain_frame(model, root)
    )
    return ReductionCheck(gamma_at_root, box_phi, successors_valid, verified)


def build_countermodel(p: PcpInstance, sol: IndexSequence, alg: ChainAlgebra) -> tuple[KripkeModel, str]:
    """Transitive chain-frame model where Γ_P holds at the root and □φ_P does not.

    World u_j carries y = α, v = α^(v-fold of i_1..i_j) and w = α^(w-fold of i_1..i_j);
    the root carries α for every variable.
    """
    if not is_solution(p, sol):
        msg = f"{list(sol)} is not a solution"
        raise NotASolutionError(msg)
    for j in range(1, len(sol)):
        if is_solution(p, sol[:j]):
            msg = f"Proper prefix {list(sol[:j])} of {list(sol)} is already a solution"
            raise PrefixSolutionError(msg)

    folds = prefix_folds(p, sol)
    target = 2 * folds[-1][0]
    try:
        alpha = pick_noncontractive_element(alg, target)
    except NoSuchElementError as e:
        msg = f"{alg} is {target}-contractive"
        raise AlgebraTooContractiveError(msg) from e

    k = len(sol)
    chain = [chain_world(j) for j in range(1, k + 1)]
    relation = [(ROOT, u) for u in chain] + [(chain[i], chain[j]) for i in range(k) for j in range(i)]
    valuation = {ROOT: {"y": alpha, "v": alpha, "w": alpha}}
    for u, (v_fold, w_fold) in zip(chain, folds, strict=True):
        valuation[u] = {"y": alpha, "v": alg.power(alpha, v_fold), "w": alg.power(alpha, w_fold)}

    model = KripkeModel.build(alg, [ROOT, *chain], relation, valuation)
    logger.debug("Built %d-world reduction model over %s with α = %s", k + 1, alg, alg.format_element(alpha))

    try:
        check = check_reduction_model(model, p)
    except KripkeError as e:
        msg = f"Evaluation of the reduction model failed: {e}"
        raise CountermodelVerificationError(msg) from e
    if not check.verified:
        msg = f"Reduction model over {alg} failed verification: {check}"
        raise CountermodelVerificationError(msg)

    logger.info("Verified reduction countermodel, □φ_P = %s at %s", alg.format_element(check.box_phi_at_root), ROOT)
    return model, ROOT


def verify_characterization(model: KripkeModel, p: PcpInstance, sol: Sequence[int]) -> bool:
    """For every j: e(u_j, v) and e(u_j, w) are the powers of α = e(u_j, y) by the prefix folds,
    and they coincide exactly when the folds do."""
    alg = model.algebra
    for j, (v_fold, w_fold) in enumerate(prefix_folds(p, tuple(sol)), start=1):
        world = chain_world(j)
        if world not in model:
            return False

        alpha = model.value(world, "y")
        v_value, w_value = model.value(world, "v"), model.value(world, "w")
        if v_value != alg.power(alpha, v_fold) or w_value != alg.power(alpha, w_fold):
            logger.debug("Power equality fails at %s", world)
            return False
        if (v_value == w_value) != (v_fold == w_fold):
            logger.debug("Equality of values and folds disagree at %s", world)
            return False
    return True
