from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product

from schemas.models import PcpInstanceDocument

from .exceptions import InvalidInstanceError, InvalidSequenceError

logger = logging.getLogger("Workbench").getChild("Pcp")

type IndexSequence = tuple[int, ...]


@dataclass(frozen=True)
class PcpInstance:
    """Pairs of words over base `base`, each word a positive natural read as its digit string."""

    base: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.base < 2:  # noqa: PLR2004
            msg = f"Base must be at least 2, got {self.base}"
            raise InvalidInstanceError(msg)
        if not self.pairs:
            msg = "An instance needs at least one pair"
            raise InvalidInstanceError(msg)
        if any(v < 1 or w < 1 for v, w in self.pairs):
            msg = f"Words must be positive naturals: {self.pairs}"
            raise InvalidInstanceError(msg)
        if len(set(self.pairs)) != len(self.pairs):
            msg = f"Repeated pair in {self.pairs}"
            raise InvalidInstanceError(msg)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def pair(self, index: int) -> tuple[int, int]:
        """Pair at 1-based `index`."""
        if not 1 <= index <= self.size:
            msg = f"Index {index} outside 1..{self.size}"
            raise InvalidSequenceError(msg)
        return self.pairs[index - 1]


@dataclass(frozen=True)
class NotFoundWithinBound:
    max_len: int


def digits(y: int, base: int) -> int:
    """Number of digits of `y` written in `base`."""
    count = 1
    while y >= base:
        y //= base
        count += 1
    return count


def concat(x: int, y: int, base: int) -> int:
    return x * base ** digits(y, base) + y


def _check_sequence(p: PcpInstance, seq: IndexSequence) -> None:
    if not seq:
        msg = "Index sequences are nonempty"
        raise InvalidSequenceError(msg)
    for index in seq:
        p.pair(index)


def prefix_folds(p: PcpInstance, seq: IndexSequence) -> list[tuple[int, int]]:
    """Concatenated v-words and w-words of every prefix i_1..i_j, for j = 1..k."""
    _check_sequence(p, seq)
    folds: list[tuple[int, int]] = []
    v_fold, w_fold = p.pair(seq[0])
    folds.append((v_fold, w_fold))
    for index in seq[1:]:
        v, w = p.pair(index)
        v_fold, w_fold = concat(v_fold, v, p.base), concat(w_fold, w, p.base)
        folds.append((v_fold, w_fold))
    return folds


def is_solution(p: PcpInstance, seq: IndexSequence) -> bool:
    v_fold, w_fold = prefix_folds(p, seq)[-1]
    return v_fold == w_fold


def brute_force_solve(p: PcpInstance, max_len: int) -> IndexSequence | NotFoundWithinBound:
    """Shortest solution, lexicographically first among those of its length."""
    for length in range(1, max_len + 1):
        for seq in product(range(1, p.size + 1), repeat=length):
            if is_solution(p, seq):
                logger.debug("Solution %s found at length %d", seq, length)
                return seq
    return NotFoundWithinBound(max_len)


def instance_from_document(doc: PcpInstanceDocument) -> PcpInstance:
    return PcpInstance(doc.base, tuple((v, w) for v, w in doc.pairs))


def instance_to_document(p: PcpInstance) -> PcpInstanceDocument:
    return PcpInstanceDocument(base=p.base, pairs=list(p.pairs))
