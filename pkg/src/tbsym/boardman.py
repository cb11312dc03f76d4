"""Coranks, critical Jacobian extensions and Thom-Boardman symbols.

An ideal of germs at the origin is represented by a finite generating list of
polynomials (:class:`IdealPresentation`).  Its rank is the rank of the
Jacobian of the generators evaluated at the origin, and its corank is the
number of variables minus that rank.  The critical extension of an ideal of
corank ``i`` in ``m`` variables adjoins all minors of order ``m - i + 1`` of
the Jacobian; iterating it gives the chain whose successive coranks form the
Thom-Boardman symbol.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .algebra import Polynomial, RingMismatchError
from .linalg import (
    MatrixPoly,
    SpanBasis,
    canonical_order,
    determinantal_generators,
    enumerate_minors,
    rank_q,
)
from .reduction import find_grading, prune

log = logging.getLogger(__name__)


class DepthError(ValueError):
    """Raised for a non-positive chain depth."""


@dataclass(frozen=True)
class IdealPresentation:
    """Coordinates ``var_names`` and a finite list of generators over them.

    Generators are kept in the order given; extended presentations produced
    by :func:`critical_extension` are canonical (interreduced and sorted).
    """

    var_names: Tuple[str, ...]
    generators: Tuple[Polynomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "var_names", tuple(self.var_names))
        object.__setattr__(self, "generators", tuple(self.generators))
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError(f"duplicate variable names in {self.var_names}")
        for g in self.generators:
            if g.vars != self.var_names:
                raise RingMismatchError(f"generator over {g.vars}, ideal over {self.var_names}")

    @property
    def m(self) -> int:
        return len(self.var_names)

    def __len__(self) -> int:
        return len(self.generators)

    def map_generators(self, fn) -> "IdealPresentation":
        return IdealPresentation(self.var_names, tuple(fn(g) for g in self.generators))


@dataclass(frozen=True)
class ExtensionStep:
    """One link ``B -> Delta^i B`` of the chain.

    ``new_generators`` counts adjoined minors that enlarge the presentation
    (outside the certified ideal, the Q-span, or the literal generator set,
    depending on the reduction mode); ``raw_minors`` counts the distinct
    nonzero minors before any reduction.
    """

    corank: int
    minor_order: Optional[int]
    generators_before: int
    generators_after: int
    new_generators: int
    raw_minors: int = 0


@dataclass(frozen=True)
class TBSymbol:
    """Computed coranks ``prefix`` and, when certified, the constant tail value.

    A proven symbol is ``prefix`` followed by ``tail_value`` forever.
    """

    prefix: Tuple[int, ...]
    tail_proven: bool = False
    tail_value: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        if any(a < b for a, b in zip(self.prefix, self.prefix[1:])):
            raise ValueError(f"symbol prefix {self.prefix} is not non-increasing")
        if any(v < 0 for v in self.prefix):
            raise ValueError("symbol entries must be nonnegative")
        if self.tail_proven:
            if self.tail_value is None or self.tail_value < 0:
                raise ValueError("a proven tail needs a nonnegative tail value")
            if self.prefix and self.tail_value > self.prefix[-1]:
                raise ValueError("tail value exceeds the last prefix entry")
        elif self.tail_value is not None:
            raise ValueError("tail_value is only meaningful for proven tails")

    def determined(self) -> Optional[int]:
        """Number of determined entries; None means all of them."""
        return None if self.tail_proven else len(self.prefix)

    def entry(self, p: int) -> int:
        """Entry ``p`` (1-based)."""
        if p < 1:
            raise IndexError("symbol entries are 1-based")
        if p <= len(self.prefix):
            return self.prefix[p - 1]
        if self.tail_proven:
            return self.tail_value
        raise IndexError(f"entry {p} is beyond the computed prefix of an unproven symbol")

    def expand(self, length: int) -> Tuple[int, ...]:
        return tuple(self.entry(p) for p in range(1, length + 1))

    def normalized(self) -> "TBSymbol":
        """Drop trailing prefix entries equal to a proven tail."""
        if not self.tail_proven:
            return self
        prefix = list(self.prefix)
        while prefix and prefix[-1] == self.tail_value:
            prefix.pop()
        return TBSymbol(tuple(prefix), True, self.tail_value)

    def __str__(self) -> str:
        body = ", ".join(str(v) for v in self.prefix)
        if self.tail_proven:
            tail = f"{self.tail_value}, ..."
            return f"({body + ', ' if body else ''}{tail}) tail={self.tail_value} proven"
        return f"({body}, ?) tail unproven"


def jacobian(ideal: IdealPresentation) -> MatrixPoly:
    rows = [[g.partial(j) for j in range(ideal.m)] for g in ideal.generators]
    return MatrixPoly.from_rows(rows, ideal.var_names, cols=ideal.m)


def is_unit_ideal_at_origin(ideal: IdealPresentation) -> bool:
    return any(g.constant_term() for g in ideal.generators)


def corank_at_origin(ideal: IdealPresentation) -> int:
    if is_unit_ideal_at_origin(ideal):
        return 0
    return ideal.m - rank_q(jacobian(ideal).at_origin())


REDUCTIONS = ("ideal", "span", "none")
MINOR_MODES = ("schur", "all")


def adjoined_minors(ideal: IdealPresentation, order: int, minors: str = "schur") -> List[Polynomial]:
    """Polynomials to adjoin for the Jacobian extension of the given order.

    ``"all"`` enumerates every minor of that order; ``"schur"`` eliminates
    constant pivots and returns the minors bordering a block that is
    invertible at the origin, which generate the same ideal in the local
    ring when ``order`` is the critical order.
    """
    jac = jacobian(ideal)
    if minors == "all":
        return enumerate_minors(jac, order)
    if minors == "schur":
        return determinantal_generators(jac, order)[1]
    raise ValueError(f"unknown minor mode {minors!r}; expected one of {MINOR_MODES}")


def _extend(ideal: IdealPresentation, reduction: str, grading=None, minors: str = "schur"):
    corank = corank_at_origin(ideal)
    m = ideal.m
    before = len(ideal.generators)
    if corank == 0:
        step = ExtensionStep(corank, None, before, before, 0)
        return corank, ideal, step, True
    order = m - corank + 1
    added = adjoined_minors(ideal, order, minors)
    if reduction == "ideal":
        gens, grown = prune(ideal.generators, added, grading)
    elif reduction == "span":
        span = SpanBasis(ideal.generators)
        old_dim = len(span)
        for p in added:
            span.add(p)
        grown = len(span) - old_dim
        gens = span.polynomials()
    elif reduction == "none":
        seen = set(g.canonical_sign() for g in ideal.generators if g)
        fresh = [p for p in added if p not in seen]
        grown = len(fresh)
        gens = canonical_order(seen | set(fresh))
    else:
        raise ValueError(f"unknown reduction {reduction!r}; expected one of {REDUCTIONS}")
    extended = IdealPresentation(ideal.var_names, tuple(gens))
    step = ExtensionStep(corank, order, before, len(gens), grown, len(added))
    return corank, extended, step, grown == 0


def critical_extension(ideal: IdealPresentation, reduction: str = "ideal", minors: str = "schur"):
    """Return ``(corank, extended ideal, step record)`` for one critical extension.

    When the corank is 0, or the Jacobian has fewer than ``m - corank + 1``
    rows, there are no minors to adjoin and the ideal comes back as is.

    ``reduction`` selects how the enlarged generator list is tidied:
    ``"span"`` keeps a reduced echelon basis of its Q-span, ``"ideal"``
    additionally drops generators certified to lie in the ideal of the
    others, and ``"none"`` only removes zero and duplicate generators.
    ``minors`` is passed to :func:`adjoined_minors`.
    """
    grading = find_grading(ideal.generators, ideal.m) if reduction == "ideal" else None
    corank, extended, step, _ = _extend(ideal, reduction, grading, minors)
    return corank, extended, step


def default_depth(ideal: IdealPresentation) -> int:
    return ideal.m + 2


def tb_symbol(ideal: IdealPresentation, depth: Optional[int] = None,
              reduction: str = "ideal", minors: str = "schur") -> Tuple[TBSymbol, List[ExtensionStep]]:
    """Thom-Boardman symbol of ``ideal`` computed to at most ``depth`` entries.

    The tail is certified when corank 0 is reached or an extension step
    adjoins nothing outside the current ideal (certified; see
    :mod:`tbsym.reduction`), since either way every later corank repeats the
    current one.  Otherwise the prefix has exactly ``depth``
    entries and the tail is left unproven.
    """
    if depth is None:
        depth = default_depth(ideal)
    if depth < 1:
        raise DepthError("depth must be at least 1")
    grading = find_grading(ideal.generators, ideal.m) if reduction == "ideal" else None
    prefix: List[int] = []
    chain: List[ExtensionStep] = []
    current = ideal
    while len(prefix) < depth:
        corank, extended, step, fixed = _extend(current, reduction, grading, minors)
        if prefix and corank > prefix[-1]:
            raise AssertionError(f"corank increased along the chain: {prefix} then {corank}")
        if not 0 <= corank <= ideal.m:
            raise AssertionError(f"corank {corank} outside [0, {ideal.m}]")
        prefix.append(corank)
        chain.append(step)
        log.debug("step %d: %s", len(prefix), step)
        if fixed:
            return TBSymbol(tuple(prefix), True, corank), chain
        current = extended
    return TBSymbol(tuple(prefix), False, None), chain
