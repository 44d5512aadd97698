"""
Average proportionality: each family's mean member value reaches its entitlement.

The family-average measure is additive, so each family behaves like a
single agent holding that measure.
"""
import logging
from fractions import Fraction
from typing import Dict, List

from ..allocation import Allocation, Piece
from ..errors import UnsupportedCombinationError
from ..instance import Instance
from ..measure import ValueMeasure, average_measure, mark, value
from . import bounds
from .result import ProtocolResult
from .unanimous import Group, RecursiveDivision

logger = logging.getLogger(__name__)

METHODS = ("auto", "connected", "recursive")


def divide_average(inst: Instance, method: str = "auto", compact: bool = False) -> ProtocolResult:
    """Average-proportional division.

    Args:
        inst: The instance
        method: ``connected`` (equal entitlements, one interval per family),
            ``recursive`` (unanimous division of the family averages), or
            ``auto`` to pick ``connected`` whenever entitlements are equal
        compact: Use the alternating exact layout in the recursive method

    Returns:
        ProtocolResult
    """
    if method not in METHODS:
        raise ValueError(f"unknown average method {method!r}; choose from {list(METHODS)}")
    if method == "auto":
        method = "connected" if inst.equal_entitlements else "recursive"
    if method == "connected" and not inst.equal_entitlements:
        raise UnsupportedCombinationError("connected average division needs equal entitlements")

    averages = [average_measure(family.measures) for family in inst.families]
    if inst.k == 1:
        return ProtocolResult(Allocation((Piece.whole(),)), "average", method, 1, 1,
                              ["a single family receives the whole cake"])

    trace: List[str] = []
    if method == "connected":
        pieces = _halve(list(range(inst.k)), Fraction(0), Fraction(1), averages, trace)
        allocation = Allocation(tuple(pieces[j] for j in range(inst.k)))
        return ProtocolResult(allocation, "average", "connected",
                              bounds.connected_bound(inst.k), inst.k, trace)

    groups = [Group(j, family.weight, [averages[j]], [f"{family.name} (average)"])
              for j, family in enumerate(inst.families)]
    division = RecursiveDivision(inst.equal_entitlements, compact, trace)
    pieces, impl_bound = division.run(groups, Piece.whole())
    allocation = Allocation(tuple(pieces[j] for j in range(inst.k)))
    if inst.equal_entitlements:
        paper_bound = bounds.connected_bound(inst.k)
    else:
        paper_bound = bounds.average_entitled_bound(inst.k)
    return ProtocolResult(allocation, "average", "recursive", paper_bound, impl_bound, trace)


def _halve(families: List[int], left: Fraction, right: Fraction,
           averages: List[ValueMeasure], trace: List[str]) -> Dict[int, Piece]:
    """Cut [left, right] once between the first half of the families and the rest.

    Each family marks where the left families' share of its value of the
    interval ends; the cut goes at the smallest-but-enough mark, so every
    family keeps at least its proportional share of the interval it gets.
    """
    if len(families) == 1:
        return {families[0]: Piece.of((left, right))}
    count = len(families)
    left_count = count // 2
    interval = Piece.of((left, right))
    marks = sorted(
        (mark(averages[j], left, Fraction(left_count, count) * value(averages[j], interval)), j)
        for j in families
    )
    # Every family here values the interval at least count/k, so each mark lies strictly right of left.
    cut = marks[left_count - 1][0]
    west = sorted(j for _, j in marks[:left_count])
    east = sorted(j for _, j in marks[left_count:])
    trace.append(f"cut [{left},{right}] at {cut}: families {[j + 1 for j in west]} west, "
                 f"families {[j + 1 for j in east]} east")
    logger.debug(trace[-1])
    pieces = _halve(west, left, cut, averages, trace)
    pieces.update(_halve(east, cut, right, averages, trace))
    return pieces
