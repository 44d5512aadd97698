"""
Democratic proportionality: at least half of every family values the
family's piece at least at the family's entitlement.
"""
import logging
from fractions import Fraction
from typing import Dict, List

from ..allocation import Allocation, Piece
from ..errors import UnsupportedCombinationError
from ..fairness import majority
from ..instance import Instance
from ..measure import mark, restrict, value
from . import bounds
from .result import ProtocolResult
from .unanimous import Group, RecursiveDivision, groups_of

logger = logging.getLogger(__name__)


def lower_median(values: List[Fraction]) -> Fraction:
    """The ceil(n/2)-th smallest value."""
    return sorted(values)[majority(len(values)) - 1]


def divide_democratic_two(inst: Instance) -> ProtocolResult:
    """Connected democratic division between two families with equal entitlements.

    Every agent marks its half-value point, each family takes the lower
    median of its marks, and the cake is cut midway between the two
    family medians.

    Raises:
        UnsupportedCombinationError: unless k == 2 with equal entitlements
    """
    if inst.k != 2:
        raise UnsupportedCombinationError(f"this protocol divides between exactly 2 families, got {inst.k}")
    if not inst.equal_entitlements:
        raise UnsupportedCombinationError("this protocol needs equal entitlements")

    half = Fraction(1, 2)
    medians = []
    trace = []
    for family in inst.families:
        marks = [mark(m, Fraction(0), half) for m in family.measures]
        medians.append(lower_median(marks))
        trace.append(f"{family.name} marks {', '.join(str(x) for x in marks)}; median {medians[-1]}")
    cut = (medians[0] + medians[1]) / 2
    west = 0 if medians[0] <= medians[1] else 1
    trace.append(f"cut at {cut}: {inst.families[west].name} takes the west side")
    logger.debug("; ".join(trace))

    pieces = [Piece.of((cut, Fraction(1)))] * 2
    pieces[west] = Piece.of((Fraction(0), cut))
    return ProtocolResult(Allocation(tuple(pieces)), "democratic", "two",
                          bounds.democratic_two_bound(), 2, trace)


def divide_democratic_k(inst: Instance, mode: str = "equal", compact: bool = False) -> ProtocolResult:
    """Democratic division for any number of families.

    Args:
        inst: The instance
        mode: ``equal`` (equal entitlements: one halving cut at a median
            mark, then unanimous divisions among happy members on both
            sides) or ``entitled`` (unanimous division among the first half
            of every family)
        compact: Use the alternating exact layout

    Returns:
        ProtocolResult

    Raises:
        UnsupportedCombinationError: for ``equal`` with unequal entitlements
    """
    if mode not in ("equal", "entitled"):
        raise ValueError(f"unknown democratic mode {mode!r}; choose from ['equal', 'entitled']")
    if mode == "equal" and not inst.equal_entitlements:
        raise UnsupportedCombinationError("the equal mode needs equal entitlements; use mode='entitled'")
    if inst.k == 1:
        return ProtocolResult(Allocation((Piece.whole(),)), "democratic", mode, 1, 1,
                              ["a single family receives the whole cake"])

    trace: List[str] = []
    if mode == "entitled":
        selection = [list(range(majority(family.size))) for family in inst.families]
        trace.append(f"members taking part: {[len(chosen) for chosen in selection]} per family")
        division = RecursiveDivision(inst.equal_entitlements, compact, trace)
        pieces, impl_bound = division.run(groups_of(inst, selection), Piece.whole())
        allocation = Allocation(tuple(pieces[j] for j in range(inst.k)))
        return ProtocolResult(allocation, "democratic", "entitled",
                              bounds.democratic_entitled_bound(inst.n, inst.k), impl_bound, trace)

    k = inst.k
    west_count = (k + 1) // 2
    target = Fraction(west_count, k)
    medians = []
    for family in inst.families:
        medians.append(lower_median([mark(m, Fraction(0), target) for m in family.measures]))
    order = sorted(range(k), key=lambda j: (medians[j], j))
    cut = medians[order[west_count - 1]]
    sides = [
        (sorted(order[:west_count]), Piece.of((Fraction(0), cut)), target),
        (sorted(order[west_count:]), Piece.of((cut, Fraction(1))), 1 - target),
    ]
    trace.append(f"marks at {target}; family medians {[str(x) for x in medians]}; halving cut at {cut}")
    logger.debug(trace[-1])

    pieces: Dict[int, Piece] = {}
    impl_bound = 0
    for families, side, threshold in sides:
        groups = []
        for j in families:
            family = inst.families[j]
            happy = [i for i, m in enumerate(family.measures) if value(m, side) >= threshold]
            chosen = happy[:majority(family.size)]
            trace.append(f"{family.name}: happy members {[family.members[i].name for i in happy]}, "
                         f"keeping {[family.members[i].name for i in chosen]}")
            groups.append(Group(j, Fraction(1, len(families)),
                                [restrict(family.members[i].measure, side) for i in chosen],
                                [family.members[i].name for i in chosen]))
        division = RecursiveDivision(True, compact, trace)
        side_pieces, side_bound = division.run(groups, side)
        pieces.update(side_pieces)
        impl_bound += side_bound
    allocation = Allocation(tuple(pieces[j] for j in range(k)))
    return ProtocolResult(allocation, "democratic", "equal",
                          bounds.democratic_equal_bound(inst.n, k), impl_bound, trace)
