"""
Unanimous proportionality: every member values the family's piece at
least at the family's entitlement.

Two constructions are offered. ``choose`` divides the cake exactly among
all agents but one and lets that agent pick a piece for its family.
``recursive`` splits the families into two halves, cuts a piece worth
exactly the left half's share to every agent, and recurses on both sides.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..allocation import Allocation, Piece
from ..errors import UnsupportedCombinationError
from ..exact import exact_division_plan, exact_ratio_cut
from ..instance import Instance
from ..measure import ValueMeasure, refinement_segments, value
from . import bounds
from .result import ProtocolResult

logger = logging.getLogger(__name__)


@dataclass
class Group:
    """Members of one family taking part in a recursive division."""

    family: int
    weight: Fraction
    measures: List[ValueMeasure]
    names: List[str]


def groups_of(inst: Instance, members: Optional[Sequence[Sequence[int]]] = None) -> List[Group]:
    """One group per family, optionally keeping only the listed member indices."""
    groups = []
    for j, family in enumerate(inst.families):
        chosen = range(family.size) if members is None else members[j]
        groups.append(Group(j, family.weight,
                            [family.members[i].measure for i in chosen],
                            [family.members[i].name for i in chosen]))
    return groups


class RecursiveDivision:
    """Recursive halving with exact-ratio cuts.

    With equal entitlements the last active agent is left out of each cut
    and chooses a side for its family; otherwise every active agent takes
    part and the left families are the first half by index.

    Args:
        equal: Whether all groups have the same entitlement
        compact: Use the alternating exact layout
        trace: List receiving one line per cut
    """

    def __init__(self, equal: bool, compact: bool = False, trace: Optional[List[str]] = None):
        self.equal = equal
        self.compact = compact
        self.trace = trace if trace is not None else []
        self.extra_components = 0

    def run(self, groups: List[Group], within: Piece) -> Tuple[Dict[int, Piece], int]:
        """Divide ``within`` among the groups.

        Returns:
            (piece per family index, guaranteed upper bound on the total component count)
        """
        self.extra_components = 0
        pieces = self._split(sorted(groups, key=lambda g: g.family), within)
        return pieces, len(within) + self.extra_components

    def _split(self, groups: List[Group], within: Piece) -> Dict[int, Piece]:
        if len(groups) == 1:
            return {groups[0].family: within}

        # Every agent values ``within`` at least at its groups' total weight, so nobody drops out.
        active = [(group, name, m) for group in groups for name, m in zip(group.names, group.measures)]

        left_count = len(groups) // 2
        if self.equal:
            ratio = Fraction(left_count, len(groups))
            chooser = active[-1]
            cutters = [m for _, _, m in active[:-1]]
        else:
            total = sum((g.weight for g in groups), Fraction(0))
            ratio = sum((g.weight for g in groups[:left_count]), Fraction(0)) / total
            chooser = None
            cutters = [m for _, _, m in active]

        left, right = exact_ratio_cut(cutters, within, ratio, alternate=self.compact)
        segments = len(refinement_segments(cutters, within))
        self.extra_components += 2 * segments - len(within)

        if chooser is None:
            west, east = groups[:left_count], groups[left_count:]
        else:
            chooser_group, chooser_name, chooser_measure = chooser
            others = [g for g in groups if g is not chooser_group]
            goes_left = value(chooser_measure, left) > ratio * value(chooser_measure, within)
            if goes_left:
                west = sorted([chooser_group] + others[:left_count - 1], key=lambda g: g.family)
                east = others[left_count - 1:]
            else:
                west = others[:left_count]
                east = sorted(others[left_count:] + [chooser_group], key=lambda g: g.family)
            self.trace.append(f"{chooser_name} chooses the {'left' if goes_left else 'right'} side "
                              f"for family {chooser_group.family + 1}")

        self.trace.append(
            f"exact cut of {within.describe()} at ratio {ratio}: families "
            f"{[g.family + 1 for g in west]} get {left.describe()}, "
            f"families {[g.family + 1 for g in east]} get {right.describe()}"
        )
        logger.debug(self.trace[-1])
        pieces = self._split(west, left)
        pieces.update(self._split(east, right))
        return pieces


def _whole_cake(inst: Instance, criterion: str, method: str) -> ProtocolResult:
    return ProtocolResult(Allocation((Piece.whole(),)), criterion, method, 1, 1,
                          ["a single family receives the whole cake"])


def divide_unanimous(inst: Instance, method: str = "recursive", compact: bool = False) -> ProtocolResult:
    """Unanimous-proportional division.

    Args:
        inst: The instance
        method: ``choose`` (equal entitlements only) or ``recursive``
        compact: Use the alternating exact layout

    Returns:
        ProtocolResult

    Raises:
        UnsupportedCombinationError: for ``choose`` with unequal entitlements
    """
    if method not in ("choose", "recursive"):
        raise ValueError(f"unknown unanimous method {method!r}; choose from ['choose', 'recursive']")
    if method == "choose" and not inst.equal_entitlements:
        raise UnsupportedCombinationError(
            "the choose method needs equal entitlements: the chooser's favorite piece "
            "may be smaller than its family's entitlement"
        )
    if inst.k == 1:
        return _whole_cake(inst, "unanimous", method)
    if method == "choose":
        return _choose(inst, compact)

    trace: List[str] = []
    division = RecursiveDivision(inst.equal_entitlements, compact, trace)
    pieces, impl_bound = division.run(groups_of(inst), Piece.whole())
    if inst.equal_entitlements:
        paper_bound = bounds.unanimous_recursive_bound(inst.n, inst.k)
    else:
        paper_bound = bounds.unanimous_entitled_bound(inst.n, inst.k)
    allocation = Allocation(tuple(pieces[j] for j in range(inst.k)))
    return ProtocolResult(allocation, "unanimous", "recursive", paper_bound, impl_bound, trace)


def _choose(inst: Instance, compact: bool) -> ProtocolResult:
    agents = inst.agents()
    chooser_family, chooser = agents[-1]
    cutters = [member.measure for _, member in agents[:-1]]
    plan = exact_division_plan(cutters, inst.k, alternate=compact)
    pieces = list(plan.allocation.pieces)

    values = [value(chooser.measure, piece) for piece in pieces]
    favorite = values.index(max(values))
    trace = [
        f"exact division into {inst.k} pieces for {len(cutters)} agents over {len(plan.segments)} segment(s)",
        f"{chooser.name} takes piece {favorite + 1} (worth {values[favorite]}) for family {chooser_family + 1}",
    ]
    logger.debug("; ".join(trace))

    remaining = [piece for index, piece in enumerate(pieces) if index != favorite]
    assigned = []
    for j in range(inst.k):
        assigned.append(pieces[favorite] if j == chooser_family else remaining.pop(0))
    return ProtocolResult(Allocation(tuple(assigned)), "unanimous", "choose",
                          bounds.choose_bound(inst.n, inst.k), inst.k * len(plan.segments), trace)
