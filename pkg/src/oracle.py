"""
Brute-force minimum-component oracle.

Searches label patterns on the common refinement of all members'
measures, fewest cuts first, and decides each pattern exactly: the
positivity criterion is decided combinatorially, the others by an exact
LP over the sub-interval lengths.

Two normalizations keep the search small without losing optimal
allocations. A label never needs to appear inside a segment that none of
its family's members value, except as the continuation of the previous
segment's last label. A label also never needs two sub-intervals in the
same segment.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Dict, List, Optional, Sequence, Set

from .allocation import Allocation, comp
from .config import get_search_limit
from .errors import InstanceError
from .exact import plan_from_pattern
from .fairness import Criterion, majority
from .instance import Instance
from .linear import feasible_point
from .measure import refinement_segments
from .search import Pattern, PatternSearch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleResult:
    """Smallest component count found, with a witness; ``min_components`` is None when infeasible."""

    criterion: Criterion
    min_components: Optional[int]
    witness: Optional[Allocation]
    nodes_searched: int
    max_comp: int
    q: Optional[int] = None

    @property
    def feasible(self) -> bool:
        return self.min_components is not None

    def to_dict(self) -> Dict[str, Any]:
        result = {
            "criterion": self.criterion.value,
            "min_components": self.min_components if self.feasible else "infeasible",
            "witness": self.witness.to_list() if self.witness is not None else None,
            "nodes_searched": self.nodes_searched,
            "max_comp": self.max_comp,
        }
        if self.q is not None:
            result["q"] = self.q
        return result


class _Layout:
    """Segment densities of every member, indexed [family][member][segment]."""

    def __init__(self, inst: Instance):
        measures = [member.measure for _, member in inst.agents()]
        self.segments = refinement_segments(measures)
        self.densities = [[[m.density_on(left) for left, _ in self.segments] for m in family.measures]
                          for family in inst.families]
        self.useful = [
            frozenset(j for j, family in enumerate(self.densities) if any(row[s] > 0 for row in family))
            for s in range(len(self.segments))
        ]
        self.k = inst.k

    def allowance(self, segment: int, previous: Optional[int]):
        if previous is None:
            return frozenset(range(self.k)), self.useful[segment]
        return self.useful[segment] | {previous}, self.useful[segment]

    def positive_members(self, pattern: Pattern) -> List[Set[int]]:
        positive: List[Set[int]] = [set() for _ in range(self.k)]
        for s, labels in enumerate(pattern):
            for j in labels:
                for i, row in enumerate(self.densities[j]):
                    if row[s] > 0:
                        positive[j].add(i)
        return positive


def _search(inst: Instance, limit: Optional[int], layout: _Layout) -> PatternSearch:
    return PatternSearch(len(layout.segments), inst.k, range(inst.k), allowance=layout.allowance,
                         limit=limit or get_search_limit())


def _lp_rows(layout: _Layout, pattern: Pattern, demands: Sequence[Sequence[Sequence[Fraction]]],
             weights: Sequence[Fraction]):
    """Segment-length rows plus one ``>= w_j`` row per density row in ``demands[j]``."""
    columns = [(s, j) for s, labels in enumerate(pattern) for j in labels]
    rows = []
    for s, (left, right) in enumerate(layout.segments):
        rows.append(([Fraction(1) if cs == s else Fraction(0) for cs, _ in columns], "==", right - left))
    for j, family_rows in enumerate(demands):
        for density in family_rows:
            rows.append(([density[cs] if cj == j else Fraction(0) for cs, cj in columns], ">=", weights[j]))
    return rows, len(columns)


def min_components(inst: Instance, criterion: Any, max_comp: int, limit: Optional[int] = None) -> OracleResult:
    """Fewest components of an allocation satisfying ``criterion``, searching up to ``max_comp``.

    Args:
        inst: Instance with piecewise-constant measures
        criterion: average, unanimous or democratic (or an alias)
        max_comp: Largest component count to try
        limit: Node cap (defaults to FAMCAKE_SEARCH_LIMIT)

    Returns:
        OracleResult with a witness allocation, or infeasible

    Raises:
        SearchLimitError: when the node cap is exceeded
    """
    criterion = Criterion.parse(criterion)
    if criterion is Criterion.POSITIVITY:
        raise ValueError("use positivity_min_components for the positivity criterion")
    layout = _Layout(inst)
    weights = inst.weights
    averages = [[sum(column, Fraction(0)) / len(family) for column in zip(*family)] for family in layout.densities]

    def accept(pattern: Pattern) -> Optional[List[Fraction]]:
        positive = layout.positive_members(pattern)
        if criterion is Criterion.AVERAGE:
            if not all(positive):
                return None
            rows, width = _lp_rows(layout, pattern, [[avg] for avg in averages], weights)
            return feasible_point(rows, width)
        if criterion is Criterion.UNANIMOUS:
            if any(len(members) < size for members, size in zip(positive, inst.sizes)):
                return None
            rows, width = _lp_rows(layout, pattern, layout.densities, weights)
            return feasible_point(rows, width)
        needed = [majority(size) for size in inst.sizes]
        if any(len(members) < need for members, need in zip(positive, needed)):
            return None
        choices = [combinations(sorted(members), need) for members, need in zip(positive, needed)]
        for chosen in product(*choices):
            demands = [[layout.densities[j][i] for i in group] for j, group in enumerate(chosen)]
            rows, width = _lp_rows(layout, pattern, demands, weights)
            point = feasible_point(rows, width)
            if point is not None:
                return point
        return None

    search = _search(inst, limit, layout)
    outcome = search.minimize(accept, max_comp - 1)
    if outcome is None:
        logger.info("%s: infeasible within %d component(s)", criterion.value, max_comp)
        return OracleResult(criterion, None, None, search.nodes, max_comp)
    pattern, lengths, _ = outcome
    witness = plan_from_pattern(layout.segments, pattern, lengths, inst.k).allocation
    logger.info("%s: %d component(s) after %d node(s)", criterion.value, comp(witness), search.nodes)
    return OracleResult(criterion, comp(witness), witness, search.nodes, max_comp)


def positivity_min_components(inst: Instance, q: int, max_comp: int, limit: Optional[int] = None) -> OracleResult:
    """Fewest components such that at least ``q`` members of every family value their piece positively.

    Raises:
        InstanceError: if q is not between 1 and the smallest family size
    """
    if q < 1 or q > min(inst.sizes):
        raise InstanceError(f"q must lie between 1 and {min(inst.sizes)}, got {q}")
    layout = _Layout(inst)

    def accept(pattern: Pattern) -> Optional[List[Fraction]]:
        positive = layout.positive_members(pattern)
        if any(len(members) < q for members in positive):
            return None
        lengths = []
        for (left, right), labels in zip(layout.segments, pattern):
            lengths.extend([(right - left) / len(labels)] * len(labels))
        return lengths

    search = _search(inst, limit, layout)
    outcome = search.minimize(accept, max_comp - 1)
    if outcome is None:
        return OracleResult(Criterion.POSITIVITY, None, None, search.nodes, max_comp, q)
    pattern, lengths, _ = outcome
    witness = plan_from_pattern(layout.segments, pattern, lengths, inst.k).allocation
    logger.info("positivity q=%d: %d component(s) after %d node(s)", q, comp(witness), search.nodes)
    return OracleResult(Criterion.POSITIVITY, comp(witness), witness, search.nodes, max_comp, q)
