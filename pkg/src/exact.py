"""
Exact division for piecewise-constant measures.

Every measure is constant on each segment of the common refinement, so
giving each piece the same fraction of every segment makes all measures
agree on every piece. The searches below look for layouts with fewer
components.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .allocation import Allocation, Interval, Piece, comp
from .config import get_search_limit
from .errors import MeasureError
from .linear import feasible_point
from .measure import ValueMeasure, refinement_segments, value
from .search import Pattern, PatternSearch

logger = logging.getLogger(__name__)

# A labelled sub-interval of a segment: (label, left, right).
Split = Tuple[int, Fraction, Fraction]


@dataclass(frozen=True)
class ExactCutPlan:
    """Per-segment layout of an exact division."""

    segments: Tuple[Interval, ...]
    per_segment_splits: Tuple[Tuple[Split, ...], ...]
    pieces: int

    @property
    def allocation(self) -> Allocation:
        intervals: List[List[Interval]] = [[] for _ in range(self.pieces)]
        for splits in self.per_segment_splits:
            for label, left, right in splits:
                if left < right:
                    intervals[label].append((left, right))
        return Allocation(tuple(Piece(tuple(parts)) for parts in intervals))

    @property
    def achieved_components(self) -> int:
        return comp(self.allocation)


@dataclass(frozen=True)
class ExactSearchResult:
    """Outcome of :func:`min_cut_exact_search`; ``plan`` is None when nothing fits the budget."""

    plan: Optional[ExactCutPlan]
    budget: int
    nodes_searched: int

    @property
    def feasible(self) -> bool:
        return self.plan is not None

    @property
    def min_components(self) -> Optional[int]:
        return self.plan.achieved_components if self.plan else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "feasible": self.feasible,
            "budget": self.budget,
            "min_components": self.min_components,
            "allocation": self.plan.allocation.to_list() if self.plan else None,
            "nodes_searched": self.nodes_searched,
        }


def _check_shares(K: int, shares: Optional[Sequence[Fraction]]) -> List[Fraction]:
    if K < 1:
        raise ValueError(f"K must be at least 1, got {K}")
    if shares is None:
        return [Fraction(1, K)] * K
    shares = [Fraction(share) for share in shares]
    if len(shares) != K:
        raise ValueError(f"expected {K} shares, got {len(shares)}")
    if any(share < 0 for share in shares) or sum(shares) != 1:
        raise ValueError(f"shares must be non-negative and sum to 1, got {shares}")
    return shares


def exact_division_plan(ms: Sequence[ValueMeasure],
                        K: int,
                        within: Optional[Piece] = None,
                        shares: Optional[Sequence[Fraction]] = None,
                        alternate: bool = False) -> ExactCutPlan:
    """Cut every refinement segment into K consecutive parts in proportion to ``shares``.

    Args:
        ms: Measures that must agree on every piece
        K: Number of pieces
        within: Region to divide (defaults to the whole cake)
        shares: Fraction of ``within`` per piece (defaults to 1/K each)
        alternate: Reverse the part order on every second segment and leave
            segments that no measure values uncut

    Returns:
        The plan; its allocation has at most K times the segment count components
    """
    shares = _check_shares(K, shares)
    within = within if within is not None else Piece.whole()
    segments = refinement_segments(ms, within)

    layout = []
    previous_last = None
    for index, (left, right) in enumerate(segments):
        order = list(range(K))
        if alternate and index % 2 == 1:
            order.reverse()
        if alternate and ms and all(m.density_on(left) == 0 for m in ms):
            owner = previous_last if previous_last is not None else order[0]
            layout.append(((owner, left, right),))
            previous_last = owner
            continue
        splits = []
        cursor = left
        for label in order:
            end = cursor + shares[label] * (right - left)
            if end > cursor:
                splits.append((label, cursor, end))
            cursor = end
        layout.append(tuple(splits))
        previous_last = splits[-1][0]
    return ExactCutPlan(tuple(segments), tuple(layout), K)


def exact_division(ms: Sequence[ValueMeasure],
                   K: int,
                   within: Optional[Piece] = None,
                   shares: Optional[Sequence[Fraction]] = None,
                   alternate: bool = False) -> Allocation:
    """K pieces of ``within`` that every measure values at exactly ``share_j`` of ``within``."""
    return exact_division_plan(ms, K, within, shares, alternate).allocation


def exact_ratio_cut(ms: Sequence[ValueMeasure],
                    within: Piece,
                    r: Fraction,
                    alternate: bool = False) -> Tuple[Piece, Piece]:
    """Cut a piece worth exactly ``r`` of ``within`` to every measure.

    Args:
        ms: Measures, each with positive value on ``within``
        within: Region to cut
        r: Target ratio in [0, 1]
        alternate: See :func:`exact_division_plan`

    Returns:
        (piece, rest of ``within``)

    Raises:
        ValueError: if r is outside [0, 1]
        MeasureError: if a measure values ``within`` at zero
    """
    r = Fraction(r)
    if r < 0 or r > 1:
        raise ValueError(f"ratio must lie in [0, 1], got {r}")
    for m in ms:
        if value(m, within) == 0:
            raise MeasureError(f"a measure has zero value on {within.describe()}")
    first, second = exact_division(ms, 2, within, (r, 1 - r), alternate).pieces
    return first, second


def min_cut_exact_search(ms: Sequence[ValueMeasure],
                         K: int,
                         budget: int,
                         shares: Optional[Sequence[Fraction]] = None,
                         limit: Optional[int] = None) -> ExactSearchResult:
    """Exact division of the whole cake with the fewest components, using at most ``budget`` cuts.

    Patterns are tried in order of increasing cut count; the first exact
    one found is returned, so the plan is deterministic.

    Raises:
        SearchLimitError: when the node limit is exceeded
    """
    shares = _check_shares(K, shares)
    segments = refinement_segments(ms)
    densities = [[m.density_on(left) for left, _ in segments] for m in ms]
    required = [label for label in range(K) if shares[label] > 0]
    search = PatternSearch(len(segments), K, required, limit=limit or get_search_limit())

    def accept(pattern: Pattern) -> Optional[List[Fraction]]:
        columns = [(s, label) for s, labels in enumerate(pattern) for label in labels]
        rows = []
        for s, (left, right) in enumerate(segments):
            rows.append(([Fraction(1) if cs == s else Fraction(0) for cs, _ in columns], "==", right - left))
        for dens in densities:
            for label in required:
                coefficients = [dens[cs] if cl == label else Fraction(0) for cs, cl in columns]
                rows.append((coefficients, "==", shares[label]))
        return feasible_point(rows, len(columns))

    outcome = search.minimize(accept, budget)
    if outcome is None:
        logger.info("no exact division with at most %d cut(s)", budget)
        return ExactSearchResult(None, budget, search.nodes)
    pattern, lengths, cuts = outcome
    plan = plan_from_pattern(segments, pattern, lengths, K)
    logger.info("exact division found with %d cut(s), %d component(s)", cuts, plan.achieved_components)
    return ExactSearchResult(plan, budget, search.nodes)


def plan_from_pattern(segments: Sequence[Interval], pattern: Pattern, lengths: Sequence[Fraction],
                      labels: int) -> ExactCutPlan:
    """Lay out the solved sub-interval lengths of a pattern from left to right."""
    layout = []
    position = 0
    for (left, _), labels_here in zip(segments, pattern):
        cursor = left
        splits = []
        for label in labels_here:
            end = cursor + lengths[position]
            position += 1
            if end > cursor:
                splits.append((label, cursor, end))
            cursor = end
        layout.append(tuple(splits))
    return ExactCutPlan(tuple(segments), tuple(layout), labels)
