"""
Depth-first search over label patterns on refinement segments.

A pattern assigns every segment an ordered tuple of distinct labels: the
segment is cut into consecutive sub-intervals, one per label, in that
order. Because every measure is constant on a segment, only the lengths of
the sub-intervals matter, and those are solved for separately (see
``src.linear``). The number of cuts of a pattern is the number of label
changes when reading it left to right.
"""
import logging
from itertools import permutations
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple, TypeVar

from .errors import SearchLimitError

logger = logging.getLogger(__name__)

Pattern = Tuple[Tuple[int, ...], ...]
T = TypeVar("T")

# Labels allowed in a segment: (labels allowed first, labels allowed after the first).
Allowance = Tuple[FrozenSet[int], FrozenSet[int]]


class PatternSearch:
    """Iterative deepening over the number of cuts.

    Args:
        segment_count: Number of refinement segments
        labels: Number of labels (families or pieces)
        required: Labels that must appear somewhere
        allowance: Optional callback ``(segment, previous_last_label) -> Allowance``;
            by default every label is allowed everywhere
        limit: Maximum number of visited nodes over all rounds
    """

    def __init__(self,
                 segment_count: int,
                 labels: int,
                 required: Sequence[int],
                 allowance: Optional[Callable[[int, Optional[int]], Allowance]] = None,
                 limit: int = 2_000_000):
        self.segment_count = segment_count
        self.labels = labels
        self.required = frozenset(required)
        self.allowance = allowance or self._allow_all
        self.limit = limit
        self.nodes = 0
        self._orderings: Dict[Tuple[int, Optional[int]], List[Tuple[int, ...]]] = {}

    def _allow_all(self, segment: int, previous: Optional[int]) -> Allowance:
        everything = frozenset(range(self.labels))
        return everything, everything

    def orderings(self, segment: int, previous: Optional[int]) -> List[Tuple[int, ...]]:
        """Candidate label tuples for a segment, shortest first, then lexicographic."""
        key = (segment, previous)
        if key not in self._orderings:
            first_allowed, rest_allowed = self.allowance(segment, previous)
            candidates = []
            for first in sorted(first_allowed):
                rest = sorted(rest_allowed - {first})
                for size in range(len(rest) + 1):
                    for tail in permutations(rest, size):
                        candidates.append((first,) + tail)
            candidates.sort(key=lambda t: (len(t), t))
            self._orderings[key] = candidates
        return self._orderings[key]

    def minimize(self, accept: Callable[[Pattern], Optional[T]], max_cuts: int) -> Optional[Tuple[Pattern, T, int]]:
        """Find the pattern with the fewest cuts that ``accept`` turns into a solution.

        Args:
            accept: Returns a solution for a complete pattern, or None
            max_cuts: Largest number of cuts to try

        Returns:
            (pattern, solution, cuts), or None if nothing within ``max_cuts`` is accepted

        Raises:
            SearchLimitError: if more than ``limit`` nodes are visited
        """
        lowest = max(len(self.required) - 1, 0)
        for budget in range(lowest, max_cuts + 1):
            logger.info("searching patterns with %d cut(s), %d node(s) so far", budget, self.nodes)
            found = self._descend(accept, budget, 0, None, 0, frozenset(), [])
            if found is not None:
                pattern, solution = found
                return pattern, solution, budget
        return None

    def _descend(self, accept, budget: int, segment: int, previous: Optional[int], cuts: int,
                 present: FrozenSet[int], pattern: List[Tuple[int, ...]]):
        last = segment == self.segment_count - 1
        for labels in self.orderings(segment, previous):
            self.nodes += 1
            if self.nodes > self.limit:
                raise SearchLimitError(self.limit)
            total = cuts + len(labels) - 1
            if previous is not None and labels[0] != previous:
                total += 1
            if total > budget:
                continue
            seen = present | frozenset(labels)
            missing = len(self.required - seen)
            pattern.append(labels)
            if last:
                if total == budget and missing == 0:
                    solution = accept(tuple(pattern))
                    if solution is not None:
                        return tuple(pattern), solution
            elif total + missing <= budget:
                found = self._descend(accept, budget, segment + 1, labels[-1], total, seen, pattern)
                if found is not None:
                    return found
            pattern.pop()
        return None
