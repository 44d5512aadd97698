"""
Family valuations and the proportionality criteria.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from presets import get_nonadditive_table

from .allocation import Allocation, Piece
from .errors import InstanceError
from .instance import Instance, from_table
from .measure import ValueMeasure, value
from .rational import format_rational

logger = logging.getLogger(__name__)


class Criterion(str, Enum):
    AVERAGE = "average"
    UNANIMOUS = "unanimous"
    DEMOCRATIC = "democratic"
    POSITIVITY = "positivity"

    @classmethod
    def parse(cls, raw: Any) -> "Criterion":
        """Accept a Criterion, its name, or one of the short aliases avg/unan/dem/pos."""
        if isinstance(raw, cls):
            return raw
        key = str(raw).lower()
        if key in ALIASES:
            return ALIASES[key]
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown criterion {raw!r}; choose from {sorted(ALIASES)} or full names")


ALIASES = {
    "avg": Criterion.AVERAGE,
    "unan": Criterion.UNANIMOUS,
    "dem": Criterion.DEMOCRATIC,
    "pos": Criterion.POSITIVITY,
}


def majority(size: int) -> int:
    """At least half of ``size`` members: ceil(size / 2)."""
    return (size + 1) // 2


def family_average(measures: Sequence[ValueMeasure], piece: Piece) -> Fraction:
    return sum((value(m, piece) for m in measures), Fraction(0)) / len(measures)


def family_minimum(measures: Sequence[ValueMeasure], piece: Piece) -> Fraction:
    return min(value(m, piece) for m in measures)


def family_median(measures: Sequence[ValueMeasure], piece: Piece) -> Fraction:
    """The ceil(n/2)-th largest member value.

    For even n this is the lower middle value, so ``median >= w`` holds
    exactly when at least half of the members reach ``w``.
    """
    values = sorted((value(m, piece) for m in measures), reverse=True)
    return values[majority(len(values)) - 1]


@dataclass
class FairnessReport:
    """Values, family aggregates and verdicts of one allocation."""

    per_agent_values: List[List[Fraction]]
    family_avg: List[Fraction]
    family_min: List[Fraction]
    family_median: List[Fraction]
    satisfied_counts: List[int]
    verdicts: Dict[str, bool] = field(default_factory=dict)

    def holds(self, criterion: Any) -> bool:
        return self.verdicts[Criterion.parse(criterion).value]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "per_agent_values": [[format_rational(v) for v in row] for row in self.per_agent_values],
            "family_avg": [format_rational(v) for v in self.family_avg],
            "family_min": [format_rational(v) for v in self.family_min],
            "family_median": [format_rational(v) for v in self.family_median],
            "satisfied_counts": list(self.satisfied_counts),
            "verdicts": dict(self.verdicts),
        }


def evaluate(inst: Instance, x: Allocation) -> FairnessReport:
    """Evaluate an allocation against every criterion.

    Args:
        inst: The instance
        x: One piece per family

    Returns:
        FairnessReport with exact values and verdicts

    Raises:
        InstanceError: if the allocation does not have one piece per family
    """
    if len(x) != inst.k:
        raise InstanceError(f"allocation has {len(x)} pieces but the instance has {inst.k} families")

    per_agent, averages, minimums, medians, counts = [], [], [], [], []
    for family, piece in zip(inst.families, x.pieces):
        measures = [member.measure for member in family.members]
        values = [value(m, piece) for m in measures]
        per_agent.append(values)
        averages.append(family_average(measures, piece))
        minimums.append(family_minimum(measures, piece))
        medians.append(family_median(measures, piece))
        counts.append(sum(1 for v in values if v >= family.weight))

    weights = inst.weights
    verdicts = {
        Criterion.AVERAGE.value: all(avg >= w for avg, w in zip(averages, weights)),
        Criterion.UNANIMOUS.value: all(low >= w for low, w in zip(minimums, weights)),
        Criterion.DEMOCRATIC.value: all(count >= majority(size) for count, size in zip(counts, inst.sizes)),
    }
    logger.debug("verdicts %s", verdicts)
    return FairnessReport(per_agent, averages, minimums, medians, counts, verdicts)


def is_positive(inst: Instance, x: Allocation, q: int) -> bool:
    """True when at least ``q`` members of every family value their family's piece positively."""
    if len(x) != inst.k:
        raise InstanceError(f"allocation has {len(x)} pieces but the instance has {inst.k} families")
    for family, piece in zip(inst.families, x.pieces):
        positive = sum(1 for member in family.members if value(member.measure, piece) > 0)
        if positive < q:
            return False
    return True


def nonadditivity_witness() -> Dict[str, Any]:
    """Three agents, three districts: the family minimum is not additive.

    Returns:
        Dict with ``instance``, the three single-district ``districts`` pieces
        and the ``whole`` cake
    """
    inst = from_table(get_nonadditive_table())
    districts = [Piece.of((Fraction(d, 3), Fraction(d + 1, 3))) for d in range(3)]
    return {"instance": inst, "districts": districts, "whole": Piece.whole()}
