"""
Piecewise-constant value measures on the unit-interval cake.

A measure is a list of segments ``(until, density)``: the density is
constant between the previous breakpoint (0 for the first segment) and
``until``. All coordinates and densities are exact rationals and the
total value of the cake is always 1.
"""
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple

from .allocation import ONE, ZERO, Interval, Piece
from .errors import CakeDomainError, InfeasibleTargetError, MeasureError, SchemaError
from .rational import format_rational, parse_rational

Segment = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class ValueMeasure:
    """A normalized piecewise-constant density over [0, 1].

    Adjacent segments with equal density are merged on construction, so two
    measures compare equal exactly when they assign the same value to every
    piece.
    """

    segments: Tuple[Segment, ...]
    cumulative: Tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        segments = _merge_equal(_check_segments(self.segments))
        total = ZERO
        cumulative = [ZERO]
        previous = ZERO
        for until, density in segments:
            total += density * (until - previous)
            cumulative.append(total)
            previous = until
        if total != ONE:
            raise MeasureError(f"measure integrates to {total}, expected 1 (use from_unnormalized to rescale)")
        object.__setattr__(self, "segments", segments)
        object.__setattr__(self, "cumulative", tuple(cumulative))

    @classmethod
    def uniform(cls) -> "ValueMeasure":
        return cls(((ONE, ONE),))

    @classmethod
    def from_unnormalized(cls, segments: Iterable[Sequence[Any]]) -> "ValueMeasure":
        """Build a measure from densities of any positive total, rescaling to 1.

        Args:
            segments: Pairs (until, density) with non-negative densities

        Returns:
            The rescaled measure
        """
        segments = _check_segments(segments)
        total = ZERO
        previous = ZERO
        for until, density in segments:
            total += density * (until - previous)
            previous = until
        if total <= 0:
            raise MeasureError("measure has no positive value anywhere")
        return cls(tuple((until, density / total) for until, density in segments))

    @classmethod
    def from_district_values(cls, values: Sequence[Any]) -> "ValueMeasure":
        """Measure over equal-length districts, e.g. ``[60, 30, 3, 3]`` for four quarters.

        Values are rescaled so that the whole cake is worth 1.
        """
        count = len(values)
        if count == 0:
            raise MeasureError("at least one district is required")
        # A district worth v over length 1/count has density v * count.
        return cls.from_unnormalized(
            (Fraction(index + 1, count), Fraction(raw) * count) for index, raw in enumerate(values)
        )

    @property
    def breakpoints(self) -> List[Fraction]:
        """All breakpoints including 0 and 1."""
        return [ZERO] + [until for until, _ in self.segments]

    def density_on(self, left: Fraction) -> Fraction:
        """Density of the segment that starts at or contains ``left`` (to its right)."""
        index = bisect_right([until for until, _ in self.segments], left)
        index = min(index, len(self.segments) - 1)
        return self.segments[index][1]

    def to_list(self) -> List[dict]:
        return [{"until": format_rational(until), "density": format_rational(density)}
                for until, density in self.segments]

    @classmethod
    def from_list(cls, raw: Any, field_name: str = "density") -> "ValueMeasure":
        if not isinstance(raw, list) or not raw:
            raise SchemaError(field_name, "expected a non-empty list of {until, density} objects")
        segments = []
        for index, entry in enumerate(raw):
            path = f"{field_name}[{index}]"
            if not isinstance(entry, dict) or set(entry) != {"until", "density"}:
                raise SchemaError(path, "expected an object with exactly 'until' and 'density'")
            segments.append((parse_rational(entry["until"], f"{path}.until"),
                             parse_rational(entry["density"], f"{path}.density")))
        return cls(tuple(segments))


def _check_segments(segments: Iterable[Sequence[Any]]) -> Tuple[Segment, ...]:
    checked = []
    previous = ZERO
    for raw in segments:
        until, density = Fraction(raw[0]), Fraction(raw[1])
        if until <= previous:
            raise MeasureError(f"breakpoints must be strictly increasing, got {until} after {previous}")
        if density < 0:
            raise MeasureError(f"negative density {density} on segment ending at {until}")
        checked.append((until, density))
        previous = until
    if not checked or checked[-1][0] != ONE:
        raise MeasureError("the last breakpoint must be 1")
    return tuple(checked)


def _merge_equal(segments: Tuple[Segment, ...]) -> Tuple[Segment, ...]:
    merged: List[Segment] = []
    for until, density in segments:
        if merged and merged[-1][1] == density:
            merged[-1] = (until, density)
        else:
            merged.append((until, density))
    return tuple(merged)


def _check_point(x: Fraction) -> Fraction:
    x = Fraction(x)
    if x < 0 or x > 1:
        raise CakeDomainError(f"point {x} lies outside the cake [0, 1]")
    return x


def cdf(m: ValueMeasure, x: Fraction) -> Fraction:
    """Value of the prefix [0, x]."""
    x = _check_point(x)
    index = bisect_left([until for until, _ in m.segments], x)
    left = m.breakpoints[index]
    return m.cumulative[index] + (x - left) * m.segments[index][1]


def value(m: ValueMeasure, piece: Piece) -> Fraction:
    """Value of a piece: the sum over its intervals of the integrated density.

    Raises:
        CakeDomainError: if an interval reaches outside [0, 1]
    """
    return sum((cdf(m, right) - cdf(m, left) for left, right in piece.intervals), ZERO)


def mark(m: ValueMeasure, start: Fraction, target: Fraction) -> Fraction:
    """Leftmost point x >= start with value([start, x]) == target.

    Args:
        m: Value measure
        start: Where the knife starts
        target: Value the prefix from ``start`` must reach

    Returns:
        The mark x

    Raises:
        InfeasibleTargetError: if less than ``target`` remains to the right of ``start``
    """
    start = _check_point(start)
    target = Fraction(target)
    if target < 0:
        raise InfeasibleTargetError(f"negative target {target}")
    if target == 0:
        return start
    goal = cdf(m, start) + target
    if goal > ONE:
        raise InfeasibleTargetError(
            f"target {target} exceeds the remaining value {ONE - cdf(m, start)} right of {start}"
        )
    # First segment whose right end reaches the goal; its density is positive.
    index = bisect_left(m.cumulative, goal, lo=1) - 1
    left = m.breakpoints[index]
    return left + (goal - m.cumulative[index]) / m.segments[index][1]


def common_refinement(ms: Sequence[ValueMeasure], within: Piece = None) -> List[Fraction]:
    """Sorted union of all breakpoints inside ``within`` plus its own endpoints."""
    within = within if within is not None else Piece.whole()
    points = set(within.endpoints)
    for m in ms:
        for point in m.breakpoints:
            if any(left < point < right for left, right in within.intervals):
                points.add(point)
    return sorted(points)


def refinement_segments(ms: Sequence[ValueMeasure], within: Piece = None) -> List[Interval]:
    """Segments of the common refinement that lie inside ``within``.

    Every measure has constant density on each returned segment.
    """
    within = within if within is not None else Piece.whole()
    points = common_refinement(ms, within)
    segments = []
    for left, right in zip(points, points[1:]):
        if _covers(within, left, right):
            segments.append((left, right))
    return segments


def _covers(piece: Piece, left: Fraction, right: Fraction) -> bool:
    middle = (left + right) / 2
    return any(a <= middle <= b for a, b in piece.intervals)


def average_measure(ms: Sequence[ValueMeasure]) -> ValueMeasure:
    """Pointwise mean of the densities (the family-average valuation).

    Raises:
        MeasureError: on an empty list
    """
    if not ms:
        raise MeasureError("cannot average an empty list of measures")
    count = len(ms)
    segments = [
        (right, sum((m.density_on(left) for m in ms), ZERO) / count)
        for left, right in refinement_segments(ms)
    ]
    return ValueMeasure(tuple(segments))


def restrict(m: ValueMeasure, piece: Piece) -> ValueMeasure:
    """The measure conditioned on ``piece``: zero outside, rescaled to total 1 inside.

    Raises:
        MeasureError: if ``piece`` is worth nothing under ``m``
    """
    worth = value(m, piece)
    if worth == 0:
        raise MeasureError(f"cannot restrict to {piece.describe()}: it has zero value")
    points = sorted(set(m.breakpoints) | set(piece.endpoints))
    segments = []
    for left, right in zip(points, points[1:]):
        density = m.density_on(left) / worth if _covers(piece, left, right) else ZERO
        segments.append((right, density))
    return ValueMeasure(tuple(segments))
