"""
Pieces and allocations of the unit-interval cake.

A piece is a finite union of closed intervals with rational endpoints,
kept in canonical form: sorted, disjoint, non-degenerate, and with
touching intervals merged. An allocation gives one piece to each family.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from .errors import MalformedPieceError, SchemaError
from .rational import format_rational, parse_rational

Interval = Tuple[Fraction, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def canonicalize(intervals: Iterable[Sequence[Any]]) -> Tuple[Interval, ...]:
    """Sort, merge and clean a list of intervals.

    Args:
        intervals: Pairs (left, right) with left <= right

    Returns:
        Canonical tuple of intervals: zero-length ones dropped, touching ones merged

    Raises:
        MalformedPieceError: if an interval is reversed or two intervals overlap
    """
    cleaned = []
    for raw in intervals:
        left, right = Fraction(raw[0]), Fraction(raw[1])
        if left > right:
            raise MalformedPieceError(f"reversed interval [{left}, {right}]")
        if left < right:
            cleaned.append((left, right))
    cleaned.sort()

    merged: List[Interval] = []
    for left, right in cleaned:
        if merged and left < merged[-1][1]:
            raise MalformedPieceError(
                f"intervals [{merged[-1][0]}, {merged[-1][1]}] and [{left}, {right}] overlap"
            )
        if merged and left == merged[-1][1]:
            merged[-1] = (merged[-1][0], right)
        else:
            merged.append((left, right))
    return tuple(merged)


@dataclass(frozen=True)
class Piece:
    """A finite union of intervals in canonical form."""

    intervals: Tuple[Interval, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "intervals", canonicalize(self.intervals))

    @classmethod
    def of(cls, *intervals: Sequence[Any]) -> "Piece":
        """Build a piece from interval pairs: ``Piece.of((0, Fraction(1, 2)))``."""
        return cls(tuple(intervals))

    @classmethod
    def whole(cls) -> "Piece":
        return cls(((ZERO, ONE),))

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    @property
    def length(self) -> Fraction:
        return sum((right - left for left, right in self.intervals), ZERO)

    @property
    def endpoints(self) -> List[Fraction]:
        points = []
        for left, right in self.intervals:
            points.extend((left, right))
        return points

    def union(self, other: "Piece") -> "Piece":
        """Union of two pieces that share at most endpoints."""
        return Piece(self.intervals + other.intervals)

    def intersect(self, other: "Piece") -> "Piece":
        result = []
        i = j = 0
        while i < len(self.intervals) and j < len(other.intervals):
            a_left, a_right = self.intervals[i]
            b_left, b_right = other.intervals[j]
            left, right = max(a_left, b_left), min(a_right, b_right)
            if left < right:
                result.append((left, right))
            if a_right < b_right:
                i += 1
            else:
                j += 1
        return Piece(tuple(result))

    def complement(self, within: Optional["Piece"] = None) -> "Piece":
        """Everything of ``within`` (default: the whole cake) not covered by this piece."""
        within = within if within is not None else Piece.whole()
        result = []
        for w_left, w_right in within.intervals:
            cursor = w_left
            for left, right in self.intervals:
                if right <= cursor or left >= w_right:
                    continue
                if left > cursor:
                    result.append((cursor, left))
                cursor = max(cursor, right)
            if cursor < w_right:
                result.append((cursor, w_right))
        return Piece(tuple(result))

    def to_list(self) -> List[List[str]]:
        return [[format_rational(left), format_rational(right)] for left, right in self.intervals]

    @classmethod
    def from_list(cls, raw: Any, field: str = "piece") -> "Piece":
        if not isinstance(raw, list):
            raise SchemaError(field, "expected a list of [left, right] pairs")
        intervals = []
        for index, pair in enumerate(raw):
            if not isinstance(pair, list) or len(pair) != 2:
                raise SchemaError(f"{field}[{index}]", "expected a [left, right] pair")
            intervals.append((parse_rational(pair[0], f"{field}[{index}][0]"),
                              parse_rational(pair[1], f"{field}[{index}][1]")))
        return cls(tuple(intervals))

    def describe(self) -> str:
        """Human-readable form, e.g. ``[0,1/4] ∪ [1/2,3/4]``."""
        if self.is_empty:
            return "(empty)"
        return " ∪ ".join(f"[{left},{right}]" for left, right in self.intervals)


@dataclass(frozen=True)
class PartitionVerdict:
    """Outcome of :func:`validate_partition`."""

    valid: bool
    kind: Optional[str] = None
    interval: Optional[Interval] = None

    def describe(self) -> str:
        if self.valid:
            return "valid partition"
        left, right = self.interval
        return f"invalid: {self.kind} at ({left}, {right})"


@dataclass(frozen=True)
class Allocation:
    """One piece per family; index j belongs to family j."""

    pieces: Tuple[Piece, ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(
            piece if isinstance(piece, Piece) else Piece(tuple(piece)) for piece in self.pieces
        ))

    def __len__(self) -> int:
        return len(self.pieces)

    def __getitem__(self, index: int) -> Piece:
        return self.pieces[index]

    def comp(self) -> int:
        return comp(self)

    def to_list(self) -> List[List[List[str]]]:
        return [piece.to_list() for piece in self.pieces]

    @classmethod
    def from_list(cls, raw: Any, field: str = "allocation") -> "Allocation":
        if not isinstance(raw, list):
            raise SchemaError(field, "expected a list of pieces, one per family")
        return cls(tuple(Piece.from_list(piece, f"{field}[{j}]") for j, piece in enumerate(raw)))


def comp(allocation: Allocation) -> int:
    """Total number of connected components over all pieces."""
    return sum(len(piece) for piece in allocation.pieces)


def validate_partition(allocation: Allocation, within: Optional[Piece] = None) -> PartitionVerdict:
    """Check that the pieces are disjoint and cover the cake.

    Args:
        allocation: Allocation to check
        within: Region that must be covered (defaults to the whole cake)

    Returns:
        PartitionVerdict, reporting the first gap or overlap from the left
    """
    within = within if within is not None else Piece.whole()
    intervals = sorted(interval for piece in allocation.pieces for interval in piece.intervals)

    for left, right in intervals:
        stray = within.complement(Piece.of((left, right)))
        if not stray.is_empty:
            return PartitionVerdict(False, "out_of_range", stray.intervals[0])

    reach = None
    for left, right in intervals:
        if reach is not None and left < reach:
            return PartitionVerdict(False, "overlap", (left, min(right, reach)))
        reach = right if reach is None else max(reach, right)

    gaps = Piece(tuple(intervals)).complement(within)
    if not gaps.is_empty:
        return PartitionVerdict(False, "gap", gaps.intervals[0])
    return PartitionVerdict(True)
