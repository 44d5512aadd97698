"""
Unit tests for pieces, allocations and partition validation.
"""
import unittest
from fractions import Fraction

from hypothesis import given, strategies as st

from src.allocation import Allocation, Piece, canonicalize, comp, validate_partition
from src.errors import MalformedPieceError, SchemaError

F = Fraction


class TestPiece(unittest.TestCase):
    """Test cases for Piece class."""

    def test_touching_intervals_merge(self):
        """Test that intervals sharing an endpoint become one."""
        piece = Piece.of((0, F(1, 2)), (F(1, 2), 1))
        self.assertEqual(piece.intervals, ((F(0), F(1)),))

    def test_canonical_order_and_degenerate_drop(self):
        """Test sorting and removal of zero-length intervals."""
        intervals = canonicalize([(F(1, 2), F(3, 4)), (F(1, 3), F(1, 3)), (0, F(1, 4))])
        self.assertEqual(intervals, ((F(0), F(1, 4)), (F(1, 2), F(3, 4))))

    def test_overlap_rejected(self):
        """Test that overlapping intervals are rejected."""
        with self.assertRaises(MalformedPieceError):
            Piece.of((0, F(1, 2)), (F(1, 4), 1))

    def test_reversed_rejected(self):
        """Test that a reversed interval is rejected."""
        with self.assertRaises(MalformedPieceError):
            Piece.of((F(1, 2), F(1, 4)))

    def test_length_and_describe(self):
        """Test piece length and its text description."""
        piece = Piece.of((0, F(1, 4)), (F(1, 2), F(3, 4)))
        self.assertEqual(piece.length, F(1, 2))
        self.assertEqual(len(piece), 2)
        self.assertEqual(piece.describe(), "[0,1/4] ∪ [1/2,3/4]")
        self.assertEqual(Piece().describe(), "(empty)")

    def test_complement(self):
        """Test complement within the whole cake and within a sub-piece."""
        piece = Piece.of((F(1, 4), F(1, 2)))
        self.assertEqual(piece.complement(), Piece.of((0, F(1, 4)), (F(1, 2), 1)))
        self.assertEqual(piece.complement(Piece.of((0, F(1, 3)))), Piece.of((0, F(1, 4))))
        self.assertTrue(Piece.whole().complement().is_empty)

    def test_intersect_and_union(self):
        """Test intersection and union of pieces."""
        a = Piece.of((0, F(1, 2)))
        b = Piece.of((F(1, 4), F(3, 4)))
        self.assertEqual(a.intersect(b), Piece.of((F(1, 4), F(1, 2))))
        self.assertEqual(a.union(Piece.of((F(1, 2), 1))), Piece.whole())

    def test_json_form(self):
        """Test the JSON form of a piece."""
        piece = Piece.of((0, F(1, 3)))
        self.assertEqual(piece.to_list(), [["0/1", "1/3"]])
        self.assertEqual(Piece.from_list([["0", "1/3"]]), piece)

    def test_from_list_schema_errors(self):
        """Test that malformed JSON pieces name the offending field."""
        with self.assertRaises(SchemaError):
            Piece.from_list("0,1")
        with self.assertRaises(SchemaError) as ctx:
            Piece.from_list([["0", "x"]], "allocation[1]")
        self.assertEqual(ctx.exception.field, "allocation[1][0][1]")

    @given(st.lists(st.tuples(st.integers(0, 24), st.integers(0, 24)), max_size=6))
    def test_canonicalize_idempotent(self, raw):
        """Canonical form is a fixed point, whenever the input is a valid piece."""
        intervals = [(F(min(a, b), 24), F(max(a, b), 24)) for a, b in raw]
        try:
            once = canonicalize(intervals)
        except MalformedPieceError:
            return
        self.assertEqual(canonicalize(once), once)
        for (_, right), (left, _) in zip(once, once[1:]):
            self.assertLess(right, left)


class TestAllocation(unittest.TestCase):
    """Test cases for Allocation and the partition check."""

    def setUp(self):
        """Set up test fixtures."""
        self.halves = Allocation((Piece.of((0, F(1, 2))), Piece.of((F(1, 2), 1))))
        self.interleaved = Allocation((
            Piece.of((0, F(1, 4)), (F(1, 2), F(3, 4))),
            Piece.of((F(1, 4), F(1, 2)), (F(3, 4), 1)),
        ))

    def test_comp(self):
        """Test counting components over all pieces."""
        self.assertEqual(comp(self.halves), 2)
        self.assertEqual(self.interleaved.comp(), 4)
        self.assertEqual(Allocation((Piece(), Piece.whole())).comp(), 1)

    def test_valid_partitions(self):
        """Test allocations that partition the cake."""
        self.assertTrue(validate_partition(self.halves).valid)
        self.assertTrue(validate_partition(self.interleaved).valid)
        self.assertEqual(validate_partition(self.halves).describe(), "valid partition")

    def test_gap(self):
        """Test that a gap between pieces is reported."""
        allocation = Allocation((Piece.of((0, F(1, 2))), Piece.of((F(3, 5), 1))))
        verdict = validate_partition(allocation)
        self.assertFalse(verdict.valid)
        self.assertEqual(verdict.kind, "gap")
        self.assertEqual(verdict.interval, (F(1, 2), F(3, 5)))
        self.assertEqual(verdict.describe(), "invalid: gap at (1/2, 3/5)")

    def test_overlap(self):
        """Test that overlapping pieces are reported."""
        allocation = Allocation((Piece.of((0, F(2, 3))), Piece.of((F(1, 2), 1))))
        verdict = validate_partition(allocation)
        self.assertEqual(verdict.kind, "overlap")
        self.assertEqual(verdict.interval, (F(1, 2), F(2, 3)))

    def test_out_of_range(self):
        """Test that pieces outside the region are reported."""
        allocation = Allocation((Piece.of((0, F(3, 2))),))
        verdict = validate_partition(allocation)
        self.assertEqual(verdict.kind, "out_of_range")
        self.assertEqual(verdict.interval, (F(1), F(3, 2)))

    def test_partition_of_sub_piece(self):
        """Test partition checks within a sub-piece."""
        within = Piece.of((0, F(1, 2)))
        allocation = Allocation((Piece.of((0, F(1, 4))), Piece.of((F(1, 4), F(1, 2)))))
        self.assertTrue(validate_partition(allocation, within).valid)
        self.assertFalse(validate_partition(allocation).valid)

    def test_json_round_trip(self):
        """Test allocation JSON round trip."""
        self.assertEqual(Allocation.from_list(self.interleaved.to_list()), self.interleaved)
        self.assertEqual(self.interleaved[1], Piece.of((F(1, 4), F(1, 2)), (F(3, 4), 1)))

    def test_from_list_rejects_non_list(self):
        """Test that a non-list allocation document is rejected."""
        with self.assertRaises(SchemaError):
            Allocation.from_list({"pieces": []})


if __name__ == "__main__":
    unittest.main()
