"""
Unit tests for democratic-proportional division.
"""
import unittest
from fractions import Fraction

from src.allocation import Piece, validate_partition
from src.errors import UnsupportedCombinationError
from src.fairness import evaluate
from src.instance import Family, Instance, Member, gen_preset, gen_random
from src.measure import ValueMeasure
from src.protocols import divide_democratic_k, divide_democratic_two
from src.protocols.democratic import lower_median

F = Fraction


def pair(first: ValueMeasure, second: ValueMeasure) -> Instance:
    return Instance((
        Family("Family 1", F(1, 2), (Member("a", first),)),
        Family("Family 2", F(1, 2), (Member("b", second),)),
    ))


class TestLowerMedian(unittest.TestCase):
    """Test cases for lower_median."""

    def test_odd_and_even(self):
        """Test lower medians of odd and even lists."""
        self.assertEqual(lower_median([F(3), F(1), F(2)]), 2)
        self.assertEqual(lower_median([F(4), F(1), F(3), F(2)]), 2)
        self.assertEqual(lower_median([F(7)]), 7)


class TestDemocraticTwo(unittest.TestCase):
    """Test cases for divide_democratic_two."""

    def test_identical_uniform(self):
        """Test two identical uniform agents."""
        result = divide_democratic_two(pair(ValueMeasure.uniform(), ValueMeasure.uniform()))
        self.assertEqual(result.allocation[0], Piece.of((0, F(1, 2))))
        self.assertEqual(result.comp, 2)

    def test_cut_midway_between_medians(self):
        """Test that the cut lies midway between the family medians."""
        right_heavy = ValueMeasure(((F(1, 2), F(0)), (F(1), F(2))))
        inst = pair(ValueMeasure.uniform(), right_heavy)
        result = divide_democratic_two(inst)
        self.assertEqual(result.allocation[0], Piece.of((0, F(5, 8))))
        self.assertEqual(result.allocation[1], Piece.of((F(5, 8), 1)))
        self.assertEqual(evaluate(inst, result.allocation).per_agent_values, [[F(5, 8)], [F(3, 4)]])

    def test_land_example(self):
        """Test the land example."""
        inst = gen_preset("land")
        result = divide_democratic_two(inst)
        self.assertEqual(result.allocation[0], Piece.of((0, F(183, 400))))
        self.assertEqual(result.method, "two")
        self.assertIn("median 6/25", result.trace[0])
        self.assertIn("median 27/40", result.trace[1])
        self.assertTrue(evaluate(inst, result.allocation).holds("democratic"))

    def test_east_family_first(self):
        """Test when the second family's median lies to the left."""
        left_heavy = ValueMeasure(((F(1, 2), F(2)), (F(1), F(0))))
        result = divide_democratic_two(pair(ValueMeasure.uniform(), left_heavy))
        self.assertEqual(result.allocation[1], Piece.of((0, F(3, 8))))

    def test_interleaved(self):
        """Test the interleaved instance gets a connected division."""
        inst = gen_preset("interleaved")
        result = divide_democratic_two(inst)
        self.assertEqual(result.allocation[0], Piece.of((0, F(1, 2))))
        self.assertTrue(evaluate(inst, result.allocation).holds("democratic"))

    def test_unsupported(self):
        """Test instances the two-family protocol refuses."""
        with self.assertRaises(UnsupportedCombinationError):
            divide_democratic_two(gen_preset("weighted-gap"))
        with self.assertRaises(UnsupportedCombinationError):
            divide_democratic_two(gen_preset("interleaved", {"k": 3, "m": 2}))


class TestDemocraticK(unittest.TestCase):
    """Test cases for divide_democratic_k."""

    def test_land_equal_mode(self):
        """Test the equal mode on the land example."""
        inst = gen_preset("land")
        result = divide_democratic_k(inst)
        self.assertEqual(result.allocation[0], Piece.of((0, F(6, 25))))
        self.assertEqual(result.comp, 2)
        report = evaluate(inst, result.allocation)
        self.assertTrue(report.holds("democratic"))
        self.assertEqual(report.satisfied_counts, [2, 3])
        self.assertTrue(any("happy members ['Alice', 'Bob']" in line for line in result.trace))

    def test_three_uniform_families(self):
        """Test three uniform families."""
        inst = Instance(tuple(
            Family(f"Family {j + 1}", F(1, 3), (Member(f"Agent {j + 1}", ValueMeasure.uniform()),))
            for j in range(3)
        ))
        result = divide_democratic_k(inst)
        self.assertEqual([piece.intervals for piece in result.allocation.pieces],
                         [((0, F(1, 3)),), ((F(1, 3), F(2, 3)),), ((F(2, 3), 1),)])

    def test_interleaved_four_families(self):
        """Test four interleaved families."""
        inst = gen_preset("interleaved", {"k": 4, "m": 4})
        result = divide_democratic_k(inst)
        self.assertTrue(validate_partition(result.allocation).valid)
        self.assertTrue(evaluate(inst, result.allocation).holds("democratic"))
        self.assertLessEqual(result.comp, result.impl_bound)
        self.assertIn("halving cut at 11/32", result.trace[0])

    def test_entitled_mode(self):
        """Test the entitled mode on random weighted instances."""
        for seed in range(12):
            k = 2 + seed % 3
            inst = gen_random(k, [3] * k, 3, seed, "random")
            result = divide_democratic_k(inst, "entitled")
            self.assertTrue(evaluate(inst, result.allocation).holds("democratic"), seed)
            self.assertLessEqual(result.comp, result.impl_bound)

    def test_random_equal_mode(self):
        """Test the equal mode on random instances, with and without the compact layout."""
        for seed in range(16):
            k = 2 + seed % 4
            inst = gen_random(k, [1 + (seed + j) % 4 for j in range(k)], 3, seed)
            for compact in (False, True):
                result = divide_democratic_k(inst, compact=compact)
                self.assertTrue(validate_partition(result.allocation).valid)
                self.assertTrue(evaluate(inst, result.allocation).holds("democratic"), seed)

    def test_errors(self):
        """Test unsupported entitlements and unknown modes."""
        with self.assertRaises(UnsupportedCombinationError):
            divide_democratic_k(gen_preset("weighted-gap"))
        with self.assertRaises(ValueError):
            divide_democratic_k(gen_preset("land"), "majority")


if __name__ == "__main__":
    unittest.main()
