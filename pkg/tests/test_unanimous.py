"""
Unit tests for unanimous-proportional division.
"""
import unittest
from fractions import Fraction

from src.allocation import Piece, validate_partition
from src.errors import UnsupportedCombinationError
from src.fairness import evaluate
from src.instance import Family, Instance, Member, gen_preset, gen_random
from src.measure import ValueMeasure, value
from src.protocols import divide_unanimous

F = Fraction

FIRST_HALVES = Piece.of((0, F(1, 8)), (F(1, 4), F(3, 8)), (F(1, 2), F(5, 8)), (F(3, 4), F(7, 8)))


class TestChoose(unittest.TestCase):
    """Test cases for the choose method."""

    def setUp(self):
        """Set up test fixtures."""
        self.inst = gen_preset("land")

    def test_land_example(self):
        """Test the choose method on the land example."""
        result = divide_unanimous(self.inst, "choose")
        self.assertEqual(result.allocation[1], FIRST_HALVES)
        self.assertEqual(result.allocation[0], FIRST_HALVES.complement())
        self.assertEqual(result.comp, 8)
        self.assertEqual(result.impl_bound, 8)
        self.assertEqual(result.paper_bound, 6)
        for j, member in self.inst.agents():
            self.assertGreaterEqual(value(member.measure, result.allocation[j]), F(1, 2))
        self.assertIn("Frankie takes piece 1", result.trace[-1])

    def test_compact_layout(self):
        """Test the choose method with the compact layout."""
        result = divide_unanimous(self.inst, "choose", compact=True)
        self.assertEqual(result.comp, 5)
        self.assertTrue(evaluate(self.inst, result.allocation).holds("unanimous"))

    def test_needs_equal_entitlements(self):
        """Test that choose refuses unequal entitlements."""
        with self.assertRaises(UnsupportedCombinationError):
            divide_unanimous(gen_preset("weighted-gap"), "choose")

    def test_unknown_method(self):
        """Test an unknown method name."""
        with self.assertRaises(ValueError):
            divide_unanimous(self.inst, "auction")


class TestRecursive(unittest.TestCase):
    """Test cases for the recursive method."""

    def test_land_example(self):
        """Test the recursive method on the land example."""
        inst = gen_preset("land")
        result = divide_unanimous(inst)
        self.assertEqual(result.allocation[0], FIRST_HALVES)
        self.assertEqual(result.comp, 8)
        self.assertEqual(result.impl_bound, 8)
        self.assertTrue(evaluate(inst, result.allocation).holds("unanimous"))
        self.assertTrue(any("Frankie chooses the right side" in line for line in result.trace))

    def test_three_uniform_families(self):
        """The chooser takes the left side only when it is strictly better."""
        inst = Instance(tuple(
            Family(f"Family {j + 1}", F(1, 3), (Member(f"Agent {j + 1}", ValueMeasure.uniform()),))
            for j in range(3)
        ))
        result = divide_unanimous(inst)
        self.assertEqual([piece.intervals for piece in result.allocation.pieces],
                         [((0, F(1, 3)),), ((F(1, 3), F(2, 3)),), ((F(2, 3), 1),)])

    def test_entitlements(self):
        """Test unequal entitlements."""
        inst = Instance((
            Family("A", F(1, 3), (Member("a", ValueMeasure.uniform()),)),
            Family("B", F(2, 3), (Member("b", ValueMeasure.uniform()),)),
        ))
        result = divide_unanimous(inst)
        self.assertEqual(result.allocation[0], Piece.of((0, F(1, 3))))

    def test_interleaved(self):
        """Test the interleaved k=2, m=3 instance: the alternating layout needs exactly n components."""
        inst = gen_preset("interleaved")
        result = divide_unanimous(inst)
        self.assertTrue(evaluate(inst, result.allocation).holds("unanimous"))
        self.assertEqual(result.comp, 12)
        self.assertLessEqual(result.comp, result.impl_bound)

        compact = divide_unanimous(inst, compact=True)
        self.assertTrue(evaluate(inst, compact.allocation).holds("unanimous"))
        self.assertEqual(compact.comp, 6)
        self.assertEqual(compact.comp, inst.n)
        self.assertLessEqual(compact.comp, compact.impl_bound)

    def test_members_valuing_half_the_cake(self):
        """Test that members with zero density on half of the cake all take part in the cut."""
        left_only = ValueMeasure(((F(1, 2), F(2)), (F(1), F(0))))
        right_only = ValueMeasure(((F(1, 2), F(0)), (F(1), F(2))))
        inst = Instance((
            Family("A", F(1, 2), (Member("a1", left_only), Member("a2", ValueMeasure.uniform()))),
            Family("B", F(1, 2), (Member("b1", right_only),)),
        ))
        result = divide_unanimous(inst)
        self.assertEqual(result.allocation[0], Piece.of((0, F(1, 4)), (F(1, 2), F(3, 4))))
        self.assertEqual(result.allocation[1], Piece.of((F(1, 4), F(1, 2)), (F(3, 4), 1)))
        self.assertEqual(evaluate(inst, result.allocation).per_agent_values,
                         [[F(1, 2), F(1, 2)], [F(1, 2)]])
        self.assertTrue(any("b1 chooses the right side" in line for line in result.trace))

    def test_single_family(self):
        """Test a single family."""
        result = divide_unanimous(gen_preset("nonadditive"))
        self.assertEqual(result.allocation[0], Piece.whole())

    def test_random_instances(self):
        """Test random instances, with and without the compact layout."""
        for seed in range(24):
            k = 2 + seed % 3
            weights = "random" if seed % 2 else None
            inst = gen_random(k, [1 + (seed + j) % 3 for j in range(k)], 3, seed, weights)
            for compact in (False, True):
                result = divide_unanimous(inst, compact=compact)
                self.assertTrue(validate_partition(result.allocation).valid)
                self.assertTrue(evaluate(inst, result.allocation).holds("unanimous"), seed)
                self.assertLessEqual(result.comp, result.impl_bound)


if __name__ == "__main__":
    unittest.main()
