"""
Seeded end-to-end checks: every protocol on many random instances, the
exact-division guarantees, and the lower-bound instances against the oracle.
"""
import unittest
from fractions import Fraction

import numpy as np

from src.allocation import validate_partition
from src.exact import exact_division_plan
from src.fairness import evaluate, is_positive
from src.instance import gen_preset, gen_random
from src.measure import ValueMeasure, refinement_segments, value
from src.oracle import min_components, positivity_min_components
from src.protocols import divide_average, divide_democratic_two, divide_unanimous
from src.protocols.bounds import positivity_floor


def random_sizes(rng: np.random.Generator, k: int, largest: int):
    return [int(size) for size in rng.integers(1, largest + 1, size=k)]


class TestProtocolsOnRandomInstances(unittest.TestCase):
    """Every protocol satisfies its own criterion within its own bound."""

    def setUp(self):
        """Set up test fixtures."""
        self.reports = []

    def check(self, inst, result, criterion):
        self.assertTrue(validate_partition(result.allocation).valid)
        report = evaluate(inst, result.allocation)
        self.assertTrue(report.holds(criterion))
        self.assertLessEqual(result.comp, result.impl_bound)
        self.reports.append(report)

    def test_democratic_two_families(self):
        """Test the two-family democratic protocol on 1000 seeded instances."""
        rng = np.random.default_rng(1)
        for seed in range(1000):
            inst = gen_random(2, random_sizes(rng, 2, 5), 3, seed)
            result = divide_democratic_two(inst)
            self.assertEqual(result.comp, 2)
            self.check(inst, result, "democratic")
        self.assert_unanimous_implies_others()

    def test_unanimous(self):
        """Test both unanimous methods on 500 seeded instances."""
        rng = np.random.default_rng(2)
        for seed in range(500):
            k = int(rng.integers(2, 5))
            weights = "random" if seed % 2 else None
            inst = gen_random(k, random_sizes(rng, k, 3), 3, seed, weights)
            self.check(inst, divide_unanimous(inst, "recursive", compact=seed % 4 == 1), "unanimous")
            if inst.equal_entitlements:
                self.check(inst, divide_unanimous(inst, "choose"), "unanimous")
        self.assert_unanimous_implies_others()

    def test_average_connected(self):
        """Test connected average division on 500 seeded instances."""
        rng = np.random.default_rng(3)
        for seed in range(500):
            k = int(rng.integers(2, 6))
            inst = gen_random(k, random_sizes(rng, k, 4), 3, seed)
            result = divide_average(inst)
            self.assertEqual(result.comp, k)
            self.check(inst, result, "average")
        self.assert_unanimous_implies_others()

    def assert_unanimous_implies_others(self):
        self.assertTrue(self.reports)
        for report in self.reports:
            if report.holds("unanimous"):
                self.assertTrue(report.holds("average"))
                self.assertTrue(report.holds("democratic"))


class TestExactDivisionOnRandomMeasures(unittest.TestCase):
    """Exact division is exact and within K components per segment."""

    def test_random_measures(self):
        """Test exact division on 200 seeded measure sets."""
        rng = np.random.default_rng(4)
        for trial in range(200):
            ms = [gen_random(1, [1], 4, int(rng.integers(0, 10**6))).families[0].members[0].measure
                  for _ in range(int(rng.integers(1, 6)))]
            count = int(rng.integers(1, 5))
            raw = [int(x) for x in rng.integers(0, 6, size=count)]
            if not any(raw):
                raw[0] = 1
            parts = [Fraction(x, sum(raw)) for x in raw]
            plan = exact_division_plan(ms, count, shares=parts, alternate=trial % 2 == 1)
            self.assertLessEqual(plan.achieved_components, count * len(refinement_segments(ms)))
            for m in ms:
                for piece, part in zip(plan.allocation.pieces, parts):
                    self.assertEqual(value(m, piece), part)

    def test_uniform_needs_no_extra_components(self):
        """Test that uniform exact division needs K components."""
        plan = exact_division_plan([ValueMeasure.uniform()], 4)
        self.assertEqual(plan.achieved_components, 4)


class TestLowerBoundInstances(unittest.TestCase):
    """The hard instances need exactly as many components as claimed."""

    def test_weighted_gap(self):
        """Test the weighted-gap minima for k = 2 and 3."""
        for k, expected in ((2, 3), (3, 5)):
            result = min_components(gen_preset("weighted-gap", {"k": k}), "average", expected)
            self.assertEqual(result.min_components, expected)

    def test_interleaved_democratic_two_is_connected(self):
        """Test the democratic and unanimous separation on the interleaved instance."""
        inst = gen_preset("interleaved")
        result = divide_democratic_two(inst)
        self.assertEqual(result.comp, 2)
        self.assertTrue(evaluate(inst, result.allocation).holds("democratic"))
        self.assertEqual(min_components(inst, "unanimous", 6).min_components, 6)

    def test_positivity_matches_floor(self):
        """Test that positivity minima equal the floor."""
        for k in range(2, 7):
            for m in range(1, 12 // k + 1):
                inst = gen_preset("interleaved", {"k": k, "m": m})
                for q in range(1, m + 1):
                    result = positivity_min_components(inst, q, k * m, limit=50_000_000)
                    self.assertEqual(result.min_components, positivity_floor(k, m, q), (k, m, q))
                    self.assertTrue(is_positive(inst, result.witness, q))


if __name__ == "__main__":
    unittest.main()
