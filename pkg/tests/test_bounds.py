"""Test exact thresholds, normalized forms and validity domains."""

from __future__ import annotations

import math
import sys
import unittest
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Tuple

PROJECT_ROOT = Path(__file__).resolve().parents[1]
SRC_ROOT = PROJECT_ROOT / "src"
if str(SRC_ROOT) not in sys.path:
    sys.path.insert(0, str(SRC_ROOT))

from kcon_extremal.bounds import (
    BoundKind,
    describe_threshold,
    in_domain,
    is_forcing,
    min_forcing_edge_count,
    normalized,
    threshold,
)
from kcon_extremal.exceptions import BoundDomainError, NotForcingBoundError


class TestThreshold(unittest.TestCase):
    def test_new_theorem_values(self) -> None:
        self.assertEqual(threshold(BoundKind.NEW_THM, 6, 2), Fraction(38, 3))
        expected = {(5, 2): 10, (6, 2): 13, (7, 2): 16, (8, 3): 24}
        for (n, k), m in expected.items():
            self.assertEqual(min_forcing_edge_count(BoundKind.NEW_THM, n, k), m)

    def test_matula_values(self) -> None:
        self.assertEqual(threshold(BoundKind.MATULA_LEMMA, 5, 2), Fraction(22, 3))
        expected = {(5, 2): 8, (6, 3): 13, (6, 2): 11}
        for (n, k), m in expected.items():
            self.assertEqual(min_forcing_edge_count(BoundKind.MATULA_LEMMA, n, k), m)

    def test_integer_threshold_needs_one_more_edge(self) -> None:
        self.assertEqual(threshold(BoundKind.MATULA_LEMMA, 6, 2), Fraction(10))
        self.assertEqual(min_forcing_edge_count(BoundKind.MATULA_LEMMA, 6, 2), 11)

    def test_other_kinds(self) -> None:
        self.assertEqual(threshold(BoundKind.YUSTER_THM, 9, 4), Fraction(193, 120) * 20)
        self.assertEqual(threshold(BoundKind.MADER_CONJECTURE, 6, 2), Fraction(10))
        self.assertEqual(threshold(BoundKind.MADER_CONSTRUCTION, 6, 2), Fraction(10))
        self.assertEqual(threshold(BoundKind.MADER_CONSTRUCTION, 5, 2), Fraction(7))

    def test_normalized_kinds_scale_by_k_squared(self) -> None:
        self.assertEqual(threshold(BoundKind.NEW_NORMALIZED, 6, 2), threshold(BoundKind.NEW_THM, 6, 2))
        self.assertEqual(threshold(BoundKind.YUSTER_NORMALIZED, 9, 4), threshold(BoundKind.YUSTER_THM, 9, 4))

    def test_domain_errors(self) -> None:
        with self.assertRaises(BoundDomainError):
            threshold(BoundKind.NEW_THM, 5, 1)
        with self.assertRaises(BoundDomainError):
            threshold(BoundKind.NEW_THM, 3, 3)

    def test_non_forcing_kinds(self) -> None:
        self.assertFalse(is_forcing(BoundKind.MADER_CONJECTURE))
        with self.assertRaises(NotForcingBoundError):
            min_forcing_edge_count(BoundKind.MADER_CONJECTURE, 6, 2)
        with self.assertRaises(NotForcingBoundError):
            min_forcing_edge_count(BoundKind.MADER_CONSTRUCTION, 6, 2)


class TestNormalized(unittest.TestCase):
    def test_matula_meets_new_bound_at_five_halves_and_three(self) -> None:
        for gamma in (Fraction(5, 2), Fraction(3)):
            self.assertEqual(
                normalized(gamma, BoundKind.MATULA_NORMALIZED), normalized(gamma, BoundKind.NEW_NORMALIZED)
            )
        self.assertEqual(normalized(Fraction(5, 2), BoundKind.NEW_NORMALIZED), Fraction(19, 8))
        self.assertEqual(normalized(Fraction(3), BoundKind.MATULA_NORMALIZED), Fraction(19, 6))

    def test_matula_is_below_new_bound_between_the_roots(self) -> None:
        gamma = Fraction(11, 4)
        self.assertLess(normalized(gamma, BoundKind.MATULA_NORMALIZED), normalized(gamma, BoundKind.NEW_NORMALIZED))

    def test_gamma_must_exceed_one(self) -> None:
        with self.assertRaises(BoundDomainError):
            normalized(Fraction(1), BoundKind.NEW_NORMALIZED)

    def test_raw_kind_has_no_normalized_form(self) -> None:
        with self.assertRaises(NotForcingBoundError):
            normalized(Fraction(2), BoundKind.NEW_THM)


class TestDomains(unittest.TestCase):
    def test_in_domain(self) -> None:
        self.assertTrue(in_domain(BoundKind.NEW_THM, 5, 2))
        self.assertFalse(in_domain(BoundKind.NEW_THM, 6, 3))
        self.assertTrue(in_domain(BoundKind.YUSTER_THM, 9, 4))
        self.assertFalse(in_domain(BoundKind.YUSTER_THM, 8, 4))
        self.assertTrue(in_domain(BoundKind.MATULA_LEMMA, 6, 3))
        self.assertFalse(in_domain(BoundKind.MADER_CONJECTURE, 100, 2))

    def test_describe_threshold(self) -> None:
        record = describe_threshold(BoundKind.NEW_THM, 6, 2)
        self.assertEqual(record.value, Fraction(38, 3))
        self.assertEqual(record.reading, "forcing")
        self.assertEqual(record.min_forcing, 13)
        self.assertTrue(record.in_domain)
        self.assertFalse(record.conjectural)

        attainable = describe_threshold(BoundKind.MADER_CONSTRUCTION, 6, 2)
        self.assertEqual(attainable.reading, "attainable")
        self.assertIsNone(attainable.min_forcing)

        conjecture = describe_threshold(BoundKind.MADER_CONJECTURE, 6, 2)
        self.assertTrue(conjecture.conjectural)
        self.assertFalse(conjecture.in_domain)


class TestSweeps(unittest.TestCase):
    def _grid(self) -> Iterator[Tuple[int, int]]:
        for k in range(2, 11):
            for n in range(k + 1, 41):
                yield n, k

    def test_raw_thresholds_are_k_squared_times_normalized(self) -> None:
        pairs = (
            (BoundKind.NEW_THM, BoundKind.NEW_NORMALIZED),
            (BoundKind.YUSTER_THM, BoundKind.YUSTER_NORMALIZED),
        )
        for n, k in self._grid():
            gamma = Fraction(n, k)
            for raw, scaled in pairs:
                expected = k * k * normalized(gamma, scaled)
                self.assertEqual(threshold(raw, n, k), expected, msg=f"{raw.value} n={n} k={k}")
            matula = threshold(BoundKind.MATULA_LEMMA, n, k)
            scaled_matula = k * k * normalized(gamma, BoundKind.MATULA_NORMALIZED)
            self.assertEqual(matula + Fraction(n, 2) - Fraction(1, 3), scaled_matula)
            # the normalized conjecture drops the -1/3 shift in k
            conjecture = threshold(BoundKind.MADER_CONJECTURE, n, k)
            scaled_conjecture = k * k * normalized(gamma, BoundKind.CONJECTURE_NORMALIZED)
            self.assertEqual(scaled_conjecture - conjecture, Fraction(n - k, 2))

    def test_conjecture_new_yuster_ordering(self) -> None:
        for n, k in self._grid():
            if 2 * n < 5 * k:
                continue
            conjecture = threshold(BoundKind.MADER_CONJECTURE, n, k)
            new = threshold(BoundKind.NEW_THM, n, k)
            yuster = threshold(BoundKind.YUSTER_THM, n, k)
            self.assertLess(conjecture, new, msg=f"n={n} k={k}")
            self.assertLess(new, yuster, msg=f"n={n} k={k}")
            self.assertLessEqual(threshold(BoundKind.MADER_CONSTRUCTION, n, k), conjecture)

    def test_min_forcing_is_floor_plus_one(self) -> None:
        for n, k in self._grid():
            for kind in BoundKind:
                if not is_forcing(kind):
                    continue
                value = threshold(kind, n, k)
                m = min_forcing_edge_count(kind, n, k)
                self.assertEqual(m, math.floor(value) + 1, msg=f"{kind.value} n={n} k={k}")
                self.assertGreater(m, value)
                self.assertLessEqual(m - 1, value)
                self.assertEqual(describe_threshold(kind, n, k).min_forcing, m)


if __name__ == "__main__":
    unittest.main()
