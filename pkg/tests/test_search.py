"""Test exhaustive forcing verification and the maximum-edge searches."""

from __future__ import annotations

import sys
import unittest
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parents[1]
SRC_ROOT = PROJECT_ROOT / "src"
if str(SRC_ROOT) not in sys.path:
    sys.path.insert(0, str(SRC_ROOT))

from kcon_extremal.bounds import BoundKind, min_forcing_edge_count
from kcon_extremal.connectivity import has_k_plus_1_connected_subgraph
from kcon_extremal.constructions import mader_edge_count
from kcon_extremal.exceptions import BudgetExceededError, DomainRefusedError, ParameterError
from kcon_extremal.graphcore import complete_graph, cycle_graph
from kcon_extremal.search import (
    SearchMode,
    SearchReport,
    _rank_chunks,
    _unrank_combination,
    consistency_issues,
    estimate_work,
    max_edges_without,
    verify_forcing,
)


class TestEstimateWork(unittest.TestCase):
    def test_forcing_counts(self) -> None:
        expected = {(5, 2): 1, (6, 2): 105, (7, 2): 20349, (8, 3): 20475}
        for (n, k), count in expected.items():
            self.assertEqual(estimate_work(n, k, BoundKind.NEW_THM), count)
        self.assertEqual(estimate_work(5, 2, BoundKind.MATULA_LEMMA), 45)
        self.assertEqual(estimate_work(6, 2, BoundKind.MATULA_LEMMA), 1365)

    def test_vacuous_and_maximize_modes(self) -> None:
        self.assertEqual(estimate_work(3, 2, BoundKind.MATULA_LEMMA), 0)
        self.assertEqual(estimate_work(4, 1, SearchMode.EXHAUSTIVE), 2**6)
        self.assertEqual(estimate_work(4, 1, "greedy", iterations=10), 20)


class TestRanks(unittest.TestCase):
    def test_unranking_is_lexicographic(self) -> None:
        self.assertEqual(_unrank_combination(0, 5, 3), [0, 1, 2])
        self.assertEqual(_unrank_combination(1, 5, 3), [0, 1, 3])
        self.assertEqual(_unrank_combination(9, 5, 3), [2, 3, 4])

    def test_chunks_cover_the_range(self) -> None:
        chunks = _rank_chunks(105, 8)
        self.assertEqual(chunks[0][0], 0)
        self.assertEqual(chunks[-1][1], 105)
        self.assertTrue(all(a[1] == b[0] for a, b in zip(chunks, chunks[1:])))
        self.assertEqual(_rank_chunks(1, 8), [(0, 1)])


class TestVerifyForcing(unittest.TestCase):
    def test_new_theorem_at_desk_scale(self) -> None:
        expected = {(5, 2): 1, (6, 2): 105, (7, 2): 20349, (8, 3): 20475}
        for (n, k), count in expected.items():
            report = verify_forcing(BoundKind.NEW_THM, n, k)
            self.assertTrue(report.verified, msg=f"n={n} k={k}")
            self.assertEqual(report.counterexamples, ())
            self.assertEqual(report.graphs_examined, count)
            self.assertEqual(report.edge_count, min_forcing_edge_count(BoundKind.NEW_THM, n, k))
            self.assertFalse(report.exploratory)

    def test_matula_lemma_at_desk_scale(self) -> None:
        for n, k in ((5, 2), (6, 3), (6, 2)):
            report = verify_forcing(BoundKind.MATULA_LEMMA, n, k)
            self.assertTrue(report.verified, msg=f"n={n} k={k}")
            self.assertEqual(report.graphs_examined, estimate_work(n, k, BoundKind.MATULA_LEMMA))

    def test_parallel_run_matches_sequential(self) -> None:
        sequential = verify_forcing(BoundKind.NEW_THM, 6, 2, jobs=1)
        parallel = verify_forcing(BoundKind.NEW_THM, 6, 2, jobs=2)
        self.assertEqual(sequential, parallel)

    def test_domain_refusal_and_override(self) -> None:
        with self.assertRaises(DomainRefusedError):
            verify_forcing(BoundKind.NEW_THM, 6, 3)
        report = verify_forcing(BoundKind.NEW_THM, 6, 3, override_domain=True)
        self.assertTrue(report.exploratory)
        self.assertTrue(report.verified)
        self.assertEqual(report.graphs_examined, 1)

    def test_conjecture_kind_needs_override(self) -> None:
        with self.assertRaises(DomainRefusedError):
            verify_forcing(BoundKind.CONJECTURE_NORMALIZED, 5, 2)
        report = verify_forcing(BoundKind.CONJECTURE_NORMALIZED, 5, 2, override_domain=True)
        self.assertTrue(report.exploratory)

    def test_budget_refusal_carries_estimate(self) -> None:
        with self.assertRaises(BudgetExceededError) as ctx:
            verify_forcing(BoundKind.NEW_THM, 7, 2, budget=100)
        self.assertEqual(ctx.exception.estimate, 20349)
        self.assertEqual(ctx.exception.budget, 100)

    def test_vacuous_run(self) -> None:
        report = verify_forcing(BoundKind.MATULA_LEMMA, 3, 2)
        self.assertTrue(report.vacuous)
        self.assertTrue(report.verified)
        self.assertEqual(report.graphs_examined, 0)


class TestMaxEdgesWithout(unittest.TestCase):
    def test_forests_for_k_equal_one(self) -> None:
        for n in range(3, 7):
            report = max_edges_without(n, 1, SearchMode.EXHAUSTIVE)
            self.assertTrue(report.exhaustive)
            self.assertEqual(report.best_edge_count, n - 1)
            self.assertFalse(has_k_plus_1_connected_subgraph(report.best_graph, 1)[0])

    def test_five_two_matches_matula(self) -> None:
        report = max_edges_without(5, 2, SearchMode.EXHAUSTIVE)
        self.assertEqual(report.best_edge_count, 7)
        forcing = verify_forcing(BoundKind.MATULA_LEMMA, 5, 2)
        self.assertEqual(consistency_issues(report, forcing), [])

    def test_six_two_cross_consistency(self) -> None:
        report = max_edges_without(6, 2, SearchMode.EXHAUSTIVE)
        self.assertTrue(report.exhaustive)
        self.assertGreaterEqual(report.best_edge_count, mader_edge_count(6, 2))
        self.assertLess(report.best_edge_count, min_forcing_edge_count(BoundKind.NEW_THM, 6, 2))
        self.assertFalse(has_k_plus_1_connected_subgraph(report.best_graph, 2)[0])
        forcing = verify_forcing(BoundKind.NEW_THM, 6, 2)
        self.assertEqual(consistency_issues(report, forcing), [])
        self.assertEqual(len(report.observations), 1)

    def test_budget_truncates_exhaustive_search(self) -> None:
        report = max_edges_without(7, 2, SearchMode.EXHAUSTIVE, budget=5)
        self.assertFalse(report.exhaustive)
        self.assertEqual(report.graphs_examined, 5)
        self.assertGreaterEqual(report.best_edge_count, mader_edge_count(7, 2))

    def test_greedy_is_seeded_and_valid(self) -> None:
        first = max_edges_without(8, 2, SearchMode.GREEDY, seed=1, iterations=40)
        second = max_edges_without(8, 2, SearchMode.GREEDY, seed=1, iterations=40)
        self.assertEqual(first.best_graph, second.best_graph)
        self.assertFalse(first.exhaustive)
        self.assertGreaterEqual(first.best_edge_count, mader_edge_count(8, 2))
        self.assertFalse(has_k_plus_1_connected_subgraph(first.best_graph, 2)[0])

    def test_parameter_guards(self) -> None:
        with self.assertRaises(ParameterError):
            max_edges_without(13, 2, SearchMode.EXHAUSTIVE)
        with self.assertRaises(ParameterError):
            max_edges_without(5, 0, SearchMode.EXHAUSTIVE)
        with self.assertRaises(ValueError):
            max_edges_without(5, 2, "sideways")


class TestConsistencyIssues(unittest.TestCase):
    def test_maximum_reaching_forcing_count_is_flagged(self) -> None:
        maximize = SearchReport(n=6, k=2, mode=SearchMode.EXHAUSTIVE, best_graph=complete_graph(6))
        forcing = SearchReport(n=6, k=2, mode=SearchMode.FORCING, kind=BoundKind.NEW_THM, edge_count=13)
        issues = consistency_issues(maximize, forcing)
        self.assertEqual(len(issues), 1)
        self.assertIn("reaches forcing count 13", issues[0])

    def test_counterexample_with_small_maximum_is_flagged(self) -> None:
        maximize = SearchReport(n=5, k=2, mode=SearchMode.EXHAUSTIVE, best_graph=cycle_graph(5))
        forcing = SearchReport(
            n=5, k=2, mode=SearchMode.FORCING, kind=BoundKind.MATULA_LEMMA, edge_count=8,
            counterexamples=(complete_graph(5),),
        )
        issues = consistency_issues(maximize, forcing)
        self.assertTrue(any("below the construction" in i for i in issues))
        self.assertTrue(any("counterexamples with 8 edges" in i for i in issues))

    def test_mismatched_parameters(self) -> None:
        a = SearchReport(n=6, k=2, mode=SearchMode.EXHAUSTIVE, best_graph=complete_graph(6))
        b = SearchReport(n=5, k=2, mode=SearchMode.FORCING, edge_count=8)
        self.assertEqual(len(consistency_issues(a, b)), 1)


if __name__ == "__main__":
    unittest.main()
