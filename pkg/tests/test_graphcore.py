"""Test the bitset graph type, fixtures and the graph6 / edge-list codecs."""

from __future__ import annotations

import os
import random
import sys
import tempfile
import unittest
from pathlib import Path

import networkx as nx

PROJECT_ROOT = Path(__file__).resolve().parents[1]
SRC_ROOT = PROJECT_ROOT / "src"
if str(SRC_ROOT) not in sys.path:
    sys.path.insert(0, str(SRC_ROOT))

from kcon_extremal.exceptions import GraphFormatError, InvalidGraphError, ParameterError
from kcon_extremal.graphcore import (
    EDGES,
    GRAPH6,
    Graph,
    VertexSet,
    complete_graph,
    components,
    cycle_graph,
    decode_graph_bytes,
    empty_graph,
    format_graph,
    from_edge_list,
    from_edge_list_text,
    from_graph6,
    induced,
    parse_graph,
    petersen_graph,
    read_graph,
    sniff_format,
    to_edge_list_text,
    to_graph6,
    to_networkx,
)


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


class TestGraph(unittest.TestCase):
    def test_duplicate_edges_collapse(self) -> None:
        g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
        self.assertEqual(g.m, 1)
        self.assertTrue(g.has_edge(1, 0))

    def test_self_loop_reports_the_pair(self) -> None:
        with self.assertRaises(InvalidGraphError) as ctx:
            from_edge_list(3, [(0, 1), (1, 1)])
        self.assertEqual(ctx.exception.pair, (1, 1))

    def test_out_of_range_vertex_reports_the_pair(self) -> None:
        with self.assertRaises(InvalidGraphError) as ctx:
            from_edge_list(3, [(0, 5)])
        self.assertEqual(ctx.exception.pair, (0, 5))

    def test_asymmetric_rows_are_rejected(self) -> None:
        with self.assertRaises(InvalidGraphError):
            Graph(2, (0b10, 0))

    def test_vertex_cap(self) -> None:
        with self.assertRaises(InvalidGraphError):
            empty_graph(1025)
        self.assertEqual(empty_graph(1024).n, 1024)

    def test_edges_are_lexicographic(self) -> None:
        self.assertEqual(cycle_graph(4).edges(), [(0, 1), (0, 3), (1, 2), (2, 3)])

    def test_fixtures(self) -> None:
        p = petersen_graph()
        self.assertEqual((p.n, p.m), (10, 15))
        self.assertTrue(all(p.degree(v) == 3 for v in range(10)))
        self.assertEqual(complete_graph(5).m, 10)
        self.assertEqual(empty_graph(4).m, 0)
        with self.assertRaises(ParameterError):
            cycle_graph(2)

    def test_with_and_without_edge_return_new_graphs(self) -> None:
        g = empty_graph(3)
        h = g.with_edge(0, 2)
        self.assertEqual(g.m, 0)
        self.assertEqual(h.m, 1)
        self.assertEqual(h.without_edge(2, 0), g)

    def test_induced_relabels_in_ascending_order(self) -> None:
        g = from_edge_list(5, [(0, 2), (2, 4), (1, 3)])
        sub, mapping = induced(g, VertexSet.from_iterable(5, [0, 2, 4]))
        self.assertEqual(mapping, (0, 2, 4))
        self.assertEqual(sub.edges(), [(0, 1), (1, 2)])

    def test_components_sorted_by_size_then_min_vertex(self) -> None:
        g = from_edge_list(6, [(0, 1), (2, 3), (3, 4)])
        self.assertEqual([c.members() for c in components(g)], [(5,), (0, 1), (2, 3, 4)])

    def test_induced_on_all_vertices_is_identity(self) -> None:
        for g in (petersen_graph(), cycle_graph(7), empty_graph(4), _random_graph(random.Random(5), 12, 0.4)):
            self.assertEqual(induced(g, VertexSet.full(g.n)), (g, tuple(range(g.n))))

    def test_components_partition_the_vertices(self) -> None:
        rng = random.Random(3)
        for _ in range(100):
            g = _random_graph(rng, rng.randint(1, 14), rng.choice((0.05, 0.15, 0.3)))
            parts = components(g)
            covered = 0
            for part in parts:
                self.assertTrue(part.bits)
                self.assertEqual(covered & part.bits, 0)
                covered |= part.bits
                for v in part:
                    self.assertEqual(g.adj[v] & ~part.bits, 0)
            self.assertEqual(covered, (1 << g.n) - 1)
            expected = {frozenset(c) for c in nx.connected_components(to_networkx(g))}
            self.assertEqual({frozenset(p) for p in parts}, expected)

    def test_neighbors(self) -> None:
        g = from_edge_list(5, [(0, 2), (2, 4), (1, 3)])
        self.assertEqual(g.neighbors(2).members(), (0, 4))
        self.assertEqual(g.neighbors(3), VertexSet.from_iterable(5, [1]))
        self.assertEqual(len(g.neighbors(2)), g.degree(2))


class TestVertexSet(unittest.TestCase):
    def test_set_operations(self) -> None:
        a = VertexSet.from_iterable(6, [0, 2, 4])
        b = VertexSet.from_iterable(6, [2, 3])
        self.assertEqual(a.union(b).members(), (0, 2, 3, 4))
        self.assertEqual(a.intersection(b).members(), (2,))
        self.assertEqual(a.difference(b).members(), (0, 4))
        self.assertTrue(VertexSet.from_iterable(6, [2]).issubset(b))
        self.assertIn(4, a)
        self.assertNotIn(5, a)
        self.assertEqual(len(VertexSet.full(6)), 6)
        self.assertEqual(str(b), "{2, 3}")

    def test_host_sizes_must_match(self) -> None:
        with self.assertRaises(ParameterError):
            VertexSet.empty(3).union(VertexSet.empty(4))


class TestGraph6(unittest.TestCase):
    def test_complete_graph_encoding(self) -> None:
        self.assertEqual(to_graph6(complete_graph(5)), "D~{\n")
        self.assertEqual(from_graph6("D~{\n"), complete_graph(5))

    def test_header_is_accepted(self) -> None:
        self.assertEqual(from_graph6(">>graph6<<D~{"), complete_graph(5))

    def test_petersen_survives_encoding(self) -> None:
        p = petersen_graph()
        self.assertEqual(from_graph6(to_graph6(p)), p)

    def test_large_graph_uses_long_size_prefix(self) -> None:
        g = _random_graph(random.Random(100), 100, 0.1)
        text = to_graph6(g)
        self.assertTrue(text.startswith("~?@c"))
        self.assertEqual(from_graph6(text), g)
        self.assertEqual(from_graph6(to_graph6(empty_graph(100))), empty_graph(100))

    def test_empty_or_multiple_lines_rejected(self) -> None:
        with self.assertRaises(GraphFormatError):
            from_graph6("")
        with self.assertRaises(GraphFormatError):
            from_graph6("D~{\nD~{\n")


class TestEdgeListText(unittest.TestCase):
    def test_format(self) -> None:
        self.assertEqual(to_edge_list_text(cycle_graph(3)), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n")

    def test_parse_with_comments(self) -> None:
        text = "c a path\np edge 3 2\nc middle\ne 1 2\ne 2 3\n"
        self.assertEqual(from_edge_list_text(text).edges(), [(0, 1), (1, 2)])

    def test_header_count_must_match(self) -> None:
        with self.assertRaises(GraphFormatError):
            from_edge_list_text("p edge 3 2\ne 1 2\n")

    def test_missing_header(self) -> None:
        with self.assertRaises(GraphFormatError):
            from_edge_list_text("e 1 2\n")

    def test_zero_based_vertex_is_rejected(self) -> None:
        with self.assertRaises(GraphFormatError):
            from_edge_list_text("p edge 3 1\ne 0 1\n")

    def test_non_integer_field(self) -> None:
        with self.assertRaises(GraphFormatError):
            from_edge_list_text("p edge three 1\n")


class TestFormatDispatch(unittest.TestCase):
    def test_sniff_format(self) -> None:
        self.assertEqual(sniff_format("graph.edges"), EDGES)
        self.assertEqual(sniff_format("graph.g6"), GRAPH6)
        self.assertEqual(sniff_format("-"), GRAPH6)

    def test_unknown_format(self) -> None:
        with self.assertRaises(ParameterError):
            parse_graph("D~{", "dot")
        with self.assertRaises(ParameterError):
            format_graph(complete_graph(3), "dot")

    def test_invalid_utf8_is_a_format_error(self) -> None:
        with self.assertRaises(GraphFormatError) as ctx:
            decode_graph_bytes(b"D~\xff", "stdin")
        self.assertIn("UTF-8", str(ctx.exception))
        self.assertEqual(decode_graph_bytes(b"D~{\n"), "D~{\n")
        with tempfile.TemporaryDirectory() as td:
            path = os.path.join(td, "broken.edges")
            Path(path).write_bytes(b"p edge 2 1\n1 \xfe\n")
            with self.assertRaises(GraphFormatError):
                read_graph(path)

    def test_read_graph_sniffs_extension(self) -> None:
        g = petersen_graph()
        with tempfile.TemporaryDirectory() as td:
            path = os.path.join(td, "petersen.edges")
            Path(path).write_text(format_graph(g, EDGES), encoding="utf-8")
            self.assertEqual(read_graph(path), g)
            g6_path = os.path.join(td, "petersen.g6")
            Path(g6_path).write_text(format_graph(g, GRAPH6), encoding="utf-8")
            self.assertEqual(read_graph(g6_path), g)


if __name__ == "__main__":
    unittest.main()
