from unittest import TestCase


class TestValidate(TestCase):
    def test_valid_path(self):
        import networkx as nx
        from wmcount.pathdecomp import PathDecomposition, validate

        graph = nx.path_graph([1, 2, 3])
        report = validate(PathDecomposition([{1, 2}, {2, 3}]), graph)
        self.assertTrue(report)
        self.assertIsNone(report.condition)
        self.assertEqual(str(report), "valid")

    def test_missing_vertex(self):
        import networkx as nx
        from wmcount.pathdecomp import Condition, PathDecomposition, validate

        graph = nx.path_graph([1, 2, 3])
        graph.add_node(4)
        report = validate(PathDecomposition([{1, 2}, {2, 3}]), graph)
        self.assertFalse(report)
        self.assertEqual(report.condition, Condition.VERTEX_COVERAGE)
        self.assertEqual(report.witness, 4)

    def test_missing_edge(self):
        import networkx as nx
        from wmcount.pathdecomp import Condition, PathDecomposition, validate

        graph = nx.cycle_graph([1, 2, 3])
        report = validate(PathDecomposition([{1, 2}, {2, 3}]), graph)
        self.assertEqual(report.condition, Condition.EDGE_COVERAGE)
        self.assertEqual(report.witness, (1, 3))

    def test_broken_interval(self):
        import networkx as nx
        from wmcount.pathdecomp import Condition, PathDecomposition, validate

        graph = nx.path_graph([1, 2, 3])
        decomposition = PathDecomposition([{1, 2}, {2, 3}, {1}])
        report = validate(decomposition, graph)
        self.assertEqual(report.condition, Condition.CONTIGUITY)
        self.assertEqual(report.witness, 1)
        self.assertFalse(decomposition.is_contiguous())

    def test_empty_graph(self):
        import networkx as nx
        from wmcount.pathdecomp import PathDecomposition, validate, width

        decomposition = PathDecomposition([])
        self.assertTrue(validate(decomposition, nx.Graph()))
        self.assertEqual(width(decomposition), -1)


class TestLayouts(TestCase):
    def test_from_layout(self):
        import networkx as nx
        from wmcount.pathdecomp import PathDecomposition, from_layout, validate

        graph = nx.Graph([(1, 2), (1, 3), (2, 3), (3, 4)])
        decomposition = from_layout(graph, [1, 2, 3, 4])
        self.assertEqual(decomposition, PathDecomposition([{1}, {1, 2}, {1, 2, 3}, {3, 4}]))
        self.assertTrue(validate(decomposition, graph))
        self.assertEqual(decomposition.width(), 2)

    def test_from_layout_needs_permutation(self):
        import networkx as nx
        from wmcount.pathdecomp import from_layout
        from wmcount.exceptions import ContractViolation

        with self.assertRaises(ContractViolation):
            from_layout(nx.path_graph([1, 2, 3]), [1, 2])
        with self.assertRaises(ContractViolation):
            from_layout(nx.path_graph([1, 2, 3]), [1, 2, 2])

    def test_heuristic_is_valid_and_narrow(self):
        import networkx as nx
        from wmcount.pathdecomp import heuristic_decompose, validate

        for graph in (nx.path_graph(30), nx.cycle_graph(25), nx.grid_2d_graph(3, 8),
                      nx.union(nx.path_graph([1, 2, 3]), nx.star_graph([10, 11, 12, 13]))):
            graph = nx.convert_node_labels_to_integers(graph)
            decomposition = heuristic_decompose(graph)
            self.assertTrue(validate(decomposition, graph))
        self.assertEqual(heuristic_decompose(nx.path_graph(30)).width(), 1)
        self.assertEqual(heuristic_decompose(nx.cycle_graph(25)).width(), 2)
        grid = nx.convert_node_labels_to_integers(nx.grid_2d_graph(3, 8))
        self.assertLessEqual(heuristic_decompose(grid).width(), 5)

    def test_from_layout_is_always_valid(self):
        import networkx as nx
        import numpy as np
        from wmcount.pathdecomp import from_layout, validate

        rng = np.random.default_rng(21)
        for _ in range(100):
            n = int(rng.integers(1, 13))
            graph = nx.gnp_random_graph(n, float(rng.uniform(0.1, 0.8)), seed=int(rng.integers(1 << 30)))
            order = [int(v) for v in rng.permutation(n)]
            decomposition = from_layout(graph, order)
            self.assertTrue(validate(decomposition, graph), order)

    def test_heuristic_on_degree_three_graphs(self):
        from itertools import permutations
        import networkx as nx
        import numpy as np
        from wmcount.pathdecomp import exact_pathwidth, from_layout, heuristic_decompose

        rng = np.random.default_rng(22)
        for _ in range(40):
            n = int(rng.integers(2, 9))
            graph = nx.empty_graph(n)
            for u, v in rng.integers(0, n, size=(3 * n, 2)):
                u, v = int(u), int(v)
                if u != v and graph.degree(u) < 3 and graph.degree(v) < 3:
                    graph.add_edge(u, v)
            pathwidth = exact_pathwidth(graph)[0]
            self.assertLessEqual(heuristic_decompose(graph).width(), pathwidth + 1)
            if n <= 6:
                best = min(from_layout(graph, list(order)).width() for order in permutations(range(n)))
                self.assertEqual(pathwidth, best)

    def test_heuristic_on_empty_graph(self):
        import networkx as nx
        from wmcount.pathdecomp import heuristic_decompose

        self.assertEqual(heuristic_decompose(nx.Graph()).width(), -1)

    def test_exact_pathwidth(self):
        import networkx as nx
        from wmcount.pathdecomp import exact_pathwidth, from_layout

        self.assertEqual(exact_pathwidth(nx.path_graph(6))[0], 1)
        self.assertEqual(exact_pathwidth(nx.cycle_graph(7))[0], 2)
        self.assertEqual(exact_pathwidth(nx.complete_graph(5))[0], 4)
        self.assertEqual(exact_pathwidth(nx.empty_graph(3))[0], 0)
        self.assertEqual(exact_pathwidth(nx.Graph())[0], -1)
        graph = nx.petersen_graph()
        pathwidth, layout = exact_pathwidth(graph)
        self.assertEqual(from_layout(graph, layout).width(), pathwidth)

    def test_exact_pathwidth_cap(self):
        import networkx as nx
        from wmcount.pathdecomp import exact_pathwidth
        from wmcount.exceptions import SizeError

        with self.assertRaises(SizeError):
            exact_pathwidth(nx.path_graph(8), cap=7)


class TestNiceSteps(TestCase):
    def test_forget_before_introduce(self):
        from wmcount.pathdecomp import PathDecomposition, Step, StepKind, max_live, to_nice

        steps = to_nice(PathDecomposition([{1, 2}, {2, 3}]))
        introduce, forget = StepKind.INTRODUCE, StepKind.FORGET
        self.assertEqual(steps, [Step(introduce, 1), Step(introduce, 2), Step(forget, 1), Step(introduce, 3),
                                 Step(forget, 2), Step(forget, 3)])
        self.assertEqual(max_live(steps), 2)

    def test_every_vertex_once(self):
        import networkx as nx
        from wmcount.pathdecomp import StepKind, heuristic_decompose, max_live, to_nice

        graph = nx.cycle_graph(12)
        decomposition = heuristic_decompose(graph)
        steps = to_nice(decomposition)
        for kind in StepKind:
            self.assertEqual(sorted(s.vertex for s in steps if s.kind is kind), list(range(12)))
        self.assertEqual(max_live(steps), decomposition.width() + 1)

    def test_not_contiguous(self):
        from wmcount.pathdecomp import PathDecomposition, to_nice
        from wmcount.exceptions import ContractViolation

        with self.assertRaises(ContractViolation):
            to_nice(PathDecomposition([{1}, {2}, {1}]))


class TestBagText(TestCase):
    def test_format_and_parse(self):
        from wmcount.pathdecomp import PathDecomposition, format_bags, parse_bags

        decomposition = PathDecomposition([{3, 1}, {3, 4}])
        self.assertEqual(format_bags(decomposition), "1 3\n3 4\n")
        self.assertEqual(parse_bags("1 3\n3   4\n\n"), decomposition)

    def test_parse_errors(self):
        from wmcount.pathdecomp import parse_bags
        from wmcount.exceptions import ParseError

        with self.assertRaises(ParseError) as context:
            parse_bags("1 2\n\n2 3\n")
        self.assertEqual(context.exception.line, 2)
        with self.assertRaises(ParseError) as context:
            parse_bags("1 x\n")
        self.assertEqual(context.exception.line, 1)
