from unittest import TestCase


class TestSearchStats(TestCase):
    def test_to_dict_without_branching(self):
        from wmcount.searchstats import SearchStats

        stats = SearchStats("alg2", input_clauses=10)
        stats.record_terminal("brute")
        document = stats.to_dict()
        self.assertEqual(document["nodes"], 0)
        self.assertEqual(document["terminal"], {"brute": 1})
        self.assertNotIn("bound_ratio", document)

    def test_bound_ratio(self):
        from wmcount.analysis import ALG3_BASE, bound_exponent
        from wmcount.searchstats import SearchStats

        stats = SearchStats("alg3", input_clauses=4)
        for variable in range(1, 5):
            stats.record_branch(variable, 3, 1.5, 2.0, 1.1, 2.7)
        ratio = stats.to_dict()["bound_ratio"]
        self.assertAlmostEqual(ratio["growth_exponent"], 0.5)
        self.assertAlmostEqual(ratio["bound_exponent"], bound_exponent(ALG3_BASE))
        self.assertIsNone(SearchStats("brute", 4).bound_ratio())

    def test_rule_counts_by_name(self):
        from wmcount.reduce import RuleId
        from wmcount.searchstats import SearchStats

        stats = SearchStats("alg2")
        stats.rule_counts[RuleId.R8] += 2
        stats.rule_counts[RuleId.R4] += 1
        self.assertEqual(list(stats.to_dict()["rule_counts"].items()), [("R4", 1), ("R8", 2)])

    def test_merge(self):
        from wmcount.searchstats import SearchStats

        first, second = SearchStats("alg3"), SearchStats("alg3")
        first.record_branch(1, 3, 1.0, 1.0, 0.5, 1.5)
        second.record_branch(2, 3, 1.0, 1.0, 0.5, 1.5)
        second.record_width("dual", 2, 1.5)
        second.violations.append("something")
        first.merge(second)
        self.assertEqual(first.nodes, 2)
        self.assertEqual(len(first.deltas), 2)
        self.assertEqual(first.widths, [{"graph": "dual", "width": 2, "target": 1.5}])
        self.assertEqual(first.violations, ["something"])

    def test_merge_is_associative(self):
        from wmcount.reduce import RuleId
        from wmcount.searchstats import SearchStats

        def filled(seed):
            stats = SearchStats("alg2")
            stats.record_branch(seed, 5, 5, 11, 5, 16)
            stats.rule_counts[RuleId(seed)] += seed
            stats.record_terminal("dp" if seed % 2 else "brute")
            return stats

        left = filled(1).merge(filled(2)).merge(filled(3))
        right = filled(1).merge(filled(2).merge(filled(3)))
        self.assertEqual(left.to_dict(), right.to_dict())
        self.assertEqual(left.nodes, 3)
        self.assertEqual(left.terminals, {"dp": 2, "brute": 1})

    def test_print_stats(self):
        from wmcount.searchstats import SearchStats

        stats = SearchStats("alg3")
        stats.record_terminal("empty")
        with self.assertLogs("wmcount.searchstats", level="INFO") as logs:
            stats.print_stats()
        self.assertEqual(len(logs.output), 1)
        self.assertIn("alg3: 0 branch nodes", logs.output[0])
