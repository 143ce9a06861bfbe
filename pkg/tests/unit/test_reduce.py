from unittest import TestCase


def total(inst):
    from wmcount.oracle import brute_wmc

    return inst.factor * brute_wmc(inst.formula, inst.weights)


class TestFindApplicable(TestCase):
    def test_priority_order(self):
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import RuleId, find_applicable

        rule, site = find_applicable(Instance(Formula([[1], [2, 2, 3], [2, -2]])))
        self.assertEqual(rule, RuleId.R1)
        self.assertEqual(site.clauses, (1,))
        rule, site = find_applicable(Instance(Formula([[1], [2, -2]])))
        self.assertEqual(rule, RuleId.R2)
        self.assertEqual(site.clauses, (1,))

    def test_subsumption_sites(self):
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import RuleId, find_applicable

        rule, site = find_applicable(Instance(Formula([[1, 2, 3], [1, 2]])))
        self.assertEqual((rule, site.clauses), (RuleId.R3, (1, 0)))
        # of two identical clauses the later one goes
        rule, site = find_applicable(Instance(Formula([[2, 1], [1, 2]])))
        self.assertEqual((rule, site.clauses), (RuleId.R3, (0, 1)))

    def test_zero_variable(self):
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import RuleId, find_applicable

        rule, site = find_applicable(Instance(Formula([[1, 2]], variables=[1, 2, 5, 3])))
        self.assertEqual((rule, site.variable), (RuleId.R5, 3))

    def test_one_complement_site(self):
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import RuleId, find_applicable

        rule, site = find_applicable(Instance(Formula([[1, 2], [1, -2, 3]])))
        self.assertEqual(rule, RuleId.R6)
        self.assertEqual(site.clauses, (0, 1))
        self.assertEqual(site.literals, (1, 2))

    def test_two_complement_site(self):
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import RuleId, find_applicable

        rule, site = find_applicable(Instance(Formula([[2, 1], [-1, -2], [1, 3, 4]])))
        self.assertEqual(rule, RuleId.R7)
        self.assertEqual(site.clauses, (0, 1))
        self.assertEqual(site.literals, (1, 2))

    def test_small_parts(self):
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import RuleId, find_applicable

        rule, site = find_applicable(Instance(Formula([[1, 2]])))
        self.assertEqual((rule, site.part), (RuleId.R8, frozenset({1, 2})))
        chain = Instance(Formula([[1, 2], [2, 3], [3, 4], [4, 5]]))
        rule, site = find_applicable(chain, limit=3)
        self.assertEqual((rule, site.variable, site.part), (RuleId.R9, 2, frozenset({1})))
        self.assertIsNone(find_applicable(chain, limit=1))

    def test_reduced(self):
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import is_reduced

        cycle = Formula([[v, v % 6 + 1] for v in range(1, 7)])
        self.assertTrue(is_reduced(Instance(cycle), limit=5))
        self.assertFalse(is_reduced(Instance(cycle), limit=6))

    def test_rule_order(self):
        from wmcount.reduce import RuleId

        self.assertEqual(sorted([RuleId.R9, RuleId.R3, RuleId.R1]), [RuleId.R1, RuleId.R3, RuleId.R9])


class TestApplyRule(TestCase):
    def test_duplicate_and_tautology(self):
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import RuleId, RuleSite, apply_rule

        inst = Instance(Formula([[1, 1, 2], [2, -2, 3]]))
        after = apply_rule(inst, RuleId.R1, RuleSite(clauses=(0,)))
        self.assertEqual(after.formula.clauses[0], (1, 2))
        after = apply_rule(after, RuleId.R2, RuleSite(clauses=(1,)))
        self.assertEqual(after.formula, Formula([[1, 2]], variables=[1, 2, 3]))

    def test_unit_clause(self):
        from wmcount.formula_core import Formula, Instance, Weights
        from wmcount.reduce import RuleId, RuleSite, apply_rule

        inst = Instance(Formula([[1], [-1, 2], [1, 3]]), Weights({1: 3, -1: 4, 2: 5}))
        after = apply_rule(inst, RuleId.R4, RuleSite(clauses=(0,)))
        self.assertEqual(after.formula, Formula([[2]], variables=[2, 3]))
        self.assertEqual(after.factor, 3)
        self.assertEqual(total(after), total(inst))

    def test_zero_variable(self):
        from wmcount.formula_core import Formula, Instance, Weights
        from wmcount.reduce import RuleId, RuleSite, apply_rule

        inst = Instance(Formula([[1, 2]], variables=[1, 2, 3]), Weights({3: 2, -3: 7}), factor=2)
        after = apply_rule(inst, RuleId.R5, RuleSite(variable=3))
        self.assertEqual(after.factor, 18)
        self.assertEqual(after.formula.variables, frozenset({1, 2}))

    def test_one_complement(self):
        from wmcount.formula_core import Formula, Instance, Weights
        from wmcount.reduce import RuleId, RuleSite, apply_rule

        inst = Instance(Formula([[1, 2], [1, -2, 3]]), Weights({1: 2, -2: 3, 3: 5}))
        after = apply_rule(inst, RuleId.R6, RuleSite(clauses=(0, 1), literals=(1, 2)))
        self.assertEqual(after.formula, Formula([[1, 2], [1, 3]]))
        self.assertEqual(total(after), total(inst))

    def test_two_complement(self):
        from wmcount.formula_core import Formula, Instance, Weights
        from wmcount.reduce import RuleId, RuleSite, apply_rule

        weights = Weights({1: 2, -1: 3, 2: 5, -2: 7})
        inst = Instance(Formula([[1, 2], [-1, -2]]), weights)
        after = apply_rule(inst, RuleId.R7, RuleSite(clauses=(0, 1), literals=(1, 2)))
        self.assertTrue(after.formula.is_empty())
        self.assertEqual(after.formula.variables, frozenset({2}))
        self.assertEqual(after.weights.get(-2), 14)
        self.assertEqual(after.weights.get(2), 15)
        self.assertEqual(total(after), 29)
        self.assertEqual(total(inst), 29)

    def test_two_complement_substitutes(self):
        from wmcount.formula_core import Formula, Instance, Weights
        from wmcount.reduce import RuleId, RuleSite, apply_rule

        inst = Instance(Formula([[1, 2], [-1, -2], [1, 3, 4], [-1, 2, 3]]), Weights({1: 2, -1: 3, 3: 4}))
        after = apply_rule(inst, RuleId.R7, RuleSite(clauses=(0, 1), literals=(1, 2)))
        # (-1 2 3) turns into (2 2 3), which is left for R1
        self.assertEqual(after.formula, Formula([[-2, 3, 4], [2, 2, 3]]))
        self.assertEqual(total(after), total(inst))

    def test_small_part(self):
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import RuleId, RuleSite, apply_rule

        inst = Instance(Formula([[1, 2], [3, 4], [4, 5], [5, 3]]))
        after = apply_rule(inst, RuleId.R8, RuleSite(part=frozenset({1, 2})))
        self.assertEqual(after.factor, 3)
        self.assertEqual(after.formula, Formula([[3, 4], [4, 5], [5, 3]]))

    def test_cut_variable(self):
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import RuleId, RuleSite, apply_rule

        inst = Instance(Formula([[1, 2], [2, 3], [3, 4], [4, 5]]))
        after = apply_rule(inst, RuleId.R9, RuleSite(variable=2, part=frozenset({1})), limit=3)
        self.assertEqual(after.formula, Formula([[2, 3], [3, 4], [4, 5]]))
        self.assertEqual(after.weights.get(2), 2)
        self.assertEqual(after.weights.get(-2), 1)
        self.assertEqual(total(after), 13)
        self.assertEqual(total(inst), 13)

    def test_inapplicable_sites(self):
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import RuleId, RuleSite, apply_rule
        from wmcount.exceptions import ContractViolation

        inst = Instance(Formula([[1, 2], [2, 3], [3, 4]]))
        for rule, site in ((RuleId.R1, RuleSite(clauses=(0,))),
                           (RuleId.R2, RuleSite(clauses=(0,))),
                           (RuleId.R3, RuleSite(clauses=(0, 1))),
                           (RuleId.R4, RuleSite(clauses=(7,))),
                           (RuleId.R5, RuleSite(variable=2)),
                           (RuleId.R6, RuleSite(clauses=(0, 1), literals=(1, 2))),
                           (RuleId.R7, RuleSite(clauses=(0, 1), literals=(1, 2))),
                           (RuleId.R8, RuleSite(part=frozenset({1, 2}))),
                           (RuleId.R9, RuleSite(variable=3, part=frozenset({4})))):
            with self.assertRaises(ContractViolation):
                apply_rule(inst, rule, site, limit=1)


class TestFixpoint(TestCase):
    def test_single_clause(self):
        from collections import Counter
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import RuleId, reduce_fixpoint

        counts = Counter()
        reduced = reduce_fixpoint(Instance(Formula([[1, 2]])), counts=counts)
        self.assertTrue(reduced.formula.is_empty())
        self.assertEqual(reduced.formula.num_vars(), 0)
        self.assertEqual(reduced.factor, 3)
        self.assertEqual(counts, Counter({RuleId.R8: 1}))

    def test_keeps_count(self):
        import numpy as np
        from wmcount.formula_core import Formula, Instance, Weights
        from wmcount.reduce import is_reduced, potential, reduce_fixpoint

        rng = np.random.default_rng(3)
        for _ in range(60):
            n = int(rng.integers(2, 13))
            clauses = []
            for _ in range(int(rng.integers(1, 2 * n))):
                size = int(rng.integers(1, 4))
                variables = rng.choice(n, size=min(size, n), replace=True) + 1
                signs = rng.integers(0, 2, size=len(variables))
                clauses.append([int(v) if s else -int(v) for v, s in zip(variables, signs)])
            weights = Weights({lit: int(rng.integers(1, 6)) for v in range(1, n + 1) for lit in (v, -v)})
            inst = Instance(Formula(clauses, range(1, n + 1)), weights)
            limit = int(rng.integers(1, 6))
            reduced = reduce_fixpoint(inst, limit)
            self.assertEqual(total(reduced), total(inst))
            self.assertTrue(is_reduced(reduced, limit))
            self.assertLessEqual(potential(reduced.formula), potential(inst.formula))

    def test_empty_clause_stops(self):
        from wmcount.formula_core import Formula, Instance
        from wmcount.reduce import reduce_fixpoint

        reduced = reduce_fixpoint(Instance(Formula([[1], [-1]])))
        self.assertTrue(reduced.formula.has_empty_clause())
        self.assertEqual(total(reduced), 0)

    def test_no_rule_increases_the_measure(self):
        from unittest.mock import patch
        import numpy as np
        from wmcount.formula_core import Formula, Instance, measure_mu
        from wmcount.reduce import apply_rule, find_applicable

        rng = np.random.default_rng(4)
        with patch("wmcount.formula_core.logger"):
            for _ in range(80):
                n = int(rng.integers(3, 11))
                clauses = []
                for _ in range(int(rng.integers(2, 3 * n))):
                    variables = rng.integers(1, n + 1, size=int(rng.integers(1, 4)))
                    clauses.append([int(v) if rng.integers(0, 2) else -int(v) for v in variables])
                inst = Instance(Formula(clauses, range(1, n + 1)))
                limit = int(rng.integers(2, 8))
                while True:
                    found = find_applicable(inst, limit)
                    if found is None:
                        break
                    before = inst.formula
                    inst = apply_rule(inst, *found, limit=limit)
                    for alpha in (0.2, 0.6309297, 0.9):
                        self.assertLessEqual(measure_mu(inst.formula, alpha), measure_mu(before, alpha) + 1e-12,
                                             found)
