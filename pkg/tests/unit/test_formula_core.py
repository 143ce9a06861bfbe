from unittest import TestCase


class TestClauses(TestCase):
    def test_make_clause_orders_by_variable(self):
        from wmcount.formula_core import make_clause

        self.assertEqual(make_clause([3, -1, 2]), (-1, 2, 3))
        self.assertEqual(make_clause([2, -2]), (-2, 2))
        # duplicates survive normalisation
        self.assertEqual(make_clause([1, 1]), (1, 1))

    def test_make_clause_rejects_zero(self):
        from wmcount.formula_core import make_clause
        from wmcount.exceptions import ContractViolation

        with self.assertRaises(ContractViolation):
            make_clause([1, 0])

    def test_tautology(self):
        from wmcount.formula_core import is_tautology

        self.assertTrue(is_tautology((1, -1, 2)))
        self.assertFalse(is_tautology((1, 2, 2)))
        self.assertFalse(is_tautology(()))


class TestFormula(TestCase):
    def test_counts(self):
        from wmcount.formula_core import Formula

        formula = Formula([[1, 2], [-2, 3, 3]], variables=[1, 2, 3, 4])
        self.assertEqual(formula.num_vars(), 4)
        self.assertEqual(formula.num_clauses(), 2)
        self.assertEqual(formula.literal_count(), 5)
        self.assertEqual(formula.max_width(), 2)
        self.assertFalse(formula.is_empty())
        self.assertFalse(formula.has_empty_clause())

    def test_variables_default_to_occurring(self):
        from wmcount.formula_core import Formula

        self.assertEqual(Formula([[1, -5]]).variables, frozenset({1, 5}))
        self.assertTrue(Formula().is_empty())
        self.assertEqual(Formula().max_width(), 0)

    def test_variable_set_must_cover_clauses(self):
        from wmcount.formula_core import Formula
        from wmcount.exceptions import ContractViolation

        with self.assertRaises(ContractViolation):
            Formula([[1, 2]], variables=[1])

    def test_equality_ignores_clause_order(self):
        from wmcount.formula_core import Formula

        self.assertEqual(Formula([[1, 2], [-1, 3]]), Formula([[3, -1], [2, 1]]))
        self.assertNotEqual(Formula([[1, 2]]), Formula([[1, 2]], variables=[1, 2, 3]))

    def test_literal_index(self):
        from wmcount.formula_core import Formula

        index = Formula([[1, 2], [-1, 2], [2, 2]]).literal_index()
        self.assertEqual(index[2], [0, 1, 2])
        self.assertEqual(index[-1], [1])


class TestWeights(TestCase):
    def test_default_weight_is_one(self):
        from wmcount.formula_core import Weights

        weights = Weights({1: 3, -1: 1})
        self.assertEqual(weights.get(1), 3)
        self.assertEqual(weights.get(-1), 1)
        self.assertEqual(weights.get(7), 1)
        self.assertFalse(weights.is_unit())
        self.assertTrue(Weights({2: 1}).is_unit())

    def test_negative_weight_rejected(self):
        from wmcount.formula_core import Weights
        from wmcount.exceptions import ContractViolation

        with self.assertRaises(ContractViolation):
            Weights({1: -2})
        with self.assertRaises(ContractViolation):
            Weights({1: 1.5})

    def test_without_and_restricted(self):
        from wmcount.formula_core import Weights

        weights = Weights({1: 2, -1: 3, 2: 4})
        self.assertEqual(weights.without({1}), Weights({2: 4}))
        self.assertEqual(weights.restricted({1}), Weights({1: 2, -1: 3}))
        self.assertEqual(weights.updated({2: 5}).get(2), 5)
        self.assertEqual(weights.get(2), 4)


class TestAssignment(TestCase):
    def test_assign_literal(self):
        from wmcount.formula_core import Formula, assign_literal

        formula = Formula([[1, 2], [-1, 3], [-1]])
        self.assertEqual(assign_literal(formula, 1), Formula([[3], []], variables=[2, 3]))
        self.assertEqual(assign_literal(formula, -1), Formula([[2]], variables=[2, 3]))

    def test_assign_unknown_variable(self):
        from wmcount.formula_core import Formula, assign_literal
        from wmcount.exceptions import ContractViolation

        with self.assertRaises(ContractViolation):
            assign_literal(Formula([[1, 2]]), 3)

    def test_satisfies_and_weight(self):
        from wmcount.formula_core import Formula, Weights, assignment_weight, satisfies

        formula = Formula([[1, -2]])
        self.assertTrue(satisfies(formula, {1: 0, 2: 0}))
        self.assertFalse(satisfies(formula, {1: 0, 2: 1}))
        self.assertEqual(assignment_weight(Weights({1: 2, -2: 5}), {1: 1, 2: 0}), 10)


class TestDegrees(TestCase):
    def test_degree_profile(self):
        from wmcount.formula_core import Formula, degree_profile

        profile = degree_profile(Formula([[1, 2], [1, -3], [1, 2, 3]], variables=[1, 2, 3, 4]))
        self.assertEqual(profile.degrees, {1: 3, 2: 2, 3: 2, 4: 0})
        self.assertEqual(profile.max_degree, 3)
        self.assertEqual(profile.m2, 2)
        self.assertEqual(profile.m3, 1)
        self.assertEqual(profile.count(2), 2)
        self.assertEqual(profile.count_at_least(2), 3)

    def test_neighborhood(self):
        from wmcount.formula_core import Formula, neighborhood

        formula = Formula([[1, 2], [1, 3], [3, 4], [3, -4], [2, 4]])
        neighbors, by_degree = neighborhood(formula, 1)
        self.assertEqual(neighbors, frozenset({2, 3}))
        self.assertEqual(by_degree, {2: frozenset({2}), 3: frozenset({3})})

    def test_measure(self):
        from wmcount.formula_core import Formula, measure_mu
        from wmcount.exceptions import ConfigurationError

        formula = Formula([[1, 2, 3], [1, 2], [-1, 3]])
        self.assertAlmostEqual(measure_mu(formula, 0.5), 2.0)
        with self.assertRaises(ConfigurationError):
            measure_mu(formula, 1.0)

    def test_degrees_sum_to_clause_lengths(self):
        import numpy as np
        from wmcount.formula_core import Formula, degree_profile

        rng = np.random.default_rng(3)
        for _ in range(100):
            n = int(rng.integers(1, 10))
            clauses = [[int(v) if rng.integers(0, 2) else -int(v) for v in rng.integers(1, n + 1, size=width)]
                       for width in rng.integers(0, 4, size=int(rng.integers(0, 15)))]
            formula = Formula(clauses, range(1, n + 1))
            self.assertEqual(sum(degree_profile(formula).degrees.values()), formula.literal_count())


class TestLiterals(TestCase):
    def test_negation_is_an_involution(self):
        from wmcount.formula_core import negate, var_of

        for literal in list(range(-20, 0)) + list(range(1, 21)):
            self.assertEqual(negate(negate(literal)), literal)
            self.assertNotEqual(negate(literal), literal)
            self.assertEqual(var_of(negate(literal)), var_of(literal))
            self.assertGreater(var_of(literal), 0)
