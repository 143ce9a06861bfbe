"""
Value types for CNF formulas, literal weights and counting instances, together with the degree, neighbourhood and
measure queries the reduction rules and the solvers are phrased in.

Variables are positive integers and literals are non-zero signed integers (DIMACS convention): literal ``x`` is the
positive literal of variable ``x`` and ``-x`` its negation.
"""

from collections import Counter, defaultdict
import logging

from .exceptions import ContractViolation, ConfigurationError

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)


def negate(literal):
    return -literal


def var_of(literal):
    return abs(literal)


def make_clause(literals):
    """
    Normalises a literal collection into the clause representation: a tuple sorted by variable, negative literal
    first. Duplicated literals are kept, so that duplicate elimination stays an observable reduction step.

    Parameters
    ----------
    literals : iterable of int
        Non-zero signed integers.

    Returns
    -------
    clause : tuple of int
    """
    clause = tuple(sorted(literals, key=lambda lit: (abs(lit), lit)))
    for lit in clause:
        if not isinstance(lit, int) or lit == 0:
            raise ContractViolation("Invalid literal {!r} in clause {}".format(lit, clause))
    return clause


def clause_vars(clause):
    return frozenset(var_of(lit) for lit in clause)


def is_tautology(clause):
    lits = set(clause)
    return any(negate(lit) in lits for lit in lits)


class Formula:
    """
    Immutable CNF formula: a sequence of clauses and the set of variables it is defined over. The variable set may
    contain variables that occur in no clause (0-variables); they still count towards n(F).
    """

    __slots__ = ("_clauses", "_variables")

    def __init__(self, clauses=(), variables=None):
        """
        Parameters
        ----------
        clauses : iterable of iterable of int
            Clauses as literal collections. Order is kept; clause positions are how rule sites refer to clauses.
        variables : iterable of int, optional
            Variable set. Defaults to the variables occurring in the clauses. Must include them.
        """
        self._clauses = tuple(make_clause(c) for c in clauses)
        occurring = set()
        for clause in self._clauses:
            occurring.update(abs(lit) for lit in clause)
        if variables is None:
            self._variables = frozenset(occurring)
        else:
            self._variables = frozenset(variables)
            missing = occurring - self._variables
            if missing:
                raise ContractViolation("Clauses use variables {} outside the variable set".format(sorted(missing)))
        if any(v <= 0 for v in self._variables):
            raise ContractViolation("Variables must be positive integers")

    @property
    def clauses(self):
        return self._clauses

    @property
    def variables(self):
        return self._variables

    def num_vars(self):
        return len(self._variables)

    def num_clauses(self):
        return len(self._clauses)

    def literal_count(self):
        return sum(len(c) for c in self._clauses)

    def is_empty(self):
        """
        True if the formula has no clauses (the "F is empty" test of the solvers).
        """
        return not self._clauses

    def has_empty_clause(self):
        return any(len(c) == 0 for c in self._clauses)

    def max_width(self):
        """
        Largest number of distinct literals in a clause, 0 for a formula without clauses.
        """
        return max((len(set(c)) for c in self._clauses), default=0)

    def literal_index(self):
        """
        Maps every literal to the positions of the clauses containing it.

        Returns
        -------
        index : dict
            literal -> sorted list of clause positions (each position listed once).
        """
        index = defaultdict(list)
        for i, clause in enumerate(self._clauses):
            for lit in set(clause):
                index[lit].append(i)
        return index

    def __eq__(self, other):
        if not isinstance(other, Formula):
            return NotImplemented
        return self._variables == other._variables and sorted(self._clauses) == sorted(other._clauses)

    def __hash__(self):
        return hash((self._variables, tuple(sorted(self._clauses))))

    def __repr__(self):
        return "Formula(clauses={}, variables={})".format(list(self._clauses), sorted(self._variables))


class Weights:
    """
    Literal weight function. Literals without an explicit entry weigh 1. Weights are non-negative Python integers;
    zeros only appear through the cut-vertex rule.
    """

    __slots__ = ("_w",)

    def __init__(self, mapping=None):
        self._w = {}
        for lit, value in (mapping or {}).items():
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ContractViolation("Weight of literal {} must be a non-negative integer, got {!r}"
                                        .format(lit, value))
            if value != 1:
                self._w[lit] = value

    def get(self, literal):
        return self._w.get(literal, 1)

    def updated(self, changes):
        """
        Returns a copy with the given literal weights replaced.
        """
        merged = dict(self._w)
        merged.update(changes)
        return Weights(merged)

    def without(self, variables):
        """
        Returns a copy without entries for the literals of the given variables.
        """
        variables = set(variables)
        return Weights({lit: w for lit, w in self._w.items() if abs(lit) not in variables})

    def restricted(self, variables):
        variables = set(variables)
        return Weights({lit: w for lit, w in self._w.items() if abs(lit) in variables})

    def is_unit(self):
        return not self._w

    def items(self):
        return sorted(self._w.items(), key=lambda item: (abs(item[0]), -item[0]))

    def __eq__(self, other):
        if not isinstance(other, Weights):
            return NotImplemented
        return self._w == other._w

    def __repr__(self):
        return "Weights({})".format(dict(self.items()))


class Instance:
    """
    Counting instance (F, w, W) whose answer is W * WMC(F, w).
    """

    __slots__ = ("formula", "weights", "factor")

    def __init__(self, formula, weights=None, factor=1):
        if factor < 0:
            raise ContractViolation("Instance factor must be non-negative")
        self.formula = formula
        self.weights = weights if weights is not None else Weights()
        self.factor = factor

    def replace(self, formula=None, weights=None, factor=None):
        return Instance(self.formula if formula is None else formula,
                        self.weights if weights is None else weights,
                        self.factor if factor is None else factor)

    def __repr__(self):
        return "Instance({!r}, {!r}, W={})".format(self.formula, self.weights, self.factor)


def satisfies(formula, assignment):
    """
    Checks whether a total assignment (dict variable -> 0/1) is a model of the formula.
    """
    for clause in formula.clauses:
        if not any(assignment[abs(lit)] == (1 if lit > 0 else 0) for lit in clause):
            return False
    return True


def assignment_weight(weights, assignment):
    product = 1
    for var, value in assignment.items():
        product *= weights.get(var if value else -var)
    return product


def assign_literal(formula, literal):
    """
    Computes F[literal=1]: clauses containing the literal are removed, the complementary literal is deleted from the
    remaining clauses and the variable leaves the variable set. Clauses that lose their last literal stay as empty
    clauses; variables that no longer occur stay in the variable set.

    Parameters
    ----------
    formula : Formula
    literal : int

    Returns
    -------
    formula : Formula
    """
    var = var_of(literal)
    if var not in formula.variables:
        raise ContractViolation("Cannot assign literal {}: variable {} is not in the formula".format(literal, var))
    clauses = []
    for clause in formula.clauses:
        if literal in clause:
            continue
        clauses.append(tuple(lit for lit in clause if lit != negate(literal)))
    return Formula(clauses, formula.variables - {var})


class DegreeProfile:
    """
    Degrees and clause-length statistics of a formula.

    Attributes
    ----------
    degrees : dict
        variable -> number of literal occurrences (0-variables included).
    histogram : collections.Counter
        degree -> number of variables with that degree.
    max_degree : int
        deg(F), 0 for a formula without variables.
    lengths : collections.Counter
        clause length -> number of clauses with that length.
    """

    def __init__(self, degrees, lengths):
        self.degrees = degrees
        self.histogram = Counter(degrees.values())
        self.max_degree = max(degrees.values(), default=0)
        self.lengths = lengths

    @property
    def m2(self):
        return self.lengths.get(2, 0)

    @property
    def m3(self):
        return self.lengths.get(3, 0)

    def count(self, degree):
        return self.histogram.get(degree, 0)

    def count_at_least(self, degree):
        return sum(c for d, c in self.histogram.items() if d >= degree)


def degree_profile(formula):
    degrees = {v: 0 for v in formula.variables}
    lengths = Counter()
    for clause in formula.clauses:
        lengths[len(clause)] += 1
        for lit in clause:
            degrees[var_of(lit)] += 1
    return DegreeProfile(degrees, lengths)


def neighborhood(formula, var, degrees=None):
    """
    Neighbours of a variable and their partition by degree.

    Parameters
    ----------
    formula : Formula
    var : int
    degrees : dict, optional
        Precomputed degrees of the formula.

    Returns
    -------
    neighbors : frozenset
        Variables sharing a clause with var, var excluded.
    by_degree : dict
        degree i -> frozenset N_i(var); only non-empty classes are present.
    """
    if var not in formula.variables:
        raise ContractViolation("Variable {} is not in the formula".format(var))
    if degrees is None:
        degrees = degree_profile(formula).degrees
    neighbors = set()
    for clause in formula.clauses:
        vs = clause_vars(clause)
        if var in vs:
            neighbors.update(vs)
    neighbors.discard(var)
    by_degree = defaultdict(set)
    for y in neighbors:
        by_degree[degrees[y]].add(y)
    return frozenset(neighbors), {d: frozenset(ys) for d, ys in by_degree.items()}


def measure_mu(formula, alpha):
    """
    Evaluates the measure m3(F) + alpha * m2(F).

    Parameters
    ----------
    formula : Formula
    alpha : float
        Weight of 2-clauses, strictly between 0 and 1.

    Returns
    -------
    mu : float
    """
    if not 0 < alpha < 1:
        raise ConfigurationError("alpha must lie in (0, 1), got {}".format(alpha))
    lengths = degree_profile(formula).lengths
    if lengths.get(1, 0):
        logger.warning("Measure evaluated on a formula with {} 1-clauses; they contribute 0".format(lengths[1]))
    return lengths.get(3, 0) + alpha * lengths.get(2, 0)
