"""
DIMACS CNF input and output with literal weights, and a seeded random instance generator.

Weights use the comment convention ``c p weight <literal> <weight> 0`` with positive integer weights. Literals without
a weight line weigh 1.
"""

import logging

import numpy as np

from .exceptions import ConfigurationError, ContractViolation, ParseError
from .formula_core import Formula, Instance, Weights

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)


class ParsedInput:
    """
    A parsed DIMACS file.

    Attributes
    ----------
    instance : Instance
        Formula over the variables 1..n, the weights and factor 1.
    declared_vars : int
    declared_clauses : int
    weight_lines : int
        Number of weight lines read.
    """

    def __init__(self, instance, declared_vars, declared_clauses, weight_lines):
        self.instance = instance
        self.declared_vars = declared_vars
        self.declared_clauses = declared_clauses
        self.weight_lines = weight_lines

    def is_weighted(self):
        return not self.instance.weights.is_unit()

    def __eq__(self, other):
        if not isinstance(other, ParsedInput):
            return NotImplemented
        return (self.instance.formula == other.instance.formula and self.instance.weights == other.instance.weights
                and self.declared_vars == other.declared_vars and self.declared_clauses == other.declared_clauses)


def _integer(token, what, number):
    try:
        return int(token)
    except ValueError:
        raise ParseError("{} must be an integer, got {!r}".format(what, token), number)


def _literal(token, n, number):
    lit = _integer(token, "literal", number)
    if lit != 0 and not -n <= lit <= n:
        raise ParseError("literal {} out of range for {} variables".format(lit, n), number)
    return lit


def parse_dimacs(text):
    """
    Parses DIMACS CNF with weight lines.

    Parameters
    ----------
    text : string

    Returns
    -------
    parsed : ParsedInput
    """
    header = None
    clauses = []
    current = []
    weights = {}
    weight_lines = 0
    number = 0
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        if tokens[0] == "%":
            break
        if tokens[0].startswith("c"):
            if tokens[1:3] == ["p", "weight"]:
                if header is None:
                    raise ParseError("weight line before the header", number)
                if len(tokens) not in (5, 6) or (len(tokens) == 6 and tokens[5] != "0"):
                    raise ParseError("weight lines read 'c p weight <literal> <weight> 0'", number)
                lit = _literal(tokens[3], header[0], number)
                if lit == 0:
                    raise ParseError("weight line for literal 0", number)
                value = _integer(tokens[4], "weight", number)
                if value < 1:
                    raise ParseError("weight {} of literal {} is below 1".format(value, lit), number)
                weights[lit] = value
                weight_lines += 1
            continue
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("second header", number)
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise ParseError("header must read 'p cnf <variables> <clauses>'", number)
            header = (_integer(tokens[2], "variable count", number), _integer(tokens[3], "clause count", number))
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative count in header", number)
            continue
        if header is None:
            raise ParseError("missing 'p cnf' header before the first clause", number)
        for token in tokens:
            lit = _literal(token, header[0], number)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)

    if header is None:
        raise ParseError("missing 'p cnf' header", max(number, 1))
    if current:
        clauses.append(current)
    if len(clauses) != header[1]:
        raise ParseError("header declares {} clauses, found {}".format(header[1], len(clauses)), max(number, 1))

    n, m = header
    instance = Instance(Formula(clauses, range(1, n + 1)), Weights(weights))
    logger.debug("Parsed {} variables, {} clauses, {} weight lines".format(n, m, weight_lines))
    return ParsedInput(instance, n, m, weight_lines)


def write_dimacs(instance, comments=()):
    """
    Writes an instance in the format read by parse_dimacs.

    Parameters
    ----------
    instance : Instance
        Its variables must be 1..n and its factor 1.
    comments : iterable of string
        Written as comment lines after the header.

    Returns
    -------
    text : string
    """
    formula = instance.formula
    n = max(formula.variables, default=0)
    if formula.variables != frozenset(range(1, n + 1)):
        raise ContractViolation("DIMACS output needs the variables 1..n")
    if instance.factor != 1:
        raise ContractViolation("DIMACS output cannot carry the factor {}".format(instance.factor))
    lines = ["p cnf {} {}".format(n, formula.num_clauses())]
    lines.extend("c {}".format(comment) for comment in comments)
    lines.extend("c p weight {} {} 0".format(lit, w) for lit, w in instance.weights.items())
    lines.extend(" ".join(str(lit) for lit in clause + (0,)) for clause in formula.clauses)
    return "\n".join(lines) + "\n"


class GenSpec:
    """
    Parameters of a random k-CNF instance.

    Parameters
    ----------
    n : int
        Number of variables.
    m : int
        Number of clauses.
    k : int
        Clause width, 2 or 3. Variables inside a clause are distinct.
    max_weight : int
        Literal weights are drawn uniformly from 1..max_weight; 1 means unweighted.
    seed : int
    """

    def __init__(self, n, m, k, max_weight=1, seed=0):
        if k not in (2, 3):
            raise ConfigurationError("clause width must be 2 or 3, got {}".format(k))
        if n < 0 or m < 0:
            raise ConfigurationError("variable and clause counts must be non-negative")
        if k > n:
            raise ConfigurationError("clause width {} exceeds the {} variables".format(k, n))
        if max_weight < 1:
            raise ConfigurationError("max_weight must be at least 1, got {}".format(max_weight))
        self.n = n
        self.m = m
        self.k = k
        self.max_weight = max_weight
        self.seed = seed


def random_instance(spec):
    """
    Draws the instance described by spec; the same spec always gives the same instance.
    """
    rng = np.random.default_rng(spec.seed)
    clauses = []
    for _ in range(spec.m):
        variables = rng.choice(spec.n, size=spec.k, replace=False) + 1
        signs = rng.integers(0, 2, size=spec.k)
        clauses.append([int(v) if s else -int(v) for v, s in zip(variables, signs)])
    weights = {}
    if spec.max_weight > 1:
        drawn = rng.integers(1, spec.max_weight + 1, size=(spec.n, 2))
        for v in range(1, spec.n + 1):
            weights[v] = int(drawn[v - 1, 0])
            weights[-v] = int(drawn[v - 1, 1])
    return Instance(Formula(clauses, range(1, spec.n + 1)), Weights(weights))


def generate_random(spec):
    """
    DIMACS text of random_instance(spec).
    """
    comment = "random {}-CNF n={} m={} max_weight={} seed={}".format(spec.k, spec.n, spec.m, spec.max_weight,
                                                                    spec.seed)
    return write_dimacs(random_instance(spec), comments=[comment])
