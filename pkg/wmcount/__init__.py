from .formula_core import Formula, Weights, Instance
from .oracle import brute_wmc
from .reduce import RuleId, find_applicable, apply_rule, reduce_fixpoint
from .solver import Solver, Algorithm, alg2cnf, alg3cnf
from .config import SolverConfig
from .dimacs import parse_dimacs, write_dimacs, GenSpec, generate_random
from .exceptions import WMCError, ContractViolation, ConfigurationError, SizeError, InvariantViolation, ParseError

__version__ = "0.1.0"
