"""
Branch-and-reduce counters for 2-CNF and 3-CNF formulas.

Both drivers share one shape: reduce the instance, stop on an empty formula or an empty clause, branch on a selected
variable while one exists, and otherwise count the remaining formula with a path decomposition DP (or by enumeration
when few variables are left). Branching on x computes W_t and W_f for F[x=1] and F[x=0] with the current factor W
passed to both children and returns w(x) W_t + w(-x) W_f.
"""

from enum import Enum
import logging
import time

from .analysis import alg2_delta_bounds, alg3_delta_bounds, graph_pathwidth_target
from .config import SolverConfig
from .exceptions import ContractViolation, InvariantViolation
from .formula_core import Instance, assign_literal, degree_profile, measure_mu, neighborhood
from .graphs import dual_graph, primal_graph
from .oracle import brute_wmc
from .pathdecomp import heuristic_decompose
from .pwdp import dual_count, primal_count
from .reduce import reduce_fixpoint
from .searchstats import SearchStats
from .structure import check_phase_three_2cnf, check_phase_three_3cnf

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

BRANCH_IDENTITY_LIMIT = 14


class Algorithm(Enum):
    AUTO = "auto"
    ALG2 = "alg2"
    ALG3 = "alg3"
    BRUTE = "brute"
    PRIMAL_PW = "primal-pw"
    DUAL_PW = "dual-pw"


def _pick(candidates, tie_break):
    if not candidates:
        return None
    return max(candidates) if tie_break == "highest-id" else min(candidates)


def select_var_2cnf(formula, tie_break="lowest-id"):
    """
    Branching variable of the 2-CNF solver.

    Parameters
    ----------
    formula : Formula
        A reduced 2-CNF.
    tie_break : string
        "lowest-id" or "highest-id".

    Returns
    -------
    x : int or None
        A maximum-degree variable if deg(F) >= 5, else a 4-variable with at least three 4-neighbours, else None.
    """
    profile = degree_profile(formula)
    if profile.max_degree >= 5:
        return _pick([v for v, d in profile.degrees.items() if d == profile.max_degree], tie_break)
    crowded = []
    for v, d in profile.degrees.items():
        if d == 4:
            _, by_degree = neighborhood(formula, v, profile.degrees)
            if len(by_degree.get(4, ())) >= 3:
                crowded.append(v)
    return _pick(crowded, tie_break)


def select_var_3cnf(formula, tie_break="lowest-id"):
    """
    Branching variable of the 3-CNF solver: a maximum-degree variable if deg(F) >= 3, else None.
    """
    profile = degree_profile(formula)
    if profile.max_degree < 3:
        return None
    return _pick([v for v, d in profile.degrees.items() if d == profile.max_degree], tie_break)


class Solver:
    """
    Runs the counting algorithms with one configuration and collects SearchStats.
    """

    def __init__(self, config=None, stats=None, comm=None):
        """
        Parameters
        ----------
        config : SolverConfig, optional
        stats : SearchStats, optional
            Created on the first run if not given.
        comm : mpi4py communicator, optional
            Distributes the exhaustive counts.
        """
        self._config = config if config is not None else SolverConfig()
        self.stats = stats
        self._comm = comm

    def _start(self, algorithm, inst):
        if self.stats is None:
            self.stats = SearchStats(algorithm, inst.formula.num_clauses())
        else:
            self.stats.input_clauses = inst.formula.num_clauses()

    def _violation(self, message):
        self.stats.violations.append(message)
        if self._config.is_paranoid():
            raise InvariantViolation(message)
        logger.warning(message)

    def _reduce(self, inst):
        return reduce_fixpoint(inst, self._config.get_small_part_limit(), self.stats.rule_counts)

    def _brute(self, formula, weights):
        return brute_wmc(formula, weights, cap=self._config.get_oracle_cap(), comm=self._comm)

    def alg2cnf(self, inst):
        """
        Exact W * WMC(F, w) of a 2-CNF instance.

        Parameters
        ----------
        inst : Instance
            Its formula must have clauses of at most two distinct literals.

        Returns
        -------
        count : int
        """
        if inst.formula.max_width() > 2:
            raise ContractViolation("alg2cnf needs a 2-CNF, got clauses of width {}".format(inst.formula.max_width()))
        self._start("alg2", inst)
        return self._timed(self._alg2, inst)

    def alg3cnf(self, inst):
        """
        Exact W * WMC(F, w) of a 3-CNF instance.
        """
        if inst.formula.max_width() > 3:
            raise ContractViolation("alg3cnf needs a 3-CNF, got clauses of width {}".format(inst.formula.max_width()))
        self._start("alg3", inst)
        return self._timed(self._alg3, inst)

    def _timed(self, run, inst):
        started = time.perf_counter()
        try:
            return run(inst)
        finally:
            self.stats.wall_time += time.perf_counter() - started

    def _terminal(self, inst):
        """
        The counts of lines "F is empty" and "F contains an empty clause", None if neither applies.
        """
        if inst.formula.is_empty():
            self.stats.record_terminal("empty")
            return inst.factor
        if inst.formula.has_empty_clause():
            self.stats.record_terminal("empty-clause")
            return 0
        return None

    def _alg2(self, inst):
        inst = self._reduce(inst)
        done = self._terminal(inst)
        if done is not None:
            return done
        x = select_var_2cnf(inst.formula, self._config.get_tie_break())
        if x is None:
            return inst.factor * self._primal_phase(inst)
        lb_each, lb_sum = alg2_delta_bounds(inst.formula, x)
        return self._branch(inst, x, self._alg2, lambda f: f.num_clauses(), lb_each, lb_sum)

    def _alg3(self, inst):
        inst = self._reduce(inst)
        done = self._terminal(inst)
        if done is not None:
            return done
        x = select_var_3cnf(inst.formula, self._config.get_tie_break())
        if x is None:
            return inst.factor * self._dual_phase(inst)
        alpha = self._config.get_alpha()
        lb_each, lb_sum = alg3_delta_bounds(inst.formula, x, alpha)
        return self._branch(inst, x, self._alg3, lambda f: measure_mu(f, alpha), lb_each, lb_sum)

    def _branch(self, inst, x, recurse, measure, lb_each, lb_sum):
        """
        Branches on x. Children are reduced here so that the measure decrease of each branch can be recorded; the
        recursive call then finds them reduced.
        """
        formula, weights = inst.formula, inst.weights
        degree = degree_profile(formula).degrees[x]
        logger.debug("Branching on {} (degree {})".format(x, degree))
        before = measure(formula)
        children = []
        for lit in (x, -x):
            child = Instance(assign_literal(formula, lit), weights.without({x}), inst.factor)
            children.append(self._reduce(child))
        deltas = [before - measure(c.formula) for c in children]
        self.stats.record_branch(x, degree, deltas[0], deltas[1], lb_each, lb_sum)
        if not any(c.formula.has_empty_clause() for c in children):
            self._check_deltas(x, deltas, lb_each, lb_sum)

        when_true = self._in_child(recurse, children[0])
        when_false = self._in_child(recurse, children[1])
        result = weights.get(x) * when_true + weights.get(-x) * when_false

        if self._config.is_paranoid() and formula.num_vars() <= BRANCH_IDENTITY_LIMIT:
            expected = inst.factor * self._brute(formula, weights)
            if expected != result:
                self._violation("Branch on {} gives {} but enumeration gives {}".format(x, result, expected))
        return result

    def _in_child(self, recurse, child):
        """
        Solves one child of a branch with its own SearchStats and merges them into those of the parent.
        """
        parent = self.stats
        self.stats = SearchStats(parent.algorithm, parent.input_clauses)
        try:
            return recurse(child)
        finally:
            self.stats = parent.merge(self.stats)

    def _check_deltas(self, x, deltas, lb_each, lb_sum):
        slack = 1e-9
        if min(deltas) < lb_each - slack:
            self._violation("Branch on {}: measure decreases {} below {}".format(x, deltas, lb_each))
        if lb_sum is not None and sum(deltas) < lb_sum - slack:
            self._violation("Branch on {}: measure decreases {} sum below {}".format(x, deltas, lb_sum))

    def _check_shape(self, checks):
        for check in checks:
            if not check.ok:
                self._violation("Phase three check {} failed, witness {}".format(check.name, check.witness))

    def _record_decomposition(self, kind, graph, decomposition):
        width = decomposition.width()
        target = graph_pathwidth_target(graph)
        self.stats.record_width(kind, width, target)
        logger.info("{} decomposition of width {} (target {:.2f}) on {} vertices"
                    .format(kind.capitalize(), width, target, graph.number_of_nodes()))
        width_cap = self._config.get_width_cap()
        if width_cap is not None and width > width_cap:
            logger.warning("Decomposition width {} exceeds the configured cap {}".format(width, width_cap))

    def _primal_phase(self, inst):
        formula = inst.formula
        self._check_shape(check_phase_three_2cnf(formula))
        if formula.num_vars() <= self._config.get_brute_cap():
            self.stats.record_terminal("brute")
            return self._brute(formula, inst.weights)
        graph = primal_graph(formula)
        decomposition = heuristic_decompose(graph)
        self._record_decomposition("primal", graph, decomposition)
        self.stats.record_terminal("dp")
        return primal_count(formula, inst.weights, decomposition, self._config.get_dense_bit_budget())

    def _dual_phase(self, inst):
        formula = inst.formula
        self._check_shape(check_phase_three_3cnf(formula))
        if formula.num_vars() <= self._config.get_brute_cap():
            self.stats.record_terminal("brute")
            return self._brute(formula, inst.weights)
        graph = dual_graph(formula)
        decomposition = heuristic_decompose(graph)
        self._record_decomposition("dual", graph, decomposition)
        self.stats.record_terminal("dp")
        return dual_count(formula, inst.weights, decomposition, self._config.get_dense_bit_budget())

    def count(self, inst, algorithm=Algorithm.AUTO):
        """
        Counts with the requested algorithm.

        Parameters
        ----------
        inst : Instance
        algorithm : Algorithm
            AUTO runs alg2cnf on 2-CNF input, alg3cnf on 3-CNF input and refuses wider formulas. BRUTE, PRIMAL_PW and
            DUAL_PW count the unreduced formula directly.

        Returns
        -------
        count : int
        """
        algorithm = Algorithm(algorithm)
        formula = inst.formula
        if algorithm is Algorithm.AUTO:
            width = formula.max_width()
            if width > 3:
                raise ContractViolation("Automatic dispatch handles 2-CNF and 3-CNF only, got clause width {}"
                                        .format(width))
            algorithm = Algorithm.ALG2 if width <= 2 else Algorithm.ALG3
        if algorithm is Algorithm.ALG2:
            return self.alg2cnf(inst)
        if algorithm is Algorithm.ALG3:
            return self.alg3cnf(inst)

        self._start(algorithm.value, inst)
        started = time.perf_counter()
        if algorithm is Algorithm.BRUTE:
            result = self._brute(formula, inst.weights)
        elif algorithm is Algorithm.PRIMAL_PW:
            graph = primal_graph(formula)
            decomposition = heuristic_decompose(graph)
            self._record_decomposition("primal", graph, decomposition)
            result = primal_count(formula, inst.weights, decomposition, self._config.get_dense_bit_budget())
        else:
            graph = dual_graph(formula)
            decomposition = heuristic_decompose(graph)
            self._record_decomposition("dual", graph, decomposition)
            result = dual_count(formula, inst.weights, decomposition, self._config.get_dense_bit_budget())
        self.stats.wall_time += time.perf_counter() - started
        return inst.factor * result


def alg2cnf(inst, config=None):
    return Solver(config).alg2cnf(inst)


def alg3cnf(inst, config=None):
    return Solver(config).alg3cnf(inst)
