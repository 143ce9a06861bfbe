"""
Instrumentation collected during one solver run.
"""

from collections import Counter
import logging

from .analysis import ALG2_BASE, ALG3_BASE, bound_exponent, growth_exponent

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

BASES = {"alg2": ALG2_BASE, "alg3": ALG3_BASE}


class SearchStats:
    """
    Search statistics consist of the branch node count, rule application counts, measured measure decreases of every
    branch, the decompositions used in phase three and the terminals that fired.

    Attributes
    ----------
    algorithm : string
        "alg2", "alg3" or another counting path name.
    nodes : int
        Number of branch nodes.
    rule_counts : collections.Counter
        RuleId -> number of applications.
    deltas : list of dict
        One entry per branch: variable, degree, measured delta_t and delta_f and the lower bounds they are held to.
    widths : list of dict
        One entry per decomposition: graph kind, width and the theoretical target width.
    terminals : collections.Counter
        "brute" / "dp" / "empty" / "empty-clause" -> count.
    violations : list of string
        Failed runtime checks (measure-decrease bounds, phase-three shape, branch identity).
    input_clauses : int
        m of the input, the reference for the growth exponent.
    wall_time : float
        Seconds, set by the caller.
    """

    def __init__(self, algorithm, input_clauses=0):
        self.algorithm = algorithm
        self.input_clauses = input_clauses
        self.nodes = 0
        self.rule_counts = Counter()
        self.deltas = []
        self.widths = []
        self.terminals = Counter()
        self.violations = []
        self.wall_time = 0.0

    def record_branch(self, variable, degree, delta_t, delta_f, lb_each, lb_sum):
        self.nodes += 1
        self.deltas.append({"variable": variable, "degree": degree, "delta_t": delta_t, "delta_f": delta_f,
                            "lb_each": lb_each, "lb_sum": lb_sum})

    def record_width(self, graph_kind, width, target):
        self.widths.append({"graph": graph_kind, "width": width, "target": target})

    def record_terminal(self, kind):
        self.terminals[kind] += 1

    def merge(self, other):
        """
        Adds the counts of another run (e.g. the other child of a branch) to this one.
        """
        self.nodes += other.nodes
        self.rule_counts.update(other.rule_counts)
        self.deltas.extend(other.deltas)
        self.widths.extend(other.widths)
        self.terminals.update(other.terminals)
        self.violations.extend(other.violations)
        return self

    def bound_ratio(self):
        """
        log2(nodes) / m of the input against the exponent of the running-time bound, None without branching.
        """
        base = BASES.get(self.algorithm)
        exponent = growth_exponent(self.nodes, self.input_clauses)
        if base is None or exponent is None:
            return None
        return {"growth_exponent": exponent, "bound_exponent": bound_exponent(base), "base": base}

    def to_dict(self):
        result = {
            "algorithm": self.algorithm,
            "nodes": self.nodes,
            "rule_counts": {rule.name: count for rule, count in sorted(self.rule_counts.items())},
            "deltas": self.deltas,
            "widths": self.widths,
            "terminal": dict(self.terminals),
            "violations": self.violations,
            "wall_time": self.wall_time,
        }
        if self.nodes >= 1:
            result["bound_ratio"] = self.bound_ratio()
        return result

    def print_stats(self):
        logger.info("{}: {} branch nodes, rules {}, terminals {}".format(
            self.algorithm, self.nodes, dict(self.rule_counts), dict(self.terminals)))
