"""
Structural checks on reduced formulas and on the formulas reaching phase three of the solvers. Every check returns a
StructureCheck value; nothing here raises on a failed check, the caller decides (the solver raises InvariantViolation in
paranoid mode, the command line prints a report).
"""

from collections import namedtuple
import logging

from .formula_core import Instance, assign_literal, clause_vars, degree_profile, neighborhood
from .graphs import dual_graph, max_degree
from .reduce import SMALL_PART_LIMIT, reduce_fixpoint

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

StructureCheck = namedtuple("StructureCheck", ["name", "ok", "witness"])


def _passed(name):
    return StructureCheck(name, True, None)


def check_long_clauses(formula):
    """
    No 1-clause, and every variable of a 2-clause has degree at least 2. Vacuous if an empty clause is present.
    """
    name = "2+-clauses"
    if formula.has_empty_clause():
        return _passed(name)
    degrees = degree_profile(formula).degrees
    for clause in formula.clauses:
        if len(clause) < 2:
            return StructureCheck(name, False, clause)
        if len(clause) == 2 and any(degrees[v] < 2 for v in clause_vars(clause)):
            return StructureCheck(name, False, clause)
    return _passed(name)


def check_two_clause_exclusions(formula):
    """
    For every 2-clause (a b): no other clause contains a b, -a b or a -b, and (-a -b) is not a clause.
    """
    name = "2-clause-exclusions"
    sets = [frozenset(c) for c in formula.clauses]
    for i, clause in enumerate(formula.clauses):
        if len(clause) != 2 or abs(clause[0]) == abs(clause[1]):
            continue
        a, b = clause
        forbidden = ({a, b}, {-a, b}, {a, -b})
        for j, other in enumerate(sets):
            if j == i:
                continue
            if any(f <= other for f in forbidden) or other == {-a, -b}:
                return StructureCheck(name, False, (clause, formula.clauses[j]))
    return _passed(name)


def check_two_cnf_shape(formula):
    """
    Reduced 2-CNF: only 2-clauses, every variable of degree at least 2, and n <= m.
    """
    name = "2-cnf-shape"
    profile = degree_profile(formula)
    for clause in formula.clauses:
        if len(clause) != 2:
            return StructureCheck(name, False, clause)
    for v, d in sorted(profile.degrees.items()):
        if d < 2:
            return StructureCheck(name, False, v)
    if formula.num_vars() > formula.num_clauses():
        return StructureCheck(name, False, (formula.num_vars(), formula.num_clauses()))
    return _passed(name)


def check_degree_two_separation(formula):
    """
    For every variable x, no clause contains two variables of N_2(x).
    """
    name = "n2-separation"
    degrees = degree_profile(formula).degrees
    for x in sorted(formula.variables):
        _, by_degree = neighborhood(formula, x, degrees)
        twos = by_degree.get(2, frozenset())
        for clause in formula.clauses:
            if len(clause_vars(clause) & twos) >= 2:
                return StructureCheck(name, False, (x, clause))
    return _passed(name)


def check_assignment_cleanup(formula, limit=SMALL_PART_LIMIT):
    """
    For every variable x and value b, reducing F[x=b] removes at least deg(x) clauses, i.e. no clause of x survives
    in any form. Branches that reduce to an empty clause are skipped.
    """
    name = "assignment-cleanup"
    degrees = degree_profile(formula).degrees
    for x in sorted(formula.variables):
        for lit in (x, -x):
            reduced = reduce_fixpoint(Instance(assign_literal(formula, lit)), limit).formula
            if reduced.has_empty_clause():
                continue
            if reduced.num_clauses() > formula.num_clauses() - degrees[x]:
                return StructureCheck(name, False, (lit, reduced.num_clauses()))
    return _passed(name)


def check_reduced(formula, limit=SMALL_PART_LIMIT):
    """
    Runs the structural checks that hold for every reduced formula, plus the 2-CNF ones when the formula is a 2-CNF.

    Parameters
    ----------
    formula : Formula
        A reduced formula.
    limit : int
        Small-part limit the formula was reduced with.

    Returns
    -------
    checks : list of StructureCheck
    """
    checks = [check_long_clauses(formula), check_two_clause_exclusions(formula)]
    if formula.max_width() <= 2 and not formula.has_empty_clause():
        checks.extend([check_two_cnf_shape(formula),
                       check_degree_two_separation(formula),
                       check_assignment_cleanup(formula, limit)])
    for check in checks:
        if not check.ok:
            logger.debug("Check {} failed, witness {}".format(check.name, check.witness))
    return checks


def check_phase_three_2cnf(formula):
    """
    Shape of a 2-CNF left for the primal DP: degree at most 4, every 4-variable with at most two neighbours of
    degree 4, and n_3 + 2 n_4 <= ceil(8m / 9).
    """
    profile = degree_profile(formula)
    checks = [StructureCheck("max-degree-4", profile.max_degree <= 4, profile.max_degree)]
    crowded = None
    for x in sorted(formula.variables):
        if profile.degrees[x] == 4:
            _, by_degree = neighborhood(formula, x, profile.degrees)
            if len(by_degree.get(4, ())) > 2:
                crowded = x
                break
    checks.append(StructureCheck("sparse-4-neighbourhoods", crowded is None, crowded))
    load = profile.count(3) + 2 * profile.count(4)
    bound = -(-8 * formula.num_clauses() // 9)
    checks.append(StructureCheck("degree-load", load <= bound, (load, bound)))
    return checks


def check_phase_three_3cnf(formula):
    """
    Shape of a 3-CNF left for the dual DP: degree at most 2 and a dual graph of maximum degree at most 3.
    """
    profile = degree_profile(formula)
    dual_degree = max_degree(dual_graph(formula))
    return [StructureCheck("max-degree-2", profile.max_degree <= 2, profile.max_degree),
            StructureCheck("dual-max-degree-3", dual_degree <= 3, dual_degree)]


def format_report(formula, checks):
    """
    Human-readable report printed by the check command.
    """
    profile = degree_profile(formula)
    lines = ["variables {}".format(formula.num_vars()),
             "clauses {} (2-clauses {}, 3-clauses {})".format(formula.num_clauses(), profile.m2, profile.m3),
             "degrees " + " ".join("{}:{}".format(d, c) for d, c in sorted(profile.histogram.items()))]
    for check in checks:
        status = "ok" if check.ok else "FAILED ({})".format(check.witness)
        lines.append("{} {}".format(check.name, status))
    return "\n".join(lines) + "\n"
