"""
The nine reduction rules, their detector and the fixpoint driver.

Rules are tried in a strict priority order R1 -> R9 and every rule assumes that the rules before it are not
applicable. Each application maps an instance (F, w, W) to an instance with the same W * WMC(F, w) and a strictly
smaller potential n(F) + m(F) + L(F).
"""

from collections import Counter, namedtuple
from enum import Enum
from itertools import combinations
import logging

from .exceptions import ContractViolation
from .formula_core import Formula, assign_literal, clause_vars, degree_profile, is_tautology
from .graphs import primal_graph, small_component, small_cut_split
from .oracle import brute_wmc

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

SMALL_PART_LIMIT = 10
_SUBSET_SCAN_WIDTH = 8


class RuleId(Enum):
    """
    Reduction rules in priority order.
    """
    R1 = 1  # duplicated literals
    R2 = 2  # tautology
    R3 = 3  # subsumption
    R4 = 4  # 1-clause
    R5 = 5  # 0-variable
    R6 = 6  # (a b) and (a -b C): drop -b
    R7 = 7  # (a b) and (-a -b): a := -b
    R8 = 8  # small variable-disjoint part
    R9 = 9  # small part sharing one variable

    def __lt__(self, other):
        return self.value < other.value


RuleSite = namedtuple("RuleSite", ["clauses", "literals", "variable", "part"])
RuleSite.__new__.__defaults__ = ((), (), None, frozenset())
RuleSite.__doc__ = """
Where a rule applies.

clauses : tuple of int
    Clause positions (R1, R2, R4: the clause; R3: (subsuming, subsumed); R6, R7: (2-clause, other clause)).
literals : tuple of int
    R6, R7: (l_a, l_b) of the 2-clause.
variable : int
    R5: the 0-variable; R9: the cut variable.
part : frozenset
    R8, R9: the variables of the small side F_1 (without the cut variable).
"""


def potential(formula):
    return formula.num_vars() + formula.num_clauses() + formula.literal_count()


def _find_duplicate(formula):
    for i, clause in enumerate(formula.clauses):
        if len(set(clause)) < len(clause):
            return RuleSite(clauses=(i,))
    return None


def _find_tautology(formula):
    for i, clause in enumerate(formula.clauses):
        if is_tautology(clause):
            return RuleSite(clauses=(i,))
    return None


def _find_subsumption(formula):
    """
    First clause D (by position) subsumed by another clause C. Of two identical clauses the later one is removed.
    """
    first_seen = {}
    for i, clause in enumerate(formula.clauses):
        first_seen.setdefault(frozenset(clause), i)
    sets = [frozenset(c) for c in formula.clauses]
    for j, lits in enumerate(sets):
        if first_seen[lits] < j:
            return RuleSite(clauses=(first_seen[lits], j))
        if len(lits) <= _SUBSET_SCAN_WIDTH:
            proper = (frozenset(s) for k in range(len(lits)) for s in combinations(sorted(lits), k))
            hits = [first_seen[s] for s in proper if s in first_seen]
        else:
            hits = [i for i, other in enumerate(sets) if other < lits]
        if hits:
            return RuleSite(clauses=(min(hits), j))
    return None


def _find_unit(formula):
    for i, clause in enumerate(formula.clauses):
        if len(clause) == 1:
            return RuleSite(clauses=(i,))
    return None


def _find_zero_variable(formula):
    degrees = degree_profile(formula).degrees
    idle = sorted(v for v, d in degrees.items() if d == 0)
    if idle:
        return RuleSite(variable=idle[0])
    return None


def _two_clauses(formula):
    for i, clause in enumerate(formula.clauses):
        if len(clause) == 2 and abs(clause[0]) != abs(clause[1]):
            yield i, clause


def _find_one_complement(formula, index):
    for i, (p, q) in _two_clauses(formula):
        for la, lb in ((p, q), (q, p)):
            targets = set(index.get(la, ())) & set(index.get(-lb, ()))
            targets.discard(i)
            if targets:
                return RuleSite(clauses=(i, min(targets)), literals=(la, lb))
    return None


def _find_two_complement(formula, index):
    for i, (p, q) in _two_clauses(formula):
        for j in index.get(-p, ()):
            if j != i and sorted(formula.clauses[j]) == sorted((-p, -q)):
                la, lb = (p, q) if abs(p) < abs(q) else (q, p)
                return RuleSite(clauses=(i, j), literals=(la, lb))
    return None


def find_applicable(inst, limit=SMALL_PART_LIMIT):
    """
    Finds the lowest-numbered applicable rule.

    Parameters
    ----------
    inst : Instance
    limit : int
        Largest n(F_1) of the small side in R8 and R9.

    Returns
    -------
    found : tuple or None
        (RuleId, RuleSite), or None if the instance is reduced.
    """
    formula = inst.formula
    for rule, finder in ((RuleId.R1, _find_duplicate), (RuleId.R2, _find_tautology),
                         (RuleId.R3, _find_subsumption), (RuleId.R4, _find_unit),
                         (RuleId.R5, _find_zero_variable)):
        site = finder(formula)
        if site is not None:
            return rule, site

    index = formula.literal_index()
    site = _find_one_complement(formula, index)
    if site is not None:
        return RuleId.R6, site
    site = _find_two_complement(formula, index)
    if site is not None:
        return RuleId.R7, site

    graph = primal_graph(formula)
    part = small_component(graph, limit, allow_whole=True)
    if part is not None:
        return RuleId.R8, RuleSite(part=part)
    split = small_cut_split(graph, limit)
    if split is not None:
        return RuleId.R9, RuleSite(variable=split[0], part=split[1])
    return None


def is_reduced(inst, limit=SMALL_PART_LIMIT):
    return find_applicable(inst, limit) is None


def _clause_at(formula, site, k=0):
    try:
        return formula.clauses[site.clauses[k]]
    except IndexError:
        raise ContractViolation("Rule site refers to a missing clause: {}".format(site))


def _without_clauses(formula, positions, variables=None):
    positions = set(positions)
    kept = [c for i, c in enumerate(formula.clauses) if i not in positions]
    return Formula(kept, formula.variables if variables is None else variables)


def _replace_clause(formula, position, clause):
    clauses = list(formula.clauses)
    clauses[position] = clause
    return Formula(clauses, formula.variables)


def _split(formula, part):
    """
    Clauses touching `part` and the others.
    """
    inner, outer = [], []
    for clause in formula.clauses:
        (inner if clause_vars(clause) & part else outer).append(clause)
    return inner, outer


def _apply_r1(inst, site):
    clause = _clause_at(inst.formula, site)
    if len(set(clause)) == len(clause):
        raise ContractViolation("R1 needs a clause with a duplicated literal, got {}".format(clause))
    return inst.replace(formula=_replace_clause(inst.formula, site.clauses[0], tuple(sorted(set(clause)))))


def _apply_r2(inst, site):
    clause = _clause_at(inst.formula, site)
    if not is_tautology(clause):
        raise ContractViolation("R2 needs a tautological clause, got {}".format(clause))
    return inst.replace(formula=_without_clauses(inst.formula, site.clauses))


def _apply_r3(inst, site):
    small, large = _clause_at(inst.formula, site, 0), _clause_at(inst.formula, site, 1)
    if site.clauses[0] == site.clauses[1] or not set(small) <= set(large):
        raise ContractViolation("R3 needs two clauses C and D with C a subset of D, got {} and {}".format(small, large))
    return inst.replace(formula=_without_clauses(inst.formula, site.clauses[1:]))


def _apply_r4(inst, site):
    clause = _clause_at(inst.formula, site)
    if len(clause) != 1:
        raise ContractViolation("R4 needs a 1-clause, got {}".format(clause))
    lit = clause[0]
    return inst.replace(formula=assign_literal(inst.formula, lit),
                        weights=inst.weights.without({abs(lit)}),
                        factor=inst.factor * inst.weights.get(lit))


def _apply_r5(inst, site):
    x = site.variable
    if x not in inst.formula.variables or degree_profile(inst.formula).degrees[x] != 0:
        raise ContractViolation("R5 needs a 0-variable, got {}".format(x))
    return inst.replace(formula=Formula(inst.formula.clauses, inst.formula.variables - {x}),
                        weights=inst.weights.without({x}),
                        factor=inst.factor * (inst.weights.get(x) + inst.weights.get(-x)))


def _apply_r6(inst, site):
    la, lb = site.literals
    pair, target = _clause_at(inst.formula, site, 0), _clause_at(inst.formula, site, 1)
    if (site.clauses[0] == site.clauses[1] or len(pair) != 2 or set(pair) != {la, lb}
            or la not in target or -lb not in target):
        raise ContractViolation("R6 does not apply to {} and {}".format(pair, target))
    shortened = tuple(lit for lit in target if lit != -lb)
    return inst.replace(formula=_replace_clause(inst.formula, site.clauses[1], shortened))


def _apply_r7(inst, site):
    la, lb = site.literals
    first, second = _clause_at(inst.formula, site, 0), _clause_at(inst.formula, site, 1)
    if (site.clauses[0] == site.clauses[1] or len(first) != 2 or len(second) != 2
            or set(first) != {la, lb} or set(second) != {-la, -lb} or abs(la) == abs(lb)):
        raise ContractViolation("R7 does not apply to {} and {}".format(first, second))
    weights = inst.weights.updated({-lb: inst.weights.get(-lb) * inst.weights.get(la),
                                    lb: inst.weights.get(lb) * inst.weights.get(-la)})
    a = abs(la)
    substitute = {la: -lb, -la: lb}
    clauses = []
    for clause in inst.formula.clauses:
        if a not in clause_vars(clause):
            clauses.append(clause)
            continue
        replaced = tuple(substitute.get(lit, lit) for lit in clause)
        # R2 on the substituted clauses
        if not is_tautology(replaced):
            clauses.append(replaced)
    return inst.replace(formula=Formula(clauses, inst.formula.variables - {a}), weights=weights.without({a}))


def _apply_r8(inst, site, limit, oracle_cap):
    part = site.part
    formula = inst.formula
    inner, outer = _split(formula, part)
    if not part or not part <= formula.variables or len(part) > limit:
        raise ContractViolation("R8 needs a non-empty part of at most {} variables, got {}".format(limit, sorted(part)))
    if any(not clause_vars(c) <= part for c in inner):
        raise ContractViolation("R8 part {} shares variables with the rest of the formula".format(sorted(part)))
    count = brute_wmc(Formula(inner, part), inst.weights.restricted(part), cap=oracle_cap)
    return inst.replace(formula=Formula(outer, formula.variables - part),
                        weights=inst.weights.without(part),
                        factor=inst.factor * count)


def _apply_r9(inst, site, limit, oracle_cap):
    x, part = site.variable, site.part
    formula = inst.formula
    inner, outer = _split(formula, part)
    if x is None or x in part or not part or not part <= formula.variables or len(part) + 1 > limit:
        raise ContractViolation("R9 needs a cut variable and a small part, got {} and {}".format(x, sorted(part)))
    if any(not clause_vars(c) <= part | {x} for c in inner):
        raise ContractViolation("R9 part {} touches variables other than {}".format(sorted(part), x))
    if not any(x in clause_vars(c) for c in inner) or not any(x in clause_vars(c) for c in outer):
        raise ContractViolation("R9 needs variable {} on both sides".format(x))
    small = Formula(inner, part | {x})
    local = inst.weights.restricted(part)
    when_true = brute_wmc(assign_literal(small, x), local, cap=oracle_cap)
    when_false = brute_wmc(assign_literal(small, -x), local, cap=oracle_cap)
    weights = inst.weights.updated({x: inst.weights.get(x) * when_true,
                                    -x: inst.weights.get(-x) * when_false}).without(part)
    return inst.replace(formula=Formula(outer, formula.variables - part), weights=weights)


_SIMPLE_RULES = {
    RuleId.R1: _apply_r1,
    RuleId.R2: _apply_r2,
    RuleId.R3: _apply_r3,
    RuleId.R4: _apply_r4,
    RuleId.R5: _apply_r5,
    RuleId.R6: _apply_r6,
    RuleId.R7: _apply_r7,
}


def apply_rule(inst, rule, site, limit=SMALL_PART_LIMIT, oracle_cap=None):
    """
    Applies one rule at the given site.

    Parameters
    ----------
    inst : Instance
    rule : RuleId
    site : RuleSite
        As returned by find_applicable.
    limit : int
        Largest n(F_1) accepted by R8 and R9.
    oracle_cap : int, optional
        Cap handed to the exhaustive counter of R8 and R9; defaults to max(limit, 1).

    Returns
    -------
    inst : Instance
    """
    logger.debug("Applying {} at {}".format(rule.name, site))
    if rule in _SIMPLE_RULES:
        return _SIMPLE_RULES[rule](inst, site)
    oracle_cap = max(limit, 1) if oracle_cap is None else oracle_cap
    if rule is RuleId.R8:
        return _apply_r8(inst, site, limit, oracle_cap)
    if rule is RuleId.R9:
        return _apply_r9(inst, site, limit, oracle_cap)
    raise ContractViolation("Unknown rule {!r}".format(rule))


def reduce_fixpoint(inst, limit=SMALL_PART_LIMIT, counts=None):
    """
    Applies rules until none is applicable.

    Parameters
    ----------
    inst : Instance
    limit : int
        Largest n(F_1) of R8 and R9.
    counts : collections.Counter, optional
        Incremented per applied RuleId.

    Returns
    -------
    inst : Instance
        The reduced instance. A formula with an empty clause is returned as soon as no rule applies to it.
    """
    counts = counts if counts is not None else Counter()
    budget = potential(inst.formula)
    steps = 0
    while True:
        found = find_applicable(inst, limit)
        if found is None:
            return inst
        rule, site = found
        inst = apply_rule(inst, rule, site, limit)
        counts[rule] += 1
        steps += 1
        assert steps <= budget, "More rule applications than the initial potential {}".format(budget)
