"""
Running-time analysis helpers: branching factors of branching vectors, dominance between vectors, the lower bounds on
the measure decrease of a branch in both solvers, and the constants of the two running-time bounds.
"""

import logging
import math

from scipy.optimize import bisect, minimize_scalar

from .exceptions import ConfigurationError, ContractViolation
from .formula_core import degree_profile, neighborhood

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

DEFAULT_ALPHA = 0.6309297
ALG2_BASE = 1.1058  # worst phase-two factor of the 2-CNF solver, tau(4, 11) rounded up
ALG3_BASE = 1.4423  # worst factor of the 3-CNF solver at the default alpha
_TOLERANCE = 1e-12


def branching_factor(vector):
    """
    Largest root of f(x) = 1 - sum(x^-a_i).

    Parameters
    ----------
    vector : sequence of float
        Branching vector (a_1, ..., a_l), l >= 2, every entry positive.

    Returns
    -------
    tau : float
        The unique root above 1, found by bisection on [1 + delta, upper], where upper is found by doubling from 2
        until f(upper) >= 0.
    """
    vector = [float(a) for a in vector]
    if len(vector) < 2:
        raise ContractViolation("A branching vector needs at least two entries, got {}".format(vector))
    if any(not a > 0 for a in vector):
        raise ContractViolation("Branching vector entries must be positive, got {}".format(vector))

    def f(x):
        return 1.0 - sum(x ** -a for a in vector)

    upper = 2.0
    while f(upper) < 0:
        upper *= 2.0
        if math.isinf(upper):
            raise ContractViolation("Branching factor of {} is not representable as a float".format(vector))
    return bisect(f, 1.0 + _TOLERANCE, upper, xtol=_TOLERANCE, maxiter=500)


def not_worse(a, b):
    """
    True if branching vector a has a branching factor no larger than that of b.
    """
    return branching_factor(a) <= branching_factor(b)


def dominating_vector(total, each):
    """
    A branch pair with a_1 + a_2 >= total and a_1, a_2 >= each > 0 is not worse than (each, total - each).
    """
    if not 0 < each < total:
        raise ContractViolation("Need 0 < each < total, got each={} total={}".format(each, total))
    return (each, total - each)


def alg2_delta_bounds(formula, x):
    """
    Lower bounds on Delta_t, Delta_f = m(F) - m(R(F[x=b])) when branching on a maximum-degree variable of a reduced
    2-CNF.

    Parameters
    ----------
    formula : Formula
    x : int
        Variable with deg(x) = deg(F) = d.

    Returns
    -------
    lb_each : int
        d + |N_2(x)|, a bound on each of Delta_t and Delta_f.
    lb_sum : int or None
        2d + |N_2(x)| + ceil(sum_{2<=i<=d} (i-1)|N_i(x)| / 2) + 1 for d <= 7, None for larger d.
    """
    profile = degree_profile(formula)
    if x not in profile.degrees:
        raise ContractViolation("Variable {} is not in the formula".format(x))
    d = profile.degrees[x]
    if d != profile.max_degree:
        raise ContractViolation("Variable {} has degree {} but the formula has degree {}"
                                .format(x, d, profile.max_degree))
    _, by_degree = neighborhood(formula, x, profile.degrees)
    n2 = len(by_degree.get(2, ()))
    lb_each = d + n2
    if d > 7:
        return lb_each, None
    spread = sum((i - 1) * len(by_degree.get(i, ())) for i in range(2, d + 1))
    return lb_each, 2 * d + n2 + (spread + 1) // 2 + 1


def clause_counts_of(formula, x):
    """
    Numbers (c_2, c_3) of 2-clauses and 3-clauses containing variable x.
    """
    c2 = c3 = 0
    for clause in formula.clauses:
        if x in {abs(lit) for lit in clause}:
            if len(clause) == 2:
                c2 += 1
            elif len(clause) == 3:
                c3 += 1
    return c2, c3


def alg3_delta_bounds(formula, x, alpha=DEFAULT_ALPHA):
    """
    Lower bounds on the measure decreases mu(F) - mu(R(F[x=b])) when branching on x in a reduced 3-CNF.

    Returns
    -------
    lb_each : float
        c_2 alpha + c_3 (1 - alpha)
    lb_sum : float
        2 c_2 alpha + c_3 (2 - alpha)
    """
    _check_alpha(alpha)
    c2, c3 = clause_counts_of(formula, x)
    return c2 * alpha + c3 * (1 - alpha), 2 * c2 * alpha + c3 * (2 - alpha)


def _check_alpha(alpha):
    if not 0 < alpha < 1:
        raise ConfigurationError("alpha must lie in (0, 1), got {}".format(alpha))


def alg2_vectors():
    """
    Vectors bounding the 2-CNF branching: degree >= 8, degree 5..7, and 4-variables with three 4-neighbours.
    """
    return [(8, 8), (5, 11), (4, 11)]


def alg3_vectors(alpha=DEFAULT_ALPHA):
    """
    The vectors bounding every branch of the 3-CNF solver, one per split of three clauses into 2- and 3-clauses.
    """
    _check_alpha(alpha)
    return [(3, 3 - 3 * alpha), (2 + alpha, 2 - alpha), (1 + 2 * alpha, 1 + alpha), (3 * alpha, 3 * alpha)]


def phase_three_base(alpha=DEFAULT_ALPHA):
    """
    Base c of the c^mu running time of the dual DP phase: a dual pathwidth of m / 6 and m <= mu / alpha.
    """
    _check_alpha(alpha)
    return 2 ** (1 / (6 * alpha))


def worst_alg3_factor(alpha):
    return max(branching_factor(v) for v in alg3_vectors(alpha))


def optimal_alpha(lower=0.05, upper=0.95):
    """
    The alpha minimising the largest branching factor of the 3-CNF solver.

    Returns
    -------
    alpha : float
    factor : float
    """
    result = minimize_scalar(worst_alg3_factor, bounds=(lower, upper), method="bounded",
                             options={"xatol": 1e-10})
    logger.debug("Optimal alpha {} with factor {}".format(result.x, result.fun))
    return float(result.x), float(result.fun)


def alg2_phase_three_width(m):
    """
    Primal pathwidth bound 4m / 27 of a formula reaching the 2-CNF DP phase (up to the epsilon term).
    """
    return 4 * m / 27


def pathwidth_target(n3, n4, n5plus):
    """
    n_3 / 6 + n_4 / 3 + n_{>=5}: pathwidth achievable for large sparse graphs up to an epsilon n term.
    """
    return n3 / 6 + n4 / 3 + n5plus


def graph_pathwidth_target(graph):
    degrees = [d for _, d in graph.degree()]
    return pathwidth_target(sum(1 for d in degrees if d == 3),
                            sum(1 for d in degrees if d == 4),
                            sum(1 for d in degrees if d >= 5))


def growth_exponent(nodes, m):
    """
    log2(nodes) / m, the empirical exponent of a search tree over an m-clause input. None if undefined.
    """
    if nodes < 1 or m < 1:
        return None
    return math.log2(nodes) / m


def bound_exponent(base):
    return math.log2(base)
