"""
Exhaustive weighted model counter. It is the counting step of the two divide-and-conquer reduction rules, the small
instance fallback of the solvers and the reference every other counting path is tested against.
"""

import logging

import numpy as np

from .exceptions import SizeError

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

DEFAULT_CAP = 30
_BLOCK_BITS = 12


def _block_bits(k):
    """
    Bit table of all 2^k assignments to k variables, row r holding the binary digits of r.
    """
    rows = np.arange(2 ** k, dtype=np.int64)
    return ((rows[:, None] >> np.arange(k, dtype=np.int64)) & 1).astype(bool)


def _block_weights(bits, weights, block_vars):
    """
    Exact (object dtype) weight of every row of a bit table.
    """
    product = np.ones(bits.shape[0], dtype=object)
    for j, var in enumerate(block_vars):
        choice = np.array([weights.get(-var), weights.get(var)], dtype=object)
        product = product * choice[bits[:, j].astype(np.int64)]
    return product


def brute_wmc(formula, weights, cap=DEFAULT_CAP, comm=None):
    """
    Sums the weight of every model of the formula by enumerating assignments.

    Variables that occur in no clause are not enumerated; each contributes the factor w(x) + w(-x). The remaining
    variables are split into a low block, evaluated with numpy over all of its 2^k rows at once, and a high block,
    enumerated one assignment at a time.

    Parameters
    ----------
    formula : Formula
    weights : Weights
    cap : int
        Largest n(F) accepted.
    comm : mpi4py communicator, optional
        If given, high-block assignments are distributed round-robin over the ranks and the partial sums are combined
        with comm.allreduce. Every rank returns the full count.

    Returns
    -------
    count : int
    """
    if formula.num_vars() > cap:
        raise SizeError("Brute-force counting refuses {} variables (cap {})".format(formula.num_vars(), cap))
    if formula.has_empty_clause():
        return 0

    occurring = sorted({abs(lit) for clause in formula.clauses for lit in clause})
    idle_factor = 1
    for var in sorted(formula.variables.difference(occurring)):
        idle_factor *= weights.get(var) + weights.get(-var)

    low_vars = occurring[:_BLOCK_BITS]
    high_vars = occurring[_BLOCK_BITS:]
    low_pos = {v: j for j, v in enumerate(low_vars)}
    high_pos = {v: j for j, v in enumerate(high_vars)}

    low_bits = _block_bits(len(low_vars))
    low_weights = _block_weights(low_bits, weights, low_vars)

    # per clause: literals over the high block, and the rows of the low block satisfying the clause
    clause_parts = []
    for clause in formula.clauses:
        high_lits = [(high_pos[abs(lit)], lit > 0) for lit in clause if abs(lit) in high_pos]
        low_mask = np.zeros(low_bits.shape[0], dtype=bool)
        for lit in clause:
            if abs(lit) in low_pos:
                column = low_bits[:, low_pos[abs(lit)]]
                low_mask |= column if lit > 0 else ~column
        clause_parts.append((high_lits, low_mask))

    rank, size = (comm.Get_rank(), comm.Get_size()) if comm is not None else (0, 1)
    partial = 0
    for h in range(rank, 2 ** len(high_vars), size):
        mask = np.ones(low_bits.shape[0], dtype=bool)
        for high_lits, low_mask in clause_parts:
            if any(((h >> j) & 1) == positive for j, positive in high_lits):
                continue
            mask &= low_mask
            if not mask.any():
                break
        if not mask.any():
            continue
        high_weight = 1
        for j, var in enumerate(high_vars):
            high_weight *= weights.get(var) if (h >> j) & 1 else weights.get(-var)
        partial += high_weight * int(low_weights[mask].sum())

    if comm is not None:
        partial = comm.allreduce(partial)
        logger.debug("Rank {} of {} contributed to a brute-force count".format(rank, size))
    return idle_factor * partial
