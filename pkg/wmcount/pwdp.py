"""
Weighted model counting by dynamic programming along a path decomposition, once over the primal graph (states are
assignments of the live variables) and once over the dual graph (states are the subsets of live clauses already
satisfied by expired variables).

Both DPs walk the introduce/forget steps of the decomposition and keep one table indexed by the bits of the live
vertices. A table is a dense object-dtype numpy array with one axis of length 2 per live vertex when the decomposition
is narrow enough, and a dictionary keyed by bit tuples otherwise. Counts are Python integers in both cases.
"""

from collections import defaultdict
from enum import Enum
import logging

import numpy as np

from .exceptions import ContractViolation, InvariantViolation
from .formula_core import clause_vars, is_tautology
from .graphs import dual_graph, primal_graph
from .pathdecomp import StepKind, to_nice, validate

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

DEFAULT_BIT_BUDGET = 16


class Extension(Enum):
    DUPLICATE = 1  # the new bit takes both values with the old count
    UNSET = 2  # the new bit starts at 0


class DenseTable:
    """
    DP table as an object-dtype ndarray with one length-2 axis per live vertex, in the order the vertices went live.
    """

    def __init__(self, axes=(), data=None):
        self.axes = list(axes)
        self.data = data if data is not None else np.array(1, dtype=object)

    def _axis(self, label):
        return self.axes.index(label)

    def extend(self, label, mode):
        zeros = np.zeros(self.data.shape, dtype=object)
        upper = self.data if mode is Extension.DUPLICATE else zeros
        data = np.stack([self.data, upper], axis=-1)
        return DenseTable(self.axes + [label], np.asarray(data, dtype=object))

    def zero(self, fixed):
        """
        Sets every state agreeing with the partial assignment `fixed` (label -> bit) to 0.
        """
        index = [slice(None)] * len(self.axes)
        for label, bit in fixed.items():
            index[self._axis(label)] = bit
        data = self.data.copy()
        data[tuple(index)] = 0
        return DenseTable(self.axes, data)

    def contract(self, label, w0, w1):
        i = self._axis(label)
        data = w0 * np.take(self.data, 0, axis=i) + w1 * np.take(self.data, 1, axis=i)
        return DenseTable(self.axes[:i] + self.axes[i + 1:], np.asarray(data, dtype=object))

    def select(self, label, bit):
        i = self._axis(label)
        data = np.take(self.data, bit, axis=i)
        return DenseTable(self.axes[:i] + self.axes[i + 1:], np.asarray(data, dtype=object))

    def saturate(self, labels):
        """
        Moves the count of every state to the state with the given bits set to 1.
        """
        data = self.data
        for label in labels:
            i = self._axis(label)
            merged = np.asarray(np.take(data, 0, axis=i) + np.take(data, 1, axis=i), dtype=object)
            data = np.stack([np.zeros(merged.shape, dtype=object), merged], axis=i)
        return DenseTable(self.axes, np.asarray(data, dtype=object))

    def combine(self, other, a, b):
        """
        Returns a * self + b * other over the same axes.
        """
        assert self.axes == other.axes, "Tables over different live sets cannot be combined"
        return DenseTable(self.axes, np.asarray(a * self.data + b * other.data, dtype=object))

    def num_states(self):
        return int(self.data.size)

    def total(self):
        assert not self.axes, "Table still has live vertices {}".format(self.axes)
        return int(self.data.item())


class SparseTable:
    """
    DP table as a dictionary from bit tuples (in the order the vertices went live) to non-zero counts.
    """

    def __init__(self, axes=(), entries=None):
        self.axes = list(axes)
        self.entries = entries if entries is not None else {(): 1}

    def _axis(self, label):
        return self.axes.index(label)

    def extend(self, label, mode):
        entries = {}
        for key, count in self.entries.items():
            entries[key + (0,)] = count
            if mode is Extension.DUPLICATE:
                entries[key + (1,)] = count
        return SparseTable(self.axes + [label], entries)

    def zero(self, fixed):
        positions = [(self._axis(label), bit) for label, bit in fixed.items()]
        entries = {key: count for key, count in self.entries.items()
                   if not all(key[i] == bit for i, bit in positions)}
        return SparseTable(self.axes, entries)

    def contract(self, label, w0, w1):
        i = self._axis(label)
        entries = defaultdict(int)
        for key, count in self.entries.items():
            entries[key[:i] + key[i + 1:]] += (w1 if key[i] else w0) * count
        return SparseTable(self.axes[:i] + self.axes[i + 1:], _nonzero(entries))

    def select(self, label, bit):
        i = self._axis(label)
        entries = {key[:i] + key[i + 1:]: count for key, count in self.entries.items() if key[i] == bit}
        return SparseTable(self.axes[:i] + self.axes[i + 1:], entries)

    def saturate(self, labels):
        positions = {self._axis(label) for label in labels}
        entries = defaultdict(int)
        for key, count in self.entries.items():
            entries[tuple(1 if i in positions else b for i, b in enumerate(key))] += count
        return SparseTable(self.axes, dict(entries))

    def combine(self, other, a, b):
        assert self.axes == other.axes, "Tables over different live sets cannot be combined"
        entries = defaultdict(int)
        for key, count in self.entries.items():
            entries[key] += a * count
        for key, count in other.entries.items():
            entries[key] += b * count
        return SparseTable(self.axes, _nonzero(entries))

    def num_states(self):
        return len(self.entries)

    def total(self):
        assert not self.axes, "Table still has live vertices {}".format(self.axes)
        return self.entries.get((), 0)


def _nonzero(entries):
    return {key: count for key, count in entries.items() if count}


def _empty_table(decomposition, bit_budget):
    if decomposition.width() + 1 <= bit_budget:
        return DenseTable()
    return SparseTable()


def _checked_steps(decomposition, graph, kind):
    report = validate(decomposition, graph)
    if not report:
        raise ContractViolation("Invalid {} path decomposition: {}".format(kind, report))
    return to_nice(decomposition)


def _record(profile, table, steps, peak):
    if profile is not None:
        profile["steps"] = len(steps)
        profile["peak_states"] = peak
        profile["dense"] = isinstance(table, DenseTable)


def primal_count(formula, weights, decomposition, bit_budget=DEFAULT_BIT_BUDGET, profile=None):
    """
    Counts over a path decomposition of the primal graph.

    A clause is checked right after the step that makes its last variable live, by zeroing the states falsifying
    it. Forgetting x merges the x=0 and x=1 states, weighting them with w(-x) and w(x).

    Parameters
    ----------
    formula : Formula
    weights : Weights
    decomposition : PathDecomposition
        Over the variables of the formula; must validate against primal_graph(formula).
    bit_budget : int
        Dense tables are used when width + 1 <= bit_budget.
    profile : dict, optional
        Receives "steps", "peak_states" and "dense".

    Returns
    -------
    count : int
    """
    steps = _checked_steps(decomposition, primal_graph(formula), "primal")
    if formula.has_empty_clause():
        return 0

    holding = defaultdict(list)  # variable -> positions of the non-tautological clauses containing it
    for i, clause in enumerate(formula.clauses):
        if not is_tautology(clause):
            for var in clause_vars(clause):
                holding[var].append(i)
    checked = set()

    table = _empty_table(decomposition, bit_budget)
    live, forgotten = set(), set()
    peak = table.num_states()
    for step in steps:
        x = step.vertex
        if step.kind is StepKind.INTRODUCE:
            table = table.extend(x, Extension.DUPLICATE)
            live.add(x)
            for i in holding[x]:
                clause = formula.clauses[i]
                vs = clause_vars(clause)
                if i in checked or not vs <= live:
                    if vs & forgotten:
                        raise ContractViolation("Clause {} is not covered by any bag".format(clause))
                    continue
                # the only falsifying assignment sets every literal to false
                table = table.zero({abs(lit): 0 if lit > 0 else 1 for lit in clause})
                checked.add(i)
        else:
            table = table.contract(x, weights.get(-x), weights.get(x))
            live.discard(x)
            forgotten.add(x)
        peak = max(peak, table.num_states())

    unchecked = [c for i, c in enumerate(formula.clauses) if not is_tautology(c) and i not in checked]
    if unchecked:
        raise ContractViolation("Clauses {} are not covered by any bag".format(unchecked))
    _record(profile, table, steps, peak)
    logger.debug("Primal DP: {} steps, at most {} states".format(len(steps), peak))
    return table.total()


def dual_count(formula, weights, decomposition, bit_budget=DEFAULT_BIT_BUDGET, profile=None):
    """
    Counts over a path decomposition of the dual graph.

    Vertices are clause positions 0..m-1. Introducing a clause adds it as unsatisfied. Once the last clause of a
    variable x has been introduced, x expires: every state B moves to B + S_0 with weight w(-x) and to B + S_1 with
    weight w(x), where S_b are the live clauses satisfied by x=b. Forgetting a clause keeps the states in which it
    is satisfied. Variables without occurrences contribute the factor w(x) + w(-x).

    Parameters
    ----------
    formula : Formula
    weights : Weights
    decomposition : PathDecomposition
        Over the clause positions; must validate against dual_graph(formula).
    bit_budget : int
    profile : dict, optional
        Receives "steps", "peak_states" and "dense".

    Returns
    -------
    count : int
    """
    steps = _checked_steps(decomposition, dual_graph(formula), "dual")

    remaining = defaultdict(int)  # variable -> clauses not yet introduced
    for clause in formula.clauses:
        for var in clause_vars(clause):
            remaining[var] += 1
    factor = 1
    for var in sorted(formula.variables):
        if var not in remaining:
            factor *= weights.get(var) + weights.get(-var)

    table = _empty_table(decomposition, bit_budget)
    live = set()
    expired = set()
    peak = table.num_states()
    for step in steps:
        c = step.vertex
        clause = formula.clauses[c]
        if step.kind is StepKind.INTRODUCE:
            table = table.extend(c, Extension.UNSET)
            live.add(c)
            peak = max(peak, table.num_states())
            for x in sorted(clause_vars(clause)):
                remaining[x] -= 1
                if remaining[x]:
                    continue
                satisfied_by_true = [d for d in sorted(live) if x in formula.clauses[d]]
                satisfied_by_false = [d for d in sorted(live) if -x in formula.clauses[d]]
                table = table.saturate(satisfied_by_false).combine(table.saturate(satisfied_by_true),
                                                                   weights.get(-x), weights.get(x))
                expired.add(x)
        else:
            if not clause_vars(clause) <= expired:
                raise InvariantViolation("Clause {} forgotten before variables {} expired"
                                         .format(c, sorted(clause_vars(clause) - expired)))
            table = table.select(c, 1)
            live.discard(c)
        peak = max(peak, table.num_states())

    _record(profile, table, steps, peak)
    logger.debug("Dual DP: {} steps, at most {} states".format(len(steps), peak))
    return factor * table.total()
