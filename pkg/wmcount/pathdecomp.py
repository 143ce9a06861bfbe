"""
Path decompositions: validation, width, construction from linear layouts, a layout heuristic for the sparse graphs
reaching phase three, an exact (exponential) pathwidth search for small graphs and the conversion into the
introduce/forget step sequence that drives the counting DPs.
"""

from collections import namedtuple
from enum import Enum
import logging

import networkx as nx
from networkx.utils import reverse_cuthill_mckee_ordering

from .exceptions import ContractViolation, ParseError, SizeError

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

EXACT_CAP = 16
_EXACT_CANDIDATE_LIMIT = 10
_BFS_ROOTS = 8


class Condition(Enum):
    """
    The three conditions a path decomposition has to satisfy.
    """
    VERTEX_COVERAGE = 1  # every vertex lies in some bag (and bags hold graph vertices only)
    EDGE_COVERAGE = 2  # every edge lies in some bag
    CONTIGUITY = 3  # the bags containing a vertex are consecutive


class StepKind(Enum):
    INTRODUCE = "introduce"
    FORGET = "forget"


Step = namedtuple("Step", ["kind", "vertex"])


class ValidationReport:
    """
    Outcome of validating a path decomposition against a graph. Truthy iff the decomposition is valid.

    Attributes
    ----------
    condition : Condition or None
        First violated condition, None if valid.
    witness : object
        Offending vertex (conditions 1 and 3) or edge (condition 2), None if valid.
    """

    def __init__(self, condition=None, witness=None):
        self.condition = condition
        self.witness = witness

    @property
    def ok(self):
        return self.condition is None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        return "violates condition {} ({}), witness {}".format(self.condition.value,
                                                               self.condition.name.lower().replace("_", " "),
                                                               self.witness)


class PathDecomposition:
    """
    Sequence of bags X_1..X_r.
    """

    __slots__ = ("_bags",)

    def __init__(self, bags):
        self._bags = tuple(frozenset(bag) for bag in bags)

    @property
    def bags(self):
        return self._bags

    def width(self):
        """
        max |X_i| - 1; -1 for the decomposition without bags (valid for the empty graph only).
        """
        return max((len(bag) for bag in self._bags), default=0) - 1

    def vertices(self):
        return frozenset().union(*self._bags)

    def intervals(self):
        """
        Maps every vertex to the indices (first, last) of the bags containing it.
        """
        spans = {}
        for i, bag in enumerate(self._bags):
            for v in bag:
                first, _ = spans.get(v, (i, i))
                spans[v] = (first, i)
        return spans

    def is_contiguous(self):
        return _contiguity_witness(self) is None

    def __len__(self):
        return len(self._bags)

    def __iter__(self):
        return iter(self._bags)

    def __eq__(self, other):
        if not isinstance(other, PathDecomposition):
            return NotImplemented
        return self._bags == other._bags

    def __repr__(self):
        return "PathDecomposition({})".format([sorted(bag) for bag in self._bags])


def _contiguity_witness(decomposition):
    for v, (first, last) in sorted(decomposition.intervals().items()):
        if any(v not in decomposition.bags[i] for i in range(first, last + 1)):
            return v
    return None


def validate(decomposition, graph):
    """
    Checks the three path decomposition conditions. Violations are reported as values, never raised.

    Parameters
    ----------
    decomposition : PathDecomposition
    graph : networkx.Graph

    Returns
    -------
    report : ValidationReport
    """
    covered = decomposition.vertices()
    foreign = sorted(covered.difference(graph.nodes))
    if foreign:
        return ValidationReport(Condition.VERTEX_COVERAGE, foreign[0])
    for v in sorted(graph.nodes):
        if v not in covered:
            return ValidationReport(Condition.VERTEX_COVERAGE, v)
    spans = decomposition.intervals()
    for u, v in sorted(tuple(sorted(e)) for e in graph.edges):
        lo, hi = max(spans[u][0], spans[v][0]), min(spans[u][1], spans[v][1])
        if not any(u in decomposition.bags[i] and v in decomposition.bags[i] for i in range(lo, hi + 1)):
            return ValidationReport(Condition.EDGE_COVERAGE, (u, v))
    witness = _contiguity_witness(decomposition)
    if witness is not None:
        return ValidationReport(Condition.CONTIGUITY, witness)
    return ValidationReport()


def width(decomposition):
    return decomposition.width()


def from_layout(graph, order):
    """
    Vertex-separation construction: bag i holds v_i and every earlier vertex with a neighbour at position >= i.

    Parameters
    ----------
    graph : networkx.Graph
    order : sequence
        Permutation of the vertices of the graph.

    Returns
    -------
    decomposition : PathDecomposition
    """
    order = list(order)
    if len(order) != graph.number_of_nodes() or set(order) != set(graph.nodes):
        raise ContractViolation("Layout is not a permutation of the graph's vertices")
    position = {v: i for i, v in enumerate(order)}
    # v_j stays live up to its last neighbour
    reach = {v: max([position[u] for u in graph.neighbors(v)] + [position[v]]) for v in order}
    bags = []
    live = []
    for i, v in enumerate(order):
        live = [u for u in live if reach[u] >= i]
        bags.append(frozenset(live + [v]))
        live.append(v)
    return PathDecomposition(bags)


def _separation(graph, order):
    """
    Vertex separation number of a layout, i.e. the width of from_layout(graph, order).
    """
    position = {v: i for i, v in enumerate(order)}
    reach = {v: max([position[u] for u in graph.neighbors(v)] + [position[v]]) for v in order}
    worst = -1
    open_vertices = 0
    ends = [0] * (len(order) + 2)
    for i, v in enumerate(order):
        open_vertices -= ends[i]
        worst = max(worst, open_vertices)
        if reach[v] > i:
            open_vertices += 1
            ends[reach[v] + 1] += 1
    return worst


def _component_roots(graph):
    return sorted((min(c) for c in nx.connected_components(graph)))


def _bfs_layout(graph, root):
    order = list(nx.bfs_tree(graph, root))
    seen = set(order)
    for other in _component_roots(graph):
        if other not in seen:
            part = list(nx.bfs_tree(graph, other))
            order.extend(part)
            seen.update(part)
    return order


def _greedy_layout(graph):
    """
    Repeatedly appends the vertex whose placement leaves the fewest placed vertices with unplaced neighbours.
    """
    placed = set()
    order = []
    pending = {v: graph.degree(v) for v in graph.nodes}  # unplaced neighbours per vertex
    boundary = 0
    while len(order) < graph.number_of_nodes():
        best = None
        for v in sorted(graph.nodes):
            if v in placed:
                continue
            closed = sum(1 for u in graph.neighbors(v) if u in placed and pending[u] == 1)
            growth = (1 if pending[v] > 0 else 0) - closed
            key = (boundary + growth, growth, v)
            if best is None or key < best:
                best = key
        v = best[2]
        boundary = best[0]
        placed.add(v)
        order.append(v)
        for u in graph.neighbors(v):
            pending[u] -= 1
    return order


def candidate_layouts(graph):
    """
    Layouts tried by heuristic_decompose: breadth-first orders from several low-degree roots, a reverse
    Cuthill-McKee order, a greedy minimum-growth order and, for small graphs, an optimal layout.
    """
    if graph.number_of_nodes() == 0:
        return [[]]
    layouts = []
    roots = sorted(graph.nodes, key=lambda v: (graph.degree(v), v))[:_BFS_ROOTS]
    for root in roots:
        layouts.append(_bfs_layout(graph, root))
    layouts.append(list(reverse_cuthill_mckee_ordering(graph)))
    layouts.append(_greedy_layout(graph))
    if graph.number_of_nodes() <= _EXACT_CANDIDATE_LIMIT:
        layouts.append(exact_pathwidth(graph)[1])
    return layouts


def heuristic_decompose(graph):
    """
    Builds a valid path decomposition of small width. The width is best effort; validity is guaranteed.

    Parameters
    ----------
    graph : networkx.Graph

    Returns
    -------
    decomposition : PathDecomposition
        from_layout of the candidate layout of minimum width, ties broken by the lexicographically smallest layout.
    """
    best = None
    for layout in candidate_layouts(graph):
        key = (_separation(graph, layout), tuple(layout))
        if best is None or key < best:
            best = key
    logger.debug("Heuristic layout of width {} for {} vertices".format(best[0], graph.number_of_nodes()))
    return from_layout(graph, best[1])


def exact_pathwidth(graph, cap=EXACT_CAP):
    """
    Pathwidth via the vertex separation number, by dynamic programming over vertex subsets.

    Parameters
    ----------
    graph : networkx.Graph
    cap : int
        Largest number of vertices accepted.

    Returns
    -------
    pathwidth : int
        -1 for the empty graph.
    layout : list
        A layout whose from_layout decomposition has that width.
    """
    vertices = sorted(graph.nodes)
    n = len(vertices)
    if n > cap:
        raise SizeError("Exact pathwidth refuses {} vertices (cap {})".format(n, cap))
    if n == 0:
        return -1, []
    index = {v: i for i, v in enumerate(vertices)}
    adjacency = [0] * n
    for u, v in graph.edges:
        adjacency[index[u]] |= 1 << index[v]
        adjacency[index[v]] |= 1 << index[u]

    full = (1 << n) - 1
    # boundary(S): members of S with a neighbour outside S
    boundary = [0] * (1 << n)
    for subset in range(1, 1 << n):
        outside = full & ~subset
        boundary[subset] = sum(1 for i in range(n) if subset >> i & 1 and adjacency[i] & outside)

    cost = [0] * (1 << n)
    last = [-1] * (1 << n)
    for subset in range(1, 1 << n):
        best, best_vertex = None, -1
        for i in range(n):
            if subset >> i & 1:
                rest = subset & ~(1 << i)
                value = max(cost[rest], boundary[rest])
                if best is None or value < best:
                    best, best_vertex = value, i
        cost[subset], last[subset] = best, best_vertex

    layout = []
    subset = full
    while subset:
        i = last[subset]
        layout.append(vertices[i])
        subset &= ~(1 << i)
    layout.reverse()
    return cost[full], layout


def to_nice(decomposition):
    """
    Converts a path decomposition into introduce/forget steps starting and ending at the empty bag. Between
    consecutive bags, X_i minus X_i+1 is forgotten and then X_i+1 minus X_i is introduced, both in ascending order.

    Parameters
    ----------
    decomposition : PathDecomposition

    Returns
    -------
    steps : list of Step
    """
    witness = _contiguity_witness(decomposition)
    if witness is not None:
        raise ContractViolation("Vertex {} does not occur in consecutive bags".format(witness))
    steps = []
    previous = frozenset()
    for bag in decomposition.bags + (frozenset(),):
        steps.extend(Step(StepKind.FORGET, v) for v in sorted(previous - bag))
        steps.extend(Step(StepKind.INTRODUCE, v) for v in sorted(bag - previous))
        previous = bag
    return steps


def max_live(steps):
    live = peak = 0
    for step in steps:
        live += 1 if step.kind is StepKind.INTRODUCE else -1
        peak = max(peak, live)
    return peak


def format_bags(decomposition):
    """
    Text form: one bag per line, vertex ids separated by single spaces in ascending order.
    """
    return "".join(" ".join(str(v) for v in sorted(bag)) + "\n" for bag in decomposition.bags)


def parse_bags(text):
    """
    Reads the text form written by format_bags. Trailing blank lines are ignored; any other blank line would be an
    empty bag and is rejected.

    Parameters
    ----------
    text : string

    Returns
    -------
    decomposition : PathDecomposition
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    bags = []
    for number, line in enumerate(lines, start=1):
        tokens = line.split()
        if not tokens:
            raise ParseError("empty bag", number)
        try:
            bags.append(frozenset(int(t) for t in tokens))
        except ValueError:
            raise ParseError("bag entries must be integers: {!r}".format(line.strip()), number)
    return PathDecomposition(bags)
