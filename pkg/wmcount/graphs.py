"""
Primal and dual graphs of a formula and the connectivity queries used by the divide-and-conquer reduction rules.
"""

from collections import defaultdict
from itertools import combinations
import logging

import networkx as nx

from .formula_core import clause_vars

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)


def primal_graph(formula):
    """
    Variables as vertices; two variables are adjacent iff some clause contains both.

    Parameters
    ----------
    formula : Formula

    Returns
    -------
    graph : networkx.Graph
        Vertices are variable ids, 0-variables included.
    """
    graph = nx.Graph()
    graph.add_nodes_from(sorted(formula.variables))
    for clause in formula.clauses:
        graph.add_edges_from(combinations(sorted(clause_vars(clause)), 2))
    return graph


def dual_graph(formula):
    """
    Clauses as vertices; two clauses are adjacent iff they share a variable, whatever its polarity.

    Parameters
    ----------
    formula : Formula

    Returns
    -------
    graph : networkx.Graph
        Vertices are clause positions 0..m-1.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(formula.num_clauses()))
    holders = defaultdict(list)
    for i, clause in enumerate(formula.clauses):
        for var in clause_vars(clause):
            holders[var].append(i)
    for members in holders.values():
        graph.add_edges_from(combinations(members, 2))
    return graph


def max_degree(graph):
    return max((d for _, d in graph.degree()), default=0)


def small_component(graph, limit, allow_whole=False):
    """
    Finds a connected component with at most `limit` vertices.

    Parameters
    ----------
    graph : networkx.Graph
    limit : int
    allow_whole : bool
        If False, the component must leave a non-empty remainder of the graph. The reduction rule passes True, since
        there the remainder of the formula may consist of clauses without variables or of nothing at all.

    Returns
    -------
    component : frozenset or None
        The smallest qualifying component, ties broken by lowest vertex id.
    """
    order = graph.number_of_nodes()
    candidates = []
    for component in nx.connected_components(graph):
        if len(component) > limit:
            continue
        if not allow_whole and len(component) == order:
            continue
        candidates.append((len(component), min(component), frozenset(component)))
    if not candidates:
        return None
    return min(candidates, key=lambda c: (c[0], c[1]))[2]


def small_cut_split(graph, limit):
    """
    Finds an articulation vertex x and a side K, a component of G - x inside the component of x, such that
    |K| + 1 <= limit. The remainder of the component of x is non-empty because x is an articulation vertex.

    Parameters
    ----------
    graph : networkx.Graph
    limit : int

    Returns
    -------
    split : tuple or None
        (x, frozenset K) with the smallest K; ties broken by lowest x, then by lowest vertex of K.
    """
    best = None
    for x in sorted(nx.articulation_points(graph)):
        rest = graph.subgraph(nx.node_connected_component(graph, x) - {x})
        for side in nx.connected_components(rest):
            if len(side) + 1 > limit:
                continue
            key = (len(side), x, min(side))
            if best is None or key < best[0]:
                best = (key, x, frozenset(side))
    if best is None:
        return None
    return best[1], best[2]


def to_dot(graph, name="G", label=None):
    """
    Renders a graph in DOT format for debugging.

    Parameters
    ----------
    graph : networkx.Graph
    name : string
        Graph name in the DOT header.
    label : callable, optional
        Maps a vertex to its label; defaults to str.

    Returns
    -------
    dot : string
    """
    label = label or str
    lines = ["graph {} {{".format(name)]
    for v in sorted(graph.nodes):
        lines.append('  {} [label="{}"];'.format(v, label(v)))
    for u, v in sorted(tuple(sorted(e)) for e in graph.edges):
        lines.append("  {} -- {};".format(u, v))
    lines.append("}")
    return "\n".join(lines) + "\n"
