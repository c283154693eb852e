"""Exact maximum-weight and lex-maximal matchings in general multigraphs.

Solutions are ``frozenset``s of edge indices. All arithmetic is exact.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional

import networkx as nx

from .core import (
    WeightClasses,
    as_weight,
    dispersed_weights,
    lex_signature,
    weight_classes,
    weight_of,
)
from .errors import (
    AlreadyLexMaximal,
    InvalidSolution,
    LexoptError,
    OracleTooLarge,
    UnknownElement,
)

MATCHING_ORACLE_LIMIT = 16


def oracle_limit(default: int) -> int:
    """Brute-force size bound, overridable with ``LEXOPT_ORACLE_LIMIT``."""
    value = os.environ.get("LEXOPT_ORACLE_LIMIT")
    return int(value) if value else default


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected multigraph; edge ``e`` is ``edges[e] = (u, v, weight)``."""

    vertex_count: int
    edges: tuple = ()
    classes: WeightClasses = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = []
        for u, v, w in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) has an endpoint out of range")
            edges.append((u, v, as_weight(w)))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "classes", weight_classes(self.weights))

    @property
    def weights(self) -> tuple:
        return tuple(w for _, _, w in self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def _check_indices(graph: WeightedGraph, X: Iterable[int]) -> frozenset:
    X = frozenset(X)
    for e in X:
        if not isinstance(e, int) or not 0 <= e < graph.edge_count:
            raise UnknownElement(f"edge index {e!r} out of range")
    return X


def is_matching(graph: WeightedGraph, X: Iterable[int]) -> bool:
    seen = set()
    for e in _check_indices(graph, X):
        u, v, _ = graph.edges[e]
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def _require_matching(graph, X) -> frozenset:
    X = _check_indices(graph, X)
    if not is_matching(graph, X):
        raise InvalidSolution(f"{sorted(X)} is not a matching")
    return X


def _tiebreak_weights(weights) -> list[int]:
    # Scale to integers, shift left by m bits and add bit (m-1-e) for edge e.
    # The optimum becomes unique: it is the optimum for the original weights
    # whose sorted index sequence is lexicographically smallest.
    m = len(weights)
    weights = [Fraction(w) for w in weights]
    d = lcm(*(w.denominator for w in weights)) if weights else 1
    return [int(w * d) << m | 1 << (m - 1 - e) for e, w in enumerate(weights)]


def max_weight_matching(graph: WeightedGraph, weights=None) -> tuple[frozenset, Fraction]:
    """Maximum-weight matching and its weight.

    ``weights`` overrides the graph's own edge weights (indexed by edge).
    Among optimal matchings the one with the lexicographically smallest
    sorted edge-index sequence is returned.
    """
    if weights is None:
        weights = graph.weights
    weights = [weights[e] for e in range(graph.edge_count)]
    if not weights:
        return frozenset(), Fraction(0)
    scaled = _tiebreak_weights(weights)
    # only the heaviest of a bundle of parallel edges can be optimal
    best: dict[tuple[int, int], int] = {}
    for e, (u, v, _) in enumerate(graph.edges):
        key = (min(u, v), max(u, v))
        if key not in best or scaled[e] > scaled[best[key]]:
            best[key] = e
    G = nx.Graph()
    for (u, v), e in best.items():
        G.add_edge(u, v, weight=scaled[e])
    mate = nx.max_weight_matching(G, maxcardinality=False)
    chosen = frozenset(best[(min(u, v), max(u, v))] for u, v in mate)
    return chosen, weight_of(chosen, weights)


def lex_maximal_matching(graph: WeightedGraph, base: int = 3) -> tuple[frozenset, tuple, Fraction]:
    """Lex-maximal matching, its class signature and its weight.

    Solved as a maximum-weight matching under dispersed weights
    ``base ** (k - i)``; any base above 2 gives the same signature.
    """
    classes = graph.classes if graph.edge_count else None
    if classes is None:
        return frozenset(), (), Fraction(0)
    dw = dispersed_weights(classes, base)
    M, _ = max_weight_matching(graph, [dw[e] for e in range(graph.edge_count)])
    return M, lex_signature(M, classes), weight_of(M, graph.weights)


def iter_matchings(graph: WeightedGraph):
    """Yield every matching (including the empty one) as a frozenset."""
    edges = graph.edges

    def rec(start, used, chosen):
        yield frozenset(chosen)
        for e in range(start, len(edges)):
            u, v, _ = edges[e]
            if u in used or v in used:
                continue
            chosen.append(e)
            yield from rec(e + 1, used | {u, v}, chosen)
            chosen.pop()

    yield from rec(0, frozenset(), [])


def brute_force_matchings(graph: WeightedGraph, objective: str = "max-weight",
                          weights=None, all_optima: bool = False,
                          limit: Optional[int] = None):
    """Exhaustive optimum over all matchings.

    ``objective`` is ``"max-weight"`` (value is the weight) or ``"lex-max"``
    (value is the class signature). Returns ``(solution, value)``; with
    ``all_optima`` the first item is the sorted list of every optimum.
    A single solution is the optimum with the smallest sorted index sequence.
    """
    limit = oracle_limit(MATCHING_ORACLE_LIMIT) if limit is None else limit
    if graph.edge_count > limit:
        raise OracleTooLarge(f"{graph.edge_count} edges exceeds oracle bound {limit}")
    if weights is None:
        weights = graph.weights
    if objective == "max-weight":
        def key(X):
            return weight_of(X, weights)
    elif objective == "lex-max":
        if graph.edge_count == 0:
            return ([frozenset()] if all_optima else frozenset()), ()
        classes = graph.classes

        def key(X):
            return lex_signature(X, classes)
    else:
        raise ValueError(f"unknown objective {objective!r}")

    best_val, optima = None, []
    for X in iter_matchings(graph):
        val = key(X)
        if best_val is None or val > best_val:
            best_val, optima = val, [X]
        elif val == best_val:
            optima.append(X)
    optima.sort(key=lambda X: tuple(sorted(X)))
    return (optima if all_optima else optima[0]), best_val


def smallest_deficient_index_matching(graph: WeightedGraph, X: Iterable[int]) -> Optional[int]:
    """Smallest class index ``i`` with ``X_{<=i}`` not lex-maximal in ``E_{<=i}``.

    Returns ``None`` when ``X`` is lex-maximal. Feasible sets are closed
    under taking subsets, so the lex-max signature of the instance
    restricted to ``E_{<=i}`` is the first ``i`` entries of the full one and
    the answer is the first position where the signatures differ.
    """
    X = _require_matching(graph, X)
    if graph.edge_count == 0:
        return None
    _, best, _ = lex_maximal_matching(graph)
    mine = lex_signature(X, graph.classes)
    for i, (a, b) in enumerate(zip(mine, best), start=1):
        if a != b:
            return i
    return None


def _edge_components(graph: WeightedGraph, H: frozenset) -> list[frozenset]:
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H:
        u, v, _ = graph.edges[e]
        parent[find(u)] = find(v)
    comps: dict[int, set] = {}
    for e in H:
        comps.setdefault(find(graph.edges[e][0]), set()).add(e)
    return sorted((frozenset(c) for c in comps.values()), key=min)


def eligible_improvement_matching(graph: WeightedGraph, X: Iterable[int]) -> frozenset:
    """Eligible matching for a non-lex-maximal matching ``X``.

    With ``i`` the smallest deficient index and ``Z`` a lex-maximal
    matching, some component of ``X_{<=i} ^ Z_{<=i}`` is an alternating path
    holding one more class-``i`` edge of ``Z`` than of ``X`` and equally many
    edges of each heavier class. Flipping ``X`` along that path and dropping
    the (at most two) lighter edges of ``X`` at the path's end vertices gives
    the result. Components are scanned by smallest edge index.
    """
    X = _require_matching(graph, X)
    i = smallest_deficient_index_matching(graph, X)
    if i is None:
        raise AlreadyLexMaximal(f"{sorted(X)} is already lex-maximal")
    classes = graph.classes
    Z, _, _ = lex_maximal_matching(graph)
    X_head, X_tail = classes.split(X, i)
    Z_head, _ = classes.split(Z, i)

    for comp in _edge_components(graph, X_head ^ Z_head):
        gain = [0] * i
        for e in comp:
            gain[classes.class_of[e] - 1] += 1 if e in Z_head else -1
        if gain[i - 1] != 1 or any(gain[:i - 1]):
            continue
        degree: dict[int, int] = {}
        for e in comp:
            u, v, _ = graph.edges[e]
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        if len(degree) != len(comp) + 1:
            continue  # a cycle; cannot happen with a positive class-i gain
        ends = {v for v, d in degree.items() if d == 1}
        dropped = frozenset(e for e in X_tail
                            if graph.edges[e][0] in ends or graph.edges[e][1] in ends)
        return (X_head ^ comp) | (X_tail - dropped)
    raise LexoptError("no alternating path with a class gain found")
