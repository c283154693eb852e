"""Weighted matroid intersection by shortest cheapest augmenting paths.

Starting from the empty set, each augmentation along a shortest cheapest
source-sink path of the exchangeability graph turns an ``l``-extreme common
independent set (maximum weight among those of size ``l``) into an
``(l + 1)``-extreme one. Lex-maximal sets are maximum-weight sets under
dispersed weights, and eligible improvements are built from one augmentation
in the instance restricted to the heavier classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .core import (
    WeightClasses,
    dispersed_weights,
    lex_signature,
    weight_classes,
    weight_of,
)
from .errors import (
    AlreadyLexMaximal,
    InvalidSolution,
    NoAugmentation,
    NotDeficientAtIndex,
    NotExtremeInput,
    TooLarge,
)
from .matching import oracle_limit
from .matroid import Matroid

INTERSECTION_ORACLE_LIMIT = 12


def _ground(m1: Matroid, m2: Matroid) -> frozenset:
    if m1.ground != m2.ground:
        raise ValueError("matroids must share a ground set")
    return m1.ground


def is_common_independent(m1: Matroid, m2: Matroid, X: Iterable[int]) -> bool:
    X = frozenset(X)
    return m1.is_independent(X) and m2.is_independent(X)


def _require_common(m1, m2, X) -> frozenset:
    X = frozenset(X)
    if not is_common_independent(m1, m2, X):
        raise InvalidSolution(f"{sorted(X)} is not common independent")
    return X


@dataclass(frozen=True)
class ExchangeabilityGraph:
    """Directed bipartite graph on ``(E - I, I)``.

    ``arcs_m1`` holds ``(y, x)`` with ``I + x - y`` independent in the first
    matroid, ``arcs_m2`` holds ``(x, y)`` with ``I + x - y`` independent in the
    second. Vertex cost is ``w(e)`` inside ``I`` and ``-w(e)`` outside.
    """

    current: frozenset
    outside: frozenset
    arcs_m1: frozenset
    arcs_m2: frozenset
    sources: frozenset
    sinks: frozenset
    costs: Mapping[int, Fraction]

    def successors(self) -> dict[int, list[int]]:
        succ: dict[int, list[int]] = {v: [] for v in self.current | self.outside}
        for a, b in self.arcs_m1 | self.arcs_m2:
            succ[a].append(b)
        for v in succ:
            succ[v].sort()
        return succ

    def path_cost(self, path) -> Fraction:
        return sum((self.costs[v] for v in path), Fraction(0))


def build_exchangeability_graph(m1: Matroid, m2: Matroid, I: Iterable[int],
                                weights) -> ExchangeabilityGraph:
    ground = _ground(m1, m2)
    I = _require_common(m1, m2, I)
    outside = ground - I
    a1, a2 = set(), set()
    for x in outside:
        for y in I:
            swapped = (I - {y}) | {x}
            if m1.is_independent(swapped):
                a1.add((y, x))
            if m2.is_independent(swapped):
                a2.add((x, y))
    sources = frozenset(s for s in outside if m1.is_independent(I | {s}))
    sinks = frozenset(t for t in outside if m2.is_independent(I | {t}))
    costs = {e: (Fraction(weights[e]) if e in I else -Fraction(weights[e])) for e in ground}
    return ExchangeabilityGraph(I, frozenset(outside), frozenset(a1), frozenset(a2),
                                sources, sinks, costs)


def shortest_cheapest_path(D: ExchangeabilityGraph) -> Optional[tuple]:
    """Cheapest source-sink path, then fewest vertices, then smallest sequence.

    Returns ``None`` if no sink is reachable from a source. The search is a
    Bellman-Ford relaxation over labels ``(cost, vertex count, sequence)``;
    arcs are charged the cost of their head. If labels are still improving
    after as many rounds as there are vertices, a negative cycle exists and
    ``NotExtremeInput`` is raised.
    """
    succ = D.successors()
    label = {s: (D.costs[s], 1, (s,)) for s in D.sources}
    rounds = 0
    while True:
        changed = False
        for u in sorted(label):
            cu, hu, pu = label[u]
            for v in succ[u]:
                cand = (cu + D.costs[v], hu + 1, pu + (v,))
                if v not in label or cand < label[v]:
                    label[v] = cand
                    changed = True
        if not changed:
            break
        rounds += 1
        if rounds > len(succ):
            raise NotExtremeInput("negative-cost cycle in exchangeability graph")
    ends = [label[t] for t in D.sinks if t in label]
    if not ends:
        return None
    return min(ends)[2]


def inner_terminals(D: ExchangeabilityGraph, path) -> frozenset:
    """Sources or sinks appearing strictly inside ``path``."""
    return frozenset(v for v in path[1:-1] if v in D.sources or v in D.sinks)


def augmenting_path(m1: Matroid, m2: Matroid, weights, I: Iterable[int]):
    """``(D, path)`` for the current set ``I``; ``path`` is ``None`` if none exists."""
    D = build_exchangeability_graph(m1, m2, I, weights)
    return D, shortest_cheapest_path(D)


def augment_extreme(m1: Matroid, m2: Matroid, weights, I: Iterable[int]) -> frozenset:
    """Flip an ``l``-extreme set along a shortest cheapest path.

    The result is ``(l + 1)``-extreme. Raises ``NoAugmentation`` when no
    larger common independent set exists.
    """
    I = frozenset(I)
    _, path = augmenting_path(m1, m2, weights, I)
    if path is None:
        raise NoAugmentation(f"no augmenting path from {sorted(I)}")
    return I ^ frozenset(path)


def extreme_sets(m1: Matroid, m2: Matroid, weights) -> list[frozenset]:
    """The ``l``-extreme sets for ``l = 0, 1, ...`` up to the maximum size."""
    chain = [frozenset()]
    while True:
        try:
            chain.append(augment_extreme(m1, m2, weights, chain[-1]))
        except NoAugmentation:
            return chain


def max_weight_common_independent(m1: Matroid, m2: Matroid, weights) -> tuple[frozenset, Fraction]:
    """Maximum-weight common independent set (first size attaining the max)."""
    best, best_w = frozenset(), Fraction(0)
    for S in extreme_sets(m1, m2, weights):
        w = weight_of(S, weights)
        if w > best_w:
            best, best_w = S, w
    return best, best_w


def lex_maximal_common_independent(m1: Matroid, m2: Matroid, weights,
                                   base: int = 3) -> tuple[frozenset, tuple, Fraction]:
    """Lex-maximal common independent set, its signature and its weight."""
    ground = _ground(m1, m2)
    if not ground:
        return frozenset(), (), Fraction(0)
    classes = weight_classes({e: weights[e] for e in ground})
    X, _ = max_weight_common_independent(m1, m2, dispersed_weights(classes, base))
    return X, lex_signature(X, classes), weight_of(X, weights)


def _classes(m1, m2, weights) -> WeightClasses:
    return weight_classes({e: weights[e] for e in _ground(m1, m2)})


def smallest_deficient_index(m1: Matroid, m2: Matroid, weights,
                             X: Iterable[int]) -> Optional[int]:
    """Smallest ``i`` with ``X_{<=i}`` not lex-maximal in ``E_{<=i}``, else ``None``.

    Common independent sets are closed under subsets, so the restricted
    lex-max signature is a prefix of the full one.
    """
    X = _require_common(m1, m2, X)
    if not _ground(m1, m2):
        return None
    classes = _classes(m1, m2, weights)
    _, best, _ = lex_maximal_common_independent(m1, m2, weights)
    for i, (a, b) in enumerate(zip(lex_signature(X, classes), best), start=1):
        if a != b:
            return i
    return None


def claim3_augment(m1: Matroid, m2: Matroid, weights, X: Iterable[int], i: int) -> frozenset:
    """One augmentation of ``X_{<=i}`` inside the heavier classes.

    Uses weights ``n ** (i - j)`` on class ``j`` with ``n = |E_{<=i}|``, under
    which ``X_{<=i}`` is extreme in the restricted instance. The result
    ``Y'`` keeps every heavier class count, gains one class-``i`` element and
    its spans in both matroids contain those of ``X_{<=i}``.
    """
    X = _require_common(m1, m2, X)
    if smallest_deficient_index(m1, m2, weights, X) != i:
        raise NotDeficientAtIndex(f"{i} is not the smallest deficient index of {sorted(X)}")
    classes = _classes(m1, m2, weights)
    heavy = classes.prefix(i)
    n = len(heavy)
    aux = {e: n ** (i - classes.class_of[e]) for e in heavy}
    head, _ = classes.split(X, i)
    return augment_extreme(m1.restrict(heavy), m2.restrict(heavy), aux, head)


@dataclass(frozen=True)
class EligibleStep:
    """Record of one eligible improvement ``before -> after`` at class ``index``."""

    index: int
    before: frozenset
    after: frozenset
    augmented: frozenset
    removed: tuple
    circuits: tuple


def eligible_step(m1: Matroid, m2: Matroid, weights, X: Iterable[int]) -> EligibleStep:
    """Build an eligible set from ``Y' | X_{>i}`` by repairing each matroid.

    If the union is dependent in a matroid it holds exactly one circuit,
    which meets ``X_{>i}``; the lightest such element (ties by index) is
    removed. The first matroid is repaired before the second.
    """
    X = _require_common(m1, m2, X)
    i = smallest_deficient_index(m1, m2, weights, X)
    if i is None:
        raise AlreadyLexMaximal(f"{sorted(X)} is already lex-maximal")
    classes = _classes(m1, m2, weights)
    Yp = claim3_augment(m1, m2, weights, X, i)
    _, tail = classes.split(X, i)
    Y = Yp | tail
    removed, circuits = [], []
    for M in (m1, m2):
        C = M.find_circuit(Y)
        if C is None:
            continue
        candidates = C & tail
        if not candidates:
            raise InvalidSolution("circuit does not meet the lighter part")  # pragma: no cover
        x = min(candidates, key=lambda e: (Fraction(weights[e]), e))
        Y = Y - {x}
        removed.append(x)
        circuits.append(C)
    return EligibleStep(i, X, Y, Yp, tuple(removed), tuple(circuits))


def eligible_improvement(m1: Matroid, m2: Matroid, weights, X: Iterable[int]) -> frozenset:
    return eligible_step(m1, m2, weights, X).after


def common_independent_sets(m1: Matroid, m2: Matroid, limit: Optional[int] = None) -> list[frozenset]:
    """Every common independent set, by exhaustive search."""
    ground = sorted(_ground(m1, m2))
    limit = oracle_limit(INTERSECTION_ORACLE_LIMIT) if limit is None else limit
    if len(ground) > limit:
        raise TooLarge(f"ground size {len(ground)} exceeds oracle bound {limit}")
    out = []
    stack = [(frozenset(), 0)]
    while stack:
        S, start = stack.pop()
        out.append(S)
        for j in range(start, len(ground)):
            T = S | {ground[j]}
            if is_common_independent(m1, m2, T):
                stack.append((T, j + 1))
    return out


def brute_force_common_independent(m1: Matroid, m2: Matroid, objective: str = "max-weight",
                                   weights=None, all_optima: bool = False,
                                   size: Optional[int] = None, limit: Optional[int] = None):
    """Exhaustive optimum over common independent sets.

    ``objective`` is ``"max-weight"`` or ``"lex-max"``; ``size`` restricts the
    search to sets of that cardinality (``None`` result if there are none).
    Returns ``(solution, value)`` or ``(sorted optima, value)``.
    """
    family = common_independent_sets(m1, m2, limit)
    if size is not None:
        family = [S for S in family if len(S) == size]
        if not family:
            return ([] if all_optima else None), None
    if objective == "max-weight":
        def key(S):
            return weight_of(S, weights)
    elif objective == "lex-max":
        classes = _classes(m1, m2, weights) if m1.ground else None

        def key(S):
            return lex_signature(S, classes) if classes else ()
    else:
        raise ValueError(f"unknown objective {objective!r}")
    best_val, optima = None, []
    for S in family:
        val = key(S)
        if best_val is None or val > best_val:
            best_val, optima = val, [S]
        elif val == best_val:
            optima.append(S)
    optima.sort(key=lambda S: tuple(sorted(S)))
    return (optima if all_optima else optima[0]), best_val
