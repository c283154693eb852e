"""Matroids given by an independence oracle.

``is_independent`` is the only query a matroid has to answer; rank, span and
circuits are derived from it. Concrete families cover the instances the
harness generates: uniform, partition, graphic, linear (over the rationals)
and explicit independent-set families.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import TooLarge, UnknownElement

AXIOM_LIMIT = 12


class Matroid:
    """Base class. Subclasses implement ``_independent`` on validated sets."""

    kind = "abstract"

    def __init__(self, ground: Iterable[int]):
        self._ground = frozenset(ground)
        self._cache: dict[frozenset, bool] = {}

    @property
    def ground(self) -> frozenset:
        return self._ground

    @property
    def ground_size(self) -> int:
        return len(self._ground)

    def _validate(self, S: Iterable[int]) -> frozenset:
        S = frozenset(S)
        if not S <= self._ground:
            bad = min(S - self._ground, key=repr)
            raise UnknownElement(f"element {bad!r} is not in the ground set")
        return S

    def is_independent(self, S: Iterable[int]) -> bool:
        S = self._validate(S)
        # memoized; matroids are immutable so answers never go stale
        try:
            return self._cache[S]
        except KeyError:
            ans = self._cache[S] = bool(self._independent(S))
            return ans

    def _independent(self, S: frozenset) -> bool:
        raise NotImplementedError

    def rank(self, S: Iterable[int]) -> int:
        """Size of a maximal independent subset of ``S`` (greedy, index order)."""
        S = self._validate(S)
        basis: frozenset = frozenset()
        for e in sorted(S):
            if self.is_independent(basis | {e}):
                basis = basis | {e}
        return len(basis)

    def span(self, S: Iterable[int]) -> frozenset:
        S = self._validate(S)
        r = self.rank(S)
        return frozenset(e for e in self._ground if e in S or self.rank(S | {e}) == r)

    def find_circuit(self, S: Iterable[int]) -> Optional[frozenset]:
        """A circuit contained in ``S``, or ``None`` if ``S`` is independent.

        Elements are dropped greedily in descending index order while the
        remainder stays dependent, so the result is deterministic.
        """
        S = self._validate(S)
        if self.is_independent(S):
            return None
        C = S
        for e in sorted(S, reverse=True):
            if not self.is_independent(C - {e}):
                C = C - {e}
        return C

    def restrict(self, elements: Iterable[int]) -> "Restriction":
        return Restriction(self, elements)

    def descriptor(self) -> dict:
        """JSON-ready description (see the instance file format)."""
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}(ground_size={self.ground_size})"


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, ground_size: int, rank: int):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        super().__init__(range(ground_size))
        self.r = rank

    def _independent(self, S):
        return len(S) <= self.r

    def rank(self, S):
        return min(len(self._validate(S)), self.r)

    def descriptor(self):
        return {"type": "uniform", "ground_size": self.ground_size, "rank": self.r}


class PartitionMatroid(Matroid):
    """At most ``capacities[j]`` elements from ``blocks[j]``."""

    kind = "partition"

    def __init__(self, ground_size: int, blocks: Sequence[Iterable[int]],
                 capacities: Sequence[int]):
        super().__init__(range(ground_size))
        self.blocks = tuple(tuple(sorted(b)) for b in blocks)
        self.capacities = tuple(int(c) for c in capacities)
        if len(self.blocks) != len(self.capacities):
            raise ValueError("need one capacity per block")
        if any(c < 0 for c in self.capacities):
            raise ValueError("capacities must be nonnegative")
        self._block_of = {}
        for j, b in enumerate(self.blocks):
            for e in b:
                if e in self._block_of or not 0 <= e < ground_size:
                    raise ValueError(f"blocks must partition the ground set (element {e})")
                self._block_of[e] = j
        if len(self._block_of) != ground_size:
            raise ValueError("blocks must cover the ground set")

    def _independent(self, S):
        used = [0] * len(self.blocks)
        for e in S:
            j = self._block_of[e]
            used[j] += 1
            if used[j] > self.capacities[j]:
                return False
        return True

    def descriptor(self):
        return {"type": "partition", "ground_size": self.ground_size,
                "blocks": [list(b) for b in self.blocks],
                "capacities": list(self.capacities)}


class GraphicMatroid(Matroid):
    """Cycle matroid: element ``e`` is the edge ``edges[e]``."""

    kind = "graphic"

    def __init__(self, vertex_count: int, edges: Sequence[tuple[int, int]]):
        super().__init__(range(len(edges)))
        self.vertex_count = vertex_count
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        for u, v in self.edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) has an endpoint out of range")

    def _independent(self, S):
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in S:
            u, v = self.edges[e]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def descriptor(self):
        return {"type": "graphic", "vertex_count": self.vertex_count,
                "edges": [list(e) for e in self.edges]}


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, 1
    for c in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, nrows):
            a = m[r][c]
            for cc in range(c + 1, ncols):
                m[r][cc] = (m[r][cc] * p - a * m[rank][cc]) // prev
            m[r][c] = 0
        prev = p
        rank += 1
    return rank


class LinearMatroid(Matroid):
    """Column matroid of a rational matrix; element ``e`` is column ``e``."""

    kind = "linear"

    def __init__(self, rows: Sequence[Sequence]):
        rows = [[Fraction(x) for x in row] for row in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ValueError("matrix rows must have equal length")
        super().__init__(range(width))
        self.rows = tuple(tuple(r) for r in rows)
        # scaling a row by a nonzero constant keeps column dependencies
        self._int_rows = []
        for r in rows:
            d = lcm(*(x.denominator for x in r)) if r else 1
            self._int_rows.append([int(x * d) for x in r])

    def _independent(self, S):
        cols = sorted(S)
        if len(cols) > len(self._int_rows):
            return False
        sub = [[row[c] for c in cols] for row in self._int_rows]
        return integer_rank(sub) == len(cols)

    def descriptor(self):
        from .core import format_rational
        return {"type": "linear",
                "rows": [[format_rational(x) for x in r] for r in self.rows]}


class ExplicitMatroid(Matroid):
    """Independence given by listing every independent set."""

    kind = "explicit"

    def __init__(self, ground_size: int, independent_sets: Iterable[Iterable[int]]):
        super().__init__(range(ground_size))
        self.family = frozenset(frozenset(s) for s in independent_sets)
        for s in self.family:
            self._validate(s)

    def _independent(self, S):
        return S in self.family

    def descriptor(self):
        return {"type": "explicit", "ground_size": self.ground_size,
                "independent_sets": sorted(sorted(s) for s in self.family)}


class Restriction(Matroid):
    """``M | elements``: the matroid with everything else deleted."""

    kind = "restriction"

    def __init__(self, base: Matroid, elements: Iterable[int]):
        elements = base._validate(elements)
        super().__init__(elements)
        self.base = base

    def _independent(self, S):
        return self.base.is_independent(S)


def matroid_from_descriptor(desc: dict, ground_size: Optional[int] = None) -> Matroid:
    """Build a matroid from its JSON descriptor."""
    kind = desc.get("type")
    n = desc.get("ground_size", ground_size)
    if kind == "uniform":
        return UniformMatroid(int(n), int(desc["rank"]))
    if kind == "partition":
        return PartitionMatroid(int(n), desc["blocks"], desc["capacities"])
    if kind == "graphic":
        return GraphicMatroid(int(desc["vertex_count"]), [tuple(e) for e in desc["edges"]])
    if kind == "linear":
        from .core import parse_rational
        rows = [[parse_rational(x) if isinstance(x, str) else Fraction(int(x)) for x in r]
                for r in desc["rows"]]
        return LinearMatroid(rows)
    if kind == "explicit":
        return ExplicitMatroid(int(n), desc["independent_sets"])
    raise ValueError(f"unknown matroid type {kind!r}")


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    violation: Optional[str] = None
    independent_count: int = 0


def verify_matroid_axioms(M: Matroid, limit: int = AXIOM_LIMIT) -> AxiomReport:
    """Exhaustively check the independence axioms; report the first violation.

    Checks that the empty set is independent, that independence is
    hereditary, and the exchange axiom. Exchange is checked for pairs with
    ``|J| = |I| + 1``; with heredity this covers all pairs ``|J| > |I|``.
    """
    elems = sorted(M.ground)
    n = len(elems)
    if n > limit:
        raise TooLarge(f"axiom check needs ground size <= {limit}, got {n}")

    def as_set(mask):
        return frozenset(elems[b] for b in range(n) if mask >> b & 1)

    indep = [M.is_independent(as_set(mask)) for mask in range(1 << n)]
    if not indep[0]:
        return AxiomReport(False, "empty set is dependent")
    by_size: dict[int, list[int]] = {}
    for mask in range(1 << n):
        if not indep[mask]:
            continue
        for b in range(n):
            if mask >> b & 1 and not indep[mask & ~(1 << b)]:
                return AxiomReport(False, f"hereditary: {sorted(as_set(mask))} independent "
                                          f"but drops to dependent without {elems[b]}")
        by_size.setdefault(mask.bit_count(), []).append(mask)
    ext = {}
    for mask, ok in enumerate(indep):
        if ok:
            ext[mask] = sum(1 << b for b in range(n)
                            if not mask >> b & 1 and indep[mask | 1 << b])
    for s, small in by_size.items():
        for J in by_size.get(s + 1, ()):
            for I in small:
                if not (J & ~I & ext[I]):
                    return AxiomReport(False, f"exchange: no element of {sorted(as_set(J))} "
                                              f"extends {sorted(as_set(I))}")
    return AxiomReport(True, None, sum(indep))


def independent_sets(M: Matroid) -> list[frozenset]:
    """Every independent set, grown from the empty set (uses heredity)."""
    elems = sorted(M.ground)
    out = []
    stack = [(frozenset(), 0)]
    while stack:
        S, start = stack.pop()
        out.append(S)
        for j in range(start, len(elems)):
            T = S | {elems[j]}
            if M.is_independent(T):
                stack.append((T, j + 1))
    return out


def all_subsets(elements: Iterable[int]):
    elements = sorted(elements)
    for r in range(len(elements) + 1):
        for c in itertools.combinations(elements, r):
            yield frozenset(c)
