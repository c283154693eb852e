import itertools
import random
from fractions import Fraction

import pytest
import sympy

from lexopt.errors import TooLarge, UnknownElement
from lexopt.matroid import (
    ExplicitMatroid,
    GraphicMatroid,
    LinearMatroid,
    PartitionMatroid,
    UniformMatroid,
    all_subsets,
    independent_sets,
    integer_rank,
    matroid_from_descriptor,
    verify_matroid_axioms,
)

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def random_explicit(seed, n=6):
    """Explicit matroid copied from a random linear or graphic one."""
    rng = random.Random(seed)
    if rng.random() < 0.5:
        base = LinearMatroid([[rng.randint(-1, 2) for _ in range(n)] for _ in range(rng.randint(1, 3))])
    else:
        v = rng.randint(2, 4)
        base = GraphicMatroid(v, [tuple(rng.sample(range(v), 2)) for _ in range(n)])
    return ExplicitMatroid(n, independent_sets(base))


def brute_rank(M, S):
    return max(len(T) for T in all_subsets(S) if M.is_independent(T))


def test_uniform_rank_and_span():
    U = UniformMatroid(4, 2)
    assert U.rank(range(4)) == 2
    assert U.span({0, 3}) == frozenset(range(4))
    assert U.span({1}) == frozenset({1})


def test_graphic_k4():
    G = GraphicMatroid(4, K4_EDGES)
    assert G.rank(range(6)) == 3
    assert verify_matroid_axioms(G).passed


def test_graphic_path_span():
    P = GraphicMatroid(4, [(0, 1), (1, 2), (2, 3)])
    assert P.span({0}) == frozenset({0})


def test_triangle_circuit():
    T = GraphicMatroid(3, [(0, 1), (1, 2), (0, 2)])
    assert T.find_circuit({0, 1, 2}) == frozenset({0, 1, 2})
    assert T.find_circuit({0, 1}) is None


def test_circuit_is_minimal_and_deterministic():
    G = GraphicMatroid(4, K4_EDGES + [(0, 1)])
    C = G.find_circuit(range(7))
    assert not G.is_independent(C)
    assert all(G.is_independent(C - {e}) for e in C)
    # descending-index removal keeps the lowest-index cycle
    assert C == frozenset({0, 1, 3})


@pytest.mark.parametrize("seed", range(15))
def test_random_explicit_rank_span_circuit(seed):
    M = random_explicit(seed)
    for S in all_subsets(range(M.ground_size)):
        r = M.rank(S)
        assert r == brute_rank(M, S)
        assert M.span(S) == frozenset(e for e in range(M.ground_size)
                                      if brute_rank(M, S | {e}) == r)
        C = M.find_circuit(S)
        if M.is_independent(S):
            assert C is None
        else:
            assert C <= S and not M.is_independent(C)
            assert all(M.is_independent(C - {e}) for e in C)


def test_unknown_element():
    U = UniformMatroid(3, 1)
    for query in (U.rank, U.span, U.find_circuit, U.is_independent):
        with pytest.raises(UnknownElement):
            query({7})


def test_axioms_pass_and_fail():
    assert verify_matroid_axioms(UniformMatroid(5, 2)).passed
    broken = ExplicitMatroid(3, [(), (0,), (1,), (0, 1), (2,)])
    rep = verify_matroid_axioms(broken)
    assert not rep.passed and "exchange" in rep.violation
    not_hereditary = ExplicitMatroid(2, [(), (0, 1)])
    assert "hereditary" in verify_matroid_axioms(not_hereditary).violation
    assert "empty" in verify_matroid_axioms(ExplicitMatroid(1, [(0,)])).violation
    with pytest.raises(TooLarge):
        verify_matroid_axioms(UniformMatroid(13, 2))


def _exchange_brute(M):
    fam = [S for S in all_subsets(range(M.ground_size)) if M.is_independent(S)]
    for I, J in itertools.product(fam, fam):
        if len(J) > len(I) and not any(M.is_independent(I | {e}) for e in J - I):
            return False
    return True


@pytest.mark.parametrize("seed", range(10))
def test_axiom_checker_agrees_with_all_pairs(seed):
    rng = random.Random(seed)
    sets = {frozenset()}
    for _ in range(6):
        sets.add(frozenset(rng.sample(range(4), rng.randint(1, 3))))
    # downward-close so only the exchange check can fail
    closed = {frozenset(T) for S in sets for T in all_subsets(S)}
    M = ExplicitMatroid(4, closed)
    assert verify_matroid_axioms(M).passed == _exchange_brute(M)


@pytest.mark.parametrize("seed", range(8))
def test_rank_submodular_and_span_closure(seed):
    M = random_explicit(seed, n=6)
    subsets = list(all_subsets(range(6)))
    rank = {S: M.rank(S) for S in subsets}
    for A, B in itertools.product(subsets, subsets):
        assert rank[A | B] + rank[A & B] <= rank[A] + rank[B]
        if A <= B:
            assert rank[A] <= rank[B]
    for S in subsets:
        sp = M.span(S)
        assert S <= sp and M.span(sp) == sp


def test_graphic_matches_cycle_enumeration():
    rng = random.Random(3)
    edges = [tuple(rng.sample(range(5), 2)) for _ in range(7)]
    G = GraphicMatroid(5, edges)
    import networkx as nx

    for S in all_subsets(range(7)):
        H = nx.MultiGraph()
        H.add_nodes_from(range(5))
        H.add_edges_from(edges[e] for e in S)
        acyclic = nx.is_forest(H) if S else True
        assert G.is_independent(S) == acyclic


@pytest.mark.parametrize("seed", range(20))
def test_linear_rank_matches_sympy(seed):
    rng = random.Random(seed)
    rows = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(5)]
            for _ in range(rng.randint(1, 4))]
    L = LinearMatroid(rows)
    mat = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])
    for S in all_subsets(range(5)):
        expected = mat[:, sorted(S)].rank() if S else 0
        assert L.rank(S) == expected


def test_integer_rank_small():
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[0, 0, 1], [0, 1, 0]]) == 2
    assert integer_rank([]) == 0


def test_partition_encodes_bipartite_matching():
    # bipartite edges (left, right); matchings == common independent sets
    edges = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 1)]
    m1 = PartitionMatroid(5, [[0, 1], [2, 3], [4]], [1, 1, 1])
    m2 = PartitionMatroid(5, [[0, 2], [1, 3, 4]], [1, 1])
    for S in all_subsets(range(5)):
        lefts = [edges[e][0] for e in S]
        rights = [edges[e][1] for e in S]
        is_matching = len(set(lefts)) == len(S) and len(set(rights)) == len(S)
        assert (m1.is_independent(S) and m2.is_independent(S)) == is_matching


@pytest.mark.parametrize("M", [
    UniformMatroid(4, 2),
    PartitionMatroid(4, [[0, 3], [1, 2]], [1, 2]),
    GraphicMatroid(3, [(0, 1), (1, 2), (0, 2), (0, 1)]),
    LinearMatroid([[1, 0, Fraction(1, 2)], [0, 1, 3]]),
    ExplicitMatroid(2, [(), (0,), (1,)]),
])
def test_descriptor_round_trip(M):
    M2 = matroid_from_descriptor(M.descriptor(), M.ground_size)
    assert all(M.is_independent(S) == M2.is_independent(S) for S in all_subsets(M.ground))


def test_restriction_deletes():
    G = GraphicMatroid(3, [(0, 1), (1, 2), (0, 2)])
    R = G.restrict({0, 1})
    assert R.ground == frozenset({0, 1})
    assert R.rank({0, 1}) == 2
    with pytest.raises(UnknownElement):
        R.is_independent({2})


def test_invalid_partition():
    with pytest.raises(ValueError):
        PartitionMatroid(3, [[0, 1]], [1])
    with pytest.raises(ValueError):
        PartitionMatroid(2, [[0, 1], [1]], [1, 1])
