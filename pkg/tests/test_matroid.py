from math import factorial

import pytest
from hypothesis import given

from hopfgraph.corpus import trees
from hopfgraph.matroid import (
    acyclic_orientations_bruteforce,
    closure,
    connected_partitions,
    count_acyclic_orientations,
    count_spanning_trees_bruteforce,
    flats,
    flats_bruteforce,
    flats_with_blocks,
    is_flat,
    nullity_of,
    rank_of,
)
from hopfgraph.multigraph import Multigraph, complete, cycle, edgeless, path, rank

from conftest import multigraphs

LOOP = Multigraph(1, ((0, 0),))


def test_closure_examples():
    K3 = complete(3)  # edges 01, 02, 12 at indices 0, 1, 2
    assert closure(K3, 0b101) == 0b111
    G = Multigraph(3, ((0, 0), (0, 1), (2, 2), (1, 2)))
    assert closure(G, 0) == 0b0101
    for T in trees(5):
        for A in range(1 << T.e):
            assert closure(T, A) == A


def test_rank_nullity_examples():
    K3 = complete(3)
    assert (rank_of(K3, 0b111), nullity_of(K3, 0b111)) == (2, 1)
    assert (rank_of(K3, 0), nullity_of(K3, 0)) == (0, 0)
    assert (rank_of(LOOP, 1), nullity_of(LOOP, 1)) == (0, 1)


def test_flats_of_triangle():
    F = flats(complete(3))
    assert sorted(F) == [0, 0b001, 0b010, 0b100, 0b111]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_flats_of_cycle(n):
    # every subset except those of size n-1
    expected = sorted(A for A in range(1 << n) if bin(A).count("1") != n - 1)
    assert sorted(flats(cycle(n))) == expected


def test_flats_of_tree():
    for T in trees(6):
        assert len(flats(T)) == 1 << T.e


@given(multigraphs(e_max=8))
def test_flats_agree_with_bruteforce(G):
    assert sorted(flats(G)) == sorted(flats_bruteforce(G))
    assert all(is_flat(G, F) for F in flats(G))


@given(multigraphs())
def test_blocks_count_corank(G):
    for F, blocks in flats_with_blocks(G):
        assert G.n - rank_of(G, F) == len(blocks)
        assert sum(bin(b).count("1") for b in blocks) == G.n


def test_connected_partitions_of_path():
    # partitions of a path into intervals: 2^(n-1)
    assert sum(1 for _ in connected_partitions(path(5))) == 16


@pytest.mark.parametrize("n", range(0, 7))
def test_acyclic_complete(n):
    assert count_acyclic_orientations(complete(n)) == factorial(n)


def test_acyclic_examples():
    assert count_acyclic_orientations(LOOP) == 0
    assert count_acyclic_orientations(cycle(4)) == 14
    assert len(acyclic_orientations_bruteforce(complete(2))) == 2
    assert len(acyclic_orientations_bruteforce(complete(3))) == 6
    assert acyclic_orientations_bruteforce(LOOP) == []
    assert count_acyclic_orientations(edgeless(3)) == 1


@given(multigraphs())
def test_acyclic_count_matches_brute(G):
    assert count_acyclic_orientations(G) == len(acyclic_orientations_bruteforce(G))


def test_spanning_trees():
    assert count_spanning_trees_bruteforce(complete(4)) == 16
    assert count_spanning_trees_bruteforce(cycle(5)) == 5
    assert count_spanning_trees_bruteforce(Multigraph(2, ((0, 1),) * 3)) == 3
    assert rank(complete(4)) == 3
