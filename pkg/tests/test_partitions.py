from itertools import accumulate

import pytest

from conftest import brute_partitions
from graded_decomp.partitions import (
    Node,
    Partition,
    all_partitions,
    distance,
    dominates,
    is_e_restricted,
    moves,
    moves_between,
    residue,
    residue_content,
    sigma,
)

P = Partition


def test_partition_validation():
    assert P((2, 1, 0)) == P((2, 1))
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, -1))


@pytest.mark.parametrize(
    "text, parts",
    [("2,1", (2, 1)), ("(3,1,1)", (3, 1, 1)), ("2,1^3", (2, 1, 1, 1)), ("", ()), ("0", ())],
)
def test_parse(text, parts):
    assert P.parse(text) == P(parts)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        P.parse("1,x")
    with pytest.raises(ValueError):
        P.parse("1,2")


def test_all_partitions_small():
    assert all_partitions(0) == (P(()),)
    assert all_partitions(3) == (P((3,)), P((2, 1)), P((1, 1, 1)))
    assert len(all_partitions(6)) == 11


@pytest.mark.parametrize("d", range(0, 9))
def test_all_partitions_against_brute_force(d):
    assert [tuple(p) for p in all_partitions(d)] == brute_partitions(d)


@pytest.mark.parametrize(
    "lam, k, expected", [((3,), 1, 3), ((2, 1), 2, 3), ((2, 1), 5, 3)]
)
def test_sigma(lam, k, expected):
    assert sigma(P(lam), k) == expected


@pytest.mark.parametrize(
    "mu, lam, expected",
    [((3,), (2, 1), True), ((2, 1), (3,), False), ((3, 3), (2, 2, 2), True)],
)
def test_dominates(mu, lam, expected):
    assert dominates(P(mu), P(lam)) is expected


def test_dominates_rejects_size_mismatch():
    with pytest.raises(ValueError):
        dominates(P((2,)), P((2, 1)))


@pytest.mark.parametrize("d", range(1, 9))
def test_dominance_is_partial_order(d):
    ps = all_partitions(d)
    for a in ps:
        assert dominates(a, a)
        for b in ps:
            if a != b and dominates(a, b):
                assert not dominates(b, a)
            for c in ps:
                if dominates(a, b) and dominates(b, c):
                    assert dominates(a, c)


@pytest.mark.parametrize(
    "lam, e, expected", [((3,), 2, False), ((2, 1), 2, True), ((), 2, True), ((), 5, True), ((4, 2), 3, True)]
)
def test_is_e_restricted(lam, e, expected):
    assert is_e_restricted(P(lam), e) is expected


@pytest.mark.parametrize("e", [0, 1])
def test_small_e_rejected(e):
    with pytest.raises(ValueError):
        is_e_restricted(P((1,)), e)


@pytest.mark.parametrize("node, e, expected", [((1, 1), 2, 0), ((2, 1), 2, 1), ((1, 3), 3, 2)])
def test_residue(node, e, expected):
    assert residue(Node(*node), e) == expected


def test_residue_content():
    assert residue_content(P((3,)), 2) == {0: 2, 1: 1}
    assert residue_content(P((1, 1, 1)), 2) == {0: 2, 1: 1}
    assert residue_content(P(()), 3) == {0: 0, 1: 0, 2: 0}


@pytest.mark.parametrize("e", [2, 3, 4, 5])
def test_residue_content_totals(e):
    for d in range(9):
        for lam in all_partitions(d):
            assert sum(residue_content(lam, e).values()) == d


def test_moves_examples():
    assert set(moves(P((3,)), 2)) == {P((3,)), P((1, 1, 1))}
    assert set(moves(P((2, 1)), 2)) == {P((2, 1))}
    assert moves(P(()), 2) == (P(()),)


def test_moves_match_direct_filter():
    # independent recomputation of residue content from the node list
    for e in (2, 3):
        for d in range(7):
            for mu in all_partitions(d):
                cont = sorted(residue(n, e) for n in mu.nodes())
                expected = {
                    lam
                    for lam in all_partitions(d)
                    if sorted(residue(n, e) for n in lam.nodes()) == cont
                    and all(a >= b for a, b in zip(accumulate(mu + (0,) * d), accumulate(lam + (0,) * d)))
                }
                assert set(moves(mu, e)) == expected


def test_moves_between_examples():
    assert set(moves_between(P((3,)), P((1, 1, 1)), 2)) == {P((3,)), P((1, 1, 1))}
    assert moves_between(P((2, 1)), P((2, 1)), 2) == (P((2, 1)),)
    assert moves_between(P((2, 1)), P((3,)), 2) == ()


@pytest.mark.parametrize(
    "mu, lam, expected", [((2, 1), (2, 1), 0), ((3,), (1, 1, 1), 3), ((2, 2), (2, 1, 1), 1)]
)
def test_distance(mu, lam, expected):
    assert distance(P(mu), P(lam)) == expected


def test_distance_requires_dominance():
    with pytest.raises(ValueError):
        distance(P((2, 1)), P((3,)))


@pytest.mark.parametrize("e", [2, 3, 4])
def test_distance_properties(e):
    for d in range(1, 9):
        for mu in all_partitions(d):
            for lam in moves(mu, e):
                dist = distance(mu, lam)
                assert dist >= 0 and (dist == 0) == (lam == mu)
                for nu in moves_between(mu, lam, e):
                    assert distance(mu, nu) <= dist
                    assert (distance(mu, nu) == dist) == (nu == lam)


def test_addable_removable():
    lam = P((3, 1))
    assert lam.removable_nodes() == [Node(1, 3), Node(2, 1)]
    assert lam.addable_nodes() == [Node(1, 4), Node(2, 2), Node(3, 1)]
    assert P(()).addable_nodes() == [Node(1, 1)]
    assert lam.add_node(Node(2, 2)) == P((3, 2))
    with pytest.raises(ValueError):
        lam.add_node(Node(1, 5))
    assert lam.remove_node(Node(2, 1)) == P((3,))


def test_compact_notation():
    assert P((2, 1, 1, 1)).compact() == "(2,1^3)"
    assert P(()).compact() == "∅"
    assert str(P((2, 1))) == "2,1"
