from itertools import combinations

import pytest
from hypothesis import given

from pdgn.errors import InvalidInput
from pdgn.polygon import (CyclicInterval, Triangulation, a_degree, connection_number, crosses,
                          enumerate_triangulations, flip_diagonal, interval, palm_triangulation,
                          quadrilateral, x_degree)

from helpers import brute_force_triangulations, catalan, count_connections, cyclic_members, \
    triangulations


# -- cyclic intervals ----------------------------------------------------------

def test_interval_conventions():
    assert set(CyclicInterval(3, 3, 6)) == {3}
    assert set(CyclicInterval(2, 5, 6)) == {2, 3, 4, 5}
    assert set(CyclicInterval(5, 2, 6)) == {5, 6, 1, 2}
    assert len(CyclicInterval(5, 2, 6)) == 4


@given(triangulations())
def test_interval_membership_matches_walk(t):
    n = t.n
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            assert set(interval(p, q, n)) == cyclic_members(p, q, n)


def test_complementary_intervals_cover():
    n = 7
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if j % n + 1 == i:
                continue
            a, b = set(interval(i, j, n)), set(interval(j + 1, i - 1, n))
            assert a | b == set(range(1, n + 1)) and not a & b


# -- triangulations -----------------------------------------------------------

@pytest.mark.parametrize("n", range(4, 10))
def test_enumeration_count_is_catalan(n):
    assert len(enumerate_triangulations(n)) == catalan(n - 2)


@pytest.mark.parametrize("n", range(4, 9))
def test_enumeration_matches_brute_force(n):
    assert [t.diagonals for t in enumerate_triangulations(n)] == brute_force_triangulations(n)


def test_small_enumerations():
    assert [t.diagonals for t in enumerate_triangulations(4)] == [((1, 3),), ((2, 4),)]
    assert len(enumerate_triangulations(5)) == 5
    assert len(enumerate_triangulations(8)) == 132


@pytest.mark.parametrize("bad", [
    (3, []),
    (5, [(1, 3)]),
    (5, [(1, 3), (2, 4)]),
    (5, [(1, 2), (1, 3)]),
    (5, [(1, 5), (1, 3)]),
    (5, [(1, 9), (1, 3)]),
])
def test_invalid_triangulations(bad):
    with pytest.raises(InvalidInput):
        Triangulation(*bad)


def test_enumerate_rejects_small_n():
    with pytest.raises(InvalidInput):
        enumerate_triangulations(3)


@given(triangulations())
def test_triangulation_structure(t):
    assert len(t.diagonals) == t.n - 3
    assert len(t.triangles) == t.n - 2
    assert all(not crosses(d, e) for d, e in combinations(t.diagonals, 2))


@given(triangulations())
def test_json_round_trip(t):
    assert Triangulation.from_json(t.to_json()) == t
    assert t.to_dict()["diagonals"] == sorted(t.to_dict()["diagonals"])


def test_from_dict_rejects_garbage():
    with pytest.raises(InvalidInput):
        Triangulation.from_dict({"n": 5})


# -- connection numbers and degrees ------------------------------------------

def test_connection_number_examples():
    assert connection_number(Triangulation(5, [(2, 4), (2, 5)]), 2, 2, 4, 5) == 2
    assert connection_number(Triangulation(5, [(1, 3), (3, 5)]), 3, 1, 3, 1) == 2
    assert connection_number([], 1, 2, 3, 4, n=5) == 0


@given(triangulations(max_n=9))
def test_connection_number_matches_direct_count(t):
    n = t.n
    for p, q, s, u in combinations(range(1, n + 1), 4):
        for args in ((p, q, s, u), (q, p, u, s), (s, p, q, u)):
            assert connection_number(t, *args) == count_connections(t.diagonals, *args, n)


def test_connection_number_label_range():
    with pytest.raises(InvalidInput):
        connection_number(Triangulation(5, [(1, 3), (1, 4)]), 0, 1, 2, 3)


def test_a_degree_examples():
    assert a_degree(Triangulation(4, [(1, 3)]), 2, 4) == 1
    t = Triangulation(5, [(2, 4), (2, 5)])
    assert a_degree(t, 2, 3) == 2
    assert a_degree(t, 3, 4) == 0
    assert a_degree(t, 1, 2) == 0


@given(triangulations())
def test_a_degree_is_connection_number(t):
    n = t.n
    for i, j in combinations(range(1, n + 1), 2):
        expected = count_connections(t.diagonals, i, j - 1, j, (i - 2) % n + 1, n)
        assert a_degree(t, i, j) == expected


def test_x_degree_examples():
    t = Triangulation(5, [(2, 4), (2, 5)])
    table = {(i, j): x_degree(t, i, j) for i, j in combinations(range(1, 6), 2)}
    assert table == {**{p: 0 for p in table}, (3, 4): 2, (3, 5): 1, (4, 5): 1}
    assert x_degree(Triangulation(4, [(1, 3)]), 2, 3) == 1


@given(triangulations())
def test_x_degree_of_12_vanishes(t):
    assert x_degree(t, 1, 2) == 0


@pytest.mark.parametrize("func", [a_degree, x_degree])
def test_degree_argument_order(func):
    t = palm_triangulation(5)
    with pytest.raises(InvalidInput):
        func(t, 3, 2)
    with pytest.raises(InvalidInput):
        func(t, 2, 2)


# -- flips and palms ----------------------------------------------------------

def test_flip_examples():
    assert flip_diagonal(Triangulation(4, [(1, 3)]), (1, 3)).diagonals == ((2, 4),)
    t = Triangulation(8, [(1, 3), (3, 5), (3, 6), (1, 6), (1, 7)])
    assert flip_diagonal(t, (3, 6)).diagonal_set == (t.diagonal_set - {(3, 6)}) | {(1, 5)}


@given(triangulations())
def test_flip_is_involution(t):
    for d in t.diagonals:
        new = quadrilateral(t, d)
        flipped = flip_diagonal(t, d)
        assert new in flipped.diagonal_set and d not in flipped.diagonal_set
        assert flip_diagonal(flipped, new) == t


def test_flip_requires_present_diagonal():
    with pytest.raises(InvalidInput):
        flip_diagonal(Triangulation(5, [(1, 3), (1, 4)]), (2, 4))


def test_palm_examples():
    assert palm_triangulation(5).diagonals == ((2, 4), (2, 5))
    assert palm_triangulation(4).diagonals == ((2, 4),)
    assert palm_triangulation(8).diagonals == ((2, 4), (2, 5), (2, 6), (2, 7), (2, 8))


@given(triangulations())
def test_palm_apex_shared(t):
    for v in range(1, t.n + 1):
        p = palm_triangulation(t.n, v)
        assert all(v in d for d in p.diagonals)


def test_flip_graph_connected():
    """Flips connect every triangulation of the heptagon."""
    n = 7
    everything = set(enumerate_triangulations(n))
    seen = {palm_triangulation(n)}
    frontier = list(seen)
    while frontier:
        t = frontier.pop()
        for d in t.diagonals:
            u = flip_diagonal(t, d)
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    assert seen == everything
