import json

import pytest
from hypothesis import given, strategies as st

from fourmaps.permmap import MapError, RootedMap, compose, cycles


@st.composite
def maps(draw, max_edges=8):
    n = draw(st.integers(1, max_edges))
    order = draw(st.permutations(range(2 * n)))
    return RootedMap.from_pairs(2 * n, zip(order[::2], order[1::2]))


def test_all_involutions_on_four_darts():
    # the three fixed-point-free involutions; only one has a 4-cycle sigma
    alphas = [[1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    one_vertex = [a for a in alphas if len(RootedMap.from_alpha(4, a).vertices()) == 1]
    assert one_vertex == [[2, 3, 0, 1]]


def test_torus_map(torus_map):
    assert torus_map.vertices() == [(0, 3, 2, 1)]
    assert torus_map.sigma(0) == 3
    assert torus_map.genus() == 1
    assert torus_map.degree_profile() == {4: 1}


def test_two_edge_path():
    m = RootedMap.from_alpha(4, [1, 0, 3, 2])
    assert [m.sigma(i) for i in range(4)] == [0, 3, 2, 1]
    assert m.degree_profile() == {1: 2, 2: 1}
    assert not m.is_four_regular()
    assert not m.is_one_four_valent()


def test_edge_tree(edge_tree):
    assert edge_tree.vertices() == [(0,), (1,)]
    assert edge_tree.genus() == 0
    assert edge_tree.degree_profile() == {1: 2}
    assert not edge_tree.is_four_regular()
    assert edge_tree.is_one_four_valent()


def test_figure_map(figure_map):
    # sigma = (1,12,10,9)(2,5,8,11)(3,7,6,4) shifted by -1
    assert figure_map.vertices() == [(0, 11, 9, 8), (1, 4, 7, 10), (2, 6, 5, 3)]
    assert figure_map.edges == 6
    assert figure_map.genus() == 2
    assert figure_map.degree_profile() == {4: 3}
    assert figure_map.is_four_regular()


def test_figure_map_face_is_alpha_sigma(figure_map):
    alpha = list(figure_map.alpha)
    assert compose(alpha, figure_map.sigma_perm()) == [(i + 1) % 12 for i in range(12)]


@pytest.mark.parametrize(
    "darts, alpha, invariant",
    [
        (4, [0, 1, 2, 3], "fixed-point-free"),
        (4, [1, 2, 3, 0], "involution"),
        (3, [1, 0, 2], "dart-count"),
        (4, [1, 0, 3], "length"),
        (4, [1, 0, 3, 7], "range"),
        (0, [], "dart-count"),
    ],
)
def test_rejects_invalid(darts, alpha, invariant):
    with pytest.raises(MapError) as exc:
        RootedMap.from_alpha(darts, alpha)
    assert exc.value.invariant == invariant


def test_sigma_range_check(torus_map):
    with pytest.raises(IndexError):
        torus_map.sigma(4)


def test_rotation(torus_map, figure_map):
    assert torus_map.rotate(0) == torus_map
    assert torus_map.rotate(1).alpha == (2, 3, 0, 1)
    for j in range(12):
        r = figure_map.rotate(j)
        assert r.degree_profile() == figure_map.degree_profile()
        assert r.genus() == 2


def test_cycles_min_first():
    assert cycles([2, 0, 1, 4, 3]) == [(0, 2, 1), (3, 4)]


def test_json_format(figure_map):
    text = figure_map.to_json()
    assert text.startswith('{"darts": 12, "alpha": [9, 11, 4,')
    assert list(json.loads(text)) == ["darts", "alpha"]
    assert RootedMap.from_json(text) == figure_map


@pytest.mark.parametrize(
    "text",
    ['{"darts": 4}', "[1, 2]", "not json", '{"darts": 4, "alpha": [1, 0, 3, 2.0]}',
     '{"darts": 4, "alpha": "0123"}'],
)
def test_json_rejects(text):
    with pytest.raises(MapError):
        RootedMap.from_json(text)


@given(maps())
def test_face_is_standard_cycle(m):
    face = compose(list(m.alpha), m.sigma_perm())
    assert face == [(i + 1) % m.darts for i in range(m.darts)]


@given(maps())
def test_euler_relation(m):
    k = len(m.vertices())
    assert m.genus() >= 0
    assert m.edges - k == 2 * m.genus() - 1


@given(maps())
def test_handshake(m):
    assert sum(d * c for d, c in m.degree_profile().items()) == m.darts


@given(maps(), st.integers(0, 40), st.integers(0, 40))
def test_rotations_compose(m, j1, j2):
    assert m.rotate(j1).rotate(j2) == m.rotate((j1 + j2) % m.darts)


@given(maps())
def test_json_round_trip(m):
    assert RootedMap.from_json(m.to_json()).alpha == m.alpha


@given(maps())
def test_stabilizer_matches_rotations(m):
    assert m.rotation_stabilizer() == sum(m.rotate(j) == m for j in range(m.darts))
