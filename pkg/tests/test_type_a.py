import random
from math import comb

import pytest

from companion_bases.companion import CompanionBasis, companion_basis_for
from companion_bases.quiver import (
    ExchangeMatrix,
    chordless_cycles,
    dynkin_type_of,
    is_cyclically_oriented,
    is_finite_type,
)
from companion_bases.root_system import DynkinType, build_root_system
from companion_bases.type_a import (
    StringWalk,
    Triangulation,
    almost_positive_root_of_diagonal,
    catalan,
    diagonals_cross,
    dumps_triangulation,
    enumerate_strings,
    enumerate_triangulations,
    indecomposable_dim_vectors,
    is_string,
    is_strong_companion_basis,
    loads_triangulation,
    quiver_from_triangulation,
    random_triangulation,
    relations_of,
    string_dim_vector,
)

from conftest import PENDANT_ARROWS, PENDANT_DVECTORS, dynkin_orientation

PENDANT = ExchangeMatrix.from_arrows(4, PENDANT_ARROWS)


def test_diagonal_validation():
    with pytest.raises(ValueError, match="boundary"):
        Triangulation(1, ((1, 2),))
    with pytest.raises(ValueError, match="boundary"):
        Triangulation(1, ((1, 4),))
    with pytest.raises(ValueError, match="corners"):
        Triangulation(1, ((0, 2),))
    with pytest.raises(ValueError, match="cross"):
        Triangulation(2, ((1, 3), (2, 4)))
    with pytest.raises(ValueError, match="distinct"):
        Triangulation(2, ((1, 3), (1, 3)))


def test_diagonals_cross():
    assert diagonals_cross((1, 3), (2, 4))
    assert not diagonals_cross((1, 3), (3, 5))
    assert not diagonals_cross((1, 3), (4, 6))
    assert diagonals_cross((2, 6), (1, 3))


@pytest.mark.parametrize("n,count", [(1, 2), (2, 5), (3, 14), (4, 42), (5, 132)])
def test_enumeration_counts(n, count):
    ts = enumerate_triangulations(n)
    assert len(ts) == count
    assert len(set(ts)) == count


def test_enumeration_matches_catalan_to_seven():
    for n in range(1, 8):
        expected = comb(2 * (n + 1), n + 1) // (n + 2)
        assert len(enumerate_triangulations(n)) == expected == catalan(n + 1)
    with pytest.raises(ValueError, match="cap"):
        enumerate_triangulations(10)


def test_fan_of_hexagon_is_linear_quiver():
    fan = Triangulation(3, ((1, 3), (1, 4), (1, 5)))
    B = quiver_from_triangulation(fan)
    assert B == dynkin_orientation("A3")


def test_heptagon_with_inner_triangle_matches_pendant_shape():
    T = Triangulation(4, ((1, 3), (1, 5), (3, 5), (5, 7)))
    B = quiver_from_triangulation(T)
    # sorted diagonals: (1,3) (1,5) (3,5) (5,7)
    assert B.arrows() == [(0, 1), (1, 2), (2, 0), (3, 1)]
    assert chordless_cycles(B) == [(0, 1, 2)]
    assert dynkin_type_of(B) == DynkinType("A", 4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_triangulation_quivers_are_well_formed(n):
    for T in enumerate_triangulations(n):
        B = quiver_from_triangulation(T)
        assert B.has_unit_entries()
        assert is_finite_type(B)
        assert dynkin_type_of(B) == DynkinType("A", n)
        for cycle in chordless_cycles(B):
            assert len(cycle) == 3
            assert is_cyclically_oriented(B, cycle)
        for x in range(n):
            valency = sum(1 for y in range(n) if B.entries[x][y] != 0)
            assert valency <= 4


def test_relations():
    assert relations_of(dynkin_orientation("A4")) == frozenset()
    assert relations_of(PENDANT) == frozenset(
        {
            ((1, 2), (2, 3)),
            ((2, 3), (3, 1)),
            ((3, 1), (1, 2)),
        }
    )
    two_triangles = [
        T
        for T in enumerate_triangulations(6)
        if len(chordless_cycles(quiver_from_triangulation(T))) == 2
    ]
    assert two_triangles
    for T in two_triangles[:5]:
        assert len(relations_of(quiver_from_triangulation(T))) == 6
    square = ExchangeMatrix.from_arrows(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(ValueError, match="length 4"):
        relations_of(square)


def test_enumerate_strings_smallest():
    B = ExchangeMatrix.from_rows([[0]])
    walks = enumerate_strings(B)
    assert len(walks) == 1
    assert walks[0].vertices == (0,)
    assert walks[0].directions == ()


def test_enumerate_strings_on_pendant_quiver():
    walks = enumerate_strings(PENDANT)
    assert len(walks) == 10
    trivial = [w for w in walks if len(w) == 0]
    assert len(trivial) == 4
    endpoints = {(w.vertices[0], w.vertices[-1]) for w in walks if len(w) > 0}
    assert endpoints == {(a, b) for a in range(4) for b in range(a + 1, 4)}
    by_pair = {(w.vertices[0], w.vertices[-1]): w for w in walks if len(w) > 0}
    assert by_pair[(0, 3)].vertices == (0, 1, 3)
    assert by_pair[(0, 3)].directions == (1, -1)  # 0->1 forwards, 3->1 backwards
    assert not any(w.vertex_set() == {0, 1, 2, 3} for w in walks)


def test_string_dim_vector(pendant_basis):
    trivial = StringWalk((2,), ())
    assert string_dim_vector(PENDANT, trivial) == (0, 0, 1, 0)
    two = StringWalk((1, 2), (1,))
    assert string_dim_vector(PENDANT, two) == (0, 1, 1, 0)
    assert not is_string(PENDANT, StringWalk((1, 2, 3), (1, 1)))
    with pytest.raises(ValueError, match="not a string"):
        string_dim_vector(PENDANT, StringWalk((1, 2, 3), (1, 1)))
    with pytest.raises(ValueError, match="not a string"):
        string_dim_vector(PENDANT, StringWalk((1, 2), (-1,)))  # wrong direction flag


def interval_indicators(n):
    return frozenset(
        tuple(1 if i <= x <= j else 0 for x in range(n))
        for i in range(n)
        for j in range(i, n)
    )


def test_indecomposables_linear_quivers():
    for n in (1, 2, 3, 5):
        B = dynkin_orientation(f"A{n}")
        assert indecomposable_dim_vectors(B) == interval_indicators(n)


def test_indecomposables_pendant(pendant_basis):
    assert indecomposable_dim_vectors(PENDANT) == PENDANT_DVECTORS


def test_indecomposables_all_heptagon_quivers():
    for T in enumerate_triangulations(4):
        vectors = indecomposable_dim_vectors(quiver_from_triangulation(T))
        assert len(vectors) == 10
        assert all(set(v) <= {0, 1} for v in vectors)


def test_is_strong_companion_basis(pendant_basis):
    assert is_strong_companion_basis(pendant_basis, PENDANT)
    for T in enumerate_triangulations(2):
        B = quiver_from_triangulation(T)
        assert is_strong_companion_basis(companion_basis_for(B), B)
    path = dynkin_orientation("A4")
    rs = build_root_system(DynkinType("A", 4))
    assert is_strong_companion_basis(CompanionBasis(rs, rs.simple_roots), path)
    with pytest.raises(ValueError, match="invalid companion basis"):
        is_strong_companion_basis(CompanionBasis(rs, rs.simple_roots), PENDANT)


def test_strongness_is_basis_independent(pendant_basis):
    # any companion basis has the same d-vector set, so strongness transfers
    from companion_bases.companion import sign_change

    assert is_strong_companion_basis(sign_change(pendant_basis, {1, 3}), PENDANT)


def test_almost_positive_roots_snake():
    for n in (1, 2, 3, 4, 5, 6):
        assert almost_positive_root_of_diagonal(n, (1, n + 2)) == tuple(
            -1 if i == 0 else 0 for i in range(n)
        )
        if n >= 2:
            assert almost_positive_root_of_diagonal(n, (2, n + 2)) == tuple(
                -1 if i == 1 else 0 for i in range(n)
            )
    assert almost_positive_root_of_diagonal(4, (1, 3)) == (0, 1, 1, 0)


def test_almost_positive_roots_bijection():
    for n in (1, 2, 3, 4, 5, 6):
        corners = n + 3
        diagonals = [
            (i, j)
            for i in range(1, corners + 1)
            for j in range(i + 2, corners + 1)
            if (i, j) != (1, corners)
        ]
        assert len(diagonals) == n * (n + 3) // 2
        rs = build_root_system(DynkinType("A", n))
        expected = set(rs.positive_roots) | {
            tuple(-1 if i == m else 0 for i in range(n)) for m in range(n)
        }
        images = {almost_positive_root_of_diagonal(n, d) for d in diagonals}
        assert images == expected
        assert len(images) == len(diagonals)


def test_random_triangulation_reproducible_and_covering():
    assert random_triangulation(5, random.Random(42)) == random_triangulation(
        5, random.Random(42)
    )
    seen = {random_triangulation(2, random.Random(s)) for s in range(60)}
    assert seen == set(enumerate_triangulations(2))


def test_serialization():
    T = Triangulation(4, ((1, 3), (1, 5), (3, 5), (5, 7)))
    text = dumps_triangulation(T)
    assert loads_triangulation(text) == T
    with pytest.raises(ValueError):
        loads_triangulation('{"n": 2}')
