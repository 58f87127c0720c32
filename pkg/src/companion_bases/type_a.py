"""Independent type-A ground truth from polygon triangulations.

Triangulations of a convex (n+3)-gon give the quivers under study in type A_n;
their gentle relations and strings supply the dimension vectors that d-vectors
are checked against.  Polygon corners are numbered 1..n+3 anticlockwise;
quiver vertices are 0-based positions in the sorted diagonal list.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .companion import CompanionBasis, DVector, companion_basis_failure, d_vector_set
from .quiver import ExchangeMatrix, chordless_cycles, is_cyclically_oriented
from .root_system import Root

Diagonal = tuple[int, int]

ArrowPair = tuple[tuple[int, int], tuple[int, int]]


def _check_diagonal(n: int, d) -> Diagonal:
    corners = n + 3
    i, j = d
    if not (1 <= i < j <= corners):
        raise ValueError(f"diagonal {d} has corners outside 1..{corners}")
    if j - i < 2 or (i, j) == (1, corners):
        raise ValueError(f"{d} is a boundary edge, not a diagonal")
    return (i, j)


def diagonals_cross(d1: Diagonal, d2: Diagonal) -> bool:
    """Strict interleaving of endpoints; sharing an endpoint does not cross."""
    (a, b), (c, d) = sorted(d1), sorted(d2)
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class Triangulation:
    """n pairwise non-crossing diagonals of the (n+3)-gon."""

    n: int
    diagonals: tuple[Diagonal, ...]

    def __post_init__(self):
        diagonals = tuple(sorted(_check_diagonal(self.n, d) for d in self.diagonals))
        object.__setattr__(self, "diagonals", diagonals)
        if len(set(diagonals)) != self.n:
            raise ValueError(f"expected {self.n} distinct diagonals")
        for i, d1 in enumerate(diagonals):
            for d2 in diagonals[i + 1 :]:
                if diagonals_cross(d1, d2):
                    raise ValueError(f"diagonals {d1} and {d2} cross")


def _interval_triangulations(i: int, j: int) -> list[tuple[Diagonal, ...]]:
    # all triangulations of the sub-polygon on corners i, i+1, ..., j
    if j - i < 2:
        return [()]
    out = []
    for apex in range(i + 1, j):
        left = _interval_triangulations(i, apex)
        right = _interval_triangulations(apex, j)
        extra = []
        if apex - i >= 2:
            extra.append((i, apex))
        if j - apex >= 2:
            extra.append((apex, j))
        for l in left:
            for r in right:
                out.append(l + r + tuple(extra))
    return out


def enumerate_triangulations(n: int, cap: int = 9) -> list[Triangulation]:
    """All triangulations of the (n+3)-gon; there are Catalan(n+1) of them."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(f"n={n} above the enumeration cap {cap}")
    return [Triangulation(n, ds) for ds in _interval_triangulations(1, n + 3)]


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def random_triangulation(n: int, rng: random.Random) -> Triangulation:
    """Uniformly random triangulation, drawn by Catalan-weighted apex choices."""

    def weight(i: int, j: int) -> int:
        return catalan(j - i - 1)

    diagonals: list[Diagonal] = []
    stack = [(1, n + 3)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        weights = [weight(i, apex) * weight(apex, j) for apex in range(i + 1, j)]
        apex = rng.choices(range(i + 1, j), weights=weights)[0]
        if apex - i >= 2:
            diagonals.append((i, apex))
        if j - apex >= 2:
            diagonals.append((apex, j))
        stack.append((i, apex))
        stack.append((apex, j))
    return Triangulation(n, tuple(diagonals))


def _triangles(n: int, diagonals) -> list[tuple[int, int, int]]:
    corners = n + 3
    edges = set(diagonals)
    for c in range(1, corners):
        edges.add((c, c + 1))
    edges.add((1, corners))
    out = []
    for a in range(1, corners + 1):
        for b in range(a + 1, corners + 1):
            if (a, b) not in edges:
                continue
            for c in range(b + 1, corners + 1):
                if (b, c) in edges and (a, c) in edges:
                    out.append((a, b, c))
    return out


def quiver_from_triangulation(T: Triangulation) -> ExchangeMatrix:
    """Quiver on the diagonals of T, one vertex per diagonal in sorted order.

    Two diagonals bounding a common triangle get an arrow, directed so that the
    smaller anticlockwise rotation about their shared corner goes source to
    target.
    """
    corners = T.n + 3
    index = {d: i for i, d in enumerate(T.diagonals)}
    rows = [[0] * T.n for _ in range(T.n)]
    for tri in _triangles(T.n, T.diagonals):
        sides = [
            (u, v) for u, v in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2]))
        ]
        diag_sides = [s for s in sides if s in index]
        for s1 in diag_sides:
            for s2 in diag_sides:
                if s1 >= s2:
                    continue
                shared = set(s1) & set(s2)
                p = shared.pop()
                a = s1[0] if s1[1] == p else s1[1]
                b = s2[0] if s2[1] == p else s2[1]
                if (a - p) % corners < (b - p) % corners:
                    src, dst = index[s1], index[s2]
                else:
                    src, dst = index[s2], index[s1]
                rows[src][dst] = 1
                rows[dst][src] = -1
    return ExchangeMatrix.from_rows(rows)


def relations_of(B: ExchangeMatrix) -> frozenset[ArrowPair]:
    """Forbidden consecutive arrow pairs: both steps of any oriented 3-cycle.

    Each pair is ((s1, t1), (s2, t2)) with t1 == s2.
    """
    pairs = set()
    for cycle in chordless_cycles(B):
        if len(cycle) != 3:
            raise ValueError(f"chordless cycle of length {len(cycle)} found")
        if not is_cyclically_oriented(B, cycle):
            raise ValueError(f"chordless 3-cycle {cycle} is not oriented")
        x, y, z = cycle
        if B.entries[x][y] > 0:
            arrows = [(x, y), (y, z), (z, x)]
        else:
            arrows = [(x, z), (z, y), (y, x)]
        for i in range(3):
            pairs.add((arrows[i], arrows[(i + 1) % 3]))
    return frozenset(pairs)


@dataclass(frozen=True)
class StringWalk:
    """A walk whose vertices are joined by an arrow exactly when consecutive.

    directions[i] is +1 when the arrow runs vertices[i] -> vertices[i+1] and
    -1 the other way; empty for the trivial walk at one vertex.
    """

    vertices: tuple[int, ...]
    directions: tuple[int, ...]

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def __len__(self):
        return len(self.directions)


def _walk_from_vertices(B: ExchangeMatrix, vertices) -> StringWalk:
    directions = []
    for u, v in zip(vertices, vertices[1:]):
        entry = B.entries[u][v]
        if entry == 0:
            raise ValueError(f"vertices {u},{v} are consecutive but not joined")
        directions.append(1 if entry > 0 else -1)
    return StringWalk(tuple(vertices), tuple(directions))


def is_string(B: ExchangeMatrix, walk: StringWalk) -> bool:
    """Valid when the walk's vertices induce a path traversed end to end."""
    vs = walk.vertices
    if len(set(vs)) != len(vs) or not vs:
        return False
    for i, u in enumerate(vs):
        for j in range(i + 1, len(vs)):
            joined = B.entries[u][vs[j]] != 0
            if joined != (j == i + 1):
                return False
    return all(
        d == (1 if B.entries[u][v] > 0 else -1)
        for (u, v), d in zip(zip(vs, vs[1:]), walk.directions)
    )


def enumerate_strings(B: ExchangeMatrix) -> list[StringWalk]:
    """All strings up to reversal: one per vertex pair plus the trivial ones.

    Canonical direction starts at the smaller endpoint; sorted by length then
    vertex sequence.
    """
    relations_of(B)  # validates the cycle structure
    n = B.n
    adjacency = [
        [y for y in range(n) if y != x and B.entries[x][y] != 0] for x in range(n)
    ]
    found: dict[frozenset[int], tuple[int, ...]] = {}

    def grow(path: list[int]) -> None:
        key = frozenset(path)
        if key not in found:
            found[key] = tuple(path)
        last = path[-1]
        for nxt in adjacency[last]:
            if nxt in path:
                continue
            if any(B.entries[v][nxt] != 0 for v in path[:-1]):
                continue
            grow(path + [nxt])

    for v in range(n):
        grow([v])
    walks = []
    for vertices in found.values():
        if len(vertices) > 1 and vertices[0] > vertices[-1]:
            vertices = tuple(reversed(vertices))
        walks.append(_walk_from_vertices(B, vertices))
    walks.sort(key=lambda w: (len(w.vertices), w.vertices))
    expected = n * (n + 1) // 2
    if len(walks) != expected:
        raise ValueError(f"expected {expected} strings, found {len(walks)}")
    return walks


def string_dim_vector(B: ExchangeMatrix, walk: StringWalk) -> DVector:
    """Dimension vector of the module supported on a string: its 0/1 indicator."""
    if not is_string(B, walk):
        raise ValueError("walk is not a string of this quiver")
    members = walk.vertex_set()
    return tuple(1 if x in members else 0 for x in range(B.n))


def indecomposable_dim_vectors(B: ExchangeMatrix) -> frozenset[DVector]:
    """Dimension vectors of all indecomposables: one 0/1 vector per string."""
    return frozenset(string_dim_vector(B, w) for w in enumerate_strings(B))


def is_strong_companion_basis(psi: CompanionBasis, B: ExchangeMatrix) -> bool:
    """Whether the d-vectors over psi equal the string-module dimension vectors."""
    failure = companion_basis_failure(psi, B)
    if failure is not None:
        raise ValueError(f"invalid companion basis: {failure}")
    return d_vector_set(psi).vectors == indecomposable_dim_vectors(B)


@lru_cache(maxsize=None)
def _snake_diagonals(n: int) -> tuple[Diagonal, ...]:
    snake = []
    for m in range(1, n + 1):
        i = (m + 1) // 2
        if m % 2 == 1:
            snake.append((i, n + 3 - i))
        else:
            snake.append((i + 1, n + 3 - i))
    return tuple(snake)


def almost_positive_root_of_diagonal(n: int, d) -> Root:
    """The almost positive root of a diagonal under the snake identification.

    The m-th snake diagonal carries the negative simple root -alpha_m; any
    other diagonal carries the positive root summing the simple roots whose
    snake diagonals it crosses.
    """
    d = _check_diagonal(n, d)
    snake = _snake_diagonals(n)
    if d in snake:
        m = snake.index(d)
        return tuple(-1 if i == m else 0 for i in range(n))
    crossed = [m for m, s in enumerate(snake) if diagonals_cross(d, s)]
    if not crossed or crossed != list(range(crossed[0], crossed[-1] + 1)):
        raise ValueError(f"diagonal {d} crosses snake positions {crossed}")
    return tuple(1 if crossed[0] <= i <= crossed[-1] else 0 for i in range(n))


def dumps_triangulation(T: Triangulation) -> str:
    return json.dumps(
        {"n": T.n, "diagonals": [list(d) for d in T.diagonals]},
        sort_keys=True,
        separators=(",", ":"),
    )


def loads_triangulation(text: str) -> Triangulation:
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data or "diagonals" not in data:
        raise ValueError("expected an object with n and diagonals fields")
    return Triangulation(
        int(data["n"]), tuple(tuple(int(c) for c in d) for d in data["diagonals"])
    )
