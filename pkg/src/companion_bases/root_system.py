"""Simply-laced root systems with exact integer arithmetic.

Roots are stored as integer coordinate vectors over the simple roots; the
ambient Euclidean space is never materialised.  The bilinear form is given by
the Cartan matrix, normalised so every root has squared length 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .intlinalg import det_bareiss, inverse_unimodular, mat_vec, solve_int

Root = tuple[int, ...]
WeylWord = tuple[Root, ...]

POSITIVE_ROOT = "positive_root"
NEGATIVE_ROOT = "negative_root"
NOT_ROOT = "not_root"


@dataclass(frozen=True)
class DynkinType:
    """One of the simply-laced families A (rank >= 1), D (>= 4), E (6, 7, 8)."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family == "A":
            ok = self.rank >= 1
        elif self.family == "D":
            ok = self.rank >= 4
        elif self.family == "E":
            ok = self.rank in (6, 7, 8)
        else:
            raise ValueError(f"unknown family {self.family!r}")
        if not ok:
            raise ValueError(f"invalid rank {self.rank} for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> DynkinType:
        """Parse a label like "A4", "D5" or "E6"."""
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise ValueError(f"cannot parse Dynkin type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges of the Dynkin diagram on vertices 0..rank-1 (Bourbaki shape)."""
        n = self.rank
        if self.family == "A":
            return tuple((i, i + 1) for i in range(n - 1))
        if self.family == "D":
            path = [(i, i + 1) for i in range(n - 3)]
            return tuple(path + [(n - 3, n - 2), (n - 3, n - 1)])
        # E: chain 0-2-3-4-...-(n-1) with the extra node 1 attached to 3
        chain = [(0, 2)] + [(i, i + 1) for i in range(2, n - 1)]
        return tuple(chain + [(1, 3)])

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        cart = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in self.edges():
            cart[i][j] = cart[j][i] = -1
        return tuple(tuple(row) for row in cart)

    def positive_root_count(self) -> int:
        if self.family == "A":
            return self.rank * (self.rank + 1) // 2
        if self.family == "D":
            return self.rank * (self.rank - 1)
        return {6: 36, 7: 63, 8: 120}[self.rank]


class RootSystem:
    """The roots of one simply-laced Dynkin type, in simple-root coordinates.

    Positive roots are generated once by reflection closure from the simple
    roots and kept in a fixed order: graded by coordinate sum, ties broken
    lexicographically.  Instances are immutable; every method is pure.
    """

    def __init__(self, dynkin: DynkinType):
        self.dynkin = dynkin
        self.cartan = dynkin.cartan_matrix()
        self._edges = dynkin.edges()
        n = dynkin.rank
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        )
        roots = self._reflection_closure()
        positive = [v for v in roots if all(c >= 0 for c in v)]
        positive.sort(key=lambda v: (sum(v), v))
        self.positive_roots: tuple[Root, ...] = tuple(positive)
        self._positive_set = frozenset(positive)

    def _reflection_closure(self) -> set[Root]:
        roots = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            fresh = []
            for alpha in frontier:
                for simple in self.simple_roots:
                    image = self._reflect_raw(alpha, simple)
                    if image not in roots:
                        roots.add(image)
                        fresh.append(image)
            frontier = fresh
        return roots

    @property
    def rank(self) -> int:
        return self.dynkin.rank

    def inner(self, a, b) -> int:
        """Bilinear form a . cartan . b; equals 2 on every root."""
        if len(a) != self.rank or len(b) != self.rank:
            raise ValueError("dimension mismatch")
        total = 2 * sum(x * y for x, y in zip(a, b))
        for i, j in self._edges:
            total -= a[i] * b[j] + a[j] * b[i]
        return total

    def is_root(self, v) -> bool:
        return self.classify(v) != NOT_ROOT

    def classify(self, v) -> str:
        """Sort a coordinate vector into positive_root / negative_root / not_root."""
        if len(v) != self.rank:
            raise ValueError("dimension mismatch")
        t = tuple(v)
        if t in self._positive_set:
            return POSITIVE_ROOT
        if tuple(-c for c in t) in self._positive_set:
            return NEGATIVE_ROOT
        return NOT_ROOT

    def _reflect_raw(self, a: Root, mirror: Root) -> Root:
        c = self.inner(a, mirror)
        if c == 0:
            return tuple(a)
        return tuple(x - c * m for x, m in zip(a, mirror))

    def reflect(self, a, mirror) -> Root:
        """Reflection of a in the hyperplane orthogonal to a root."""
        if not self.is_root(mirror):
            raise ValueError(f"mirror {mirror} is not a root")
        return self._reflect_raw(tuple(a), tuple(mirror))

    def apply_word(self, letters, a) -> Root:
        """Apply the reflections of a word of roots, first letter acting first."""
        out = tuple(a)
        for letter in letters:
            out = self.reflect(out, letter)
        return out


@lru_cache(maxsize=None)
def build_root_system(dynkin: DynkinType) -> RootSystem:
    """Shared immutable RootSystem for a Dynkin type."""
    return RootSystem(dynkin)


def diagram_automorphisms(dynkin: DynkinType) -> list[tuple[int, ...]]:
    """All permutations of the simple-root indices preserving the Cartan matrix.

    Returned sorted, so the identity comes first.
    """
    n = dynkin.rank
    adjacency = [set() for _ in range(n)]
    for i, j in dynkin.edges():
        adjacency[i].add(j)
        adjacency[j].add(i)
    degrees = [len(s) for s in adjacency]
    found: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def extend(pos: int) -> None:
        if pos == n:
            found.append(tuple(image))
            return
        for cand in range(n):
            if used[cand] or degrees[cand] != degrees[pos]:
                continue
            ok = True
            for prev in range(pos):
                if (prev in adjacency[pos]) != (image[prev] in adjacency[cand]):
                    ok = False
                    break
            if ok:
                image[pos] = cand
                used[cand] = True
                extend(pos + 1)
                used[cand] = False
        image[pos] = -1

    extend(0)
    return sorted(found)


def apply_automorphism(perm, v) -> Root:
    """Permute simple-root coordinates: index i is sent to perm[i]."""
    out = [0] * len(v)
    for i, c in enumerate(v):
        out[perm[i]] = c
    return tuple(out)


def basis_columns(basis) -> tuple[tuple[int, ...], ...]:
    """Matrix whose columns are the given coordinate vectors."""
    n = len(basis)
    if any(len(b) != n for b in basis):
        raise ValueError("basis vectors must have length equal to their number")
    return tuple(tuple(basis[x][i] for x in range(n)) for i in range(n))


def is_z_basis(rs: RootSystem, basis) -> bool:
    """Whether n vectors form a Z-basis of the root lattice (determinant +-1)."""
    if len(basis) != rs.rank:
        raise ValueError(f"expected {rs.rank} basis vectors, got {len(basis)}")
    return det_bareiss(basis_columns(basis)) in (1, -1)


def expand_in_lattice_basis(rs: RootSystem, v, basis) -> tuple[int, ...]:
    """Integer coefficients of v over the given basis.

    Unique whenever the basis is a Z-basis; raises ValueError when the basis is
    singular or no integer solution exists.
    """
    if len(basis) != rs.rank:
        raise ValueError(f"expected {rs.rank} basis vectors, got {len(basis)}")
    return solve_int(basis_columns(basis), tuple(v))


def height_in_basis(rs: RootSystem, v, basis) -> int:
    """Sum of absolute coefficients of v over the basis; >= 1 for roots."""
    return sum(abs(c) for c in expand_in_lattice_basis(rs, v, basis))


def lattice_inverse(basis) -> tuple[tuple[int, ...], ...]:
    """Integer matrix sending simple coordinates to basis coefficients."""
    return inverse_unimodular(basis_columns(basis))


def expand_with_inverse(inverse, v) -> tuple[int, ...]:
    return mat_vec(inverse, v)
