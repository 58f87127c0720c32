"""Companion bases: validation, mutation, d-vectors, and the induced map on them.

A companion basis for a quiver assigns a root to every vertex so that the
assignment is a Z-basis of the root lattice and its Gram matrix matches the
exchange matrix entrywise in absolute value.  Mutating the basis inwardly or
outwardly at a vertex tracks matrix mutation, and the family of d-vectors
(absolute expansion coefficients of the positive roots) is an invariant of the
quiver alone.
"""

from __future__ import annotations

import json
from collections import deque

from .intlinalg import det_bareiss, mat_vec
from .quiver import (
    ExchangeMatrix,
    dynkin_type_of,
    finite_type_failure,
    loads_exchange_matrix,
    mutate,
    mutate_entries,
)
from .root_system import (
    NEGATIVE_ROOT,
    NOT_ROOT,
    DynkinType,
    Root,
    RootSystem,
    apply_automorphism,
    basis_columns,
    build_root_system,
    lattice_inverse,
)

DVector = tuple[int, ...]


class MutationSearchError(RuntimeError):
    """Raised when the search through a mutation class gives out."""


class CompanionBasis:
    """A vertex-indexed tuple of roots, candidate Z-basis of the root lattice."""

    __slots__ = ("rs", "gamma", "_inverse")

    def __init__(self, rs: RootSystem, gamma):
        gamma = tuple(tuple(g) for g in gamma)
        if len(gamma) != rs.rank:
            raise ValueError(f"expected {rs.rank} roots, got {len(gamma)}")
        for g in gamma:
            if not rs.is_root(g):
                raise ValueError(f"{g} is not a root")
        self.rs = rs
        self.gamma = gamma
        self._inverse = None

    def __eq__(self, other):
        return (
            isinstance(other, CompanionBasis)
            and self.rs.dynkin == other.rs.dynkin
            and self.gamma == other.gamma
        )

    def __hash__(self):
        return hash((self.rs.dynkin, self.gamma))

    def __repr__(self):
        return f"CompanionBasis({self.rs.dynkin}, {list(self.gamma)})"

    def inverse(self):
        if self._inverse is None:
            self._inverse = lattice_inverse(self.gamma)
        return self._inverse

    def is_z_basis(self) -> bool:
        return det_bareiss(basis_columns(self.gamma)) in (1, -1)

    def gram(self) -> tuple[tuple[int, ...], ...]:
        """Matrix of pairwise form values; a quasi-Cartan matrix when valid."""
        inner = self.rs.inner
        return tuple(tuple(inner(gx, gy) for gy in self.gamma) for gx in self.gamma)

    def expand(self, v) -> tuple[int, ...]:
        """Coefficients of a lattice vector over this basis."""
        return mat_vec(self.inverse(), tuple(v))

    def d_vector(self, alpha) -> DVector:
        """Componentwise absolute expansion coefficients; equal for alpha and -alpha."""
        if not self.rs.is_root(alpha):
            raise ValueError(f"{alpha} is not a root")
        return tuple(abs(c) for c in self.expand(alpha))

    def support(self, alpha) -> frozenset[int]:
        """Vertices with a nonzero expansion coefficient."""
        if not self.rs.is_root(alpha):
            raise ValueError(f"{alpha} is not a root")
        return frozenset(x for x, c in enumerate(self.expand(alpha)) if c)


def companion_basis_failure(psi: CompanionBasis, B: ExchangeMatrix) -> str | None:
    """None when psi is a companion basis for B, else a diagnostic reason."""
    n = B.n
    if len(psi.gamma) != n:
        return f"size mismatch: {len(psi.gamma)} roots for {n} vertices"
    if not psi.is_z_basis():
        return "not a Z-basis of the root lattice"
    inner = psi.rs.inner
    for x in range(n):
        gx = psi.gamma[x]
        for y in range(x + 1, n):
            if abs(inner(gx, psi.gamma[y])) != abs(B.entries[x][y]):
                return f"form/arrow mismatch at ({x},{y})"
    return None


def is_companion_basis(psi: CompanionBasis, B: ExchangeMatrix) -> bool:
    return companion_basis_failure(psi, B) is None


def _tree_family(n: int, adjacency) -> DynkinType:
    max_degree = max(len(a) for a in adjacency)
    branch_vertices = [v for v in range(n) if len(adjacency[v]) >= 3]
    if max_degree <= 2:
        return DynkinType("A", n)
    if max_degree == 3 and len(branch_vertices) == 1:
        hub = branch_vertices[0]
        lengths = []
        for start in adjacency[hub]:
            length, prev, cur = 1, hub, start
            while True:
                nxt = [w for w in adjacency[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            lengths.append(length)
        lengths.sort()
        if lengths[:2] == [1, 1]:
            return DynkinType("D", n)
        if lengths == [1, 2, n - 4] and n in (6, 7, 8):
            return DynkinType("E", n)
    raise ValueError("underlying tree is not a Dynkin diagram")


def _tree_isomorphism(n: int, adjacency, dynkin: DynkinType) -> list[int]:
    """First vertex -> simple-index bijection matching the Dynkin diagram."""
    target = [set() for _ in range(n)]
    for i, j in dynkin.edges():
        target[i].add(j)
        target[j].add(i)
    image = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        for cand in range(n):
            if used[cand] or len(target[cand]) != len(adjacency[pos]):
                continue
            if all(
                (prev in adjacency[pos]) == (image[prev] in target[cand])
                for prev in range(pos)
            ):
                image[pos] = cand
                used[cand] = True
                if extend(pos + 1):
                    return True
                used[cand] = False
        image[pos] = -1
        return False

    if not extend(0):
        raise ValueError("quiver is not an orientation of the Dynkin diagram")
    return image


def initial_companion_basis(B: ExchangeMatrix) -> CompanionBasis:
    """Simple roots placed on a quiver that orients a Dynkin diagram.

    The vertex -> simple-root indexing is the first isomorphism found under a
    deterministic vertex order; any choice yields the same d-vector data.
    """
    n = B.n
    if not B.has_unit_entries():
        raise ValueError("entries outside {0,+-1}")
    edges = B.underlying_edges()
    if len(edges) != n - 1:
        raise ValueError("underlying graph is not a tree")
    adjacency = [set() for _ in range(n)]
    for x, y in edges:
        adjacency[x].add(y)
        adjacency[y].add(x)
    seen = {0}
    stack = [0]
    while stack:
        for w in adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise ValueError("underlying graph is not a tree")
    dynkin = _tree_family(n, adjacency)
    image = _tree_isomorphism(n, adjacency, dynkin)
    rs = build_root_system(dynkin)
    return CompanionBasis(rs, tuple(rs.simple_roots[image[x]] for x in range(n)))


def sign_change(psi: CompanionBasis, vertices) -> CompanionBasis:
    """Negate the basis elements at the given vertices; an involution."""
    flip = set(vertices)
    return CompanionBasis(
        psi.rs,
        tuple(
            tuple(-c for c in g) if x in flip else g
            for x, g in enumerate(psi.gamma)
        ),
    )


def transform(psi: CompanionBasis, word=(), perm=None) -> CompanionBasis:
    """Apply a diagram automorphism then a word of reflections to every element.

    Leaves the Gram matrix unchanged, so the result is a companion basis for
    the same quivers psi serves.
    """
    rs = psi.rs
    out = []
    for g in psi.gamma:
        moved = apply_automorphism(perm, g) if perm is not None else g
        out.append(rs.apply_word(word, moved))
    return CompanionBasis(rs, tuple(out))


def mutate_inward(
    psi: CompanionBasis, B: ExchangeMatrix, k: int
) -> tuple[CompanionBasis, ExchangeMatrix]:
    """Reflect the elements at tails of arrows into k; pairs with mutate(B, k)."""
    if not 0 <= k < B.n:
        raise IndexError(f"vertex {k} out of range for n={B.n}")
    failure = companion_basis_failure(psi, B)
    if failure is not None:
        raise ValueError(f"invalid companion basis: {failure}")
    return _mutate_basis_unchecked(psi, B, k, inward=True), mutate(B, k)


def mutate_outward(
    psi: CompanionBasis, B: ExchangeMatrix, k: int
) -> tuple[CompanionBasis, ExchangeMatrix]:
    """Reflect the elements at heads of arrows out of k; pairs with mutate(B, k)."""
    if not 0 <= k < B.n:
        raise IndexError(f"vertex {k} out of range for n={B.n}")
    failure = companion_basis_failure(psi, B)
    if failure is not None:
        raise ValueError(f"invalid companion basis: {failure}")
    return _mutate_basis_unchecked(psi, B, k, inward=False), mutate(B, k)


def _mutate_basis_unchecked(
    psi: CompanionBasis, B: ExchangeMatrix, k: int, inward: bool
) -> CompanionBasis:
    rs = psi.rs
    mirror = psi.gamma[k]
    new = list(psi.gamma)
    for x in range(B.n):
        moved = B.entries[x][k] > 0 if inward else B.entries[k][x] > 0
        if moved:
            new[x] = rs._reflect_raw(psi.gamma[x], mirror)
    return CompanionBasis(rs, tuple(new))


class DVectorSet:
    """The d-vectors of all positive roots over one companion basis.

    Holds the bijection root <-> d-vector; construction fails loudly if two
    roots ever collide, which would break a structural invariant.
    """

    def __init__(self, by_root: dict[Root, DVector]):
        self.by_root = by_root
        self.vectors = frozenset(by_root.values())
        if len(self.vectors) != len(by_root):
            raise RuntimeError("duplicate d-vector: invariant violation")
        self._root_of = {d: r for r, d in by_root.items()}

    def root_of(self, d: DVector) -> Root:
        return self._root_of[tuple(d)]

    def sorted_vectors(self) -> list[DVector]:
        return sorted(self.vectors)

    def __len__(self):
        return len(self.by_root)

    def __contains__(self, d):
        return tuple(d) in self.vectors

    def __eq__(self, other):
        if isinstance(other, DVectorSet):
            return self.vectors == other.vectors
        return NotImplemented

    def __hash__(self):
        return hash(self.vectors)


def d_vector_set(psi: CompanionBasis) -> DVectorSet:
    """d-vectors of every positive root; cardinality always equals their number."""
    inverse = psi.inverse()
    by_root = {
        alpha: tuple(abs(c) for c in mat_vec(inverse, alpha))
        for alpha in psi.rs.positive_roots
    }
    return DVectorSet(by_root)


def root_with_support_string(psi: CompanionBasis, walk) -> Root:
    """The positive root supported exactly on a string of vertices.

    The walk must visit distinct vertices that are pairwise joined by an arrow
    exactly when consecutive.  Computed by reflecting the first element through
    the rest in order, then normalising the sign.
    """
    walk = list(walk)
    if not walk:
        raise ValueError("walk is empty")
    if len(set(walk)) != len(walk):
        raise ValueError("walk revisits a vertex")
    rs = psi.rs
    for i, x in enumerate(walk):
        for j in range(i + 1, len(walk)):
            paired = rs.inner(psi.gamma[x], psi.gamma[walk[j]]) != 0
            if paired != (j == i + 1):
                raise ValueError(
                    f"walk is not a string: vertices {x},{walk[j]} "
                    f"{'joined' if paired else 'not joined'}"
                )
    beta = psi.gamma[walk[0]]
    for x in walk[1:]:
        beta = rs._reflect_raw(beta, psi.gamma[x])
    kind = rs.classify(beta)
    if kind == NOT_ROOT:
        raise ValueError("reflection sequence left the root system")
    if kind == NEGATIVE_ROOT:
        beta = tuple(-c for c in beta)
    return beta


def find_mutation_sequence_to_tree(B: ExchangeMatrix, cap: int = 200_000) -> list[int]:
    """Shortest vertex sequence mutating B to a quiver with tree underlying graph.

    Breadth-first over the mutation class with exact-matrix dedup; the search
    stops at the first tree, so only a small neighbourhood is ever visited.
    Exhausting the cap signals input outside the finite-type classes.
    """
    failure = finite_type_failure(B)
    if failure is not None:
        raise ValueError(f"not finite type: {failure}")
    n = B.n

    def is_tree(entries) -> bool:
        edges = sum(
            1 for x in range(n) for y in range(x + 1, n) if entries[x][y]
        )
        if edges != n - 1:
            return False
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for x in range(n):
            for y in range(x + 1, n):
                if entries[x][y]:
                    ra, rb = find(x), find(y)
                    if ra == rb:
                        return False
                    parent[ra] = rb
        return True

    start = B.entries
    if is_tree(start):
        return []
    seen = {start}
    queue = deque([(start, ())])
    while queue:
        entries, path = queue.popleft()
        for k in range(n):
            child = mutate_entries(entries, k)
            if child in seen:
                continue
            if is_tree(child):
                return list(path) + [k]
            seen.add(child)
            queue.append((child, path + (k,)))
            if len(seen) > cap:
                raise MutationSearchError(
                    "mutation search exhausted; matrix is not of finite type"
                )
    raise MutationSearchError("mutation class contains no tree")


def companion_basis_for(B: ExchangeMatrix) -> CompanionBasis:
    """A companion basis for any connected finite-type matrix.

    Mutates B to a tree, seeds the simple roots there, and replays the
    sequence backwards with inward basis mutation.
    """
    sequence = find_mutation_sequence_to_tree(B)
    chain = [B]
    for k in sequence:
        chain.append(mutate(chain[-1], k))
    psi = initial_companion_basis(chain[-1])
    for i in reversed(range(len(sequence))):
        psi, back = mutate_inward(psi, chain[i + 1], sequence[i])
        assert back.entries == chain[i].entries
    failure = companion_basis_failure(psi, B)
    if failure is not None:
        raise MutationSearchError(f"replayed basis is invalid: {failure}")
    return psi


def mutation_map_inward(
    psi: CompanionBasis, B: ExchangeMatrix, k: int
) -> dict[DVector, DVector]:
    """The bijection d-vectors of B -> d-vectors of mutate(B, k).

    Sends the d-vector of each positive root over psi to its d-vector over the
    inward mutation of psi; the same map arises from every companion basis.
    """
    psi_next, _ = mutate_inward(psi, B, k)
    old = d_vector_set(psi)
    new = d_vector_set(psi_next)
    return {old.by_root[alpha]: new.by_root[alpha] for alpha in psi.rs.positive_roots}


def inward_update_components(
    psi: CompanionBasis, B: ExchangeMatrix, k: int, alpha
) -> tuple[int, int]:
    """The k-component of a d-vector after inward mutation, two ways.

    Returns (exact, estimate): the true new component, and the value computed
    from absolute coefficients alone.  Their difference is always even; in
    type A the two agree on realised d-vectors.
    """
    coeffs = psi.expand(alpha)
    inner = psi.rs.inner
    mirror = psi.gamma[k]
    incoming = [x for x in range(B.n) if B.entries[x][k] > 0]
    exact = abs(
        coeffs[k] + sum(coeffs[x] * inner(psi.gamma[x], mirror) for x in incoming)
    )
    estimate = abs(-abs(coeffs[k]) + sum(abs(coeffs[x]) for x in incoming))
    return exact, estimate


def phi_in_type_a(
    B: ExchangeMatrix, k: int, d, dvectors: DVectorSet | None = None
) -> DVector:
    """Closed form of the inward mutation map in type A.

    Only the k-component moves: it becomes |-d_k + sum of d_x over arrows
    x -> k|.  The input must be a realised d-vector of B, checked against the
    supplied (or freshly computed) DVectorSet.
    """
    if not 0 <= k < B.n:
        raise IndexError(f"vertex {k} out of range for n={B.n}")
    d = tuple(d)
    if dvectors is None:
        if dynkin_type_of(B).family != "A":
            raise ValueError("closed form only holds in type A")
        dvectors = d_vector_set(companion_basis_for(B))
    if d not in dvectors:
        raise ValueError(f"{d} is not a realised d-vector")
    incoming = sum(d[x] for x in range(B.n) if B.entries[x][k] > 0)
    out = list(d)
    out[k] = abs(-d[k] + incoming)
    return tuple(out)


def dumps_d_vector_set(dset: DVectorSet) -> str:
    """Lexicographically sorted JSON array of the d-vectors; golden-file stable."""
    return json.dumps(
        [list(d) for d in dset.sorted_vectors()], separators=(",", ":")
    )


def dumps_companion_basis(psi: CompanionBasis, B: ExchangeMatrix) -> str:
    return json.dumps(
        {
            "type": str(psi.rs.dynkin),
            "quiver": {"n": B.n, "b": [list(row) for row in B.entries]},
            "gamma": [list(g) for g in psi.gamma],
        },
        sort_keys=True,
        separators=(",", ":"),
    )


def loads_companion_basis(text: str) -> tuple[CompanionBasis, ExchangeMatrix]:
    data = json.loads(text)
    if not isinstance(data, dict) or not {"type", "quiver", "gamma"} <= set(data):
        raise ValueError("expected an object with type, quiver and gamma fields")
    dynkin = DynkinType.parse(data["type"])
    B = loads_exchange_matrix(json.dumps(data["quiver"]))
    rs = build_root_system(dynkin)
    psi = CompanionBasis(rs, tuple(tuple(int(c) for c in g) for g in data["gamma"]))
    return psi, B
