"""Skew-symmetric exchange matrices, quiver mutation, and finite-type recognition.

A quiver on vertices 0..n-1 is encoded by its skew-symmetric matrix B with an
arrow x -> y exactly when b[x][y] > 0.  Quasi-Cartan companions are plain
symmetric integer matrices (tuples of tuples) with diagonal 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .intlinalg import det_bareiss, gf2_solve
from .root_system import DynkinType

SymMatrix = tuple[tuple[int, ...], ...]

CYCLE_NOT_ORIENTED = "chordless cycle not cyclically oriented"
NO_POSITIVE_COMPANION = "no positive quasi-Cartan companion"


@dataclass(frozen=True)
class ExchangeMatrix:
    """Immutable skew-symmetric integer matrix."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix is not square")
        for x in range(n):
            if self.entries[x][x] != 0:
                raise ValueError(f"nonzero diagonal entry at {x}")
            for y in range(x + 1, n):
                if self.entries[x][y] != -self.entries[y][x]:
                    raise ValueError(f"not skew-symmetric at ({x},{y})")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows) -> ExchangeMatrix:
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def from_arrows(cls, n: int, arrows) -> ExchangeMatrix:
        rows = [[0] * n for _ in range(n)]
        for s, t in arrows:
            rows[s][t] += 1
            rows[t][s] -= 1
        return cls.from_rows(rows)

    def arrows(self) -> list[tuple[int, int]]:
        """Arrow list (s, t), with multiplicity, sorted by (source, target)."""
        out = []
        for s in range(self.n):
            for t in range(self.n):
                if self.entries[s][t] > 0:
                    out.extend([(s, t)] * self.entries[s][t])
        return out

    def underlying_edges(self) -> list[tuple[int, int]]:
        return [
            (x, y)
            for x in range(self.n)
            for y in range(x + 1, self.n)
            if self.entries[x][y] != 0
        ]

    def has_unit_entries(self) -> bool:
        return all(v in (-1, 0, 1) for row in self.entries for v in row)


def mutate_entries(rows, k: int):
    n = len(rows)
    new = [list(r) for r in rows]
    for x in range(n):
        for y in range(n):
            if x == k or y == k:
                new[x][y] = -rows[x][y]
            else:
                bxk = rows[x][k]
                bky = rows[k][y]
                new[x][y] = rows[x][y] + (abs(bxk) * bky + bxk * abs(bky)) // 2
    return tuple(tuple(r) for r in new)


def mutate(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation at vertex k; an involution preserving skew-symmetry."""
    if not 0 <= k < B.n:
        raise IndexError(f"vertex {k} out of range for n={B.n}")
    return ExchangeMatrix(mutate_entries(B.entries, k))


def mutate_sequence(B: ExchangeMatrix, ks) -> ExchangeMatrix:
    for k in ks:
        B = mutate(B, k)
    return B


def _adjacency(B: ExchangeMatrix) -> list[set[int]]:
    adj = [set() for _ in range(B.n)]
    for x, y in B.underlying_edges():
        adj[x].add(y)
        adj[y].add(x)
    return adj


def is_connected(B: ExchangeMatrix) -> bool:
    if B.n == 0:
        return True
    adj = _adjacency(B)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == B.n


def chordless_cycles(B: ExchangeMatrix) -> list[tuple[int, ...]]:
    """Induced cycles of the underlying graph, each in canonical rotation.

    Canonical rotation: smallest vertex first, then its smaller neighbour.
    """
    adj = _adjacency(B)
    n = B.n
    cycles: list[tuple[int, ...]] = []

    def grow(path: list[int], members: set[int]) -> None:
        first, last = path[0], path[-1]
        for nxt in sorted(adj[last]):
            if nxt < first or nxt in members:
                continue
            # chordless: the candidate may touch the path only at the tail,
            # except when it closes the cycle back at the head
            touches = adj[nxt] & members
            if touches == {last}:
                grow(path + [nxt], members | {nxt})
            elif touches == {last, first} and len(path) >= 2:
                if path[1] < nxt:  # each cycle found once, not once per direction
                    cycles.append(tuple(path + [nxt]))

    for v in range(n):
        grow([v], {v})
    return sorted(cycles, key=lambda c: (len(c), c))


def is_cyclically_oriented(B: ExchangeMatrix, cycle) -> bool:
    """Whether the arrows along a chordless cycle all run one way."""
    m = len(cycle)
    for u, v in zip(cycle, cycle[1:]):
        if B.entries[u][v] == 0:
            raise ValueError(f"cycle edge ({u},{v}) not present")
    if B.entries[cycle[-1]][cycle[0]] == 0:
        raise ValueError(f"cycle edge ({cycle[-1]},{cycle[0]}) not present")
    forward = sum(
        1 for i in range(m) if B.entries[cycle[i]][cycle[(i + 1) % m]] > 0
    )
    return forward in (0, m)


def cartan_counterpart(B: ExchangeMatrix) -> SymMatrix:
    """Symmetric matrix with diagonal 2 and off-diagonal -|b_xy|."""
    n = B.n
    return tuple(
        tuple(2 if x == y else -abs(B.entries[x][y]) for y in range(n))
        for x in range(n)
    )


def is_quasi_cartan(A) -> bool:
    n = len(A)
    return all(len(row) == n for row in A) and all(
        A[i][i] == 2 and all(A[i][j] == A[j][i] for j in range(n)) for i in range(n)
    )


def is_companion_of(A, B: ExchangeMatrix) -> bool:
    """Whether |a_xy| matches |b_xy| off the diagonal."""
    if len(A) != B.n or not is_quasi_cartan(A):
        return False
    return all(
        abs(A[x][y]) == abs(B.entries[x][y])
        for x in range(B.n)
        for y in range(B.n)
        if x != y
    )


def satisfies_cycle_sign_condition(A, B: ExchangeMatrix) -> bool:
    """Whether every chordless cycle carries an odd number of positive entries.

    Equivalently, the product of -a_xy over the edges of each chordless cycle
    is negative; a necessary condition for A to be a positive companion.
    """
    if not is_companion_of(A, B):
        raise ValueError("A is not a quasi-Cartan companion of B")
    for cycle in chordless_cycles(B):
        m = len(cycle)
        product = 1
        for i in range(m):
            product *= -A[cycle[i]][cycle[(i + 1) % m]]
        if product >= 0:
            return False
    return True


def canonical_companion(B: ExchangeMatrix) -> SymMatrix:
    """The companion of B with odd positive sign count on every chordless cycle.

    Signs are one GF(2) variable per underlying edge, one parity equation per
    chordless cycle, solved with free variables negative.  Requires every
    chordless cycle of B to be cyclically oriented.
    """
    cycles = chordless_cycles(B)
    for cycle in cycles:
        if not is_cyclically_oriented(B, cycle):
            raise ValueError(f"{CYCLE_NOT_ORIENTED}: {cycle}")
    edges = B.underlying_edges()
    edge_index = {e: i for i, e in enumerate(edges)}
    equations = []
    for cycle in cycles:
        mask = 0
        m = len(cycle)
        for i in range(m):
            x, y = cycle[i], cycle[(i + 1) % m]
            mask |= 1 << edge_index[(x, y) if x < y else (y, x)]
        equations.append((mask, 1))
    try:
        signs = gf2_solve(equations, len(edges))
    except ValueError as exc:
        idx = int(str(exc).rsplit(" ", 1)[-1])
        raise ValueError(f"no consistent sign assignment; cycle {cycles[idx]}") from exc
    n = B.n
    rows = [[2 if x == y else 0 for y in range(n)] for x in range(n)]
    for (x, y), i in edge_index.items():
        value = abs(B.entries[x][y]) * (1 if signs[i] else -1)
        rows[x][y] = rows[y][x] = value
    return tuple(tuple(r) for r in rows)


def is_positive_quasi_cartan(A) -> bool:
    """Positive definiteness of a symmetric quasi-Cartan matrix.

    Checked through leading principal minors with exact integer determinants.
    """
    if not is_quasi_cartan(A):
        raise ValueError("matrix is not symmetric with diagonal 2")
    n = len(A)
    for k in range(1, n + 1):
        minor = det_bareiss(tuple(row[:k] for row in A[:k]))
        if minor <= 0:
            return False
    return True


def simultaneous_sign_change(A, vertices) -> SymMatrix:
    """Flip the sign of rows and columns in the given vertex set at once."""
    n = len(A)
    sign = [-1 if x in set(vertices) else 1 for x in range(n)]
    return tuple(
        tuple(sign[x] * sign[y] * A[x][y] for y in range(n)) for x in range(n)
    )


def finite_type_failure(B: ExchangeMatrix) -> str | None:
    """None when the mutation class of B is of finite type, else the reason."""
    for cycle in chordless_cycles(B):
        if not is_cyclically_oriented(B, cycle):
            return CYCLE_NOT_ORIENTED
    if not is_positive_quasi_cartan(canonical_companion(B)):
        return NO_POSITIVE_COMPANION
    return None


def is_finite_type(B: ExchangeMatrix) -> bool:
    return finite_type_failure(B) is None


def dynkin_type_of(B: ExchangeMatrix) -> DynkinType:
    """Dynkin type of a connected finite-type matrix.

    Read off the pair (rank, |det A|) of any positive companion A, which is
    invariant under both sign changes and mutation: A_n gives n+1, D_n gives 4,
    and E6/E7/E8 give 3/2/1.
    """
    failure = finite_type_failure(B)
    if failure is not None:
        raise ValueError(f"not finite type: {failure}")
    if not is_connected(B):
        raise ValueError("matrix is not connected")
    n = B.n
    det = abs(det_bareiss(canonical_companion(B)))
    if det == n + 1:
        return DynkinType("A", n)
    if n >= 4 and det == 4:
        return DynkinType("D", n)
    if n in (6, 7, 8) and det == 9 - n:
        return DynkinType("E", n)
    raise ValueError(f"unrecognised determinant {det} at rank {n}")


def dumps_exchange_matrix(B: ExchangeMatrix) -> str:
    return json.dumps(
        {"n": B.n, "b": [list(row) for row in B.entries]},
        sort_keys=True,
        separators=(",", ":"),
    )


def loads_exchange_matrix(text: str) -> ExchangeMatrix:
    """Read {"n": int, "b": [[int]]} or {"n": int, "arrows": [[s,t]]}."""
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data:
        raise ValueError("expected an object with an 'n' field")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("'n' must be a nonnegative integer")
    if "b" in data:
        rows = data["b"]
        if len(rows) != n:
            raise ValueError("'b' must have n rows")
        return ExchangeMatrix.from_rows(rows)
    if "arrows" in data:
        arrows = data["arrows"]
        for pair in arrows:
            if len(pair) != 2 or not all(0 <= v < n for v in pair):
                raise ValueError(f"bad arrow {pair}")
        return ExchangeMatrix.from_arrows(n, arrows)
    raise ValueError("expected a 'b' matrix or an 'arrows' list")
