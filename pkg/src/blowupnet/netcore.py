"""Exact-rational weighted networks and their ground-truth solvers.

A WeightedNetwork is a loopless multigraph whose edges carry nonzero
rational conductances (possibly negative; resistance of an edge is the
reciprocal of its conductance).  Everything downstream is exact: the
spanning-tree sum comes from a fraction-free determinant of the reduced
Laplacian, and effective resistances come from solving the grounded
Laplacian over `fractions.Fraction`.  These two routines are the oracles
that every closed form in this package is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import Disconnected, DisconnectedPair, SingularSystem

Vertex = Hashable
RationalLike = Fraction | int | str


def rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact Fraction.

    Floats are rejected on purpose: every quantity here is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class WeightedNetwork:
    """Loopless multigraph with exact rational edge conductances.

    Vertex labels are arbitrary hashables and are never interpreted.
    Edge order and vertex order are preserved so that serialization is
    deterministic.
    """

    __slots__ = ("vertices", "edges", "_index")

    def __init__(
        self,
        vertices: Iterable[Vertex],
        edges: Iterable[tuple[Vertex, Vertex, RationalLike]] = (),
    ) -> None:
        vs = tuple(vertices)
        index = {v: i for i, v in enumerate(vs)}
        if len(index) != len(vs):
            raise ValueError("duplicate vertex label")
        normalized = []
        for u, v, c in edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in index or v not in index:
                raise ValueError(f"edge endpoint not a vertex: {(u, v)!r}")
            c = rational(c)
            if c == 0:
                raise ValueError(f"zero conductance on edge {(u, v)!r}")
            normalized.append((u, v, c))
        self.vertices = vs
        self.edges = tuple(normalized)
        self._index = index

    # --- basic queries ------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def index_of(self, v: Vertex) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"unknown vertex: {v!r}") from None

    def has_vertex(self, v: Vertex) -> bool:
        return v in self._index

    def incident(self, v: Vertex) -> list[tuple[Vertex, Vertex, Fraction]]:
        self.index_of(v)
        return [e for e in self.edges if v in (e[0], e[1])]

    def degree(self, v: Vertex) -> int:
        """Number of incident edge slots, counting parallel edges."""
        return len(self.incident(v))

    def edges_between(self, u: Vertex, v: Vertex) -> list[tuple[Vertex, Vertex, Fraction]]:
        return [e for e in self.edges if {e[0], e[1]} == {u, v}]

    def merged_conductance(self, u: Vertex, v: Vertex) -> Fraction:
        """Total conductance between u and v (parallel edges summed)."""
        return sum((e[2] for e in self.edges_between(u, v)), Fraction(0))

    def neighbors(self, v: Vertex) -> list[Vertex]:
        seen: dict[Vertex, None] = {}
        for a, b, _ in self.incident(v):
            other = b if a == v else a
            seen.setdefault(other, None)
        return list(seen)

    # --- connectivity ---------------------------------------------------

    def components(self) -> list[frozenset[Vertex]]:
        adjacency: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for u, v, _ in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        unseen = dict.fromkeys(self.vertices)
        out: list[frozenset[Vertex]] = []
        while unseen:
            start = next(iter(unseen))
            stack = [start]
            comp = set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                unseen.pop(x, None)
                stack.extend(y for y in adjacency[x] if y not in comp)
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def subnetwork(self, keep: Iterable[Vertex]) -> "WeightedNetwork":
        """Induced sub-network on `keep`, preserving vertex order."""
        keep_set = set(keep)
        vs = [v for v in self.vertices if v in keep_set]
        es = [e for e in self.edges if e[0] in keep_set and e[1] in keep_set]
        return WeightedNetwork(vs, es)

    # --- equality / repr ------------------------------------------------

    def _canonical_edges(self) -> list[tuple[int, int, Fraction]]:
        out = []
        for u, v, c in self.edges:
            i, j = self._index[u], self._index[v]
            if i > j:
                i, j = j, i
            out.append((i, j, c))
        out.sort()
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedNetwork):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self._canonical_edges() == other._canonical_edges()
        )

    __hash__ = None  # mutable-feeling value type; not meant for dict keys

    def __repr__(self) -> str:
        return f"WeightedNetwork({self.vertex_count} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class LaplacianMatrix:
    """Dense exact Laplacian: row sums vanish, off-diagonals are -conductance."""

    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]


def laplacian(net: WeightedNetwork) -> LaplacianMatrix:
    """Weighted Laplacian of the network (parallel edges merged by summing)."""
    n = net.vertex_count
    m = [[Fraction(0)] * n for _ in range(n)]
    for u, v, c in net.edges:
        i, j = net.index_of(u), net.index_of(v)
        m[i][j] -= c
        m[j][i] -= c
        m[i][i] += c
        m[j][j] += c
    return LaplacianMatrix(tuple(tuple(row) for row in m))


# --- spanning-tree sum ------------------------------------------------------


def _bareiss_det(m: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def tau_matrix_tree(net: WeightedNetwork) -> Fraction:
    """Weighted spanning-tree sum: any cofactor of the Laplacian.

    For unit conductances this is the number of spanning trees; it is 0
    exactly when the network is disconnected (for positive conductances).
    Computed by clearing denominators and running a fraction-free
    determinant, so only integer arithmetic happens in the hot loop.
    """
    n = net.vertex_count
    if n == 0:
        raise ValueError("network has no vertices")
    if n == 1:
        return Fraction(1)
    lap = laplacian(net)
    reduced = [list(row[1:]) for row in lap.rows[1:]]
    denom = 1
    for row in reduced:
        for entry in row:
            denom = lcm(denom, entry.denominator)
    scaled = [[int(entry * denom) for entry in row] for row in reduced]
    det = _bareiss_det(scaled)
    return Fraction(det, denom ** (n - 1))


# --- resistance distance ------------------------------------------------------


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve a square exact system in place; None if singular."""
    n = len(rows)
    aug = [rows[i] + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            return None
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        aug[col] = [x / pivot for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def _inverse(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]] | None:
    """Exact inverse by Gauss-Jordan; None if singular."""
    n = len(rows)
    aug = [list(rows[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            return None
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        aug[col] = [x / pivot for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def resistance(net: WeightedNetwork, u: Vertex, v: Vertex) -> Fraction:
    """Effective resistance between two distinct vertices.

    Solves the Laplacian grounded at v on the component containing the
    pair.  Raises DisconnectedPair when u and v are separated, and
    SingularSystem when signed conductances make the grounded system
    singular (equivalently, the component's spanning-tree sum vanishes).
    """
    iu, iv = net.index_of(u), net.index_of(v)
    if iu == iv:
        raise ValueError("resistance needs two distinct vertices")
    component = next(c for c in net.components() if u in c)
    if v not in component:
        raise DisconnectedPair(f"{u!r} and {v!r} are in different components")
    sub = net.subnetwork(component)
    lap = laplacian(sub)
    ground = sub.index_of(v)
    keep = [i for i in range(sub.vertex_count) if i != ground]
    rows = [[lap.rows[i][j] for j in keep] for i in keep]
    source = sub.index_of(u)
    rhs = [Fraction(int(i == source)) for i in keep]
    solution = _solve(rows, rhs)
    if solution is None:
        raise SingularSystem("grounded Laplacian is singular")
    return solution[keep.index(source)]


def resistance_matrix(net: WeightedNetwork) -> dict[tuple[Vertex, Vertex], Fraction]:
    """All-pairs effective resistances of a connected network.

    One grounded-Laplacian inversion serves every pair:
    R(u, v) = G[u][u] + G[v][v] - 2 G[u][v] with G the inverse of the
    Laplacian minus the ground row and column.  Returns both (u, v) and
    (v, u) keys for convenience.
    """
    if not net.is_connected():
        raise Disconnected("resistance matrix needs a connected network")
    n = net.vertex_count
    out: dict[tuple[Vertex, Vertex], Fraction] = {}
    if n <= 1:
        return out
    lap = laplacian(net)
    reduced = [list(row[1:]) for row in lap.rows[1:]]
    inv = _inverse(reduced)
    if inv is None:
        raise SingularSystem("grounded Laplacian is singular")
    zero = Fraction(0)

    def green(i: int, j: int) -> Fraction:
        if i == 0 or j == 0:
            return zero
        return inv[i - 1][j - 1]

    for i in range(n):
        for j in range(i + 1, n):
            r = green(i, i) + green(j, j) - 2 * green(i, j)
            out[(net.vertices[i], net.vertices[j])] = r
            out[(net.vertices[j], net.vertices[i])] = r
    return out


def kf_pair_sum(net: WeightedNetwork) -> Fraction:
    """Kirchhoff index: sum of resistances over unordered vertex pairs."""
    if not net.is_connected():
        raise Disconnected("Kirchhoff index needs a connected network")
    matrix = resistance_matrix(net)
    total = Fraction(0)
    for i, u in enumerate(net.vertices):
        for v in net.vertices[i + 1 :]:
            total += matrix[(u, v)]
    return total


def kf_spectral_check(eigen_reciprocal_sum: RationalLike, n: int) -> Fraction:
    """Kirchhoff index from the Laplacian spectrum: n times sum of 1/lambda."""
    if n < 1:
        raise ValueError("n must be positive")
    return n * rational(eigen_reciprocal_sum)
