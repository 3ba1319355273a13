"""Host graphs, blow-up descriptions and the networks built from them.

A blow-up replaces host vertex i by a part consisting of p_i disjoint
t-cliques plus q_i isolated vertices (part size n_i = t*p_i + q_i) and
joins every vertex of part i to every vertex of part j whenever ij is a
host edge.  All constructed edges carry unit conductance except in the
two auxiliary constructions: the weighted host star, whose hub weights
encode the per-part elimination, and the size-weighted host, whose edge
ij carries conductance n_i * n_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    DisconnectedHost,
    IsolatedHostVertex,
)
from .netcore import WeightedNetwork


@dataclass(frozen=True)
class HostGraph:
    """Simple graph on vertices 1..k, the pattern a blow-up expands."""

    k: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("host graph needs at least one vertex")
        for i, j in self.edges:
            if not (1 <= i < j <= self.k):
                raise ValueError(f"bad host edge {(i, j)!r}")

    @classmethod
    def from_edges(cls, k: int, edges: Iterable[tuple[int, int]]) -> "HostGraph":
        normalized = frozenset((min(i, j), max(i, j)) for i, j in edges)
        for i, j in normalized:
            if i == j:
                raise ValueError(f"host self-loop at {i}")
        return cls(k, normalized)

    @classmethod
    def complete(cls, k: int) -> "HostGraph":
        return cls(k, frozenset(combinations(range(1, k + 1), 2)))

    @classmethod
    def star(cls, k: int) -> "HostGraph":
        """Star with centre 1 and leaves 2..k."""
        return cls(k, frozenset((1, i) for i in range(2, k + 1)))

    @classmethod
    def path(cls, k: int) -> "HostGraph":
        return cls(k, frozenset((i, i + 1) for i in range(1, k)))

    @classmethod
    def complete_minus_matching(
        cls, k: int, matching: Sequence[tuple[int, int]]
    ) -> "HostGraph":
        """Complete graph with the given disjoint vertex pairs disconnected."""
        removed = set()
        used = set()
        for a, b in matching:
            if a == b or not (1 <= a <= k and 1 <= b <= k):
                raise ValueError(f"bad matching pair {(a, b)!r}")
            if a in used or b in used:
                raise ValueError("matching pairs must be disjoint")
            used.update((a, b))
            removed.add((min(a, b), max(a, b)))
        full = set(combinations(range(1, k + 1), 2))
        return cls(k, frozenset(full - removed))

    @classmethod
    def complete_minus_star(cls, k: int, d: int) -> "HostGraph":
        """Complete graph minus the edges from vertex 1 to vertices 2..d.

        d = 1 removes nothing (the complete graph), a boundary callers
        may want to flag.
        """
        if not (1 <= d <= k):
            raise ValueError(f"star size d={d} out of range 1..{k}")
        removed = {(1, i) for i in range(2, d + 1)}
        full = set(combinations(range(1, k + 1), 2))
        return cls(k, frozenset(full - removed))

    # --- queries -----------------------------------------------------

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(1, self.k + 1) if j != i and self.adjacent(i, j)]

    def isolated_vertices(self) -> list[int]:
        return [i for i in range(1, self.k + 1) if not self.neighbors(i)]

    def is_complete(self) -> bool:
        return len(self.edges) == self.k * (self.k - 1) // 2

    def is_connected(self) -> bool:
        seen = {1}
        stack = [1]
        while stack:
            x = stack.pop()
            for y in self.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.k


@dataclass(frozen=True)
class BlowupVertex:
    """Position of a vertex inside a blow-up part.

    Clique vertices have clique = 1..p_i and slot = 1..t; isolated
    vertices have clique = None and slot = 1..q_i.  The string form is
    "part.c<clique>.<slot>" or "part.i<slot>".
    """

    part: int
    clique: int | None
    slot: int

    @property
    def is_clique(self) -> bool:
        return self.clique is not None

    def label(self) -> str:
        if self.clique is None:
            return f"{self.part}.i{self.slot}"
        return f"{self.part}.c{self.clique}.{self.slot}"

    @classmethod
    def parse(cls, text: str) -> "BlowupVertex":
        try:
            part_text, rest = text.split(".", 1)
            part = int(part_text)
            if rest.startswith("i"):
                return cls(part, None, int(rest[1:]))
            if rest.startswith("c"):
                clique_text, slot_text = rest[1:].split(".")
                return cls(part, int(clique_text), int(slot_text))
        except (ValueError, IndexError):
            pass
        raise ValueError(f"not a blow-up vertex label: {text!r}")

    def sort_key(self) -> tuple[int, int, int, int]:
        # clique vertices precede isolated ones within a part
        if self.clique is None:
            return (self.part, 1, 0, self.slot)
        return (self.part, 0, self.clique, self.slot)


@dataclass(frozen=True)
class BlowupSpec:
    """Uniform blow-up data: clique size t, per-part clique and isolated counts."""

    t: int
    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "q", tuple(self.q))
        if self.t < 1:
            raise ValueError("clique size t must be at least 1")
        if len(self.p) != len(self.q):
            raise DimensionMismatch("p and q must have one entry per part")
        if not self.p:
            raise ValueError("need at least one part")
        for i, (pi, qi) in enumerate(zip(self.p, self.q), start=1):
            if pi < 0 or qi < 0:
                raise ValueError(f"negative count in part {i}")
            if self.t * pi + qi < 1:
                raise ValueError(f"part {i} is empty")

    @property
    def k(self) -> int:
        return len(self.p)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(self.t * pi + qi for pi, qi in zip(self.p, self.q))

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def part_vertices(self, i: int) -> list[BlowupVertex]:
        pi, qi = self.p[i - 1], self.q[i - 1]
        out = [
            BlowupVertex(i, c, s)
            for c in range(1, pi + 1)
            for s in range(1, self.t + 1)
        ]
        out.extend(BlowupVertex(i, None, s) for s in range(1, qi + 1))
        return out

    def contains(self, v: BlowupVertex) -> bool:
        if not (1 <= v.part <= self.k):
            return False
        pi, qi = self.p[v.part - 1], self.q[v.part - 1]
        if v.clique is None:
            return 1 <= v.slot <= qi
        return 1 <= v.clique <= pi and 1 <= v.slot <= self.t

    def all_vertices(self) -> list[BlowupVertex]:
        out: list[BlowupVertex] = []
        for i in range(1, self.k + 1):
            out.extend(self.part_vertices(i))
        return out


@dataclass(frozen=True)
class UnbalancedSpec:
    """Per-part data for non-uniform blow-ups: each part is either an
    independent set ("empty") or a clique ("clique") of its own size."""

    kinds: tuple[str, ...]
    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "kinds", tuple(self.kinds))
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if len(self.kinds) != len(self.sizes):
            raise DimensionMismatch("kinds and sizes must have one entry per part")
        if not self.kinds:
            raise ValueError("need at least one part")
        for i, (kind, size) in enumerate(zip(self.kinds, self.sizes), start=1):
            if kind not in ("empty", "clique"):
                raise ValueError(f"part {i} kind must be 'empty' or 'clique'")
            if size < 1:
                raise ValueError(f"part {i} must have at least one vertex")

    @property
    def k(self) -> int:
        return len(self.kinds)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def part_vertices(self, i: int) -> list[BlowupVertex]:
        kind, size = self.kinds[i - 1], self.sizes[i - 1]
        if kind == "clique":
            return [BlowupVertex(i, 1, s) for s in range(1, size + 1)]
        return [BlowupVertex(i, None, s) for s in range(1, size + 1)]

    def contains(self, v: BlowupVertex) -> bool:
        if not (1 <= v.part <= self.k):
            return False
        kind, size = self.kinds[v.part - 1], self.sizes[v.part - 1]
        if kind == "clique":
            return v.clique == 1 and 1 <= v.slot <= size
        return v.clique is None and 1 <= v.slot <= size

    def all_vertices(self) -> list[BlowupVertex]:
        out: list[BlowupVertex] = []
        for i in range(1, self.k + 1):
            out.extend(self.part_vertices(i))
        return out


@dataclass(frozen=True)
class CoreSatelliteSpec:
    """A core clique joined to pairwise-unjoined satellite cliques.

    sizes[0] is the core; the construction equals an all-clique
    unbalanced blow-up over a star host.
    """

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if not self.sizes:
            raise ValueError("need at least the core part")
        for i, size in enumerate(self.sizes, start=1):
            if size < 1:
                raise ValueError(f"part {i} must have at least one vertex")

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def as_unbalanced(self) -> tuple[HostGraph, UnbalancedSpec]:
        host = HostGraph.star(self.k) if self.k > 1 else HostGraph(1, frozenset())
        return host, UnbalancedSpec(("clique",) * self.k, self.sizes)

    def all_vertices(self) -> list[BlowupVertex]:
        return self.as_unbalanced()[1].all_vertices()


# --- constructions ----------------------------------------------------------


def _cross_edges(
    host: HostGraph, parts: dict[int, list[BlowupVertex]]
) -> list[tuple[BlowupVertex, BlowupVertex, int]]:
    out = []
    for i, j in host.sorted_edges():
        for u in parts[i]:
            for v in parts[j]:
                out.append((u, v, 1))
    return out


def build_blowup(host: HostGraph, spec: BlowupSpec) -> WeightedNetwork:
    """Unit-conductance blow-up of the host by the given spec.

    Vertices appear part by part, cliques before isolated vertices, so
    the layout is deterministic.
    """
    if spec.k != host.k:
        raise DimensionMismatch(
            f"spec has {spec.k} parts but host has {host.k} vertices"
        )
    parts = {i: spec.part_vertices(i) for i in range(1, host.k + 1)}
    edges: list[tuple[BlowupVertex, BlowupVertex, int]] = []
    for i in range(1, host.k + 1):
        for c in range(1, spec.p[i - 1] + 1):
            clique = [v for v in parts[i] if v.clique == c]
            edges.extend((u, v, 1) for u, v in combinations(clique, 2))
    edges.extend(_cross_edges(host, parts))
    return WeightedNetwork(spec.all_vertices(), edges)


def build_unbalanced(host: HostGraph, spec: UnbalancedSpec) -> WeightedNetwork:
    """Blow-up with per-part kinds: clique parts get all internal edges."""
    if spec.k != host.k:
        raise DimensionMismatch(
            f"spec has {spec.k} parts but host has {host.k} vertices"
        )
    parts = {i: spec.part_vertices(i) for i in range(1, host.k + 1)}
    edges: list[tuple[BlowupVertex, BlowupVertex, int]] = []
    for i in range(1, host.k + 1):
        if spec.kinds[i - 1] == "clique":
            edges.extend((u, v, 1) for u, v in combinations(parts[i], 2))
    edges.extend(_cross_edges(host, parts))
    return WeightedNetwork(spec.all_vertices(), edges)


def build_core_satellite(spec: CoreSatelliteSpec) -> WeightedNetwork:
    """Core clique joined to each satellite clique; satellites unjoined."""
    host, unbalanced = spec.as_unbalanced()
    return build_unbalanced(host, unbalanced)


def build_host_star_weighted(
    host: HostGraph, sizes: Sequence[int]
) -> WeightedNetwork:
    """Signed-weight star gadget equivalent to the all-isolated blow-up.

    Part i of the blow-up collapses to a hub ("s", i) carrying its
    leaves; the hub hangs off the host vertex ("v", i) by a negative
    edge, and host vertices are joined by size-product conductances.
    Leaf labels reuse the blow-up's isolated-vertex labels so the two
    networks can be compared pair by pair.  All weights are
    conductances:

        leaf edge ("s", i)-leaf: sum of neighbouring part sizes
        hub edge ("s", i)-("v", i): -(that sum) * n_i
        host edge ("v", i)-("v", j): n_i * n_j
    """
    if len(sizes) != host.k:
        raise DimensionMismatch(
            f"{len(sizes)} sizes for a host on {host.k} vertices"
        )
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    isolated = host.isolated_vertices()
    if isolated:
        raise IsolatedHostVertex(f"host vertex {isolated[0]} has no neighbour")
    vertices: list = [("v", i) for i in range(1, host.k + 1)]
    vertices += [("s", i) for i in range(1, host.k + 1)]
    leaves = {
        i: [BlowupVertex(i, None, s) for s in range(1, sizes[i - 1] + 1)]
        for i in range(1, host.k + 1)
    }
    for i in range(1, host.k + 1):
        vertices.extend(leaves[i])
    edges: list[tuple[object, object, object]] = []
    for i in range(1, host.k + 1):
        mass = sum(sizes[j - 1] for j in host.neighbors(i))
        for leaf in leaves[i]:
            edges.append((("s", i), leaf, mass))
        edges.append((("s", i), ("v", i), -mass * sizes[i - 1]))
    for i, j in host.sorted_edges():
        edges.append((("v", i), ("v", j), sizes[i - 1] * sizes[j - 1]))
    return WeightedNetwork(vertices, edges)


def build_h_nabla(host: HostGraph, sizes: Sequence[int]) -> WeightedNetwork:
    """Host graph with edge ij weighted by conductance n_i * n_j.

    Its resistances are the cross-part backbone of every blow-up
    resistance formula.
    """
    if len(sizes) != host.k:
        raise DimensionMismatch(
            f"{len(sizes)} sizes for a host on {host.k} vertices"
        )
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    if not host.is_connected():
        raise DisconnectedHost("size-weighted host needs a connected host")
    edges = [
        (i, j, sizes[i - 1] * sizes[j - 1]) for i, j in host.sorted_edges()
    ]
    return WeightedNetwork(range(1, host.k + 1), edges)
