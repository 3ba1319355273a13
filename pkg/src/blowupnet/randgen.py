"""Seeded random instances for verification sweeps.

Everything is driven by an explicit `random.Random`, so a seed fixes
the whole sweep; nothing here touches global state.  Networks meant for
rewrite checks carry a sprinkling of negative conductances on purpose:
the rewrites must be exact on signed networks too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from random import Random
from typing import Sequence

from .blowup import BlowupSpec, CoreSatelliteSpec, HostGraph, UnbalancedSpec
from .netcore import WeightedNetwork


def random_conductance(rng: Random, allow_negative: bool = True) -> Fraction:
    num = rng.randint(1, 6)
    den = rng.randint(1, 4)
    if allow_negative and rng.random() < 0.2:
        num = -num
    return Fraction(num, den)


def random_connected_network(
    rng: Random,
    min_vertices: int = 3,
    max_vertices: int = 8,
    allow_negative: bool = True,
    extra_edges: int = 3,
) -> WeightedNetwork:
    """Random spanning tree plus a few extra (possibly parallel) edges."""
    n = rng.randint(min_vertices, max_vertices)
    labels = [f"n{i}" for i in range(1, n + 1)]
    edges: list[tuple[str, str, Fraction]] = []
    for i in range(1, n):
        j = rng.randrange(i)
        edges.append((labels[j], labels[i], random_conductance(rng, allow_negative)))
    for _ in range(rng.randint(0, extra_edges)):
        i, j = rng.sample(range(n), 2)
        edges.append((labels[i], labels[j], random_conductance(rng, allow_negative)))
    return WeightedNetwork(labels, edges)


# --- blow-up instances -----------------------------------------------------------


_MAX_TRIES = 1000


def _give_up() -> None:
    raise ValueError("size bounds admit no valid instance")


def _random_counts(
    rng: Random, k: int, t: int, max_part: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    p = []
    q = []
    for _ in range(k):
        while True:
            pi = rng.randint(0, max_part)
            qi = rng.randint(0, max_part)
            if t * pi + qi >= 1:
                break
        p.append(pi)
        q.append(qi)
    return tuple(p), tuple(q)


def random_complete_blowup_spec(
    rng: Random,
    min_k: int = 1,
    max_k: int = 5,
    max_t: int = 4,
    max_part: int = 2,
    max_n: int = 40,
) -> BlowupSpec:
    """Spec for a complete host; k = 1 degenerates to a single clique."""
    for _ in range(_MAX_TRIES):
        k = rng.randint(min_k, max_k)
        t = rng.randint(1, max_t)
        if k == 1:
            spec = BlowupSpec(t, (1,), (0,))
        else:
            p, q = _random_counts(rng, k, t, max_part)
            spec = BlowupSpec(t, p, q)
        if spec.n <= max_n:
            return spec
    _give_up()


def random_connected_host(rng: Random, min_k: int = 2, max_k: int = 5) -> HostGraph:
    k = rng.randint(min_k, max_k)
    if k == 1:
        return HostGraph(1, frozenset())
    while True:
        edges = [e for e in combinations(range(1, k + 1), 2) if rng.random() < 0.55]
        host = HostGraph.from_edges(k, edges)
        if host.is_connected():
            return host


def random_spec_for_k(
    rng: Random,
    k: int,
    max_t: int = 3,
    max_part: int = 2,
    max_n: int = 40,
) -> BlowupSpec:
    for _ in range(_MAX_TRIES):
        t = rng.randint(1, max_t)
        p, q = _random_counts(rng, k, t, max_part)
        spec = BlowupSpec(t, p, q)
        if spec.n <= max_n:
            return spec
    _give_up()


def random_blowup_instance(
    rng: Random,
    max_k: int = 5,
    max_t: int = 3,
    max_part: int = 2,
    max_n: int = 40,
) -> tuple[HostGraph, BlowupSpec]:
    """Connected host plus a spec that mixes clique and isolated roles."""
    for _ in range(_MAX_TRIES):
        host = random_connected_host(rng, 2, max_k)
        t = rng.randint(1, max_t)
        p, q = _random_counts(rng, host.k, t, max_part)
        spec = BlowupSpec(t, p, q)
        if spec.n <= max_n:
            return host, spec
    _give_up()


def random_unbalanced_instance(
    rng: Random,
    max_k: int = 5,
    max_size: int = 4,
    max_n: int = 40,
) -> tuple[HostGraph, UnbalancedSpec]:
    for _ in range(_MAX_TRIES):
        host = random_connected_host(rng, 2, max_k)
        kinds = tuple(rng.choice(("empty", "clique")) for _ in range(host.k))
        sizes = tuple(rng.randint(1, max_size) for _ in range(host.k))
        spec = UnbalancedSpec(kinds, sizes)
        if spec.n <= max_n:
            return host, spec
    _give_up()


def random_core_satellite_spec(
    rng: Random, max_k: int = 5, max_size: int = 4
) -> CoreSatelliteSpec:
    k = rng.randint(1, max_k)
    return CoreSatelliteSpec(tuple(rng.randint(1, max_size) for _ in range(k)))


def random_matching(rng: Random, k: int) -> tuple[tuple[int, int], ...]:
    """Disjoint part pairs, possibly empty, never covering everything on k <= 2."""
    indices = list(range(1, k + 1))
    rng.shuffle(indices)
    max_pairs = max(0, (k - 1) // 2)
    count = rng.randint(0, max_pairs)
    return tuple(
        (min(indices[2 * i], indices[2 * i + 1]), max(indices[2 * i], indices[2 * i + 1]))
        for i in range(count)
    )


# --- rewrite instances ------------------------------------------------------------


@dataclass(frozen=True)
class RewriteCase:
    """One seeded rewrite check: network, op parameters and kept terminals."""

    op: str
    net: WeightedNetwork
    params: dict
    terminals: frozenset


def _attach(base_edges, rng, new_vertex, anchors, allow_negative=True, count=1):
    for _ in range(count):
        base_edges.append(
            (new_vertex, rng.choice(anchors), random_conductance(rng, allow_negative))
        )


def random_rewrite_case(op: str, rng: Random) -> RewriteCase:
    """Plant the sub-network the op expects inside a random ambient network."""
    # double-star cases add up to six fresh vertices; keep totals small
    base_max = 4 if op.startswith("kmn") else 6
    base = random_connected_network(rng, 3, base_max)
    vertices = list(base.vertices)
    edges = list(base.edges)

    if op == "series_reduce":
        u, w = rng.sample(vertices, 2)
        mid = "mid"
        vertices.append(mid)
        c1 = random_conductance(rng)
        while True:
            c2 = random_conductance(rng)
            # a cancelling pair (resistances summing to zero) has no
            # series equivalent
            if c1 + c2 != 0:
                break
        edges.append((u, mid, c1))
        edges.append((mid, w, c2))
        net = WeightedNetwork(vertices, edges)
        return RewriteCase(op, net, {"vertex": mid}, frozenset(base.vertices))

    if op == "parallel_reduce":
        u, w = rng.sample(vertices, 2)
        existing = sum((c for x, y, c in edges if {x, y} == {u, w}), Fraction(0))
        while True:
            bundle = [random_conductance(rng) for _ in range(rng.randint(2, 3))]
            # the merge covers ambient edges too, so the whole bundle
            # must keep a nonzero total
            if existing + sum(bundle) != 0:
                break
        edges.extend((u, w, c) for c in bundle)
        net = WeightedNetwork(vertices, edges)
        return RewriteCase(op, net, {"u": u, "v": w}, frozenset(vertices))

    if op == "delta_to_y":
        corners = [f"t{i}" for i in range(3)]
        vertices.extend(corners)
        while True:
            sides = [random_conductance(rng) for _ in range(3)]
            # signed side resistances may sum to zero, which the
            # exchange cannot handle
            if sum(1 / c for c in sides) != 0:
                break
        for (x, y), c in zip(combinations(corners, 2), sides):
            edges.append((x, y, c))
        for corner in corners:
            _attach(edges, rng, corner, vertices[: len(base.vertices)])
        net = WeightedNetwork(vertices, edges)
        return RewriteCase(op, net, {"vertices": tuple(corners)}, frozenset(vertices))

    if op == "y_to_delta":
        center = "ctr"
        leaves = rng.sample(vertices, 3)
        vertices.append(center)
        while True:
            arms = [1 / random_conductance(rng) for _ in range(3)]
            # every produced triangle edge must come out nonzero
            if all(
                arms[i] + arms[j] + arms[i] * arms[j] / arms[k] != 0
                for i, j, k in ((1, 2, 0), (0, 2, 1), (0, 1, 2))
            ):
                break
        for leaf, arm in zip(leaves, arms):
            edges.append((center, leaf, 1 / arm))
        net = WeightedNetwork(vertices, edges)
        return RewriteCase(op, net, {"center": center}, frozenset(base.vertices))

    if op == "mesh_to_star":
        s = rng.randint(2, 4)
        clique = [f"m{i}" for i in range(s)]
        vertices.extend(clique)
        for x, y in combinations(clique, 2):
            edges.append((x, y, 1))
        for v in clique:
            _attach(edges, rng, v, vertices[: len(base.vertices)])
        net = WeightedNetwork(vertices, edges)
        return RewriteCase(op, net, {"vertices": tuple(clique)}, frozenset(vertices))

    if op == "kmn_double_star_edge":
        m, s = rng.randint(1, 3), rng.randint(1, 3)
        xs = [f"x{i}" for i in range(m)]
        ys = [f"y{j}" for j in range(s)]
        while True:
            weights = [random_conductance(rng) for _ in range(s)]
            if sum(weights) != 0:
                break
        vertices.extend(xs + ys)
        for x in xs:
            for y, w in zip(ys, weights):
                edges.append((x, y, w))
        for v in (*xs, *ys):
            _attach(edges, rng, v, vertices[: len(base.vertices)])
        net = WeightedNetwork(vertices, edges)
        return RewriteCase(
            op, net, {"x": tuple(xs), "y": tuple(ys), "a": tuple(weights)}, frozenset(vertices)
        )

    if op == "kmn_double_star_vertex":
        m, s = rng.randint(1, 3), rng.randint(1, 3)
        xs = [f"x{i}" for i in range(m)]
        ys = [f"y{j}" for j in range(s)]
        while True:
            weights = {v: random_conductance(rng) for v in (*xs, *ys)}
            if sum(weights[x] for x in xs) != 0 and sum(weights[y] for y in ys) != 0:
                break
        vertices.extend(xs + ys)
        for x in xs:
            for y in ys:
                edges.append((x, y, weights[x] * weights[y]))
        for v in (*xs, *ys):
            _attach(edges, rng, v, vertices[: len(base.vertices)])
        net = WeightedNetwork(vertices, edges)
        return RewriteCase(
            op, net, {"x": tuple(xs), "y": tuple(ys), "weights": weights}, frozenset(vertices)
        )

    if op == "eliminate_block":
        cut = rng.choice(vertices)
        block_interior = random_connected_network(rng, 2, 4)
        mapping = {v: f"b.{v}" for v in block_interior.vertices}
        block_vs = list(mapping.values())
        vertices.extend(block_vs)
        for x, y, c in block_interior.edges:
            edges.append((mapping[x], mapping[y], c))
        for v in rng.sample(block_vs, rng.randint(1, len(block_vs))):
            edges.append((cut, v, random_conductance(rng)))
        net = WeightedNetwork(vertices, edges)
        return RewriteCase(
            op,
            net,
            {"block": tuple([cut, *block_vs]), "cut": cut},
            frozenset(base.vertices),
        )

    raise ValueError(f"unknown rewrite: {op!r}")


REWRITE_OPS = (
    "series_reduce",
    "parallel_reduce",
    "delta_to_y",
    "y_to_delta",
    "mesh_to_star",
    "kmn_double_star_edge",
    "kmn_double_star_vertex",
    "eliminate_block",
)
