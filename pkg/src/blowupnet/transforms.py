"""Local rewrites that preserve resistances among kept vertices.

Each operation replaces a sub-network by an equivalent one: series and
parallel merges, the triangle-star exchange in both directions, the
unit-clique mesh-to-star collapse, the two complete-bipartite
double-star collapses, and pendant-block elimination.  Results are new
networks; inputs are never mutated.  Fresh vertices (star centres,
hubs) get labels "@1", "@2", ... chosen to avoid collisions, and every
surviving vertex keeps its label, so resistances between any two kept
vertices are unchanged -- the property the test suite hammers on random
signed networks.

Weight conventions, all stated as conductances on the new edges:

  series u-x-v            1 / (1/c1 + 1/c2)
  parallel                c1 + c2 + ...
  triangle -> star        arm at a: (r1+r2+r3) / (r2*r3)   (r_i opposite a)
  star -> triangle        edge bc: 1 / (Rb + Rc + Rb*Rc/Ra)
  unit K_s -> star        every arm s
  K_{m,n}, edge weights   x-side arm sum(a), bridge -m*sum(a), y_j arm m*a_j
    (edge x_i y_j carries conductance a_j; the declared 1/a_j is its
     resistance -- reading it as a conductance breaks the invariant, a
     single-edge counterexample of which sits in the tests)
  K_{m,n}, vertex weights x_i arm w(x_i)*W_Y, y_j arm w(y_j)*W_X,
                          bridge -W_X*W_Y      (edge x_i y_j: w(x_i)w(y_j))
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import (
    CenterIsTerminal,
    DegreeNotTwo,
    DenominatorZero,
    NonUniformWeights,
    NotAPendantBlock,
    NotAUnitClique,
    SumZero,
    TerminalInsideBlock,
    TotalConductanceZero,
    VertexIsTerminal,
    ZeroArm,
    ZeroResistanceEdge,
    ZeroA,
)
from .netcore import RationalLike, Vertex, WeightedNetwork, rational


@dataclass(frozen=True)
class RewriteResult:
    """Outcome of one rewrite: the new network plus what changed.

    Surviving vertices keep their labels, so the terminal map is the
    identity on everything not listed in `removed`.
    """

    network: WeightedNetwork
    removed: tuple = ()
    created: tuple = ()


def fresh_labels(net: WeightedNetwork, count: int) -> list[str]:
    """Hub labels "@1", "@2", ... not colliding with existing vertices."""
    out: list[str] = []
    k = 1
    while len(out) < count:
        candidate = f"@{k}"
        if not net.has_vertex(candidate):
            out.append(candidate)
        k += 1
    return out


def _check_not_terminal(v: Vertex, terminals: Iterable[Vertex], error: type) -> None:
    if v in set(terminals):
        raise error(f"{v!r} is a terminal and cannot be eliminated")


def _rebuild(
    net: WeightedNetwork,
    *,
    drop_vertices: Iterable[Vertex] = (),
    drop_edges: Iterable[tuple[Vertex, Vertex, Fraction]] = (),
    add_vertices: Iterable[Vertex] = (),
    add_edges: Iterable[tuple[Vertex, Vertex, RationalLike]] = (),
) -> WeightedNetwork:
    dropped_vs = set(drop_vertices)
    remaining = list(net.edges)
    for e in drop_edges:
        remaining.remove(e)  # removes one copy only, keeping parallels intact
    vertices = [v for v in net.vertices if v not in dropped_vs]
    vertices.extend(add_vertices)
    edges = [
        e for e in remaining if e[0] not in dropped_vs and e[1] not in dropped_vs
    ]
    edges.extend(add_edges)
    return WeightedNetwork(vertices, edges)


# --- series / parallel ---------------------------------------------------------


def series_reduce(
    net: WeightedNetwork,
    through_vertex: Vertex,
    terminals: Iterable[Vertex] = (),
) -> RewriteResult:
    """Drop a degree-two vertex, chaining its two edges into one.

    The two edge resistances add.  If both edges run to the same
    neighbour they form a pendant cycle carrying no through current, so
    the vertex and both edges simply disappear.
    """
    _check_not_terminal(through_vertex, terminals, VertexIsTerminal)
    incident = net.incident(through_vertex)
    if len(incident) != 2:
        raise DegreeNotTwo(
            f"{through_vertex!r} has {len(incident)} incident edges, need 2"
        )
    (a1, b1, c1), (a2, b2, c2) = incident
    u = b1 if a1 == through_vertex else a1
    w = b2 if a2 == through_vertex else a2
    if u == w:
        network = _rebuild(net, drop_vertices=[through_vertex])
        return RewriteResult(network, removed=(through_vertex,))
    r_total = 1 / c1 + 1 / c2
    if r_total == 0:
        raise ZeroResistanceEdge(
            f"series resistances through {through_vertex!r} cancel"
        )
    network = _rebuild(
        net,
        drop_vertices=[through_vertex],
        add_edges=[(u, w, 1 / r_total)],
    )
    return RewriteResult(network, removed=(through_vertex,))


def parallel_reduce(net: WeightedNetwork, u: Vertex, v: Vertex) -> RewriteResult:
    """Merge all parallel edges between u and v into one; conductances add."""
    bundle = net.edges_between(u, v)
    if len(bundle) < 2:
        raise ValueError(f"need at least two parallel edges between {u!r} and {v!r}")
    total = sum((c for _, _, c in bundle), Fraction(0))
    if total == 0:
        raise TotalConductanceZero(
            f"parallel conductances between {u!r} and {v!r} cancel"
        )
    network = _rebuild(net, drop_edges=bundle, add_edges=[(u, v, total)])
    return RewriteResult(network)


# --- triangle / star exchange -----------------------------------------------------


def delta_to_y(
    net: WeightedNetwork, triangle: Sequence[Vertex]
) -> RewriteResult:
    """Replace a triangle by a three-armed star on a fresh centre.

    With r_i the resistance of the edge opposite corner i, the arm at
    corner i gets resistance r_j * r_k / (r_1 + r_2 + r_3).
    """
    a, b, c = triangle
    if len({a, b, c}) != 3:
        raise ValueError("triangle corners must be three distinct vertices")
    sides = []
    for x, y in ((b, c), (a, c), (a, b)):
        bundle = net.edges_between(x, y)
        if len(bundle) != 1:
            raise ValueError(
                f"need exactly one edge between {x!r} and {y!r}, found {len(bundle)}"
            )
        sides.append(bundle[0])
    r1, r2, r3 = (1 / e[2] for e in sides)
    total = r1 + r2 + r3
    if total == 0:
        raise SumZero("triangle resistances sum to zero")
    arms = {a: r2 * r3 / total, b: r1 * r3 / total, c: r1 * r2 / total}
    (center,) = fresh_labels(net, 1)
    network = _rebuild(
        net,
        drop_edges=sides,
        add_vertices=[center],
        add_edges=[(corner, center, 1 / arm) for corner, arm in arms.items()],
    )
    return RewriteResult(network, created=(center,))


def y_to_delta(
    net: WeightedNetwork,
    center: Vertex,
    terminals: Iterable[Vertex] = (),
) -> RewriteResult:
    """Replace a three-armed star by a triangle on its leaves.

    The edge between leaves b and c gets resistance
    Rb + Rc + Rb*Rc/Ra.  Signed arms can make such an edge vanish,
    which has no triangle equivalent.
    """
    _check_not_terminal(center, terminals, CenterIsTerminal)
    incident = net.incident(center)
    if len(incident) != 3:
        raise ValueError(f"{center!r} has {len(incident)} incident edges, need 3")
    leaves = []
    arms = []
    for x, y, cond in incident:
        leaf = y if x == center else x
        arm = 1 / cond
        if arm == 0:
            raise ZeroArm(f"arm to {leaf!r} has zero resistance")
        leaves.append(leaf)
        arms.append(arm)
    if len(set(leaves)) != 3:
        raise ValueError("star leaves must be three distinct vertices")
    new_edges = []
    for i, j, k in ((1, 2, 0), (0, 2, 1), (0, 1, 2)):
        r = arms[i] + arms[j] + arms[i] * arms[j] / arms[k]
        if r == 0:
            raise ZeroResistanceEdge(
                f"triangle edge {leaves[i]!r}-{leaves[j]!r} would have zero resistance"
            )
        new_edges.append((leaves[i], leaves[j], 1 / r))
    network = _rebuild(net, drop_vertices=[center], add_edges=new_edges)
    return RewriteResult(network, removed=(center,))


# --- mesh / star --------------------------------------------------------------------


def mesh_to_star(net: WeightedNetwork, clique: Sequence[Vertex]) -> RewriteResult:
    """Collapse a unit-resistance clique onto a fresh hub.

    Every pair of the given vertices must carry exactly one edge of
    resistance 1; arms to the hub get resistance 1/s for a clique on s
    vertices.  For s = 3 this is the triangle-star exchange.
    """
    vs = list(clique)
    if len(vs) < 2 or len(set(vs)) != len(vs):
        raise ValueError("need at least two distinct clique vertices")
    drop = []
    for x, y in combinations(vs, 2):
        bundle = net.edges_between(x, y)
        if len(bundle) != 1 or bundle[0][2] != 1:
            raise NotAUnitClique(
                f"{x!r}-{y!r} must carry exactly one unit-resistance edge"
            )
        drop.append(bundle[0])
    (hub,) = fresh_labels(net, 1)
    s = len(vs)
    network = _rebuild(
        net,
        drop_edges=drop,
        add_vertices=[hub],
        add_edges=[(v, hub, s) for v in vs],
    )
    return RewriteResult(network, created=(hub,))


# --- complete bipartite / double star --------------------------------------------------


def _check_sides(xs: Sequence[Vertex], ys: Sequence[Vertex]) -> None:
    if not xs or not ys:
        raise ValueError("both sides need at least one vertex")
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise ValueError("side vertices must be distinct")
    if set(xs) & set(ys):
        raise ValueError("the two sides must be disjoint")


def kmn_double_star_edge(
    net: WeightedNetwork,
    xs: Sequence[Vertex],
    ys: Sequence[Vertex],
    a: Sequence[RationalLike],
) -> RewriteResult:
    """Collapse a complete bipartite block with column weights a_j.

    Edge x_i-y_j must carry resistance 1/a_j (conductance a_j).  With
    m = |X| and s = sum(a), the block becomes two hubs: arms x_i of
    resistance 1/s, arms y_j of resistance 1/(m*a_j), and a bridge of
    resistance -1/(m*s).
    """
    _check_sides(xs, ys)
    weights = [rational(v) for v in a]
    if len(weights) != len(ys):
        raise ValueError("need one column weight per y-side vertex")
    if any(w == 0 for w in weights):
        raise ValueError("column weights must be nonzero")
    total = sum(weights, Fraction(0))
    if total == 0:
        raise ZeroA("column weights sum to zero")
    m = len(xs)
    drop = []
    for x in xs:
        for y, w in zip(ys, weights):
            bundle = net.edges_between(x, y)
            if len(bundle) != 1 or bundle[0][2] != w:
                raise NonUniformWeights(
                    f"{x!r}-{y!r} must carry exactly one edge of conductance {w}"
                )
            drop.append(bundle[0])
    x_hub, y_hub = fresh_labels(net, 2)
    add = [(x, x_hub, total) for x in xs]
    add += [(y_hub, y, m * w) for y, w in zip(ys, weights)]
    add.append((x_hub, y_hub, -m * total))
    network = _rebuild(
        net, drop_edges=drop, add_vertices=[x_hub, y_hub], add_edges=add
    )
    return RewriteResult(network, created=(x_hub, y_hub))


def kmn_double_star_vertex(
    net: WeightedNetwork,
    xs: Sequence[Vertex],
    ys: Sequence[Vertex],
    weights: Mapping[Vertex, RationalLike],
) -> RewriteResult:
    """Collapse a complete bipartite block with vertex weights.

    Edge x_i-y_j must carry conductance w(x_i)*w(y_j).  With side sums
    W_X and W_Y, the arms get conductances w(x_i)*W_Y and w(y_j)*W_X
    and the bridge -W_X*W_Y.  Constant weights 1 recover the edge
    variant with unit columns.
    """
    _check_sides(xs, ys)
    try:
        w = {v: rational(weights[v]) for v in (*xs, *ys)}
    except KeyError as exc:
        raise ValueError(f"missing weight for vertex {exc.args[0]!r}") from None
    if any(value == 0 for value in w.values()):
        raise ValueError("vertex weights must be nonzero")
    wx = sum((w[x] for x in xs), Fraction(0))
    wy = sum((w[y] for y in ys), Fraction(0))
    if wx == 0 or wy == 0:
        raise ZeroA("side weights sum to zero")
    drop = []
    for x in xs:
        for y in ys:
            bundle = net.edges_between(x, y)
            if len(bundle) != 1 or bundle[0][2] != w[x] * w[y]:
                raise NonUniformWeights(
                    f"{x!r}-{y!r} must carry exactly one edge of conductance {w[x] * w[y]}"
                )
            drop.append(bundle[0])
    x_hub, y_hub = fresh_labels(net, 2)
    add = [(x, x_hub, w[x] * wy) for x in xs]
    add += [(y_hub, y, w[y] * wx) for y in ys]
    add.append((x_hub, y_hub, -wx * wy))
    network = _rebuild(
        net, drop_edges=drop, add_vertices=[x_hub, y_hub], add_edges=add
    )
    return RewriteResult(network, created=(x_hub, y_hub))


# --- block elimination ------------------------------------------------------------------


def eliminate_block(
    net: WeightedNetwork,
    block: Iterable[Vertex],
    cut_vertex: Vertex,
    terminals: Iterable[Vertex] = (),
) -> RewriteResult:
    """Delete a sub-network hanging off a single cut vertex.

    No current between outside vertices ever enters such a block, so
    resistances outside it are untouched.  The block interior must not
    contain terminals and must touch the rest of the network only at
    the cut vertex.
    """
    block_set = set(block)
    if cut_vertex not in block_set:
        raise ValueError("the cut vertex must belong to the block")
    interior = block_set - {cut_vertex}
    if not interior:
        raise ValueError("the block must contain vertices besides the cut vertex")
    inside_terminals = interior & set(terminals)
    if inside_terminals:
        raise TerminalInsideBlock(
            f"terminals inside the block: {sorted(map(repr, inside_terminals))}"
        )
    for x, y, _ in net.edges:
        if (x in interior) != (y in interior) and cut_vertex not in (x, y):
            raise NotAPendantBlock(
                f"edge {x!r}-{y!r} leaves the block other than through the cut vertex"
            )
    network = _rebuild(net, drop_vertices=interior)
    return RewriteResult(network, removed=tuple(v for v in net.vertices if v in interior))


# --- apex-clique closed form ---------------------------------------------------------------


def apex_clique_resistances(
    r: RationalLike, clique_size: int
) -> tuple[Fraction, Fraction | None]:
    """Resistances in a unit clique whose vertices hang off an apex by arms r.

    Returns (apex-to-clique, clique-to-clique); the second is None for
    a one-vertex clique.  Both share the denominator s*r + 1, which a
    signed r can annihilate.
    """
    if clique_size < 1:
        raise ValueError("clique size must be at least 1")
    arm = rational(r)
    denom = clique_size * arm + 1
    if denom == 0:
        raise DenominatorZero(f"arm resistance {arm} makes s*r + 1 vanish")
    apex = arm * (arm + 1) / denom
    within = 2 * arm / denom if clique_size >= 2 else None
    return apex, within


# --- named dispatch (scripts, sweeps) ---------------------------------------------------------


def apply_named(
    net: WeightedNetwork,
    op: str,
    params: Mapping[str, object],
    terminals: Iterable[Vertex] = (),
) -> RewriteResult:
    """Run one rewrite by name with keyword parameters.

    This is the single entry point used by transform scripts and the
    randomized sweeps, so op names stay in one place.
    """
    if op == "series_reduce":
        return series_reduce(net, params["vertex"], terminals)
    if op == "parallel_reduce":
        return parallel_reduce(net, params["u"], params["v"])
    if op == "delta_to_y":
        return delta_to_y(net, params["vertices"])
    if op == "y_to_delta":
        return y_to_delta(net, params["center"], terminals)
    if op == "mesh_to_star":
        return mesh_to_star(net, params["vertices"])
    if op == "kmn_double_star_edge":
        return kmn_double_star_edge(net, params["x"], params["y"], params["a"])
    if op == "kmn_double_star_vertex":
        return kmn_double_star_vertex(net, params["x"], params["y"], params["weights"])
    if op == "eliminate_block":
        return eliminate_block(net, params["block"], params["cut"], terminals)
    raise ValueError(f"unknown rewrite: {op!r}")
