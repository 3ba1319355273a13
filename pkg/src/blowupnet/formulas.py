"""Closed-form spanning-tree counts, resistances and Kirchhoff indices.

Every function here evaluates an explicit rational expression in the
blow-up parameters; none of them solves a linear system over the full
blow-up.  The only network ever solved is the k-vertex size-weighted
host, whose resistances are the cross-part backbone.  The test suite
holds each value against the matrix-tree and grounded-Laplacian oracles
in `netcore`.

Notation used throughout: part i has size n_i = t*p_i + q_i, the total
order is n, and the "neighbour mass" of part i is the sum of the sizes
of its host neighbours.  Within-part and cross-part resistances fall
into eight classes depending on whether each endpoint lies in a clique
(p-role) or is isolated (q-role) and, within one part, whether the two
endpoints share a clique.

One deliberate correction is wired in: the cross-part isolated-isolated
term of the Kirchhoff index carries multiplicity q_i*q_j.  The variant
with q_i*p_j (see `kirchhoff_with_qp_cross_weight`) is kept only to
document that it disagrees with the pair-sum oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .blowup import (
    BlowupSpec,
    BlowupVertex,
    CoreSatelliteSpec,
    HostGraph,
    UnbalancedSpec,
    build_h_nabla,
)
from .errors import (
    DimensionMismatch,
    Disconnected,
    DisconnectedHost,
    InvalidFamilyParams,
    IsolatedHostVertex,
    NonCompleteHost,
    SameVertex,
)
from .netcore import kf_spectral_check, resistance, resistance_matrix


# --- pair classification ------------------------------------------------------


class PairKind(Enum):
    SAME_QQ = "same-isolated-isolated"
    SAME_PQ = "same-clique-isolated"
    SAME_PP_ADJ = "same-clique-adjacent"
    SAME_PP_NONADJ = "same-clique-nonadjacent"
    CROSS_QQ = "cross-isolated-isolated"
    CROSS_QP = "cross-isolated-clique"
    CROSS_PQ = "cross-clique-isolated"
    CROSS_PP = "cross-clique-clique"


@dataclass(frozen=True)
class PairClass:
    """Which of the eight resistance classes a vertex pair falls into."""

    kind: PairKind
    i: int
    j: int | None = None


def classify_pair(u: BlowupVertex, v: BlowupVertex) -> PairClass:
    """Classify an ordered pair of blow-up vertices."""
    if u == v:
        raise SameVertex(f"classify needs two distinct vertices, got {u.label()}")
    if u.part == v.part:
        i = u.part
        if not u.is_clique and not v.is_clique:
            return PairClass(PairKind.SAME_QQ, i)
        if u.is_clique != v.is_clique:
            return PairClass(PairKind.SAME_PQ, i)
        if u.clique == v.clique:
            return PairClass(PairKind.SAME_PP_ADJ, i)
        return PairClass(PairKind.SAME_PP_NONADJ, i)
    i, j = u.part, v.part
    if not u.is_clique and not v.is_clique:
        return PairClass(PairKind.CROSS_QQ, i, j)
    if not u.is_clique:
        return PairClass(PairKind.CROSS_QP, i, j)
    if not v.is_clique:
        return PairClass(PairKind.CROSS_PQ, i, j)
    return PairClass(PairKind.CROSS_PP, i, j)


# --- per-part rate bundle ------------------------------------------------------


def _neighbor_mass(host: HostGraph, sizes: Sequence[int], i: int) -> int:
    mass = sum(sizes[j - 1] for j in host.neighbors(i))
    if mass == 0:
        raise IsolatedHostVertex(f"host vertex {i} has no neighbour")
    return mass


@dataclass(frozen=True)
class HostLocalRates:
    """Pendant-arm rates of a part pair used by every cross formula.

    `leaf_*` is the reciprocal neighbour mass of the part (the
    resistance of one leaf arm in the equivalent star gadget) and
    `bridge_*` the signed hub correction -leaf/n for that part.
    """

    leaf_i: Fraction
    leaf_j: Fraction
    bridge_i: Fraction
    bridge_j: Fraction

    @classmethod
    def for_parts(
        cls, host: HostGraph, sizes: Sequence[int], i: int, j: int
    ) -> "HostLocalRates":
        leaf_i = Fraction(1, _neighbor_mass(host, sizes, i))
        leaf_j = Fraction(1, _neighbor_mass(host, sizes, j))
        return cls(
            leaf_i=leaf_i,
            leaf_j=leaf_j,
            bridge_i=-leaf_i / sizes[i - 1],
            bridge_j=-leaf_j / sizes[j - 1],
        )


def _apex_path(r: Fraction, clique_size: int) -> Fraction:
    """Resistance from inside a clique out through its pendant apex: r(r+1)/(sr+1)."""
    return r * (r + 1) / (clique_size * r + 1)


def _within_value(r: Fraction, t: int, kind: PairKind) -> Fraction:
    if kind is PairKind.SAME_QQ:
        return 2 * r
    if kind is PairKind.SAME_PQ:
        return _apex_path(r, t) + r
    if kind is PairKind.SAME_PP_ADJ:
        return 2 * r / (t * r + 1)
    if kind is PairKind.SAME_PP_NONADJ:
        return 2 * _apex_path(r, t)
    raise ValueError(f"not a within-part kind: {kind}")


def _side_value(leaf: Fraction, size: int, clique_size: int, in_clique: bool) -> Fraction:
    """One endpoint's contribution to a cross-part resistance.

    A clique endpoint pays the apex path, an isolated endpoint one leaf
    arm; both pay the signed bridge -leaf/size.
    """
    base = _apex_path(leaf, clique_size) if in_clique else leaf
    return base - leaf / size


# --- spectrum and tree count (complete hosts) -----------------------------------


@dataclass(frozen=True)
class SpectrumSummary:
    """Nonzero Laplacian spectrum as (eigenvalue, multiplicity) pairs.

    The zero eigenvalue is implied; multiplicities add up to order - 1
    for a connected graph.
    """

    order: int
    nonzero: tuple[tuple[Fraction, int], ...]

    def reciprocal_sum(self) -> Fraction:
        return sum((Fraction(m) / lam for lam, m in self.nonzero), Fraction(0))

    def tree_count(self) -> Fraction:
        """Product of nonzero eigenvalues over the order."""
        prod = Fraction(1)
        for lam, m in self.nonzero:
            prod *= lam**m
        return prod / self.order


def _require_complete(host: HostGraph | None) -> None:
    if host is not None and not host.is_complete():
        raise NonCompleteHost(
            "this closed form only holds over a complete host"
        )


def _require_blowup_connected(spec: BlowupSpec) -> None:
    # over a complete host the blow-up is connected unless there is a
    # single part consisting of more than one piece
    if spec.k == 1 and spec.p[0] + spec.q[0] != 1:
        raise Disconnected("single-part blow-up splits into multiple pieces")


def blowup_spectrum(spec: BlowupSpec, host: HostGraph | None = None) -> SpectrumSummary:
    """Laplacian spectrum of a complete-host blow-up.

    Besides the zero, the spectrum is n with multiplicity k-1 and, per
    part, n - n_i with multiplicity p_i + q_i - 1 and n - n_i + t with
    multiplicity p_i (t - 1).  (The complement shift adds t, not
    subtracts it; the subtractive variant fails the characteristic
    polynomial check in the tests.)
    """
    _require_complete(host)
    _require_blowup_connected(spec)
    n = spec.n
    counts: dict[Fraction, int] = {}

    def add(lam: int, mult: int) -> None:
        if mult > 0:
            key = Fraction(lam)
            counts[key] = counts.get(key, 0) + mult

    add(n, spec.k - 1)
    for pi, qi, ni in zip(spec.p, spec.q, spec.sizes):
        add(n - ni, pi + qi - 1)
        add(n - ni + spec.t, pi * (spec.t - 1))
    nonzero = tuple(sorted(counts.items()))
    total = sum(m for _, m in nonzero)
    if total != n - 1:
        raise AssertionError(f"spectrum multiplicities sum to {total}, not {n - 1}")
    return SpectrumSummary(order=n, nonzero=nonzero)


def tau_closed_form(spec: BlowupSpec, host: HostGraph | None = None) -> int:
    """Spanning-tree count of a complete-host blow-up.

    tau = n^(k-2) * prod_i (n - n_i)^(p_i + q_i - 1) (n - n_i + t)^(p_i (t-1))
    with the convention 0^0 = 1.  The single-part case k = 1 divides by
    n and still lands on an integer (one t-clique gives t^(t-2)).
    """
    _require_complete(host)
    _require_blowup_connected(spec)
    n, k, t = spec.n, spec.k, spec.t
    value = Fraction(n) ** (k - 2)
    for pi, qi, ni in zip(spec.p, spec.q, spec.sizes):
        value *= Fraction(n - ni) ** (pi + qi - 1)
        value *= Fraction(n - ni + t) ** (pi * (t - 1))
    if value.denominator != 1:
        raise AssertionError(f"tree count {value} is not an integer")
    return int(value)


def kirchhoff_spectral(spec: BlowupSpec, host: HostGraph | None = None) -> Fraction:
    """Kirchhoff index of a complete-host blow-up from its spectrum."""
    summary = blowup_spectrum(spec, host)
    return kf_spectral_check(summary.reciprocal_sum(), summary.order)


# --- host backbone ---------------------------------------------------------------


def host_resistance(
    host: HostGraph, sizes: Sequence[int]
) -> dict[tuple[int, int], Fraction]:
    """All-pairs resistances of the size-weighted host (edge ij gets n_i n_j).

    This solves only a k-vertex network; it is the one linear solve the
    closed forms are allowed.
    """
    return resistance_matrix(build_h_nabla(host, sizes))


def _validate_blowup_pair(
    host: HostGraph, spec: BlowupSpec, u: BlowupVertex, v: BlowupVertex
) -> None:
    if spec.k != host.k:
        raise DimensionMismatch(
            f"spec has {spec.k} parts but host has {host.k} vertices"
        )
    if u == v:
        raise SameVertex(f"resistance needs two distinct vertices, got {u.label()}")
    for w in (u, v):
        if not spec.contains(w):
            raise ValueError(f"{w.label()} is not a vertex of this blow-up")
    if not host.is_connected():
        raise DisconnectedHost("resistance formulas need a connected host")


def resistance_closed_form(
    host: HostGraph, spec: BlowupSpec, u: BlowupVertex, v: BlowupVertex
) -> Fraction:
    """Resistance distance between two blow-up vertices, by class.

    Within a part everything is a function of the part's reciprocal
    neighbour mass r and t; across parts the value is the size-weighted
    host resistance plus one pendant-arm contribution per endpoint.
    """
    _validate_blowup_pair(host, spec, u, v)
    cls = classify_pair(u, v)
    sizes = spec.sizes
    if cls.j is None:
        r = Fraction(1, _neighbor_mass(host, sizes, cls.i))
        return _within_value(r, spec.t, cls.kind)
    rates = HostLocalRates.for_parts(host, sizes, cls.i, cls.j)
    backbone = resistance(build_h_nabla(host, sizes), cls.i, cls.j)
    side_u = _side_value(rates.leaf_i, sizes[cls.i - 1], spec.t, u.is_clique)
    side_v = _side_value(rates.leaf_j, sizes[cls.j - 1], spec.t, v.is_clique)
    return backbone + side_u + side_v


def _kirchhoff_sum(host: HostGraph, spec: BlowupSpec, qq_cross_weight: bool) -> Fraction:
    if spec.k != host.k:
        raise DimensionMismatch(
            f"spec has {spec.k} parts but host has {host.k} vertices"
        )
    if not host.is_connected():
        raise DisconnectedHost("Kirchhoff formulas need a connected host")
    sizes = spec.sizes
    t = spec.t
    backbone = host_resistance(host, sizes) if host.k > 1 else {}
    total = Fraction(0)
    for i in range(1, spec.k + 1):
        pi, qi = spec.p[i - 1], spec.q[i - 1]
        r = Fraction(1, _neighbor_mass(host, sizes, i))
        total += Fraction(qi * (qi - 1), 2) * _within_value(r, t, PairKind.SAME_QQ)
        total += pi * qi * t * _within_value(r, t, PairKind.SAME_PQ)
        total += pi * Fraction(t * (t - 1), 2) * _within_value(r, t, PairKind.SAME_PP_ADJ)
        total += Fraction(pi * (pi - 1), 2) * t * t * _within_value(
            r, t, PairKind.SAME_PP_NONADJ
        )
    for i, j in combinations(range(1, spec.k + 1), 2):
        pi, qi = spec.p[i - 1], spec.q[i - 1]
        pj, qj = spec.p[j - 1], spec.q[j - 1]
        rates = HostLocalRates.for_parts(host, sizes, i, j)
        base = backbone[(i, j)]
        q_i_side = _side_value(rates.leaf_i, sizes[i - 1], t, False)
        p_i_side = _side_value(rates.leaf_i, sizes[i - 1], t, True)
        q_j_side = _side_value(rates.leaf_j, sizes[j - 1], t, False)
        p_j_side = _side_value(rates.leaf_j, sizes[j - 1], t, True)
        qq_weight = qi * qj if qq_cross_weight else qi * pj
        total += qq_weight * (base + q_i_side + q_j_side)
        total += qi * t * pj * (base + q_i_side + p_j_side)
        total += t * pi * qj * (base + p_i_side + q_j_side)
        total += t * t * pi * pj * (base + p_i_side + p_j_side)
    return total


def kirchhoff_closed_form(host: HostGraph, spec: BlowupSpec) -> Fraction:
    """Kirchhoff index as a multiplicity-weighted sum over the eight classes."""
    return _kirchhoff_sum(host, spec, qq_cross_weight=True)


def kirchhoff_with_qp_cross_weight(host: HostGraph, spec: BlowupSpec) -> Fraction:
    """Variant weighting the cross isolated-isolated term by q_i*p_j.

    Kept only as documentation: whenever some q_i*q_j differs from
    q_i*p_j this disagrees with the pair-sum oracle, which is exactly
    what the regression test asserts.
    """
    return _kirchhoff_sum(host, spec, qq_cross_weight=False)


# --- non-uniform parts -------------------------------------------------------------


def _validate_unbalanced_pair(
    host: HostGraph, spec: UnbalancedSpec, u: BlowupVertex, v: BlowupVertex
) -> None:
    if spec.k != host.k:
        raise DimensionMismatch(
            f"spec has {spec.k} parts but host has {host.k} vertices"
        )
    if u == v:
        raise SameVertex(f"resistance needs two distinct vertices, got {u.label()}")
    for w in (u, v):
        if not spec.contains(w):
            raise ValueError(f"{w.label()} is not a vertex of this blow-up")
    if not host.is_connected():
        raise DisconnectedHost("resistance formulas need a connected host")


def unbalanced_resistance(
    host: HostGraph, spec: UnbalancedSpec, u: BlowupVertex, v: BlowupVertex
) -> Fraction:
    """Resistance distance when each part is its own clique or independent set.

    Same shape as the uniform case with the part size playing the
    clique-size role: within a clique part 2r/(n_i r + 1), within an
    empty part 2r, and across parts the host backbone plus per-side
    arms.
    """
    _validate_unbalanced_pair(host, spec, u, v)
    sizes = spec.sizes
    if u.part == v.part:
        i = u.part
        r = Fraction(1, _neighbor_mass(host, sizes, i))
        if spec.kinds[i - 1] == "clique":
            return 2 * r / (sizes[i - 1] * r + 1)
        return 2 * r
    i, j = u.part, v.part
    rates = HostLocalRates.for_parts(host, sizes, i, j)
    backbone = resistance(build_h_nabla(host, sizes), i, j)
    side_u = _side_value(
        rates.leaf_i, sizes[i - 1], sizes[i - 1], spec.kinds[i - 1] == "clique"
    )
    side_v = _side_value(
        rates.leaf_j, sizes[j - 1], sizes[j - 1], spec.kinds[j - 1] == "clique"
    )
    return backbone + side_u + side_v


def unbalanced_kf(host: HostGraph, spec: UnbalancedSpec) -> Fraction:
    """Kirchhoff index of a non-uniform blow-up, summed class by class."""
    if spec.k != host.k:
        raise DimensionMismatch(
            f"spec has {spec.k} parts but host has {host.k} vertices"
        )
    if not host.is_connected():
        raise DisconnectedHost("Kirchhoff formulas need a connected host")
    sizes = spec.sizes
    backbone = host_resistance(host, sizes) if host.k > 1 else {}
    total = Fraction(0)
    for i in range(1, spec.k + 1):
        ni = sizes[i - 1]
        r = Fraction(1, _neighbor_mass(host, sizes, i))
        if spec.kinds[i - 1] == "clique":
            within = 2 * r / (ni * r + 1)
        else:
            within = 2 * r
        total += Fraction(ni * (ni - 1), 2) * within
    for i, j in combinations(range(1, spec.k + 1), 2):
        ni, nj = sizes[i - 1], sizes[j - 1]
        rates = HostLocalRates.for_parts(host, sizes, i, j)
        side_i = _side_value(rates.leaf_i, ni, ni, spec.kinds[i - 1] == "clique")
        side_j = _side_value(rates.leaf_j, nj, nj, spec.kinds[j - 1] == "clique")
        total += ni * nj * (backbone[(i, j)] + side_i + side_j)
    return total


# --- core-satellite family ----------------------------------------------------------


def _validate_core_satellite_pair(
    spec: CoreSatelliteSpec, u: BlowupVertex, v: BlowupVertex
) -> None:
    if u == v:
        raise SameVertex(f"resistance needs two distinct vertices, got {u.label()}")
    _, unbalanced = spec.as_unbalanced()
    for w in (u, v):
        if not unbalanced.contains(w):
            raise ValueError(f"{w.label()} is not a vertex of this graph")


def core_satellite_resistance(
    spec: CoreSatelliteSpec, u: BlowupVertex, v: BlowupVertex
) -> Fraction:
    """Resistance in a core clique with pendant satellite cliques.

    Four cases: inside the core 2/n; inside satellite i 2/(n_1 + n_i);
    core to satellite i (n_1 - 1)/(n n_1) + (n_1 + 1)/(n_1 (n_1 + n_i));
    and across satellites the two satellite arms added.
    """
    _validate_core_satellite_pair(spec, u, v)
    sizes = spec.sizes
    n, n1 = spec.n, sizes[0]
    i, j = sorted((u.part, v.part))
    if i == j == 1:
        return Fraction(2, n)
    if i == j:
        return Fraction(2, n1 + sizes[i - 1])
    if i == 1:
        return Fraction(n1 - 1, n * n1) + Fraction(n1 + 1, n1 * (n1 + sizes[j - 1]))
    return Fraction(n1 + 1, n1 * (n1 + sizes[i - 1])) + Fraction(
        n1 + 1, n1 * (n1 + sizes[j - 1])
    )


def core_satellite_kf(spec: CoreSatelliteSpec) -> Fraction:
    """Kirchhoff index of a core-satellite graph, summed over the four cases."""
    sizes = spec.sizes
    n, n1 = spec.n, sizes[0]
    total = Fraction(n1 * (n1 - 1), 2) * Fraction(2, n)
    for i in range(2, spec.k + 1):
        ni = sizes[i - 1]
        total += n1 * ni * (
            Fraction(n1 - 1, n * n1) + Fraction(n1 + 1, n1 * (n1 + ni))
        )
        total += Fraction(ni * (ni - 1), 2) * Fraction(2, n1 + ni)
    for i, j in combinations(range(2, spec.k + 1), 2):
        ni, nj = sizes[i - 1], sizes[j - 1]
        total += ni * nj * (
            Fraction(n1 + 1, n1 * (n1 + ni)) + Fraction(n1 + 1, n1 * (n1 + nj))
        )
    return total


# --- special-host tables --------------------------------------------------------------
#
# The four families below are independent transcriptions of the
# specialized tables, kept deliberately separate from the general
# formula so that the specialization tests compare two different
# derivations.  Denominator shapes follow the per-part "free mass"
# m_i = n - n_i - (sizes of the non-neighbours of i).


def _table_within(m: int, t: int, u: BlowupVertex, v: BlowupVertex) -> Fraction:
    if not u.is_clique and not v.is_clique:
        return Fraction(2, m)
    if u.is_clique != v.is_clique:
        return Fraction(2 * m + t + 1, m * (m + t))
    if u.clique == v.clique:
        return Fraction(2, m + t)
    return Fraction(2 * (m + 1), m * (m + t))


def _table_side(n_i: int, m_i: int, t: int, in_clique: bool) -> Fraction:
    if in_clique:
        return Fraction((n_i - 1) * (m_i + 1) + 1 - t, n_i * m_i * (m_i + t))
    return Fraction(n_i - 1, n_i * m_i)


def complete_host_resistance(
    spec: BlowupSpec, u: BlowupVertex, v: BlowupVertex
) -> Fraction:
    """Blow-up of a complete host: every part sees all the others."""
    host = HostGraph.complete(spec.k)
    _validate_blowup_pair(host, spec, u, v)
    sizes = spec.sizes
    n, t = spec.n, spec.t
    ni, nj = sizes[u.part - 1], sizes[v.part - 1]
    if u.part == v.part:
        return _table_within(n - ni, t, u, v)

    def endpoint(na: int, in_clique: bool) -> Fraction:
        if in_clique:
            return Fraction((n - 1) * (n - na + 1) + 1 - t, n * (n - na) * (n - na + t))
        return Fraction(n - 1, n * (n - na))

    return endpoint(ni, u.is_clique) + endpoint(nj, v.is_clique)


def complete_minus_matching_resistance(
    spec: BlowupSpec,
    matching: Sequence[tuple[int, int]],
    u: BlowupVertex,
    v: BlowupVertex,
) -> Fraction:
    """Complete host with a matching removed: matched parts never meet.

    The matching is explicit: disjoint pairs of part indices; parts
    outside it behave as in the complete-host table.
    """
    try:
        host = HostGraph.complete_minus_matching(spec.k, matching)
    except ValueError as exc:
        raise InvalidFamilyParams(str(exc)) from None
    if not host.is_connected() or host.isolated_vertices():
        raise DisconnectedHost("removing this matching disconnects the host")
    _validate_blowup_pair(host, spec, u, v)
    sizes = spec.sizes
    n, t = spec.n, spec.t
    partner: dict[int, int] = {}
    for a, b in matching:
        partner[a] = b
        partner[b] = a

    def m_of(i: int) -> int:
        return n - sizes[i - 1] - (sizes[partner[i] - 1] if i in partner else 0)

    i, j = u.part, v.part
    ni, nj = sizes[i - 1], sizes[j - 1]
    if i == j:
        return _table_within(m_of(i), t, u, v)
    if partner.get(i) == j:
        base = Fraction(ni + nj, ni * nj * (n - ni - nj))
    else:

        def leg(a: int) -> Fraction:
            na = sizes[a - 1]
            if a in partner:
                return Fraction(n - na, n * na * m_of(a))
            return Fraction(1, n * na)

        base = leg(i) + leg(j)
    return (
        base
        + _table_side(ni, m_of(i), t, u.is_clique)
        + _table_side(nj, m_of(j), t, v.is_clique)
    )


def complete_minus_star_resistance(
    spec: BlowupSpec, d: int, u: BlowupVertex, v: BlowupVertex
) -> Fraction:
    """Complete host minus a star: part 1 no longer meets parts 2..d.

    d = 1 removes nothing and lands exactly on the complete-host table,
    a boundary worth flagging to callers.
    """
    if not (1 <= d <= spec.k):
        raise InvalidFamilyParams(f"star size d={d} out of range 1..{spec.k}")
    host = HostGraph.complete_minus_star(spec.k, d)
    if not host.is_connected() or host.isolated_vertices():
        raise DisconnectedHost("removing this star disconnects the host")
    _validate_blowup_pair(host, spec, u, v)
    sizes = spec.sizes
    n, t = spec.n, spec.t
    n1 = sizes[0]
    m1 = n - sum(sizes[:d])

    def m_of(i: int) -> int:
        ni = sizes[i - 1]
        if i == 1:
            return m1
        if i <= d:
            return n - n1 - ni
        return n - ni

    i, j = u.part, v.part
    if i == j:
        return _table_within(m_of(i), t, u, v)
    if i > j:
        i, j = j, i
        u, v = v, u
    ni, nj = sizes[i - 1], sizes[j - 1]
    if i == 1 and j <= d:
        base = Fraction(n * nj + n1 * m1, n1 * nj * (n - n1) * m1)
    elif i == 1:
        base = Fraction(n - n1, n * n1 * m1) + Fraction(1, n * nj)
    elif j <= d:
        # both endpoints are removed-star leaves; the denominator is
        # governed by part 1's size, not the endpoint's
        base = Fraction(ni + nj, ni * nj * (n - n1))
    elif i <= d:
        base = Fraction(n1 * ni + n * m1, n * ni * (n - n1) * m1) + Fraction(1, n * nj)
    else:
        base = Fraction(1, n * ni) + Fraction(1, n * nj)
    return (
        base
        + _table_side(ni, m_of(i), t, u.is_clique)
        + _table_side(nj, m_of(j), t, v.is_clique)
    )


def star_host_resistance(
    spec: BlowupSpec, u: BlowupVertex, v: BlowupVertex
) -> Fraction:
    """Star host: part 1 meets every satellite, satellites only meet part 1.

    Satellite constants involve n_1 alone, never the whole order n: a
    satellite's entire neighbourhood is part 1, so the within-satellite
    clique-isolated numerator is 2 n_1 + t + 1 and the core-satellite
    clique-clique term carries n_1 + 1.
    """
    if spec.k < 2:
        raise IsolatedHostVertex("a star host needs at least two vertices")
    host = HostGraph.star(spec.k)
    _validate_blowup_pair(host, spec, u, v)
    sizes = spec.sizes
    n, t = spec.n, spec.t
    n1 = sizes[0]
    i, j = u.part, v.part
    if i > j:
        i, j = j, i
        u, v = v, u
    if i == j == 1:
        return _table_within(n - n1, t, u, v)
    if i == j:
        return _table_within(n1, t, u, v)
    if i == 1:
        if not u.is_clique and not v.is_clique:
            return Fraction(n - 1, n1 * (n - n1))
        if not u.is_clique and v.is_clique:
            return Fraction(n1 - 1, n1 * (n - n1)) + Fraction(n1 + 1, n1 * (t + n1))
        if u.is_clique and not v.is_clique:
            return Fraction(n - n1 + 1, (n - n1) * (n - n1 + t)) + Fraction(
                n - n1 - 1, n1 * (n - n1)
            )
        return Fraction((n1 - 1) * (n - n1 + 1) + 1 - t, n1 * (n - n1) * (n - n1 + t)) + Fraction(
            n1 + 1, n1 * (t + n1)
        )
    # two satellites: each side pays its arm into the core
    if not u.is_clique and not v.is_clique:
        return Fraction(2, n1)
    if u.is_clique != v.is_clique:
        return Fraction(2 * n1 + t + 1, n1 * (n1 + t))
    return Fraction(2 * (n1 + 1), n1 * (n1 + t))


_FAMILY_TABLES = {
    "complete": complete_host_resistance,
    "complete_minus_matching": complete_minus_matching_resistance,
    "complete_minus_star": complete_minus_star_resistance,
    "star": star_host_resistance,
}


def family_resistance(
    family: str,
    spec: BlowupSpec,
    u: BlowupVertex,
    v: BlowupVertex,
    *,
    matching: Sequence[tuple[int, int]] | None = None,
    d: int | None = None,
) -> Fraction:
    """Dispatch to one of the four specialized host-family tables."""
    if family == "complete":
        if matching is not None or d is not None:
            raise InvalidFamilyParams("complete host takes no extra parameters")
        return complete_host_resistance(spec, u, v)
    if family == "complete_minus_matching":
        if matching is None or d is not None:
            raise InvalidFamilyParams("this family needs a matching and nothing else")
        return complete_minus_matching_resistance(spec, matching, u, v)
    if family == "complete_minus_star":
        if d is None or matching is not None:
            raise InvalidFamilyParams("this family needs a star size d and nothing else")
        return complete_minus_star_resistance(spec, d, u, v)
    if family == "star":
        if matching is not None or d is not None:
            raise InvalidFamilyParams("star host takes no extra parameters")
        return star_host_resistance(spec, u, v)
    raise InvalidFamilyParams(f"unknown host family: {family!r}")
