from fractions import Fraction
from itertools import combinations
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blowupnet.blowup import (
    BlowupSpec,
    BlowupVertex,
    CoreSatelliteSpec,
    HostGraph,
    UnbalancedSpec,
    build_blowup,
    build_core_satellite,
    build_h_nabla,
    build_unbalanced,
)
from blowupnet.errors import (
    Disconnected,
    InvalidFamilyParams,
    NonCompleteHost,
    SameVertex,
)
from blowupnet.formulas import (
    PairKind,
    blowup_spectrum,
    classify_pair,
    complete_host_resistance,
    complete_minus_matching_resistance,
    complete_minus_star_resistance,
    core_satellite_kf,
    core_satellite_resistance,
    family_resistance,
    host_resistance,
    kirchhoff_closed_form,
    kirchhoff_spectral,
    kirchhoff_with_qp_cross_weight,
    resistance_closed_form,
    star_host_resistance,
    tau_closed_form,
    unbalanced_kf,
    unbalanced_resistance,
)
from blowupnet.netcore import (
    kf_pair_sum,
    laplacian,
    resistance,
    resistance_matrix,
    tau_matrix_tree,
)
from blowupnet.randgen import (
    random_blowup_instance,
    random_complete_blowup_spec,
    random_matching,
    random_spec_for_k,
    random_unbalanced_instance,
)

from oracles import char_poly, poly_from_roots

F = Fraction

K4_MINUS_EDGE = BlowupSpec(2, (1, 0), (0, 2))
C4_SPEC = BlowupSpec(1, (0, 0), (2, 2))


def qv(part, slot):
    return BlowupVertex(part, None, slot)


def cv(part, clique, slot):
    return BlowupVertex(part, clique, slot)


# --- pair classification ------------------------------------------------------


def test_classify_all_eight_kinds():
    assert classify_pair(qv(1, 1), qv(1, 2)).kind is PairKind.SAME_QQ
    assert classify_pair(cv(1, 1, 1), qv(1, 1)).kind is PairKind.SAME_PQ
    assert classify_pair(cv(1, 1, 1), cv(1, 1, 2)).kind is PairKind.SAME_PP_ADJ
    assert classify_pair(cv(1, 1, 1), cv(1, 2, 1)).kind is PairKind.SAME_PP_NONADJ
    assert classify_pair(qv(1, 1), qv(2, 1)).kind is PairKind.CROSS_QQ
    assert classify_pair(qv(1, 1), cv(2, 1, 1)).kind is PairKind.CROSS_QP
    assert classify_pair(cv(1, 1, 1), qv(2, 1)).kind is PairKind.CROSS_PQ
    assert classify_pair(cv(1, 1, 1), cv(2, 1, 1)).kind is PairKind.CROSS_PP
    cls = classify_pair(qv(3, 1), cv(5, 2, 1))
    assert (cls.i, cls.j) == (3, 5)


def test_classify_rejects_same_vertex():
    with pytest.raises(SameVertex):
        classify_pair(qv(1, 1), qv(1, 1))


# --- spectrum -----------------------------------------------------------------


def spectrum_roots(summary):
    roots = [F(0)]
    for lam, mult in summary.nonzero:
        roots.extend([lam] * mult)
    return roots


def test_spectrum_k4_minus_edge_against_char_poly():
    summary = blowup_spectrum(K4_MINUS_EDGE)
    assert dict(summary.nonzero) == {F(2): 1, F(4): 2}
    lap = laplacian(build_blowup(HostGraph.complete(2), K4_MINUS_EDGE))
    assert char_poly(lap.rows) == poly_from_roots(spectrum_roots(summary))


def test_spectrum_single_clique_is_complete_graph():
    for t in (2, 3, 5):
        summary = blowup_spectrum(BlowupSpec(t, (1,), (0,)))
        assert summary.nonzero == ((F(t), t - 1),)


def test_spectrum_complete_multipartite():
    # all-isolated parts: n with multiplicity k-1 and n - n_i per extra slot
    spec = BlowupSpec(1, (0, 0, 0), (2, 3, 1))
    summary = blowup_spectrum(spec)
    assert dict(summary.nonzero) == {F(6): 2, F(4): 1, F(3): 2}


def test_spectrum_matches_char_poly_on_seeded_specs():
    rng = Random(17)
    for _ in range(10):
        spec = random_complete_blowup_spec(rng, min_k=2, max_k=3, max_t=3,
                                           max_part=2, max_n=9)
        summary = blowup_spectrum(spec)
        lap = laplacian(build_blowup(HostGraph.complete(spec.k), spec))
        assert char_poly(lap.rows) == poly_from_roots(spectrum_roots(summary))
        assert summary.tree_count() == tau_closed_form(spec)


def test_spectrum_requires_complete_host():
    with pytest.raises(NonCompleteHost):
        blowup_spectrum(BlowupSpec(1, (0, 0, 0), (1, 1, 1)), HostGraph.path(3))


def test_spectrum_requires_connected():
    with pytest.raises(Disconnected):
        blowup_spectrum(BlowupSpec(2, (2,), (0,)))


# --- tree counts --------------------------------------------------------------


def test_tau_fixtures():
    assert tau_closed_form(K4_MINUS_EDGE) == 8
    assert tau_closed_form(C4_SPEC) == 4
    for t in range(2, 7):
        assert tau_closed_form(BlowupSpec(t, (1,), (0,))) == t ** (t - 2)


def test_tau_matches_matrix_tree_on_seeded_specs():
    rng = Random(41)
    for _ in range(30):
        spec = random_complete_blowup_spec(rng, max_n=24)
        net = build_blowup(HostGraph.complete(spec.k), spec)
        assert tau_closed_form(spec) == tau_matrix_tree(net)


def test_tau_requires_complete_host():
    with pytest.raises(NonCompleteHost):
        tau_closed_form(BlowupSpec(1, (0, 0), (1, 1)), HostGraph.from_edges(2, []))
    # host argument is optional and accepted when complete
    assert tau_closed_form(C4_SPEC, HostGraph.complete(2)) == 4


# --- host backbone --------------------------------------------------------------


def test_host_resistance_values():
    assert host_resistance(HostGraph.complete(2), (3, 5))[(1, 2)] == F(1, 15)
    assert host_resistance(HostGraph.complete(3), (1, 1, 1))[(1, 2)] == F(2, 3)
    star = host_resistance(HostGraph.star(4), (2, 3, 1, 2))
    n1 = 2
    for i, ni in ((2, 3), (3, 1), (4, 2)):
        assert star[(1, i)] == F(1, n1 * ni)
    assert star[(2, 3)] == F(1, n1 * 3) + F(1, n1 * 1)


# --- resistance closed form -------------------------------------------------------


def test_resistance_k22_values():
    host = HostGraph.complete(2)
    assert resistance_closed_form(host, C4_SPEC, qv(1, 1), qv(1, 2)) == 1
    assert resistance_closed_form(host, C4_SPEC, qv(1, 1), qv(2, 1)) == F(3, 4)


def test_resistance_cross_isolated_value_shape_complete_host():
    # cross isolated pair on a complete host:
    # (n-1)(2n - n_i - n_j) / (n (n-n_i)(n-n_j))
    spec = BlowupSpec(2, (1, 0, 1), (1, 2, 0))
    host = HostGraph.complete(3)
    n = spec.n
    ni, nj = spec.sizes[0], spec.sizes[1]
    expected = F((n - 1) * (2 * n - ni - nj), n * (n - ni) * (n - nj))
    assert resistance_closed_form(host, spec, qv(1, 1), qv(2, 1)) == expected


def test_resistance_t1_clique_vertices_act_isolated():
    # with t = 1 a clique part is a single vertex; mixed same-part pairs
    # must cost the same as two isolated vertices
    spec = BlowupSpec(1, (1, 1), (2, 1))
    host = HostGraph.complete(2)
    assert resistance_closed_form(host, spec, cv(1, 1, 1), qv(1, 1)) == \
        resistance_closed_form(host, spec, qv(1, 1), qv(1, 2))


def test_resistance_symmetric_in_arguments():
    # swapping endpoints swaps the isolated-clique and clique-isolated
    # classes; both must come out equal
    host = HostGraph.path(3)
    spec = BlowupSpec(2, (1, 1, 1), (1, 1, 1))
    u, v = qv(1, 1), cv(2, 1, 1)
    assert classify_pair(u, v).kind is PairKind.CROSS_QP
    assert classify_pair(v, u).kind is PairKind.CROSS_PQ
    assert resistance_closed_form(host, spec, u, v) == \
        resistance_closed_form(host, spec, v, u)


def test_resistance_within_part_value_ordering():
    # same part, t >= 2: adjacent clique pairs are cheapest, isolated
    # pairs most expensive
    rng = Random(59)
    for _ in range(10):
        host, spec = random_blowup_instance(rng, max_n=20)
        for i in range(1, spec.k + 1):
            if spec.p[i - 1] < 2 or spec.q[i - 1] < 1 or spec.t < 2:
                continue
            r1 = resistance_closed_form(host, spec, qv(i, 1), qv(i, 2)) \
                if spec.q[i - 1] >= 2 else None
            r3 = resistance_closed_form(host, spec, cv(i, 1, 1), cv(i, 1, 2))
            r4 = resistance_closed_form(host, spec, cv(i, 1, 1), cv(i, 2, 1))
            assert r3 < r4
            if r1 is not None:
                assert r1 > r3


def test_resistance_matches_oracle_on_seeded_instances():
    rng = Random(73)
    for _ in range(12):
        host, spec = random_blowup_instance(rng, max_n=16)
        net = build_blowup(host, spec)
        oracle = resistance_matrix(net)
        for u, v in combinations(spec.all_vertices(), 2):
            assert resistance_closed_form(host, spec, u, v) == oracle[(u, v)]


def test_resistance_rejects_bad_pairs():
    host = HostGraph.complete(2)
    with pytest.raises(SameVertex):
        resistance_closed_form(host, C4_SPEC, qv(1, 1), qv(1, 1))
    with pytest.raises(ValueError):
        resistance_closed_form(host, C4_SPEC, qv(1, 1), qv(1, 3))


@settings(max_examples=40, deadline=None)
@given(
    t=st.integers(min_value=1, max_value=3),
    p=st.lists(st.integers(0, 2), min_size=2, max_size=3),
    q=st.lists(st.integers(0, 2), min_size=2, max_size=3),
    data=st.data(),
)
def test_resistance_property_closed_equals_oracle(t, p, q, data):
    k = min(len(p), len(q))
    p, q = p[:k], q[:k]
    if any(t * pi + qi < 1 for pi, qi in zip(p, q)):
        p = [pi + (t * pi + qi < 1) for pi, qi in zip(p, q)]
    spec = BlowupSpec(t, tuple(p), tuple(q))
    host = HostGraph.complete(k)
    vertices = spec.all_vertices()
    u, v = data.draw(st.sampled_from([
        (a, b) for a, b in combinations(vertices, 2)]))
    net = build_blowup(host, spec)
    assert resistance_closed_form(host, spec, u, v) == resistance(net, u, v)


# --- Kirchhoff index --------------------------------------------------------------


def test_kf_three_way_on_fixtures():
    host = HostGraph.complete(2)
    for spec in (K4_MINUS_EDGE, C4_SPEC):
        net = build_blowup(host, spec)
        value = kirchhoff_closed_form(host, spec)
        assert value == kf_pair_sum(net)
        assert value == kirchhoff_spectral(spec)
    assert kirchhoff_closed_form(host, C4_SPEC) == 5


def test_kf_complete_host_all_singletons():
    k = 5
    spec = BlowupSpec(1, (0,) * k, (1,) * k)
    assert kirchhoff_closed_form(HostGraph.complete(k), spec) == k - 1


def test_kf_matches_oracle_on_seeded_instances():
    rng = Random(97)
    for _ in range(10):
        host, spec = random_blowup_instance(rng, max_n=16)
        assert kirchhoff_closed_form(host, spec) == \
            kf_pair_sum(build_blowup(host, spec))


def test_kf_cross_weight_variant_disagrees():
    # the variant weights isolated-isolated cross pairs by q_i * p_j;
    # on a part pair with p and q swapped it must miss the oracle
    host = HostGraph.complete(2)
    spec = BlowupSpec(2, (1, 2), (2, 1))
    oracle = kf_pair_sum(build_blowup(host, spec))
    assert kirchhoff_closed_form(host, spec) == oracle
    assert kirchhoff_with_qp_cross_weight(host, spec) != oracle


# --- family tables -----------------------------------------------------------------


def all_pairs_equal(table, general, oracle, spec, host):
    for u, v in combinations(spec.all_vertices(), 2):
        value = table(u, v)
        assert value == general(u, v)
        assert value == oracle[(u, v)]


def test_complete_table_equals_general_and_oracle():
    rng = Random(101)
    host_of = HostGraph.complete
    for _ in range(8):
        spec = random_complete_blowup_spec(rng, min_k=2, max_k=4, max_n=14)
        host = host_of(spec.k)
        oracle = resistance_matrix(build_blowup(host, spec))
        all_pairs_equal(
            lambda u, v: complete_host_resistance(spec, u, v),
            lambda u, v: resistance_closed_form(host, spec, u, v),
            oracle, spec, host)


def test_matching_table_equals_general_and_oracle():
    rng = Random(103)
    for _ in range(8):
        k = rng.randint(3, 5)
        matching = random_matching(rng, k)
        host = HostGraph.complete_minus_matching(k, matching)
        spec = random_spec_for_k(rng, k, max_n=14)
        oracle = resistance_matrix(build_blowup(host, spec))
        all_pairs_equal(
            lambda u, v: complete_minus_matching_resistance(spec, matching, u, v),
            lambda u, v: resistance_closed_form(host, spec, u, v),
            oracle, spec, host)


def test_matching_backbone_value_for_matched_parts():
    # matched parts i, j talk through the other parts only:
    # (n_i + n_j) / (n_i n_j (n - n_i - n_j))
    sizes = (2, 3, 1, 2)
    host = HostGraph.complete_minus_matching(4, [(1, 2)])
    backbone = host_resistance(host, sizes)
    n = sum(sizes)
    assert backbone[(1, 2)] == F(sizes[0] + sizes[1],
                                 sizes[0] * sizes[1] * (n - sizes[0] - sizes[1]))


def test_minus_star_table_equals_general_and_oracle():
    rng = Random(107)
    for _ in range(8):
        k = rng.randint(3, 5)
        d = rng.randint(2, k - 1)
        host = HostGraph.complete_minus_star(k, d)
        spec = random_spec_for_k(rng, k, max_n=14)
        oracle = resistance_matrix(build_blowup(host, spec))
        all_pairs_equal(
            lambda u, v: complete_minus_star_resistance(spec, d, u, v),
            lambda u, v: resistance_closed_form(host, spec, u, v),
            oracle, spec, host)


def test_minus_star_leaf_pair_backbone_uses_first_part_size():
    # two parts cut off from part 1 see each other through a backbone
    # governed by n - n_1, not by their own sizes
    sizes = (3, 2, 2, 2, 3)
    n, n1 = sum(sizes), sizes[0]
    host = HostGraph.complete_minus_star(5, 3)
    backbone = host_resistance(host, sizes)
    ni, nj = sizes[1], sizes[2]
    assert backbone[(2, 3)] == F(ni + nj, ni * nj * (n - n1))
    assert backbone[(2, 3)] != F(ni + nj, ni * nj * (n - ni))


def test_minus_star_d1_equals_complete_table():
    spec = BlowupSpec(2, (1, 0, 1), (0, 2, 1))
    for u, v in combinations(spec.all_vertices(), 2):
        assert complete_minus_star_resistance(spec, 1, u, v) == \
            complete_host_resistance(spec, u, v)


def test_star_table_equals_general_and_oracle():
    rng = Random(109)
    for _ in range(8):
        k = rng.randint(2, 5)
        host = HostGraph.star(k)
        spec = random_spec_for_k(rng, k, max_n=14)
        oracle = resistance_matrix(build_blowup(host, spec))
        all_pairs_equal(
            lambda u, v: star_host_resistance(spec, u, v),
            lambda u, v: resistance_closed_form(host, spec, u, v),
            oracle, spec, host)


def test_star_table_satellite_isolated_pair_is_two_over_center_size():
    spec = BlowupSpec(2, (1, 0, 1), (1, 2, 1))
    n1 = spec.sizes[0]
    assert star_host_resistance(spec, qv(2, 1), qv(2, 2)) == F(2, n1)


def test_family_dispatcher():
    spec = C4_SPEC
    u, v = qv(1, 1), qv(2, 1)
    direct = complete_host_resistance(spec, u, v)
    assert family_resistance("complete", spec, u, v) == direct
    assert family_resistance("complete_minus_matching", spec, u, v,
                                matching=()) == direct
    assert family_resistance("complete_minus_star", spec, u, v, d=1) == direct
    with pytest.raises(InvalidFamilyParams):
        family_resistance("complete", spec, u, v, d=2)
    with pytest.raises(InvalidFamilyParams):
        family_resistance("complete_minus_matching", spec, u, v)
    with pytest.raises(InvalidFamilyParams):
        family_resistance("star", spec, u, v, matching=())
    with pytest.raises(InvalidFamilyParams):
        family_resistance("wheel", spec, u, v)


# --- unbalanced blow-ups -------------------------------------------------------------


def test_unbalanced_all_empty_matches_general_formula():
    host = HostGraph.path(3)
    sizes = (2, 1, 3)
    u_spec = UnbalancedSpec(("empty",) * 3, sizes)
    b_spec = BlowupSpec(1, (0, 0, 0), sizes)
    for u, v in combinations(u_spec.all_vertices(), 2):
        assert unbalanced_resistance(host, u_spec, u, v) == \
            resistance_closed_form(host, b_spec, u, v)


def test_unbalanced_k4_minus_edge_matches_uniform_values():
    host = HostGraph.complete(2)
    u_spec = UnbalancedSpec(("clique", "empty"), (2, 2))
    net = build_unbalanced(host, u_spec)
    oracle = resistance_matrix(net)
    for u, v in combinations(u_spec.all_vertices(), 2):
        assert unbalanced_resistance(host, u_spec, u, v) == oracle[(u, v)]
    assert unbalanced_kf(host, u_spec) == kf_pair_sum(net)


def test_unbalanced_matches_oracle_on_seeded_instances():
    rng = Random(113)
    for _ in range(10):
        host, spec = random_unbalanced_instance(rng, max_n=14)
        net = build_unbalanced(host, spec)
        oracle = resistance_matrix(net)
        for u, v in combinations(spec.all_vertices(), 2):
            assert unbalanced_resistance(host, spec, u, v) == oracle[(u, v)]
        assert unbalanced_kf(host, spec) == kf_pair_sum(net)


# --- core-satellite graphs ------------------------------------------------------------


def test_core_satellite_single_clique():
    spec = CoreSatelliteSpec((5,))
    assert core_satellite_resistance(spec, cv(1, 1, 1), cv(1, 1, 2)) == F(2, 5)
    assert core_satellite_kf(spec) == 4


def test_core_satellite_k4_fixture():
    spec = CoreSatelliteSpec((2, 2))
    vertices = spec.all_vertices()
    for u, v in combinations(vertices, 2):
        assert core_satellite_resistance(spec, u, v) == F(1, 2)
    assert core_satellite_kf(spec) == 3


def test_core_satellite_three_leaf_star():
    spec = CoreSatelliteSpec((1, 1, 1))
    assert core_satellite_resistance(spec, cv(2, 1, 1), cv(3, 1, 1)) == 2
    assert core_satellite_resistance(spec, cv(1, 1, 1), cv(2, 1, 1)) == 1


def test_core_satellite_matches_star_host_form_and_oracle():
    rng = Random(127)
    for _ in range(10):
        sizes = tuple(rng.randint(1, 3) for _ in range(rng.randint(2, 4)))
        spec = CoreSatelliteSpec(sizes)
        host, u_spec = spec.as_unbalanced()
        net = build_core_satellite(spec)
        oracle = resistance_matrix(net)
        for u, v in combinations(spec.all_vertices(), 2):
            value = core_satellite_resistance(spec, u, v)
            assert value == oracle[(u, v)]
            assert value == unbalanced_resistance(host, u_spec, u, v)
        assert core_satellite_kf(spec) == kf_pair_sum(net)
