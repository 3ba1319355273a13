"""End-to-end gate: one test per acceptance criterion, exact equality only.

Each test prints a single [PASS]/[FAIL] line so a plain pytest run shows
the per-criterion verdicts at a glance.
"""

import json
import time
from collections import Counter
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations
from random import Random

from blowupnet.blowup import (
    BlowupSpec,
    BlowupVertex,
    CoreSatelliteSpec,
    HostGraph,
    build_blowup,
    build_core_satellite,
    build_unbalanced,
)
from blowupnet.cli import main
from blowupnet.errors import (
    SingularSystem,
    SumZero,
    ZeroArm,
    ZeroResistanceEdge,
)
from blowupnet.formulas import (
    PairKind,
    classify_pair,
    complete_host_resistance,
    complete_minus_matching_resistance,
    complete_minus_star_resistance,
    core_satellite_kf,
    core_satellite_resistance,
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
    WeightedNetwork,
    kf_pair_sum,
    resistance_matrix,
    tau_matrix_tree,
)
from blowupnet.randgen import (
    REWRITE_OPS,
    random_blowup_instance,
    random_complete_blowup_spec,
    random_conductance,
    random_core_satellite_spec,
    random_matching,
    random_rewrite_case,
    random_spec_for_k,
    random_unbalanced_instance,
)
from blowupnet.transforms import apply_named, delta_to_y, mesh_to_star, y_to_delta

from oracles import spanning_tree_sum

F = Fraction

K4_MINUS_EDGE = BlowupSpec(2, (1, 0), (0, 2))
C4_SPEC = BlowupSpec(1, (0, 0), (2, 2))


@contextmanager
def criterion(capsys, number, name):
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"[FAIL] criterion {number}: {name}")
        raise
    with capsys.disabled():
        print(f"[PASS] criterion {number}: {name}")


def all_pairs(spec):
    return combinations(spec.all_vertices(), 2)


def test_criterion_1_tree_count_sweep(capsys):
    with criterion(capsys, 1, "tree counts match the determinant on 200 instances"):
        rng = Random("acceptance:tau")
        start = time.monotonic()
        for _ in range(200):
            spec = random_complete_blowup_spec(
                rng, min_k=1, max_k=5, max_t=4, max_part=2, max_n=40)
            net = build_blowup(HostGraph.complete(spec.k), spec)
            assert tau_closed_form(spec) == tau_matrix_tree(net)
        assert time.monotonic() - start < 60


def test_criterion_2_tree_count_fixtures(capsys):
    with criterion(capsys, 2, "fixed tree-count fixtures, both oracles"):
        cases = [(K4_MINUS_EDGE, 8), (C4_SPEC, 4)]
        cases += [(BlowupSpec(t, (1,), (0,)), t ** (t - 2)) for t in range(2, 7)]
        for spec, expected in cases:
            net = build_blowup(HostGraph.complete(spec.k), spec)
            assert tau_closed_form(spec) == expected
            assert tau_matrix_tree(net) == expected
            if net.vertex_count <= 7:
                assert spanning_tree_sum(net.vertices, net.edges) == expected


def criterion_3_instances():
    rng = Random("acceptance:resistance")
    for _ in range(100):
        yield random_blowup_instance(rng)


def test_criterion_3_resistance_sweep(capsys):
    with criterion(capsys, 3, "resistances match the solver on 100 instances"):
        counts = Counter()
        for host, spec in criterion_3_instances():
            oracle = resistance_matrix(build_blowup(host, spec))
            for u, v in all_pairs(spec):
                counts[classify_pair(u, v).kind] += 1
                assert resistance_closed_form(host, spec, u, v) == oracle[(u, v)]
        for kind in PairKind:
            assert counts[kind] >= 10, f"class {kind.value} seen {counts[kind]} times"


def test_criterion_4_kirchhoff_three_way(capsys):
    with criterion(capsys, 4, "Kirchhoff index agrees three ways plus regression"):
        for host, spec in criterion_3_instances():
            oracle = kf_pair_sum(build_blowup(host, spec))
            assert kirchhoff_closed_form(host, spec) == oracle
            if host == HostGraph.complete(host.k):
                assert kirchhoff_spectral(spec) == oracle
        # regression: the q_i*p_j cross weight misses the oracle exactly
        # where p and q differ between the two parts
        host = HostGraph.complete(2)
        spec = BlowupSpec(2, (1, 2), (2, 1))
        oracle = kf_pair_sum(build_blowup(host, spec))
        assert kirchhoff_closed_form(host, spec) == oracle
        assert kirchhoff_with_qp_cross_weight(host, spec) != oracle


def kept_resistances(network, terminals):
    full = resistance_matrix(network)
    return {pair: full[pair] for pair in combinations(sorted(terminals), 2)}


def test_criterion_5_rewrite_equivalence(capsys):
    with criterion(capsys, 5, "all eight rewrites preserve terminal resistances"):
        for op in REWRITE_OPS:
            rng = Random(f"acceptance:transform:{op}")
            done = 0
            saw_negative = False
            while done < 50:
                case = random_rewrite_case(op, rng)
                assert case.net.vertex_count <= 10
                try:
                    before = kept_resistances(case.net, case.terminals)
                except SingularSystem:
                    continue
                result = apply_named(case.net, op, case.params, case.terminals)
                assert kept_resistances(result.network, case.terminals) == before
                saw_negative = saw_negative or any(
                    c < 0 for _, _, c in case.net.edges)
                done += 1
            assert saw_negative, f"{op} never saw a negative conductance"

        rng = Random("acceptance:roundtrip")
        done = 0
        while done < 20:
            edges = [("b", "c", random_conductance(rng)),
                     ("a", "c", random_conductance(rng)),
                     ("a", "b", random_conductance(rng))]
            before = WeightedNetwork(["a", "b", "c"], edges)
            try:
                starred = delta_to_y(before, ("a", "b", "c"))
                back = y_to_delta(starred.network, starred.created[0])
            except (SumZero, ZeroArm, ZeroResistanceEdge):
                continue
            assert back.network == before
            done += 1

        unit = WeightedNetwork(
            ["a", "b", "c"], [("a", "b", 1), ("a", "c", 1), ("b", "c", 1)])
        assert mesh_to_star(unit, ("a", "b", "c")).network == \
            delta_to_y(unit, ("a", "b", "c")).network


def test_criterion_6_family_tables(capsys):
    with criterion(capsys, 6, "family tables match the general form and solver"):
        rng = Random("acceptance:families")

        for _ in range(20):
            spec = random_complete_blowup_spec(rng, min_k=2, max_k=5, max_n=13)
            host = HostGraph.complete(spec.k)
            oracle = resistance_matrix(build_blowup(host, spec))
            for u, v in all_pairs(spec):
                value = complete_host_resistance(spec, u, v)
                assert value == resistance_closed_form(host, spec, u, v)
                assert value == oracle[(u, v)]

        for _ in range(20):
            k = rng.randint(3, 5)
            matching = random_matching(rng, k)
            host = HostGraph.complete_minus_matching(k, matching)
            spec = random_spec_for_k(rng, k, max_n=13)
            oracle = resistance_matrix(build_blowup(host, spec))
            for u, v in all_pairs(spec):
                value = complete_minus_matching_resistance(spec, matching, u, v)
                assert value == resistance_closed_form(host, spec, u, v)
                assert value == oracle[(u, v)]

        for _ in range(20):
            k = rng.randint(3, 5)
            d = rng.randint(1, k - 1)
            host = HostGraph.complete_minus_star(k, d)
            spec = random_spec_for_k(rng, k, max_n=13)
            oracle = resistance_matrix(build_blowup(host, spec))
            for u, v in all_pairs(spec):
                value = complete_minus_star_resistance(spec, d, u, v)
                assert value == resistance_closed_form(host, spec, u, v)
                assert value == oracle[(u, v)]

        for _ in range(20):
            k = rng.randint(2, 5)
            host = HostGraph.star(k)
            spec = random_spec_for_k(rng, k, max_n=13)
            oracle = resistance_matrix(build_blowup(host, spec))
            for u, v in all_pairs(spec):
                value = star_host_resistance(spec, u, v)
                assert value == resistance_closed_form(host, spec, u, v)
                assert value == oracle[(u, v)]

        for _ in range(20):
            host, spec = random_unbalanced_instance(rng, max_n=13)
            net = build_unbalanced(host, spec)
            oracle = resistance_matrix(net)
            for u, v in all_pairs(spec):
                assert unbalanced_resistance(host, spec, u, v) == oracle[(u, v)]
            assert unbalanced_kf(host, spec) == kf_pair_sum(net)

        done = 0
        while done < 20:
            spec = random_core_satellite_spec(rng, max_k=4, max_size=3)
            if spec.n > 13:
                continue
            net = build_core_satellite(spec)
            oracle = resistance_matrix(net)
            for u, v in all_pairs(spec):
                assert core_satellite_resistance(spec, u, v) == oracle[(u, v)]
            assert core_satellite_kf(spec) == kf_pair_sum(net)
            done += 1

        four_clique = build_core_satellite(CoreSatelliteSpec((4,)))
        assert core_satellite_kf(CoreSatelliteSpec((2, 2))) == 3
        assert core_satellite_kf(CoreSatelliteSpec((2, 2))) == kf_pair_sum(four_clique)


def test_criterion_7_non_complete_host_diagnostic(capsys, tmp_path):
    with criterion(capsys, 7, "the tree-count formula is flagged off complete hosts"):
        host = HostGraph.path(3)
        spec = BlowupSpec(1, (0, 0, 0), (1, 1, 1))
        closed = tau_closed_form(spec)
        oracle = tau_matrix_tree(build_blowup(host, spec))
        assert closed == 3
        assert oracle == 1
        assert closed != oracle

        instance = {
            "family": "blowup",
            "host": {"kind": "path", "k": 3},
            "t": 1,
            "p": [0, 0, 0],
            "q": [1, 1, 1],
        }
        path = tmp_path / "inst.json"
        path.write_text(json.dumps(instance), encoding="utf-8")
        out = tmp_path / "report.json"
        code = main(["tau", "--spec", str(path), "--diagnostic",
                     "--output", str(out)])
        assert code == 1
        report = json.loads(out.read_text(encoding="utf-8"))
        (record,) = report["records"]
        assert record["closed_form"] == "3"
        assert record["oracle"] == "1"
        assert record["equal"] is False
        # without the flag the same file is a usage error, not a report
        assert main(["tau", "--spec", str(path),
                     "--output", str(tmp_path / "no.json")]) == 2
