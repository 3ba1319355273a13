"""Command line front end: closed forms on one side, oracles on the other.

Subcommands:

  tau        spanning-tree count against the matrix-tree determinant
  resist     resistance distances by pair or by class, against a Laplacian solve
  kf         Kirchhoff index, with a spectral cross-check on complete hosts
  verify     seeded random sweeps over every closed form and rewrite
  transform  run a rewrite script over a network file and check equivalence

All comparisons are exact rational equality; reports for a given input
and seed are byte-identical run to run.  Exit status is 0 when every
check agrees, 1 when some check fails, 2 on bad usage or input.  The
environment variable BLOWUP_MAX_N (default 64) caps instance sizes.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from itertools import combinations
from random import Random
from typing import Sequence

from .blowup import (
    BlowupVertex,
    HostGraph,
    build_blowup,
    build_unbalanced,
)
from .errors import DisconnectedPair, NetworkError, SingularSystem
from .formulas import (
    blowup_spectrum,
    classify_pair,
    complete_minus_matching_resistance,
    complete_minus_star_resistance,
    complete_host_resistance,
    core_satellite_kf,
    core_satellite_resistance,
    kirchhoff_closed_form,
    kirchhoff_spectral,
    resistance_closed_form,
    star_host_resistance,
    tau_closed_form,
    unbalanced_kf,
    unbalanced_resistance,
)
from .jsonio import (
    Instance,
    format_rational,
    instance_from_obj,
    load_json,
    network_from_obj,
    network_to_obj,
    parse_rational,
    render_report_csv,
    render_report_json,
)
from .netcore import (
    WeightedNetwork,
    kf_pair_sum,
    resistance,
    resistance_matrix,
    tau_matrix_tree,
)
from .randgen import (
    REWRITE_OPS,
    random_blowup_instance,
    random_complete_blowup_spec,
    random_core_satellite_spec,
    random_matching,
    random_rewrite_case,
    random_spec_for_k,
    random_unbalanced_instance,
)
from .transforms import apply_named


def _size_cap() -> int:
    raw = os.environ.get("BLOWUP_MAX_N", "64")
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"BLOWUP_MAX_N must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("BLOWUP_MAX_N must be positive")
    return cap


def _load_instance(path: str) -> Instance:
    inst = instance_from_obj(load_json(path))
    cap = _size_cap()
    if inst.n > cap:
        raise ValueError(
            f"instance has {inst.n} vertices, over the cap of {cap}"
            " (raise BLOWUP_MAX_N to allow it)"
        )
    return inst


def _record(name: str, closed: Fraction | int, oracle: Fraction | int,
            cls: str | None = None) -> dict:
    rec: dict = {"name": name}
    if cls is not None:
        rec["class"] = cls
    rec["closed_form"] = format_rational(closed)
    rec["oracle"] = format_rational(oracle)
    rec["equal"] = Fraction(closed) == Fraction(oracle)
    return rec


def _text_record(name: str, closed: str, oracle: str) -> dict:
    return {"name": name, "closed_form": closed, "oracle": oracle,
            "equal": closed == oracle}


def _emit(args: argparse.Namespace, report: dict) -> None:
    text = (render_report_csv(report) if args.format == "csv"
            else render_report_json(report))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _single_report(command: str, inst: Instance, records: list[dict],
                   notes: list[str]) -> dict:
    failures = sum(1 for rec in records if not rec["equal"])
    return {
        "command": command,
        "instance": inst.echo(),
        "seed": None,
        "records": records,
        "notes": notes,
        "summary": {"checks": len(records), "failures": failures, "skipped": 0},
    }


# --- tau --------------------------------------------------------------------------


def cmd_tau(args: argparse.Namespace) -> int:
    inst = _load_instance(args.spec)
    if inst.family != "blowup":
        raise ValueError("the tree-count closed form needs a clique-and-isolated"
                         " blow-up instance")
    notes: list[str] = []
    if inst.host.is_complete():
        summary = blowup_spectrum(inst.blowup)
        spectrum = ", ".join(
            f"{format_rational(lam)}^{mult}" for lam, mult in summary.nonzero
        )
        notes.append(f"nonzero Laplacian eigenvalues: {spectrum}")
    elif args.diagnostic:
        notes.append("host is not complete; the closed form is evaluated for"
                     " comparison only and is expected to disagree")
    else:
        raise ValueError("the tree-count closed form needs a complete host"
                         " (pass --diagnostic to evaluate it anyway)")
    closed = tau_closed_form(inst.blowup)
    oracle = tau_matrix_tree(inst.build())
    records = [_record("tau", closed, oracle)]
    report = _single_report("tau", inst, records, notes)
    _emit(args, report)
    return 0 if report["summary"]["failures"] == 0 else 1


# --- resist -----------------------------------------------------------------------


def _closed_resistance(inst: Instance, u: BlowupVertex, v: BlowupVertex) -> Fraction:
    """Most specific closed form available for the instance's host family."""
    if inst.family == "unbalanced":
        return unbalanced_resistance(inst.host, inst.unbalanced, u, v)
    if inst.family == "core_satellite":
        return core_satellite_resistance(inst.core, u, v)
    spec = inst.blowup
    if inst.host_kind == "complete":
        return complete_host_resistance(spec, u, v)
    if inst.host_kind == "star":
        return star_host_resistance(spec, u, v)
    if inst.host_kind == "complete_minus_matching":
        matching = tuple(tuple(pair) for pair in inst.host_echo["matching"])
        return complete_minus_matching_resistance(spec, matching, u, v)
    if inst.host_kind == "complete_minus_star":
        return complete_minus_star_resistance(spec, inst.host_echo["d"], u, v)
    return resistance_closed_form(inst.host, spec, u, v)


def _parse_pair(inst: Instance, text: str) -> tuple[BlowupVertex, BlowupVertex]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--pairs wants 'all', 'classes' or 'U,V', got {text!r}")
    u, v = (BlowupVertex.parse(p.strip()) for p in parts)
    known = set(inst.all_vertices())
    for vertex in (u, v):
        if vertex not in known:
            raise ValueError(f"{vertex.label()} is not a vertex of this instance")
    return u, v


def cmd_resist(args: argparse.Namespace) -> int:
    inst = _load_instance(args.spec)
    net = inst.build()
    records: list[dict] = []
    if args.pairs not in ("all", "classes"):
        u, v = _parse_pair(inst, args.pairs)
        cls = classify_pair(u, v)
        records.append(_record(
            f"R({u.label()},{v.label()})",
            _closed_resistance(inst, u, v),
            resistance(net, u, v),
            cls.kind.value,
        ))
    else:
        oracle = resistance_matrix(net)
        vertices = sorted(inst.all_vertices(), key=BlowupVertex.sort_key)
        seen: set[tuple] = set()
        for u, v in combinations(vertices, 2):
            cls = classify_pair(u, v)
            if args.pairs == "classes":
                key = (cls.kind, cls.i, cls.j)
                if key in seen:
                    continue
                seen.add(key)
            records.append(_record(
                f"R({u.label()},{v.label()})",
                _closed_resistance(inst, u, v),
                oracle[(u, v)],
                cls.kind.value,
            ))
    report = _single_report("resist", inst, records, [])
    _emit(args, report)
    return 0 if report["summary"]["failures"] == 0 else 1


# --- kf ---------------------------------------------------------------------------


def cmd_kf(args: argparse.Namespace) -> int:
    inst = _load_instance(args.spec)
    oracle = kf_pair_sum(inst.build())
    records: list[dict] = []
    notes: list[str] = []
    if inst.family == "blowup":
        records.append(_record("Kf", kirchhoff_closed_form(inst.host, inst.blowup),
                               oracle))
        notes.append("isolated-isolated pairs across parts carry weight q_i * q_j")
        if inst.host.is_complete():
            records.append(_record("Kf-spectral", kirchhoff_spectral(inst.blowup),
                                   oracle))
    elif inst.family == "unbalanced":
        records.append(_record("Kf", unbalanced_kf(inst.host, inst.unbalanced),
                               oracle))
    else:
        records.append(_record("Kf", core_satellite_kf(inst.core), oracle))
    report = _single_report("kf", inst, records, notes)
    _emit(args, report)
    return 0 if report["summary"]["failures"] == 0 else 1


# --- verify -----------------------------------------------------------------------


_SAMPLED_PAIRS = 12


def _sorted_pairs(spec) -> list[tuple[BlowupVertex, BlowupVertex]]:
    vertices = sorted(spec.all_vertices(), key=BlowupVertex.sort_key)
    return list(combinations(vertices, 2))


def _sample_pairs(rng: Random, spec) -> list[tuple[BlowupVertex, BlowupVertex]]:
    pairs = _sorted_pairs(spec)
    if len(pairs) > _SAMPLED_PAIRS:
        pairs = rng.sample(pairs, _SAMPLED_PAIRS)
    return pairs


class SweepBounds:
    """Instance-size knobs shared by the verify suites."""

    def __init__(self, max_k: int, max_t: int, max_part: int, cap: int):
        if min(max_k, max_t, max_part) < 1:
            raise ValueError("sweep bounds must be at least 1")
        self.max_k = max_k
        self.max_t = max_t
        self.max_part = max_part
        self.cap = cap


def _suite_tau(rng: Random, count: int, bounds: SweepBounds) -> tuple[int, int, list[dict]]:
    checks, failures = 0, []
    for i in range(count):
        spec = random_complete_blowup_spec(
            rng, max_k=bounds.max_k, max_t=bounds.max_t,
            max_part=bounds.max_part, max_n=min(bounds.cap, 40))
        closed = tau_closed_form(spec)
        oracle = tau_matrix_tree(build_blowup(HostGraph.complete(spec.k), spec))
        checks += 1
        if closed != oracle:
            failures.append(_record(f"tau[{i}]", closed, oracle))
    return checks, 0, failures


def _suite_resistance(rng: Random, count: int, bounds: SweepBounds) -> tuple[int, int, list[dict]]:
    checks, failures = 0, []
    for i in range(count):
        host, spec = random_blowup_instance(
            rng, max_k=max(2, bounds.max_k), max_t=min(bounds.max_t, 3),
            max_part=bounds.max_part, max_n=min(bounds.cap, 24))
        oracle = resistance_matrix(build_blowup(host, spec))
        for u, v in _sorted_pairs(spec):
            closed = resistance_closed_form(host, spec, u, v)
            checks += 1
            if closed != oracle[(u, v)]:
                failures.append(_record(
                    f"resistance[{i}]:R({u.label()},{v.label()})",
                    closed, oracle[(u, v)], classify_pair(u, v).kind.value,
                ))
    return checks, 0, failures


def _suite_kf(rng: Random, count: int, bounds: SweepBounds) -> tuple[int, int, list[dict]]:
    checks, failures = 0, []
    for i in range(count):
        host, spec = random_blowup_instance(
            rng, max_k=max(2, bounds.max_k), max_t=min(bounds.max_t, 3),
            max_part=bounds.max_part, max_n=min(bounds.cap, 20))
        closed = kirchhoff_closed_form(host, spec)
        oracle = kf_pair_sum(build_blowup(host, spec))
        checks += 1
        if closed != oracle:
            failures.append(_record(f"kf[{i}]:general-host", closed, oracle))

        spec2 = random_complete_blowup_spec(
            rng, min_k=2, max_k=max(2, bounds.max_k),
            max_t=min(bounds.max_t, 3), max_part=bounds.max_part,
            max_n=min(bounds.cap, 20))
        host2 = HostGraph.complete(spec2.k)
        oracle2 = kf_pair_sum(build_blowup(host2, spec2))
        closed2 = kirchhoff_closed_form(host2, spec2)
        spectral2 = kirchhoff_spectral(spec2)
        checks += 2
        if closed2 != oracle2:
            failures.append(_record(f"kf[{i}]:complete-host", closed2, oracle2))
        if spectral2 != oracle2:
            failures.append(_record(f"kf[{i}]:spectral", spectral2, oracle2))
    return checks, 0, failures


def _suite_transforms(rng: Random, count: int, bounds: SweepBounds) -> tuple[int, int, list[dict]]:
    checks, skipped, failures = 0, 0, []
    for i in range(count):
        op = REWRITE_OPS[i % len(REWRITE_OPS)]
        case = random_rewrite_case(op, rng)
        try:
            before = resistance_matrix(case.net)
        except SingularSystem:
            # signed conductances can zero out the tree sum; nothing to compare
            skipped += 1
            continue
        try:
            result = apply_named(case.net, case.op, case.params, case.terminals)
        except NetworkError as exc:
            checks += 1
            failures.append(_text_record(f"{op}[{i}]", "rewrite applies",
                                         f"error: {exc}"))
            continue
        try:
            after = resistance_matrix(result.network)
        except NetworkError as exc:
            checks += 1
            failures.append(_text_record(f"{op}[{i}]", "solvable after rewrite",
                                         f"error: {exc}"))
            continue
        for u, v in combinations(sorted(case.terminals), 2):
            checks += 1
            if before[(u, v)] != after[(u, v)]:
                failures.append(_record(f"{op}[{i}]:R({u},{v})",
                                        before[(u, v)], after[(u, v)]))
    return checks, skipped, failures


_FAMILY_ROTATION = (
    "complete",
    "complete_minus_matching",
    "complete_minus_star",
    "star",
    "unbalanced",
    "core_satellite",
)


def _family_case(rng: Random, family: str, bounds: SweepBounds, cap: int):
    """Host, spec and table keyword arguments for one family draw."""
    t, part = min(bounds.max_t, 3), bounds.max_part
    if family == "complete":
        spec = random_complete_blowup_spec(
            rng, min_k=2, max_k=max(2, bounds.max_k), max_t=t,
            max_part=part, max_n=cap)
        return HostGraph.complete(spec.k), spec, {}
    if family == "complete_minus_matching":
        k = rng.randint(2, max(2, bounds.max_k))
        matching = random_matching(rng, k)
        host = HostGraph.complete_minus_matching(k, matching)
        spec = random_spec_for_k(rng, k, max_t=t, max_part=part, max_n=cap)
        return host, spec, {"matching": matching}
    if family == "complete_minus_star":
        k = rng.randint(3, max(3, bounds.max_k))
        d = rng.randint(1, k - 1)
        spec = random_spec_for_k(rng, k, max_t=t, max_part=part, max_n=cap)
        return HostGraph.complete_minus_star(k, d), spec, {"d": d}
    k = rng.randint(2, max(2, bounds.max_k))
    spec = random_spec_for_k(rng, k, max_t=t, max_part=part, max_n=cap)
    return HostGraph.star(k), spec, {}


_TABLES = {
    "complete": lambda spec, u, v: complete_host_resistance(spec, u, v),
    "complete_minus_matching": complete_minus_matching_resistance,
    "complete_minus_star": complete_minus_star_resistance,
    "star": lambda spec, u, v: star_host_resistance(spec, u, v),
}


def _suite_families(rng: Random, count: int, bounds: SweepBounds) -> tuple[int, int, list[dict]]:
    checks, skipped, failures = 0, 0, []
    bound = min(bounds.cap, 24)
    for i in range(count):
        family = _FAMILY_ROTATION[i % len(_FAMILY_ROTATION)]

        if family == "unbalanced":
            host, spec = random_unbalanced_instance(
                rng, max_k=max(2, bounds.max_k), max_n=bound)
            net = build_unbalanced(host, spec)
            oracle = resistance_matrix(net)
            for u, v in _sample_pairs(rng, spec):
                closed = unbalanced_resistance(host, spec, u, v)
                checks += 1
                if closed != oracle[(u, v)]:
                    failures.append(_record(
                        f"unbalanced[{i}]:R({u.label()},{v.label()})",
                        closed, oracle[(u, v)]))
            checks += 1
            closed_kf = unbalanced_kf(host, spec)
            oracle_kf = kf_pair_sum(net)
            if closed_kf != oracle_kf:
                failures.append(_record(f"unbalanced[{i}]:Kf", closed_kf, oracle_kf))
            continue

        if family == "core_satellite":
            spec = None
            for _ in range(1000):
                candidate = random_core_satellite_spec(rng)
                if 2 <= candidate.n <= bound:
                    spec = candidate
                    break
            if spec is None:
                raise ValueError("size bounds admit no valid instance")
            host_u, spec_u = spec.as_unbalanced()
            net = build_unbalanced(host_u, spec_u)
            oracle = resistance_matrix(net)
            for u, v in _sample_pairs(rng, spec):
                closed = core_satellite_resistance(spec, u, v)
                checks += 1
                if closed != oracle[(u, v)]:
                    failures.append(_record(
                        f"core_satellite[{i}]:R({u.label()},{v.label()})",
                        closed, oracle[(u, v)]))
                if spec.k >= 2:
                    checks += 1
                    general = unbalanced_resistance(host_u, spec_u, u, v)
                    if closed != general:
                        failures.append(_record(
                            f"core_satellite[{i}]:star-form R({u.label()},{v.label()})",
                            closed, general))
            checks += 1
            closed_kf = core_satellite_kf(spec)
            oracle_kf = kf_pair_sum(net)
            if closed_kf != oracle_kf:
                failures.append(_record(f"core_satellite[{i}]:Kf",
                                        closed_kf, oracle_kf))
            continue

        host, spec, extra = _family_case(rng, family, bounds, bound)
        table = _TABLES[family]
        oracle = resistance_matrix(build_blowup(host, spec))
        for u, v in _sample_pairs(rng, spec):
            if family == "complete_minus_matching":
                value = table(spec, extra["matching"], u, v)
            elif family == "complete_minus_star":
                value = table(spec, extra["d"], u, v)
            else:
                value = table(spec, u, v)
            general = resistance_closed_form(host, spec, u, v)
            checks += 2
            if value != general:
                failures.append(_record(
                    f"{family}[{i}]:table-vs-general R({u.label()},{v.label()})",
                    value, general))
            if value != oracle[(u, v)]:
                failures.append(_record(
                    f"{family}[{i}]:R({u.label()},{v.label()})",
                    value, oracle[(u, v)]))
    return checks, skipped, failures


_SUITES = (
    ("tau", _suite_tau),
    ("resistance", _suite_resistance),
    ("kf", _suite_kf),
    ("transforms", _suite_transforms),
    ("families", _suite_families),
)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.count < 0:
        raise ValueError("--count must not be negative")
    bounds = SweepBounds(args.max_k, args.max_t, args.max_part, _size_cap())
    records: list[dict] = []
    rows = []
    for name, suite in _SUITES:
        rng = Random(f"{args.seed}:{name}")
        checks, skipped, failures = suite(rng, args.count, bounds)
        records.extend(failures)
        rows.append({
            "name": name,
            "instances": args.count,
            "checks": checks,
            "failures": len(failures),
            "skipped": skipped,
        })
    report = {
        "command": "verify",
        "instance": None,
        "seed": args.seed,
        "records": records,
        "notes": [f"instance size cap: {bounds.cap}"],
        "summary": {
            "checks": sum(r["checks"] for r in rows),
            "failures": sum(r["failures"] for r in rows),
            "skipped": sum(r["skipped"] for r in rows),
            "suites": rows,
        },
    }
    _emit(args, report)
    return 0 if report["summary"]["failures"] == 0 else 1


# --- transform --------------------------------------------------------------------


def _coerce_param(key: str, value: object) -> object:
    if key == "a":
        if not isinstance(value, list):
            raise ValueError("'a' must be a list of rationals")
        return tuple(parse_rational(x) for x in value)
    if key == "weights":
        if not isinstance(value, dict):
            raise ValueError("'weights' must map vertex labels to rationals")
        return {label: parse_rational(x) for label, x in value.items()}
    if isinstance(value, list):
        return tuple(value)
    return value


def _script_steps(obj: object) -> list[tuple[str, dict]]:
    if not isinstance(obj, dict) or not isinstance(obj.get("steps"), list):
        raise ValueError("script file must hold an object with a 'steps' list")
    steps = []
    for idx, raw in enumerate(obj["steps"], start=1):
        if not isinstance(raw, dict) or not isinstance(raw.get("op"), str):
            raise ValueError(f"step {idx} must be an object with an 'op' name")
        params = {key: _coerce_param(key, value)
                  for key, value in raw.items() if key != "op"}
        steps.append((raw["op"], params))
    return steps


def _resistance_text(net: WeightedNetwork, u: str, v: str) -> str:
    try:
        return format_rational(resistance(net, u, v))
    except DisconnectedPair:
        return "infinite"
    except SingularSystem:
        return "singular"


def _names(items: Sequence) -> str:
    return ", ".join(str(x) for x in items) if items else "none"


def cmd_transform(args: argparse.Namespace) -> int:
    net = network_from_obj(load_json(args.net))
    steps = _script_steps(load_json(args.script))
    if args.terminals:
        terminals = tuple(t.strip() for t in args.terminals.split(","))
        for label in terminals:
            if not net.has_vertex(label):
                raise ValueError(f"terminal {label!r} is not in the network")
    else:
        terminals = ()

    notes: list[str] = []
    current = net
    for idx, (op, params) in enumerate(steps, start=1):
        try:
            result = apply_named(current, op, params, terminals)
        except KeyError as exc:
            raise ValueError(f"step {idx} ({op}): missing parameter {exc}") from exc
        except (NetworkError, ValueError) as exc:
            raise ValueError(f"step {idx} ({op}): {exc}") from exc
        notes.append(f"step {idx} ({op}): removed {_names(result.removed)};"
                     f" created {_names(result.created)}")
        current = result.network

    if terminals:
        compare = sorted(terminals)
    else:
        compare = sorted(v for v in net.vertices if current.has_vertex(v))
        notes.append("compared every vertex present both before and after;"
                     " pass --terminals to pin a set")
    records = [
        _text_record(f"R({u},{v})", _resistance_text(net, u, v),
                     _resistance_text(current, u, v))
        for u, v in combinations(compare, 2)
    ]
    failures = sum(1 for rec in records if not rec["equal"])
    report = {
        "command": "transform",
        "instance": None,
        "seed": None,
        "records": records,
        "notes": notes,
        "network": network_to_obj(current),
        "summary": {"checks": len(records), "failures": failures, "skipped": 0},
    }
    _emit(args, report)
    return 0 if failures == 0 else 1


# --- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blowupnet",
        description="exact closed forms for blow-up networks, checked against"
                    " Laplacian oracles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", help="write the report to this file")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    tau = sub.add_parser("tau", help="spanning-tree count")
    tau.add_argument("--spec", required=True, help="instance file (JSON)")
    tau.add_argument("--diagnostic", action="store_true",
                     help="evaluate the complete-host formula on other hosts too")
    common(tau)

    resist = sub.add_parser("resist", help="resistance distances")
    resist.add_argument("--spec", required=True, help="instance file (JSON)")
    resist.add_argument("--pairs", default="classes",
                        help="'all', 'classes' (default) or one pair 'U,V'")
    common(resist)

    kf = sub.add_parser("kf", help="Kirchhoff index")
    kf.add_argument("--spec", required=True, help="instance file (JSON)")
    common(kf)

    verify = sub.add_parser("verify", help="seeded random sweeps")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--count", type=int, default=20,
                        help="instances per suite (default 20)")
    verify.add_argument("--max-k", type=int, default=5,
                        help="host size bound (default 5)")
    verify.add_argument("--max-t", type=int, default=4,
                        help="clique size bound; resistance suites cap it at 3")
    verify.add_argument("--max-part", type=int, default=2,
                        help="bound on each p_i and q_i (default 2)")
    common(verify)

    transform = sub.add_parser("transform", help="apply a rewrite script")
    transform.add_argument("--net", required=True, help="network file (JSON)")
    transform.add_argument("--script", required=True, help="rewrite steps (JSON)")
    transform.add_argument("--terminals",
                           help="comma-separated labels to protect and compare")
    common(transform)
    return parser


_HANDLERS = {
    "tau": cmd_tau,
    "resist": cmd_resist,
    "kf": cmd_kf,
    "verify": cmd_verify,
    "transform": cmd_transform,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except (NetworkError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
